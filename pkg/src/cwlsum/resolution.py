"""Multigraded Betti numbers, regularity and linearity tests.

The main route reads beta_{i,a}(I) off the reduced homology of the upper
Koszul complex K^a = {squarefree b : x^(a-b) in I}:

    beta_{i,a}(I) = dim H~_{i-1}(K^a; Q).

Only multidegrees on the grid spanned by generator exponents can carry
homology (elsewhere K^a is a cone), and the compiled kernel discards cones
before any homology is computed.  Two independent oracles cross-check it:
the crosscut complex of the lcm lattice, and the Hilbert-Burch shape of
ideals in two variables.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import kernels
from .errors import DegenerateIdealError
from .homology import reduced_betti, reduced_betti_mask
from .monomial import component, divides, format_exps, lcm_exps
from .verdict import Verdict


@dataclass
class BettiTable:
    """Nonzero multigraded Betti numbers: ``entries[(i, a)] = rank``."""

    ring: object
    entries: dict = field(default_factory=dict)

    def graded(self):
        """Collapse to the usual table ``{(i, total degree): rank}``."""
        out = {}
        for (i, a), r in self.entries.items():
            key = (i, sum(a))
            out[key] = out.get(key, 0) + r
        return out

    @property
    def reg(self):
        return max(sum(a) - i for i, a in self.entries)

    @property
    def pd(self):
        return max(i for i, _ in self.entries)

    def total(self, i):
        return sum(r for (k, _), r in self.entries.items() if k == i)

    def __eq__(self, other):
        return (isinstance(other, BettiTable) and self.ring == other.ring
                and self.entries == other.entries)

    def sorted_entries(self):
        return sorted(self.entries.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]),
                                                          tuple(-v for v in kv[0][1])))

    def format(self):
        """Macaulay2-style table: rows are deg - i, columns are i."""
        g = self.graded()
        if not g:
            return "(empty)"
        cols = range(self.pd + 1)
        rows = sorted({d - i for i, d in g})
        lines = ["     " + " ".join(f"{i:>4}" for i in cols)]
        for r in rows:
            cells = [g.get((i, r + i), 0) for i in cols]
            lines.append(f"{r:>4}:" + " ".join(f"{c if c else '.':>4}" for c in cells))
        return "\n".join(lines)

    def __str__(self):
        return ", ".join(f"b[{i},{format_exps(self.ring, a)}]={r}"
                         for (i, a), r in self.sorted_entries())


@dataclass(frozen=True)
class RegularityReport:
    reg: int
    pd: int
    witness: tuple  # (i, multidegree) attaining the regularity


def _require_proper(I):
    if I.is_zero:
        raise DegenerateIdealError("the zero ideal has no resolution to speak of")
    if I.is_unit:
        raise DegenerateIdealError("the unit ideal is free of rank one in degree 0")


@lru_cache(maxsize=None)
def betti(I):
    """Multigraded Betti table of I via upper Koszul complexes."""
    _require_proper(I)
    n = I.ring.n
    gens = I.exponents
    values = [sorted({e[i] for e in gens} | {0}) for i in range(n)]
    entries = {}
    for a, mask in kernels.koszul_candidates(list(gens), n, values):
        for i, r in enumerate(reduced_betti_mask(n, mask)):
            if r:
                entries[(i, a)] = r
    return BettiTable(I.ring, entries)


def betti_oracle_lcm_lattice(I):
    """Betti table from the lcm lattice L_I.

    For b in L_I, beta_{i,b}(I) is the reduced H_{i-1} of the open interval
    (1, b).  By the crosscut theorem that interval has the homotopy type of
    the complex on the generators dividing b (the atoms of [1, b]) whose
    faces are the subsets with lcm strictly below b.  Exponential in mu(I).
    """
    _require_proper(I)
    G = I.exponents
    mu = len(G)
    zero = (0,) * I.ring.n
    lcms = [zero] * (1 << mu)
    for s in range(1, 1 << mu):
        low = (s & -s).bit_length() - 1
        lcms[s] = lcm_exps(lcms[s & (s - 1)], G[low])
    entries = {}
    for b in set(lcms[1:]):
        atoms = 0
        for i, g in enumerate(G):
            if divides(g, b):
                atoms |= 1 << i
        faces = []
        sub = atoms
        while True:
            if lcms[sub] != b:
                faces.append(sub)
            if sub == 0:
                break
            sub = (sub - 1) & atoms
        for i, r in enumerate(reduced_betti(faces)):
            if r:
                entries[(i, b)] = r
    return BettiTable(I.ring, entries)


def betti_oracle_dim2(I):
    """Hilbert-Burch shape in k[x,y]: generators sorted by falling x-degree,
    first syzygies at the lcms of neighbours, nothing beyond."""
    if I.ring.n != 2:
        raise ValueError("the two-variable oracle needs a ring with exactly two variables")
    _require_proper(I)
    gens = sorted(I.exponents, key=lambda e: -e[0])
    entries = {(0, g): 1 for g in gens}
    for g, h in zip(gens, gens[1:]):
        entries[(1, lcm_exps(g, h))] = 1
    return BettiTable(I.ring, entries)


@lru_cache(maxsize=None)
def reg_value(I):
    return betti(I).reg


def regularity(I):
    table = betti(I)
    best = max(table.entries, key=lambda k: (sum(k[1]) - k[0], -k[0]))
    return RegularityReport(reg=sum(best[1]) - best[0], pd=table.pd, witness=best)


def has_linear_resolution(I):
    """True iff all generators share one degree d and reg I = d."""
    _require_proper(I)
    degs = set(I.degrees)
    if len(degs) != 1:
        return False
    return reg_value(I) == degs.pop()


@lru_cache(maxsize=None)
def _cwl_scan(I):
    o, r = I.order, reg_value(I)
    for j in range(o, r + 1):
        C = component(I, j)
        if not has_linear_resolution(C):
            return False, j, (o, r)
    return True, None, (o, r)


def is_cwl(I):
    """Boolean form of :func:`is_componentwise_linear` (cached)."""
    return _cwl_scan(I)[0]


def is_componentwise_linear(I):
    """Check I_<j> for every j from o(I) to reg(I).

    Components below the order vanish and those at or above the regularity
    always have linear resolution, so the scan is exhaustive.
    """
    _require_proper(I)
    ok, j, (o, r) = _cwl_scan(I)
    wit = []
    if not ok:
        C = component(I, j)
        wit = [("failing degree", j), ("component", C), ("component reg", reg_value(C))]
    return Verdict("componentwise_linear", True, ok, witnesses=wit,
                   bounds={"j_min": o, "j_max": r}, inputs={"I": str(I)})


def reg_or_zero(I):
    """Regularity with reg(S) = 0 for the unit ideal, as in colon arguments."""
    if I.is_unit:
        return 0
    return reg_value(I)


def clear_caches():
    for fn in (betti, reg_value, _cwl_scan, reduced_betti_mask):
        fn.cache_clear()
