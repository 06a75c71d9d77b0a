"""Monomials and monomial ideals over a fixed polynomial ring.

Ideals always store their minimal generators, sorted canonically: by
degree, then with larger powers of earlier variables first (so
``(x^3, x^2*y, x*y^2, y^3)``).  Exponent vectors are plain tuples of ints;
:class:`Monomial` wraps one together with its ring for the public API.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
import re

from . import kernels
from .errors import DegenerateIdealError, RingMismatchError

Exps = tuple  # tuple[int, ...]

_IDENT = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def canonical_key(e):
    return (sum(e), tuple(-v for v in e))


def lcm_exps(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def gcd_exps(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def divides(a, b):
    return all(x <= y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def monomials_of_degree(n, d):
    """All exponent vectors of length ``n`` and total degree ``d``, canonical order."""
    if d < 0:
        return ()
    out = []
    for combo in combinations_with_replacement(range(n), d):
        e = [0] * n
        for i in combo:
            e[i] += 1
        out.append(tuple(e))
    out.sort(key=canonical_key)
    return tuple(out)


class Ring:
    """Polynomial ring k[x_1..x_n], known only through its variable names.

    >>> R = Ring("x", "y")
    >>> R.ideal("x^2, x*y^3")
    MonomialIdeal(x^2, x*y^3)
    """

    __slots__ = ("names", "_index")

    def __init__(self, *names):
        if len(names) == 1 and not isinstance(names[0], str):
            names = tuple(names[0])
        elif len(names) == 1 and " " in names[0].strip():
            names = tuple(names[0].split())
        names = tuple(names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for v in names:
            if not _IDENT.match(v):
                raise ValueError(f"bad variable name {v!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self._index = {v: i for i, v in enumerate(names)}

    @property
    def n(self):
        return len(self.names)

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names

    def __hash__(self):
        return hash(("Ring", self.names))

    def __repr__(self):
        return f"Ring({', '.join(map(repr, self.names))})"

    def index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not a variable of {self!r}") from None

    def one(self):
        return Monomial(self, (0,) * self.n)

    def var(self, which):
        i = which if isinstance(which, int) else self.index(which)
        e = [0] * self.n
        e[i] = 1
        return Monomial(self, tuple(e))

    def variables(self):
        return tuple(self.var(i) for i in range(self.n))

    def monomial(self, spec):
        """Monomial from an exponent sequence or a string such as ``"x^2*y"``."""
        if isinstance(spec, str):
            from .io.parser import parse_monomial
            return parse_monomial(self, spec)
        return Monomial(self, tuple(spec))

    def ideal(self, *gens):
        """Ideal from monomials, exponent tuples, or one expression string."""
        if len(gens) == 1 and isinstance(gens[0], str):
            from .io.parser import parse_ideal_expr
            return parse_ideal_expr(self, gens[0])
        return minimalize(gens, self)

    @property
    def m(self):
        return maximal_ideal(self)


@dataclass(frozen=True)
class Monomial:
    ring: Ring
    exps: Exps

    def __post_init__(self):
        e = tuple(int(v) for v in self.exps)
        if len(e) != self.ring.n:
            raise ValueError(f"expected {self.ring.n} exponents, got {len(e)}")
        if any(v < 0 for v in e):
            raise ValueError("exponents must be non-negative")
        object.__setattr__(self, "exps", e)

    @property
    def degree(self):
        return sum(self.exps)

    @property
    def is_unit(self):
        return not any(self.exps)

    @property
    def is_squarefree(self):
        return all(v <= 1 for v in self.exps)

    @property
    def support(self):
        """Indices of the variables that occur."""
        return frozenset(i for i, v in enumerate(self.exps) if v)

    def _same_ring(self, other):
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def divides(self, other):
        self._same_ring(other)
        return divides(self.exps, other.exps)

    def lcm(self, other):
        self._same_ring(other)
        return Monomial(self.ring, lcm_exps(self.exps, other.exps))

    def gcd(self, other):
        self._same_ring(other)
        return Monomial(self.ring, gcd_exps(self.exps, other.exps))

    def __mul__(self, other):
        if isinstance(other, MonomialIdeal):
            return scale(self, other)
        if not isinstance(other, Monomial):
            return NotImplemented
        self._same_ring(other)
        return Monomial(self.ring, tuple(a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other):
        self._same_ring(other)
        if not divides(other.exps, self.exps):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(self.ring, tuple(a - b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k):
        return Monomial(self.ring, tuple(k * a for a in self.exps))

    def __lt__(self, other):
        return canonical_key(self.exps) < canonical_key(other.exps)

    def __str__(self):
        return format_exps(self.ring, self.exps)

    def __repr__(self):
        return f"Monomial({self})"


def format_exps(ring, e):
    parts = []
    for name, k in zip(ring.names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts) if parts else "1"


def _as_exps(ring, g):
    if isinstance(g, Monomial):
        if g.ring != ring:
            raise RingMismatchError(f"monomial {g} lives in {g.ring!r}, not {ring!r}")
        return g.exps
    e = tuple(int(v) for v in g)
    if len(e) != ring.n or any(v < 0 for v in e):
        raise ValueError(f"bad exponent vector {g!r} for {ring!r}")
    return e


class MonomialIdeal:
    """Monomial ideal, identified with its minimal generating set G(I)."""

    __slots__ = ("ring", "_exps", "_hash")

    def __init__(self, ring, gens=(), _trusted=False):
        self.ring = ring
        if _trusted:
            exps = tuple(gens)
        else:
            exps = tuple(kernels.minimal_elements([_as_exps(ring, g) for g in gens]))
            exps = tuple(sorted(exps, key=canonical_key))
        self._exps = exps
        self._hash = hash((ring, exps))

    # ---- basic data -------------------------------------------------------
    @property
    def exponents(self):
        return self._exps

    @property
    def gens(self):
        return tuple(Monomial(self.ring, e) for e in self._exps)

    @property
    def is_zero(self):
        return not self._exps

    @property
    def is_unit(self):
        return len(self._exps) == 1 and not any(self._exps[0])

    @property
    def mu(self):
        return len(self._exps)

    @property
    def order(self):
        if not self._exps:
            raise DegenerateIdealError("the zero ideal has no order")
        return sum(self._exps[0])

    @property
    def max_degree(self):
        if not self._exps:
            raise DegenerateIdealError("the zero ideal has no generators")
        return max(sum(e) for e in self._exps)

    @property
    def degrees(self):
        return tuple(sum(e) for e in self._exps)

    @property
    def support(self):
        s = set()
        for e in self._exps:
            s.update(i for i, v in enumerate(e) if v)
        return frozenset(s)

    def contains(self, m):
        e = _as_exps(self.ring, m)
        return any(divides(g, e) for g in self._exps)

    __contains__ = contains

    def issubset(self, other):
        self._check(other)
        return all(other.contains(g) for g in self._exps)

    __le__ = issubset

    def _check(self, other):
        if not isinstance(other, MonomialIdeal):
            raise TypeError(f"expected MonomialIdeal, got {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(f"{self.ring!r} vs {other.ring!r}")

    def __eq__(self, other):
        return (isinstance(other, MonomialIdeal) and self.ring == other.ring
                and self._exps == other._exps)

    def __hash__(self):
        return self._hash

    # ---- operator sugar ---------------------------------------------------
    def __add__(self, other):
        return ideal_sum(self, other)

    def __and__(self, other):
        return intersect(self, other)

    def __mul__(self, other):
        if isinstance(other, Monomial):
            return scale(other, self)
        return product(self, other)

    __rmul__ = __mul__

    def __pow__(self, s):
        return power(self, s)

    def colon(self, other):
        return colon(self, other)

    def __str__(self):
        if not self._exps:
            return "(0)"
        return "(" + ", ".join(format_exps(self.ring, e) for e in self._exps) + ")"

    def __repr__(self):
        return "MonomialIdeal" + str(self)


def minimalize(gens, ring):
    """Ideal generated by ``gens``; keeps only divisibility-minimal elements."""
    return MonomialIdeal(ring, gens)


def zero_ideal(ring):
    return MonomialIdeal(ring, (), _trusted=True)


def unit_ideal(ring):
    return MonomialIdeal(ring, ((0,) * ring.n,), _trusted=True)


def maximal_ideal(ring):
    return MonomialIdeal(ring, monomials_of_degree(ring.n, 1), _trusted=True)


def _same(I, J):
    I._check(J)
    return I.ring


def ideal_sum(I, J):
    ring = _same(I, J)
    return MonomialIdeal(ring, I.exponents + J.exponents)


def scale(f, I):
    """f * I.  Multiplying a minimal generating set by a monomial keeps it minimal."""
    e = _as_exps(I.ring, f)
    gens = tuple(tuple(a + b for a, b in zip(g, e)) for g in I.exponents)
    return MonomialIdeal(I.ring, gens, _trusted=True)


def product(I, J):
    ring = _same(I, J)
    return MonomialIdeal(ring, [tuple(a + b for a, b in zip(g, h))
                                for g in I.exponents for h in J.exponents])


def intersect(I, J):
    ring = _same(I, J)
    return MonomialIdeal(ring, [lcm_exps(g, h) for g in I.exponents for h in J.exponents])


def colon(I, J):
    """I : J, where J may be a nonzero ideal or a single monomial.

    (0 : J) = 0 and (I : f) is the unit ideal when f lies in I.
    """
    if isinstance(J, MonomialIdeal):
        ring = _same(I, J)
        if J.is_zero:
            raise DegenerateIdealError("colon by the zero ideal")
        result = None
        for g in J.exponents:
            part = _colon_exps(I, g)
            result = part if result is None else intersect(result, part)
        return result
    return _colon_exps(I, _as_exps(I.ring, J))


def _colon_exps(I, f):
    return MonomialIdeal(I.ring, [tuple(max(a - b, 0) for a, b in zip(g, f))
                                  for g in I.exponents])


def component(I, j):
    """I_<j>: the ideal generated by the degree-j monomials of I."""
    if j < 0:
        raise ValueError("degree must be non-negative")
    if I.is_zero or j < I.order:
        return zero_ideal(I.ring)
    cands = monomials_of_degree(I.ring.n, j)
    inside = kernels.membership(I.exponents, cands)
    return MonomialIdeal(I.ring, tuple(c for c, ok in zip(cands, inside) if ok), _trusted=True)


@dataclass(frozen=True)
class IdealStats:
    order: int
    mu: int
    support: frozenset
    max_gen_degree: int
    is_m_primary: bool


def is_m_primary(I):
    n = I.ring.n
    pure = set()
    for e in I.exponents:
        nz = [i for i, v in enumerate(e) if v]
        if len(nz) <= 1:
            pure.update(nz if nz else range(n))
    return len(pure) == n


def stats(I):
    if I.is_zero:
        raise DegenerateIdealError("stats of the zero ideal are undefined")
    return IdealStats(order=I.order, mu=I.mu, support=I.support,
                      max_gen_degree=I.max_degree, is_m_primary=is_m_primary(I))


def factor_gcd(I):
    """Split I = f * I' with f the gcd of G(I).  In two variables I' has finite colength."""
    if I.is_zero:
        raise DegenerateIdealError("cannot factor the zero ideal")
    g = I.exponents[0]
    for e in I.exponents[1:]:
        g = gcd_exps(g, e)
    rest = tuple(tuple(a - b for a, b in zip(e, g)) for e in I.exponents)
    return Monomial(I.ring, g), MonomialIdeal(I.ring, rest)


def power(I, s):
    if s < 0:
        raise ValueError("negative power")
    if s == 0:
        return unit_ideal(I.ring)
    if I == maximal_ideal(I.ring):
        return MonomialIdeal(I.ring, monomials_of_degree(I.ring.n, s), _trusted=True)
    out = I
    for _ in range(s - 1):
        out = product(out, I)
    return out


def m_power(ring, s):
    """m^s for the maximal ideal m; m^0 is the unit ideal."""
    if s <= 0:
        return unit_ideal(ring)
    return MonomialIdeal(ring, monomials_of_degree(ring.n, s), _trusted=True)


def variable_ideal(ring, indices):
    """Monomial prime generated by the variables with the given indices."""
    gens = []
    for i in indices:
        e = [0] * ring.n
        e[i] = 1
        gens.append(tuple(e))
    return MonomialIdeal(ring, gens)


def dim_in_degree(I, d):
    """Number of degree-d monomials in I (the k-dimension of I_d)."""
    if d < 0 or I.is_zero:
        return 0
    cands = monomials_of_degree(I.ring.n, d)
    return sum(kernels.membership(I.exponents, cands))
