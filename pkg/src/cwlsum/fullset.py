"""Full sets of squarefree monomials and the sums  sum_f f * I_f  they certify.

A set L of non-unit squarefree monomials is *full* when it is closed under
lcm and any f | g in L are joined by a chain inside L that multiplies in
one variable at a time.  An assignment f -> I_f is *valid* when each I_f is
componentwise linear, G(I_f) only involves the variables of f, and
I_f is contained in m * I_(zf) whenever zf is in L for a variable z.  For a
valid assignment the assembled ideal is componentwise linear.
"""
from __future__ import annotations

from collections import deque
import random

from .errors import AssignmentError
from .monomial import (Monomial, MonomialIdeal, lcm_exps, maximal_ideal, monomials_of_degree,
                       product, unit_ideal, variable_ideal, zero_ideal)
from .resolution import is_cwl
from .verdict import Verdict


def _exps_set(L):
    ring = None
    out = set()
    for f in L:
        if not isinstance(f, Monomial):
            raise TypeError("full sets hold Monomials")
        if ring is None:
            ring = f.ring
        elif f.ring != ring:
            raise ValueError("full set mixes rings")
        if f.is_unit:
            raise ValueError("full sets contain non-unit monomials only")
        if not f.is_squarefree:
            raise ValueError(f"{f} is not squarefree")
        out.add(f.exps)
    if ring is None:
        raise ValueError("empty full set")
    return ring, out


def _sorted(ring, exps):
    return sorted((Monomial(ring, e) for e in exps), key=lambda m: (m.degree, [-v for v in m.exps]))


def _full_path(f, g, elems):
    """BFS from f to g inside elems, multiplying one variable at a time."""
    seen = {f}
    todo = deque([f])
    while todo:
        cur = todo.popleft()
        if cur == g:
            return True
        for i, (a, b) in enumerate(zip(cur, g)):
            if a == 0 and b == 1:
                nxt = cur[:i] + (1,) + cur[i + 1:]
                if nxt in elems and nxt not in seen:
                    seen.add(nxt)
                    todo.append(nxt)
    return False


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def is_full(L):
    """Check lcm-closure and full paths; the first failure is the witness."""
    ring, elems = _exps_set(L)
    order = sorted(elems, key=lambda e: (sum(e), [-v for v in e]))
    inputs = {"L": [str(m) for m in _sorted(ring, elems)]}
    for i, f in enumerate(order):
        for g in order[i + 1:]:
            h = lcm_exps(f, g)
            if h not in elems:
                return Verdict("full_set", True, False, inputs=inputs, witnesses=[
                    ("pair", (Monomial(ring, f), Monomial(ring, g))),
                    ("missing lcm", Monomial(ring, h))])
    for f in order:
        for g in order:
            if f != g and _divides(f, g) and not _full_path(f, g, elems):
                return Verdict("full_set", True, False, inputs=inputs, witnesses=[
                    ("no full path", (Monomial(ring, f), Monomial(ring, g)))])
    return Verdict("full_set", True, True, inputs=inputs)


def lcm_closure(L):
    ring, elems = _exps_set(L)
    todo = list(elems)
    while todo:
        f = todo.pop()
        for g in list(elems):
            h = lcm_exps(f, g)
            if h not in elems:
                elems.add(h)
                todo.append(h)
    return frozenset(Monomial(ring, e) for e in elems)


def _support_ideal(f):
    return variable_ideal(f.ring, sorted(f.support))


def _cwl_any(I):
    return I.is_zero or I.is_unit or is_cwl(I)


def _lookup(A, f):
    if f in A:
        return A[f]
    if f.exps in A:
        return A[f.exps]
    raise AssignmentError(f"no ideal assigned to {f}")


def validate_assignment(L, A):
    """Check the hypotheses of the assembly theorem for L and f -> I_f.

    Also reports whether f | g implies I_f inside I_g (a consequence of the
    hypotheses) under ``details["monotone"]``.
    """
    ring, elems = _exps_set(L)
    mons = _sorted(ring, elems)
    I = {f: _lookup(A, f) for f in mons}
    m = maximal_ideal(ring)
    wit = []
    full = is_full(mons)
    if not full.holds:
        wit.append(("L not full", full.witnesses))
    for f in mons:
        if I[f].ring != ring:
            raise AssignmentError(f"I_{f} lives in another ring")
        if not _cwl_any(I[f]):
            wit.append(("not componentwise linear", f))
        extra = I[f].support - f.support
        if extra and not I[f].is_zero:
            wit.append(("condition (1)", f))
    for f in mons:
        for z in range(ring.n):
            if f.exps[z]:
                continue
            zf = f.exps[:z] + (1,) + f.exps[z + 1:]
            if zf in elems:
                g = Monomial(ring, zf)
                if not I[f] <= product(m, I[g]):
                    wit.append(("condition (2)", (f, g)))
    monotone = all(I[f] <= I[g] for f in mons for g in mons if f != g and f.divides(g))
    ok = not wit
    return Verdict("fullset_assignment", True, ok, witnesses=wit,
                   inputs={"L": [str(f) for f in mons],
                           "assignment": {str(f): str(I[f]) for f in mons}},
                   consistent=monotone or not ok, details={"monotone": monotone})


def _assemble_raw(ring, mons, I):
    gens = []
    for f in mons:
        gens.extend(tuple(a + b for a, b in zip(f.exps, g)) for g in I[f].exponents)
    return MonomialIdeal(ring, gens)


def assemble(L, A, force=False):
    """sum over f in L of f * I_f.  Refuses invalid assignments unless ``force``."""
    ring, elems = _exps_set(L)
    mons = _sorted(ring, elems)
    I = {f: _lookup(A, f) for f in mons}
    if not force:
        v = validate_assignment(mons, I)
        if not v.holds:
            raise AssignmentError(f"invalid assignment: {v.witnesses}", v)
    return _assemble_raw(ring, mons, I)


def power_assignment(L, P):
    """I_f = <supp f>^(a_f - deg f) for each f, from a map f -> a_f."""
    ring, elems = _exps_set(L)
    out = {}
    for f in _sorted(ring, elems):
        a = _lookup(P, f)
        k = a - f.degree
        out[f] = unit_ideal(ring) if k <= 0 else _support_ideal(f) ** k
    return out


def check_powers(L, P):
    """Violations of a_f >= deg f and of f | g => a_f >= a_g."""
    ring, elems = _exps_set(L)
    mons = _sorted(ring, elems)
    bad = []
    for f in mons:
        if _lookup(P, f) < f.degree:
            bad.append(("a_f < deg f", f))
    for f in mons:
        for g in mons:
            if f != g and f.divides(g) and _lookup(P, f) < _lookup(P, g):
                bad.append(("not monotone", (f, g)))
    return bad


def assemble_powers(L, P, force=False):
    bad = check_powers(L, P)
    if bad and not force:
        raise AssignmentError(f"power assignment violates monotonicity: {bad}",
                              Verdict("powers", True, False, witnesses=bad))
    return assemble(L, power_assignment(L, P), force=force)


def intersection_identity(L, A):
    """For f of least degree: (sum over g != f of g I_g) cap f I_f  ==  n f I_f,
    where n is generated by the variables z with zf in L.  Returns (lhs, rhs)."""
    ring, elems = _exps_set(L)
    mons = _sorted(ring, elems)
    I = {f: _lookup(A, f) for f in mons}
    f = mons[0]
    rest = mons[1:]
    fI = _assemble_raw(ring, [f], I)
    if not rest:
        return zero_ideal(ring), zero_ideal(ring)
    lhs = _assemble_raw(ring, rest, I) & fI
    zs = [z for z in range(ring.n)
          if not f.exps[z] and (f.exps[:z] + (1,) + f.exps[z + 1:]) in elems]
    rhs = product(variable_ideal(ring, zs), fI) if zs else zero_ideal(ring)
    return lhs, rhs


# ---- random valid instances ----------------------------------------------

def _subset_exps(n, idx):
    return tuple(1 if i in idx else 0 for i in range(n))


def random_full_set(ring, rng, seeds=None):
    """lcm-close a few random squarefree monomials and patch missing full paths."""
    n = ring.n
    k = seeds if seeds is not None else rng.randint(1, min(4, 2 ** n - 1))
    elems = set()
    while len(elems) < k:
        size = rng.randint(1, n)
        elems.add(_subset_exps(n, set(rng.sample(range(n), size))))
    while True:
        elems = {m.exps for m in lcm_closure([Monomial(ring, e) for e in elems])}
        gap = None
        order = sorted(elems, key=sum)
        for f in order:
            for g in order:
                if f != g and _divides(f, g) and not _full_path(f, g, elems):
                    gap = (f, g)
                    break
            if gap:
                break
        if gap is None:
            break
        f, g = gap
        missing = [i for i in range(n) if g[i] and not f[i]]
        rng.shuffle(missing)
        cur = list(f)
        for i in missing[:-1]:
            cur[i] = 1
            elems.add(tuple(cur))
    return _sorted(ring, elems)


def random_power_assignment(L, rng, spread=2):
    """Monotone a_f: larger monomials get smaller or equal exponents."""
    a = {}
    for f in sorted(L, key=lambda m: -m.degree):
        above = [a[g] for g in a if f.divides(g)]
        a[f] = max([f.degree] + above) + rng.randint(0, spread)
    return a


def _borel_closure(u, vars_):
    """Strongly stable closure of u with respect to the order of ``vars_``."""
    seen = {u}
    todo = [u]
    while todo:
        w = todo.pop()
        for jpos, j in enumerate(vars_):
            if not w[j]:
                continue
            for i in vars_[:jpos]:
                v = list(w)
                v[j] -= 1
                v[i] += 1
                v = tuple(v)
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
    return seen


def _pure_power(ring, vars_, d):
    """<vars>^d as an ideal of the full ring."""
    gens = []
    for e in monomials_of_degree(len(vars_), d):
        full = [0] * ring.n
        for v, k in zip(vars_, e):
            full[v] = k
        gens.append(tuple(full))
    return MonomialIdeal(ring, gens)


def random_assignment(L, rng, spread=2, extra_gens=2):
    """Valid assignment whose I_f are strongly stable in the variables of f.

    Each I_f is <supp f>^(d_f) plus the Borel closures of a few random
    monomials, kept only when the closure already lies in the intersection
    of m * I_(zf) over the covers zf.  Strongly stable ideals are
    componentwise linear, and sums of them stay strongly stable.
    """
    ring = L[0].ring
    m = maximal_ideal(ring)
    elems = {f.exps for f in L}
    A, dpow = {}, {}
    for f in sorted(L, key=lambda x: -x.degree):
        covers = []
        for z in range(ring.n):
            if not f.exps[z]:
                zf = f.exps[:z] + (1,) + f.exps[z + 1:]
                if zf in elems:
                    covers.append(Monomial(ring, zf))
        vars_ = sorted(f.support)
        rng.shuffle(vars_)
        d = max([0] + [dpow[g] + 1 for g in covers]) + rng.randint(0, spread)
        dpow[f] = d
        target = None
        for g in covers:
            part = product(m, A[g])
            target = part if target is None else target & part
        gens = list(_pure_power(ring, vars_, d).exponents)
        for _ in range(rng.randint(0, extra_gens)):
            deg = rng.randint(max(1, d - 2), max(1, d))
            e = [0] * ring.n
            for _ in range(deg):
                e[rng.choice(vars_)] += 1
            clos = _borel_closure(tuple(e), vars_)
            if target is None or all(target.contains(c) for c in clos):
                gens.extend(clos)
        A[f] = MonomialIdeal(ring, gens) if gens else unit_ideal(ring)
    return A


def random_instance(ring, seed, kind="powers"):
    """(L, assignment) from a seed; ``kind`` is "powers" or "stable"."""
    rng = random.Random(seed)
    L = random_full_set(ring, rng)
    if kind == "powers":
        return L, power_assignment(L, random_power_assignment(L, rng))
    return L, random_assignment(L, rng)
