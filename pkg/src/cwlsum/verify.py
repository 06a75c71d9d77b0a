"""Brute-force oracles, ideal generators and theorem-validation campaigns.

The oracles here deliberately avoid the generator-level algorithms of
:mod:`cwlsum.monomial`: they decide membership monomial by monomial and read
minimal generators off the membership table.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass, field
import random
import time

from . import dim2, fullset
from .monomial import (Monomial, MonomialIdeal, Ring, colon, component, lcm_exps,
                       monomials_of_degree, scale)
from .resolution import (betti, betti_oracle_dim2, betti_oracle_lcm_lattice, is_cwl,
                         reg_or_zero, reg_value)

# ---- membership oracles -----------------------------------------------------


def _in(gens, u):
    return any(all(a <= b for a, b in zip(g, u)) for g in gens)


def _divisors_of_degree(u, j):
    """Monomials v | u with deg v = j."""
    out = []

    def rec(i, left, cur):
        if i == len(u):
            if left == 0:
                out.append(tuple(cur))
            return
        for k in range(min(u[i], left) + 1):
            cur.append(k)
            rec(i + 1, left - k, cur)
            cur.pop()

    rec(0, j, [])
    return out


def _member_fn(kind, I, other):
    G = I.exponents
    if kind == "intersect":
        H = other.exponents
        return lambda u: _in(G, u) and _in(H, u)
    if kind == "sum":
        H = other.exponents
        return lambda u: _in(G, u) or _in(H, u)
    if kind == "colon":
        if isinstance(other, Monomial):
            H = [other.exps]
        else:
            H = list(other.exponents)
        if not H:
            raise ValueError("colon by the zero ideal")
        return lambda u: all(_in(G, tuple(a + b for a, b in zip(u, h))) for h in H)
    if kind == "component":
        j = int(other)
        return lambda u: sum(u) >= j and any(_in(G, v) for v in _divisors_of_degree(u, j))
    raise ValueError(f"unknown oracle kind {kind!r}")


def oracle_op(kind, I, other, d_max):
    """Ideal computed by enumerating monomials of degree <= d_max + 1.

    A monomial is a minimal generator when it is a member and none of its
    divisions by a single variable is.  A minimal generator in degree
    d_max + 1 means d_max was too small and raises ValueError.  Generators
    beyond d_max + 1 go unnoticed, so pass a bound from :func:`oracle_dmax`.
    """
    n = I.ring.n
    member = _member_fn(kind, I, other)
    gens = []
    for d in range(d_max + 2):
        for u in monomials_of_degree(n, d):
            if not member(u):
                continue
            if any(u[i] and member(u[:i] + (u[i] - 1,) + u[i + 1:]) for i in range(n)):
                continue
            if d == d_max + 1:
                raise ValueError(f"d_max={d_max} too small: generator of degree {d} found")
            gens.append(u)
    return MonomialIdeal(I.ring, gens)


def oracle_dmax(kind, I, other):
    """A degree bound that is always large enough for :func:`oracle_op`."""
    top = max((sum(e) for e in I.exponents), default=0)
    if kind == "intersect":
        return max((sum(lcm_exps(a, b)) for a in I.exponents for b in other.exponents),
                   default=0)
    if kind == "sum":
        return max(top, other.max_degree if not other.is_zero else 0)
    if kind == "component":
        return max(top, int(other))
    # colon: every generator of I : J divides lcm(G(I))
    big = (0,) * I.ring.n
    for e in I.exponents:
        big = lcm_exps(big, e)
    return sum(big)


# ---- generators -------------------------------------------------------------

def enumerate_ideals_dim2(max_gen_degree, ring=None):
    """Every monomial ideal of k[x,y] with generators of degree <= D, except 0 and S.

    Minimal generators of such an ideal form a staircase: x-exponents
    strictly falling while y-exponents strictly rise.
    """
    if max_gen_degree < 1:
        raise ValueError("max_gen_degree must be >= 1")
    ring = ring or Ring("x", "y")
    D = max_gen_degree
    pts = sorted(((a, b) for a in range(D + 1) for b in range(D + 1 - a) if a + b),
                 key=lambda p: (-p[0], p[1]))

    def rec(prefix):
        if prefix:
            yield MonomialIdeal(ring, prefix)
        a0, b0 = prefix[-1] if prefix else (D + 1, -1)
        for a, b in pts:
            if a < a0 and b > b0:
                yield from rec(prefix + [(a, b)])

    yield from rec([])


def count_antichains(elements, leq):
    """Number of nonempty antichains of a finite poset, by brute force."""
    n = len(elements)
    count = 0
    for mask in range(1, 1 << n):
        chosen = [elements[i] for i in range(n) if mask >> i & 1]
        if all(not leq(p, q) for p in chosen for q in chosen if p != q):
            count += 1
    return count


def random_ideal(arity, max_gen_degree, mu_target, seed, tries=2000):
    """Seeded random monomial ideal.

    Exponent vectors are drawn uniformly from the box [0, D]^n, rejected
    when their degree is 0 or exceeds D, or when they are comparable with a
    generator already kept.  The target count is uniform in 1..mu_target.
    """
    if arity < 1 or max_gen_degree < 1 or mu_target < 1:
        raise ValueError("arity, max_gen_degree and mu_target must be positive")
    rng = random.Random(seed)
    ring = Ring([f"x{i}" for i in range(arity)]) if arity > 3 else Ring(list("xyz"[:arity]))
    want = rng.randint(1, mu_target)
    gens = []
    for _ in range(tries):
        if len(gens) == want:
            break
        e = tuple(rng.randint(0, max_gen_degree) for _ in range(arity))
        if not 0 < sum(e) <= max_gen_degree:
            continue
        if any(all(a <= b for a, b in zip(g, e)) or all(b <= a for a, b in zip(g, e))
               for g in gens):
            continue
        gens.append(e)
    if not gens:
        raise ValueError("no generator found within the retry budget")
    return MonomialIdeal(ring, gens)


def _random_in_ring(ring, rng, max_gen_degree, mu_target):
    I = random_ideal(ring.n, max_gen_degree, mu_target, rng.getrandbits(32))
    return MonomialIdeal(ring, I.exponents) if I.ring != ring else I


def _random_monomial(ring, rng, max_degree):
    e = [0] * ring.n
    for _ in range(rng.randint(0, max_degree)):
        e[rng.randrange(ring.n)] += 1
    return Monomial(ring, tuple(e))


def _m_primary(I, rng, max_power):
    """I plus a pure power of every variable."""
    n = I.ring.n
    extra = []
    for i in range(n):
        k = rng.randint(1, max_power)
        e = [0] * n
        e[i] = k
        extra.append(tuple(e))
    return I + MonomialIdeal(I.ring, extra)


# ---- campaigns ----------------------------------------------------------------

@dataclass
class CampaignReport:
    theorem_id: str
    population: dict = field(default_factory=dict)
    checked: int = 0
    violations: list = field(default_factory=list)
    seconds: float = 0.0
    bounds: dict = field(default_factory=dict)
    seed: int = 0

    @property
    def passed(self):
        return not self.violations

    def to_dict(self):
        return asdict(self)

    @classmethod
    def from_dict(cls, d):
        return cls(**{k: d[k] for k in ("theorem_id", "population", "checked", "violations",
                                         "seconds", "bounds", "seed") if k in d})


def _ideals(**kw):
    return {k: str(v) for k, v in kw.items()}


def _violation(reason, ring, **ideals):
    return {"reason": reason, "ring": list(ring.names), "inputs": _ideals(**ideals)}


def _cwl_corpus(D):
    return [I for I in enumerate_ideals_dim2(D) if is_cwl(I)]


def _camp_fullsum(rep, D=4, **_):
    cw = _cwl_corpus(D)
    rep.population = {"arity": 2, "max_gen_degree": D, "ideals": len(cw),
                      "description": "ordered pairs of componentwise linear staircases"}
    for I in cw:
        for J in cw:
            v = dim2.fullsum_verdict(I, J)
            rep.checked += 1
            if v.conclusion is not v.direct:
                rep.violations.append(_violation(
                    f"fullsum says {v.conclusion}, direct check says {v.direct}", I.ring, I=I, J=J))


def _camp_maxlength(rep, D=4, **_):
    cw = _cwl_corpus(D)
    rep.population = {"arity": 2, "max_gen_degree": D, "ideals": len(cw),
                      "description": "ordered pairs of full staircases with full sum"}
    for I in cw:
        for J in cw:
            S = I + J
            if not is_cwl(S):
                continue
            rep.checked += 1
            gap = (I & J).order - max(I.order, J.order)
            if not 0 <= gap <= 1:
                rep.violations.append(_violation(f"order gap {gap}", I.ring, I=I, J=J))


def _camp_ord(rep, D=4, **_):
    cw = _cwl_corpus(D)
    rep.population = {"arity": 2, "max_gen_degree": D, "ideals": len(cw),
                      "description": "ordered pairs of full staircases"}
    for I in cw:
        for J in cw:
            v = dim2.order_length_formula(I, J)
            rep.checked += 1
            if v.conclusion is not True:
                rep.violations.append(_violation(f"order/length formula fails: {v.witnesses}",
                                                 I.ring, I=I, J=J))


def _camp_lq(rep, D=6, **_):
    rep.population = {"arity": 2, "max_gen_degree": D,
                      "description": "all staircases; certificates for the cwl ones"}
    n_cwl = 0
    for I in enumerate_ideals_dim2(D):
        rep.checked += 1
        cert = dim2.cwl_ordering(I)
        cw = is_cwl(I)
        n_cwl += cw
        if cw and not (cert.success and dim2.validate_certificate(cert)):
            rep.violations.append(_violation("no valid linear-quotient ordering", I.ring, I=I))
        elif not cw and cert.success:
            rep.violations.append(_violation("ordering found for a non-cwl ideal", I.ring, I=I))
        elif not cert.consistent:
            rep.violations.append(_violation("inconsistent certificate", I.ring, I=I))
    rep.population["cwl"] = n_cwl


def _camp_trio(rep, D=5, **_):
    rep.population = {"arity": 2, "max_gen_degree": D, "description": "all staircases"}
    for I in enumerate_ideals_dim2(D):
        rep.checked += 1
        v = dim2.fullness_checks(I)
        if not v.consistent:
            rep.violations.append(_violation(f"full/m-full/cwl disagree: {v.details}", I.ring, I=I))


def _camp_oracle(rep, D=5, count=200, seed=0, **_):
    rep.population = {"arity": "2 exhaustive, 3-4 sampled", "max_gen_degree": D,
                      "count": count, "mu_max": 8}
    for I in enumerate_ideals_dim2(D):
        rep.checked += 1
        b = betti(I)
        if b != betti_oracle_lcm_lattice(I) or b != betti_oracle_dim2(I):
            rep.violations.append(_violation("Betti tables differ", I.ring, I=I))
    rng = random.Random(seed)
    for _ in range(count):
        arity = rng.choice((3, 4))
        I = random_ideal(arity, rng.randint(2, 5), 8, rng.getrandbits(32))
        rep.checked += 1
        if betti(I) != betti_oracle_lcm_lattice(I):
            rep.violations.append(_violation("Betti tables differ", I.ring, I=I))


def _maincwl_forced(rep):
    R = Ring("x", "y")
    x, y = R.var("x"), R.var("y")
    xy = x * y
    m = R.m
    for a_xy in (4, 5):
        A = {xy: m ** (a_xy - 2), x: R.ideal(x ** 2), y: R.ideal(y ** 2)}
        L = [xy, x, y]
        S = fullset.assemble(L, A, force=True)
        rep.checked += 1
        valid = fullset.validate_assignment(L, A).holds
        if valid or is_cwl(S):
            rep.violations.append(_violation(f"forced assembly with a_xy={a_xy} is cwl", R, S=S))


def _camp_maincwl(rep, count=1000, seed=0, **_):
    rep.population = {"arity": "2-4", "count": count,
                      "description": "random valid full-set assignments, alternating "
                                     "power and strongly stable pieces, plus two forced "
                                     "invalid assemblies"}
    rings = [Ring("x y"), Ring("x y z"), Ring("a b c d")]
    for k in range(count):
        ring = rings[k % 3]
        kind = "powers" if k % 2 == 0 else "stable"
        L, A = fullset.random_instance(ring, seed * 100003 + k, kind)
        rep.checked += 1
        v = fullset.validate_assignment(L, A)
        if not v.holds:
            rep.violations.append({"reason": f"generator produced an invalid assignment: "
                                             f"{v.witnesses}", "ring": list(ring.names),
                                   "inputs": v.inputs})
            continue
        S = fullset.assemble(L, A)
        if not (S.is_unit or is_cwl(S)):
            rep.violations.append({"reason": "assembled ideal is not componentwise linear",
                                   "ring": list(ring.names),
                                   "inputs": dict(v.inputs, sum=str(S))})
        lhs, rhs = fullset.intersection_identity(L, A)
        if lhs != rhs:
            rep.violations.append({"reason": "intersection identity fails",
                                   "ring": list(ring.names),
                                   "inputs": dict(v.inputs, lhs=str(lhs), rhs=str(rhs))})
    _maincwl_forced(rep)


def _pairs(seed, count, arities=(2, 3, 4), D=4, mu=4):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.choice(arities)
        ring = Ring(list("xyz"[:n])) if n <= 3 else Ring("a b c d")
        yield rng, ring, _random_in_ring(ring, rng, D, mu), _random_in_ring(ring, rng, D, mu)


def _camp_fIgJ(rep, count=500, seed=0, **_):
    rep.population = {"arity": "2-4", "count": count, "max_gen_degree": 4}
    for rng, ring, I, J in _pairs(seed, count):
        f, g = _random_monomial(ring, rng, 3), _random_monomial(ring, rng, 3)
        h = f.lcm(g)
        lhs = scale(f, I) & scale(g, J)
        rhs = scale(h, colon(I, h / f) & colon(J, h / g))
        rep.checked += 1
        if lhs != rhs:
            rep.violations.append(_violation(f"fI cap gJ identity fails for f={f}, g={g}",
                                             ring, I=I, J=J))


def _camp_distributivity(rep, count=500, seed=0, **_):
    rep.population = {"arity": "2-4", "count": count, "max_gen_degree": 4}
    for rng, ring, A, B in _pairs(seed, count):
        C = _random_in_ring(ring, rng, 4, 4)
        rep.checked += 1
        if ((A + B) & C) != ((A & C) + (B & C)):
            rep.violations.append(_violation("(A+B) cap C differs", ring, A=A, B=B, C=C))


def _camp_regcwl1(rep, count=500, seed=0, **_):
    """Pairs are drawn until ``count`` of them have a componentwise linear sum."""
    rng = random.Random(seed)
    cw2 = _cwl_corpus(4)
    drawn = 0
    while rep.checked < count and drawn < 50 * count:
        drawn += 1
        if drawn % 2:
            I, J = rng.choice(cw2), rng.choice(cw2)
        else:
            ring = Ring("x y z")
            I, J = _random_in_ring(ring, rng, 3, 4), _random_in_ring(ring, rng, 3, 4)
        if not is_cwl(I + J):
            continue
        rep.checked += 1
        K = I & J
        if reg_value(K) > max(reg_value(I), reg_value(J)) + 1:
            rep.violations.append(_violation("reg(I cap J) > max + 1", I.ring, I=I, J=J))
    rep.population = {"arity": "2-3", "count": count, "drawn": drawn,
                      "description": "pairs with componentwise linear sum"}


def _camp_regndeg(rep, count=500, seed=0, **_):
    rep.population = {"arity": "2-4", "count": count, "description": "m-primary I, monomial f"}
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.choice((2, 3, 4))
        ring = Ring(list("xyz"[:n])) if n <= 3 else Ring("a b c d")
        I = _m_primary(_random_in_ring(ring, rng, 4, 4), rng, 5)
        f = _random_monomial(ring, rng, 8)
        rI = reg_value(I)
        lhs = reg_or_zero(colon(I, f)) + f.degree <= rI
        rep.checked += 1
        if lhs != (f.degree <= rI):
            rep.violations.append(_violation(f"regndeg fails for f={f}", ring, I=I))


def _camp_regm_primary(rep, count=500, seed=0, **_):
    rep.population = {"arity": "2-4", "count": count, "description": "pairs of m-primary ideals"}
    for rng, ring, I, J in _pairs(seed, count):
        I, J = _m_primary(I, rng, 5), _m_primary(J, rng, 5)
        rep.checked += 1
        if reg_value(I & J) > max(reg_value(I), reg_value(J)):
            rep.violations.append(_violation("reg(I cap J) > max", ring, I=I, J=J))


def _camp_dim2maxprop(rep, count=500, seed=0, **_):
    """Pairs in k[x,y] are drawn until ``count`` have a non-principal intersection."""
    rng = random.Random(seed)
    ring = Ring("x y")
    drawn = 0
    while rep.checked < count and drawn < 50 * count:
        drawn += 1
        I, J = _random_in_ring(ring, rng, 6, 4), _random_in_ring(ring, rng, 6, 4)
        if rng.random() < 0.5:
            I = scale(_random_monomial(ring, rng, 3), I)
        K = I & J
        if K.mu == 1:
            continue
        rep.checked += 1
        if reg_value(K) > max(reg_value(I), reg_value(J)):
            rep.violations.append(_violation("reg(I cap J) > max for non-principal I cap J",
                                             ring, I=I, J=J))
    rep.population = {"arity": 2, "count": count, "drawn": drawn, "max_gen_degree": 6}


def _camp_intersection(rep, count=300, seed=0, **_):
    """Oracle agreement of intersect, colon, sum and component on random inputs."""
    rep.population = {"arity": "2-4", "count": count, "max_gen_degree": 4}
    for rng, ring, I, J in _pairs(seed, count):
        f = _random_monomial(ring, rng, 3)
        j = rng.randint(1, 5)
        cases = [("intersect", J, I & J), ("sum", J, I + J), ("colon", f, colon(I, f)),
                 ("colon", J, colon(I, J)), ("component", j, component(I, j))]
        for kind, other, got in cases:
            rep.checked += 1
            d = oracle_dmax(kind, I, other)
            if oracle_op(kind, I, other, d) != got:
                rep.violations.append(_violation(f"{kind} disagrees with the oracle "
                                                 f"(other={other})", ring, I=I, J=J))


CAMPAIGNS = {
    "fullsum": _camp_fullsum, "maxlength": _camp_maxlength, "ord": _camp_ord,
    "lq": _camp_lq, "trio": _camp_trio, "oracle": _camp_oracle, "maincwl": _camp_maincwl,
    "fIgJ": _camp_fIgJ, "distributivity": _camp_distributivity, "regcwl1": _camp_regcwl1,
    "regndeg": _camp_regndeg, "regm_primary": _camp_regm_primary,
    "dim2maxprop": _camp_dim2maxprop, "intersection": _camp_intersection,
}


def run_campaign(theorem_id, seed=0, **params):
    """Run one sweep; violations are collected, never raised."""
    if theorem_id not in CAMPAIGNS:
        raise KeyError(f"unknown campaign {theorem_id!r}; known: {sorted(CAMPAIGNS)}")
    rep = CampaignReport(theorem_id, seed=seed, bounds=dict(params))
    t0 = time.perf_counter()
    CAMPAIGNS[theorem_id](rep, seed=seed, **params)
    rep.seconds = round(time.perf_counter() - t0, 3)
    return rep


__all__ = ["CAMPAIGNS", "CampaignReport", "count_antichains", "enumerate_ideals_dim2",
           "oracle_dmax", "oracle_op", "random_ideal", "run_campaign"]
