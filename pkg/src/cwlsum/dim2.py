"""Two-variable theory: fullness, the order/length formula, the sum
characterization and linear-quotient orderings.

The "general linear form" z is taken to be the sum of all variables.  A
monomial ideal is fixed by the torus, and rescaling variables carries any
linear form with all coefficients nonzero to z, so every such form gives the
same graded dimensions for I : z.  Those forms are a dense open set, hence z
attains the generic value.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import kernels
from .errors import DegenerateIdealError
from .monomial import (Monomial, colon, dim_in_degree, factor_gcd, lcm_exps, m_power,
                       maximal_ideal, monomials_of_degree, product)
from .linalg import rank_sparse
from .resolution import is_cwl, reg_or_zero, reg_value
from .verdict import Verdict, not_applicable


@dataclass(frozen=True)
class GradedDims:
    dims: tuple
    d_max: int

    def __getitem__(self, d):
        return self.dims[d] if 0 <= d <= self.d_max else None


def colon_z_dim(I, d):
    """dim_k (I : z)_d, the kernel of multiplication by z from S_d to (S/I)_(d+1)."""
    n = I.ring.n
    src = monomials_of_degree(n, d)
    if I.is_zero:
        outside_ok = [False] * len(monomials_of_degree(n, d + 1))
    else:
        outside_ok = kernels.membership(I.exponents, monomials_of_degree(n, d + 1))
    col = {t: k for k, (t, inside) in enumerate(zip(monomials_of_degree(n, d + 1), outside_ok))
           if not inside}
    rows = []
    for u in src:
        row = {}
        for i in range(n):
            t = u[:i] + (u[i] + 1,) + u[i + 1:]
            k = col.get(t)
            if k is not None:
                row[k] = 1
        rows.append(row)
    return len(src) - rank_sparse(rows)


def graded_colon_linear(I, d_max):
    if I.is_zero:
        raise DegenerateIdealError("I : z is the whole ring for the zero ideal")
    return GradedDims(tuple(colon_z_dim(I, d) for d in range(d_max + 1)), d_max)


def _dims(I, d_max):
    return tuple(dim_in_degree(I, d) for d in range(d_max + 1))


def _default_dmax(I):
    return reg_or_zero(I) + 2


def is_full(I, d_max=None):
    """I : z = I : m, compared degree by degree (I : m is always inside I : z)."""
    d_max = _default_dmax(I) if d_max is None else d_max
    return graded_colon_linear(I, d_max).dims == _dims(colon(I, maximal_ideal(I.ring)), d_max)


def is_m_full(I, d_max=None):
    """mI : z = I, compared degree by degree (I is always inside mI : z)."""
    d_max = _default_dmax(I) if d_max is None else d_max
    mI = product(maximal_ideal(I.ring), I)
    return graded_colon_linear(mI, d_max).dims == _dims(I, d_max)


def fullness_checks(I, d_max=None):
    """Full, m-full and (in two variables) componentwise linear, side by side."""
    if I.is_zero or I.is_unit:
        raise DegenerateIdealError("fullness is checked for proper nonzero ideals")
    d_max = _default_dmax(I) if d_max is None else d_max
    full = is_full(I, d_max)
    mfull = is_m_full(I, d_max)
    cwl = is_cwl(I)
    if I.ring.n == 2:
        consistent = full == mfull == cwl
    else:
        consistent = full or not mfull  # m-full implies full in any dimension
    return Verdict("fullness", True, full, inputs={"I": str(I)}, bounds={"d_max": d_max},
                   direct=cwl, consistent=consistent,
                   details={"is_full": full, "is_m_full": mfull, "is_cwl": cwl})


def _need_dim2(I, J=None):
    if I.ring.n != 2:
        return "needs a ring in two variables"
    if J is not None and J.ring != I.ring:
        return "ideals live in different rings"
    for X in (I, J):
        if X is not None and (X.is_zero or X.is_unit):
            return "zero or unit ideal"
    return None


def order_length_formula(I, J, d_max=None):
    """o(I cap J) = max(o(I), o(J)) + length((I+J):z / (I:m + J:m)) for full I, J."""
    name = "order_length"
    inputs = {"I": str(I), "J": str(J)}
    bad = _need_dim2(I, J)
    if bad:
        return not_applicable(name, bad, inputs)
    if not (is_full(I) and is_full(J)):
        return not_applicable(name, "I and J must be full", inputs)
    S = I + J
    if d_max is None:
        d_max = max(reg_value(I) + reg_value(J), reg_or_zero(S)) + 2
    m = maximal_ideal(I.ring)
    inner = colon(I, m) + colon(J, m)
    per_degree = [colon_z_dim(S, d) - dim_in_degree(inner, d) for d in range(d_max + 1)]
    length = sum(per_degree)
    lhs = (I & J).order
    mo = max(I.order, J.order)
    holds = lhs == mo + length
    return Verdict(name, True, holds,
                   witnesses=[("order of intersection", lhs), ("max order", mo),
                              ("length", length), ("I:m + J:m", inner)],
                   bounds={"d_max": d_max}, inputs=inputs, consistent=holds,
                   details={"length_by_degree": per_degree})


def fullsum_verdict(I, J):
    """For componentwise linear I, J in k[x,y], I + J is componentwise linear iff
    (1) o(I cap J) = max(o(I), o(J)), or
    (2) o(I cap J) = max + 1 and (I+J):m != I:m + J:m.
    """
    name = "fullsum"
    inputs = {"I": str(I), "J": str(J)}
    bad = _need_dim2(I, J)
    if bad:
        return not_applicable(name, bad, inputs)
    S = I + J
    direct = is_cwl(S)
    if not (is_cwl(I) and is_cwl(J)):
        return not_applicable(name, "I and J must be componentwise linear", inputs, direct=direct)
    m = maximal_ideal(I.ring)
    oK = (I & J).order
    mo = max(I.order, J.order)
    P = colon(S, m)
    Q = colon(I, m) + colon(J, m)
    cond1 = oK == mo
    cond2 = oK == mo + 1 and P != Q
    concl = cond1 or cond2
    gap = oK - mo
    maxlength_ok = (not direct) or 0 <= gap <= 1
    which = 1 if cond1 else (2 if cond2 else None)
    wit = [("order of intersection", oK), ("max order", mo), ("(I+J):m", P),
           ("I:m + J:m", Q), ("condition", which)]
    return Verdict(name, True, concl, witnesses=wit, inputs=inputs, direct=direct,
                   consistent=(concl == direct) and maxlength_ok,
                   details={"order_gap": gap, "maxlength_ok": maxlength_ok})


def mu_additive_verdict(I, J):
    """With mu(I+J) = mu(I) + mu(J): I + J full iff o(I cap J) <= max(o(I), o(J)) + 1."""
    name = "mu_additive"
    inputs = {"I": str(I), "J": str(J)}
    bad = _need_dim2(I, J)
    if bad:
        return not_applicable(name, bad, inputs)
    S = I + J
    direct = is_cwl(S)
    if not (is_cwl(I) and is_cwl(J)):
        return not_applicable(name, "I and J must be full", inputs, direct=direct)
    if S.mu != I.mu + J.mu:
        return not_applicable(name, f"mu(I+J) = {S.mu} != {I.mu} + {J.mu}", inputs, direct=direct)
    oK = (I & J).order
    mo = max(I.order, J.order)
    concl = oK <= mo + 1
    return Verdict(name, True, concl, witnesses=[("order of intersection", oK), ("max order", mo)],
                   inputs=inputs, direct=direct, consistent=concl == direct)


def _single_variable(C):
    """Index of v when C = (x_v), else None."""
    if C.mu == 1 and sum(C.exponents[0]) == 1:
        return C.exponents[0].index(1)
    return None


def linear_colon_tests(I, f):
    """Adding one monomial f to a full ideal I (deg f >= o(I), mu grows by one):
    I + (f) is full iff I : f contains a variable, and then I : f is that variable."""
    name = "linear_colon"
    if not isinstance(f, Monomial):
        f = Monomial(I.ring, tuple(f))
    inputs = {"I": str(I), "f": str(f)}
    bad = _need_dim2(I)
    if bad:
        return not_applicable(name, bad, inputs)
    if not is_cwl(I):
        return not_applicable(name, "I must be full", inputs)
    if f.degree < I.order:
        return not_applicable(name, "deg f < o(I)", inputs)
    if I.contains(f):
        return not_applicable(name, "f lies in I", inputs)
    S = I + I.ring.ideal(f)
    if S.mu != I.mu + 1:
        return not_applicable(name, "mu(I + (f)) != mu(I) + 1", inputs)
    C = colon(I, f)
    variables = [e.index(1) for e in C.exponents if sum(e) == 1]
    has_var = bool(variables)
    direct = is_cwl(S)
    principal = _single_variable(C)
    consistent = has_var == direct and (not direct or principal is not None)
    wit = [("colon", C)]
    if variables:
        wit.append(("variable", I.ring.names[variables[0]]))
    return Verdict(name, True, has_var, witnesses=wit, inputs=inputs, direct=direct,
                   consistent=consistent, details={"colon_is_one_variable": principal is not None})


@dataclass
class OrderingCertificate:
    """Generators f_1..f_s with (f_1..f_j) : f_(j+1) = (z_j)."""

    ideal: object
    order: list = field(default_factory=list)       # Monomials
    colon_vars: list = field(default_factory=list)  # variable names z_1..z_(s-1)
    prefix_cwl: list = field(default_factory=list)
    success: bool = True
    failure_step: int = None
    obstruction: str = ""
    consistent: bool = True

    @property
    def degrees(self):
        return [f.degree for f in self.order]


def cwl_ordering(I):
    """Greedy linear-quotients ordering in nondecreasing degree.

    Start from the canonically first generator of least degree.  At each
    step take, among the remaining generators of least degree, the
    canonically first one whose colon by the prefix contains a variable.
    A componentwise linear ideal always admits such a choice; if none
    exists the input is not componentwise linear and the failing step is
    reported.  On success every prefix is certified with the Betti route.
    """
    cert = OrderingCertificate(ideal=I)
    bad = _need_dim2(I)
    if bad:
        raise ValueError(bad)
    remaining = list(I.exponents)
    ring = I.ring
    prefix = [remaining.pop(0)]
    while remaining:
        o = min(sum(e) for e in remaining)
        P = ring.ideal(*prefix)
        pick = None
        for e in remaining:
            if sum(e) != o:
                continue
            C = colon(P, e)
            if any(sum(g) == 1 for g in C.exponents):
                pick = (e, C)
                break
        if pick is None:
            cert.success = False
            cert.failure_step = len(prefix) + 1
            cert.obstruction = (f"no generator of degree {o} has a colon by {P} "
                                f"containing a variable")
            break
        e, C = pick
        v = _single_variable(C)
        cert.colon_vars.append(ring.names[v] if v is not None else str(C))
        if v is None:
            cert.consistent = False
        prefix.append(e)
        remaining.remove(e)
    cert.order = [Monomial(ring, e) for e in prefix]
    if cert.success:
        cert.prefix_cwl = [is_cwl(ring.ideal(*prefix[:j])) for j in range(1, len(prefix) + 1)]
        cert.consistent = cert.consistent and validate_certificate(cert)
    else:
        cert.consistent = not is_cwl(I)
    return cert


def validate_certificate(cert):
    """Re-check a certificate from scratch."""
    I = cert.ideal
    ring = I.ring
    exps = [f.exps for f in cert.order]
    if sorted(exps) != sorted(I.exponents):
        return False
    degs = [sum(e) for e in exps]
    if degs != sorted(degs):
        return False
    for j in range(1, len(exps)):
        C = colon(ring.ideal(*exps[:j]), exps[j])
        v = _single_variable(C)
        if v is None or ring.names[v] != cert.colon_vars[j - 1]:
            return False
    return all(is_cwl(ring.ideal(*exps[:j])) for j in range(1, len(exps) + 1))


def reg_plus_one_verdict(I, J, s_max=None):
    """When reg(I cap J) = max(reg I, reg J) + 1, write I = f I', J = g J' and
    lcm(f, g) = f f' = g g'.  Then I + J is componentwise linear iff
    (m^(s+1) I' : f') cap (m^(s+1) J' : g') lies in m^s for all s >= 0."""
    name = "reg_plus_one"
    inputs = {"I": str(I), "J": str(J)}
    bad = _need_dim2(I, J)
    if bad:
        return not_applicable(name, bad, inputs)
    direct = is_cwl(I + J)
    if not (is_cwl(I) and is_cwl(J)):
        return not_applicable(name, "I and J must be componentwise linear", inputs, direct=direct)
    K = I & J
    rI, rJ, rK = reg_value(I), reg_value(J), reg_value(K)
    if rK != max(rI, rJ) + 1:
        return not_applicable(name, f"reg(I cap J) = {rK} is not max({rI}, {rJ}) + 1", inputs,
                              direct=direct)
    if K.mu != 1:
        return not_applicable(name, "I cap J is not principal", inputs, direct=direct)
    ring = I.ring
    f, Ip = factor_gcd(I)
    g, Jp = factor_gcd(J)
    L = lcm_exps(f.exps, g.exps)
    fp = tuple(a - b for a, b in zip(L, f.exps))
    gp = tuple(a - b for a, b in zip(L, g.exps))
    if s_max is None:
        s_max = reg_or_zero(Ip) + reg_or_zero(Jp) + 2
    fail = None
    for s in range(s_max + 1):
        ms1 = m_power(ring, s + 1)
        A = colon(product(ms1, Ip), fp)
        B = colon(product(ms1, Jp), gp)
        if not (A & B) <= m_power(ring, s):
            fail = (s, A, B)
            break
    concl = fail is None
    wit = [("f", f), ("I'", Ip), ("g", g), ("J'", Jp),
           ("f'", Monomial(ring, fp)), ("g'", Monomial(ring, gp))]
    if fail:
        wit += [("failing s", fail[0]), ("m^(s+1)I':f'", fail[1]), ("m^(s+1)J':g'", fail[2])]
    return Verdict(name, True, concl, witnesses=wit, bounds={"s_max": s_max}, inputs=inputs,
                   direct=direct, consistent=concl == direct)


def incremental_chain(I_gens, ring):
    """Verdicts of fullsum for adding the generators one at a time in the given order."""
    out = []
    prefix = ring.ideal(I_gens[0])
    for g in I_gens[1:]:
        out.append(fullsum_verdict(prefix, ring.ideal(g)))
        prefix = prefix + ring.ideal(g)
    return out


__all__ = [
    "GradedDims", "OrderingCertificate", "colon_z_dim", "cwl_ordering", "fullness_checks",
    "fullsum_verdict", "graded_colon_linear", "is_full", "is_m_full",
    "linear_colon_tests", "mu_additive_verdict", "order_length_formula", "incremental_chain",
    "reg_plus_one_verdict", "validate_certificate",
]
