"""Sufficient and necessary conditions for I + J to be componentwise linear.

Every check returns a :class:`~cwlsum.verdict.Verdict` and also runs the
direct componentwise-linearity test on the sum, so that a criterion which
promises more than the direct test delivers shows up as
``consistent=False`` instead of passing silently.

Scans over t or s are truncated at ``t_max`` / ``s_max``; the bound used is
recorded in ``Verdict.bounds``.  A failure at a scanned index is a definite
False; a clean scan is reported as True.
"""
from __future__ import annotations

from itertools import combinations

from .monomial import component, m_power, maximal_ideal, product, variable_ideal
from .resolution import is_cwl, reg_value
from .verdict import Verdict, not_applicable


def _inputs(**ideals):
    return {k: str(v) for k, v in ideals.items()}


def _proper(I):
    return not I.is_zero and not I.is_unit


def _t_linear(I, t):
    return _proper(I) and set(I.degrees) == {t} and reg_value(I) == t


def check_lin_plus_lin(I, J, t):
    """I, J with t-linear resolutions: I + J is t-linear iff reg(I cap J) <= t + 1."""
    name = "lin_plus_lin"
    inputs = _inputs(I=I, J=J)
    S = I + J
    direct = _t_linear(S, t)
    if not (_t_linear(I, t) and _t_linear(J, t)):
        return not_applicable(name, f"I and J must both have {t}-linear resolutions",
                              inputs, bounds={"t": t}, direct=direct)
    K = I & J
    r = reg_value(K)
    concl = r <= t + 1
    return Verdict(name, True, concl, witnesses=[("intersection", K), ("reg intersection", r)],
                   bounds={"t": t}, inputs=inputs, direct=direct, consistent=concl == direct)


def check_cwl_plus_linear(I, J):
    """I componentwise linear, J linear, reg J >= reg I, reg(I cap J) = reg J + 1."""
    name = "cwl_plus_linear"
    inputs = _inputs(I=I, J=J)
    direct = is_cwl(I + J)
    if not (_proper(I) and _proper(J)):
        return not_applicable(name, "zero or unit ideal", inputs, direct=direct)
    if not is_cwl(I):
        return not_applicable(name, "I is not componentwise linear", inputs, direct=direct)
    d = set(J.degrees)
    if len(d) != 1 or reg_value(J) != min(d):
        return not_applicable(name, "J has no linear resolution", inputs, direct=direct)
    rI, rJ = reg_value(I), reg_value(J)
    if rJ < rI:
        return not_applicable(name, f"reg J = {rJ} < reg I = {rI}", inputs, direct=direct,
                              details={"reg I": rI, "reg J": rJ})
    K = I & J
    rK = reg_value(K)
    wit = [("intersection", K), ("reg intersection", rK), ("reg J", rJ)]
    if rK == rJ + 1:
        return Verdict(name, True, True, witnesses=wit, inputs=inputs, direct=direct,
                       consistent=direct)
    return Verdict(name, True, "inconclusive", witnesses=wit, inputs=inputs, direct=direct)


def check_componentwise_criterion(I, J, t_max=None):
    """I + J is componentwise linear iff reg(I_<t> cap J_<t>) <= t + 1 for all t."""
    name = "componentwise"
    inputs = _inputs(I=I, J=J)
    if not (_proper(I) and _proper(J)):
        return not_applicable(name, "zero or unit ideal", inputs)
    direct = is_cwl(I + J)
    if not (is_cwl(I) and is_cwl(J)):
        return not_applicable(name, "I and J must be componentwise linear", inputs, direct=direct)
    if t_max is None:
        t_max = reg_value(I) + reg_value(J)
    t_min = min(I.order, J.order)
    bounds = {"t_min": t_min, "t_max": t_max}
    for t in range(t_min, t_max + 1):
        It, Jt = component(I, t), component(J, t)
        if It.is_zero or Jt.is_zero:
            continue
        K = It & Jt
        r = reg_value(K)
        if r > t + 1:
            wit = [("failing t", t), ("intersection", K), ("reg intersection", r)]
            return Verdict(name, True, False, witnesses=wit, bounds=bounds, inputs=inputs,
                           direct=direct, consistent=not direct)
    return Verdict(name, True, True, bounds=bounds, inputs=inputs, direct=direct,
                   consistent=direct)


def check_hv_criterion(I, J, s_max=None):
    """Criterion for I cap J contained in mI cap mJ.

    I + J is componentwise linear iff I cap J is componentwise linear and
    m^(s+1) I cap m^(s+1) J = m^s (I cap J) for all s >= 0.  The one-sided
    sufficient conditions are evaluated too and reported in ``details``.
    """
    name = "hv"
    inputs = _inputs(I=I, J=J)
    if not (_proper(I) and _proper(J)):
        return not_applicable(name, "zero or unit ideal", inputs)
    direct = is_cwl(I + J)
    if not (is_cwl(I) and is_cwl(J)):
        return not_applicable(name, "I and J must be componentwise linear", inputs, direct=direct)
    m = maximal_ideal(I.ring)
    K = I & J
    if not (K <= product(m, I) and K <= product(m, J)):
        return not_applicable(name, "I cap J is not contained in mI cap mJ", inputs,
                              direct=direct, details={"intersection": str(K)})
    if s_max is None:
        s_max = reg_value(I) + reg_value(J) + 2
    cwl_K = is_cwl(K)
    first_bad = None
    one_sided = True
    for s in range(s_max + 1):
        mI = product(m_power(I.ring, s + 1), I)
        mJ = product(m_power(I.ring, s + 1), J)
        target = product(m_power(I.ring, s), K)
        if first_bad is None and (mI & mJ) != target:
            first_bad = (s, mI & mJ, target)
        left = (K & mI) == (J & mI) == target
        right = (K & mJ) == (I & mJ) == target
        if not (left or right):
            one_sided = False
    concl = cwl_K and first_bad is None
    wit = [("intersection", K), ("intersection cwl", cwl_K)]
    if first_bad is not None:
        wit += [("failing s", first_bad[0]), ("m^(s+1)I cap m^(s+1)J", first_bad[1]),
                ("m^s(I cap J)", first_bad[2])]
    consistent = concl == direct and not (cwl_K and one_sided and not direct)
    return Verdict(name, True, concl, witnesses=wit, bounds={"s_max": s_max}, inputs=inputs,
                   direct=direct, consistent=consistent,
                   details={"one_sided_sufficient": one_sided and cwl_K})


def _var_indices(ring, prime_vars):
    out = []
    for v in prime_vars:
        out.append(v if isinstance(v, int) else ring.index(v))
    return sorted(set(out))


def check_prime_product(prime_vars, J):
    """n J is componentwise linear when Supp(n) and Supp(J) are disjoint."""
    name = "prime_product"
    idx = _var_indices(J.ring, prime_vars)
    if not idx:
        raise ValueError("the prime needs at least one variable")
    n = variable_ideal(J.ring, idx)
    nJ = product(n, J)
    inputs = _inputs(n=n, J=J)
    direct = is_cwl(nJ) if _proper(nJ) else True
    wit = [("product", nJ)]
    if not _proper(J) or not is_cwl(J):
        return not_applicable(name, "J must be a componentwise linear proper ideal", inputs,
                              direct=direct, details={"product": str(nJ)})
    overlap = set(idx) & J.support
    if overlap:
        names = sorted(J.ring.names[i] for i in overlap)
        return not_applicable(name, f"supports overlap in {names}", inputs, direct=direct,
                              details={"product": str(nJ)})
    return Verdict(name, True, True, witnesses=wit, inputs=inputs, direct=direct,
                   consistent=direct)


def find_prime_multiplier(K, J):
    """Smallest set of variables outside Supp(J) with K = n J, or None."""
    ring = J.ring
    free = [i for i in range(ring.n) if i not in J.support]
    for size in range(1, len(free) + 1):
        for combo in combinations(free, size):
            if product(variable_ideal(ring, combo), J) == K:
                return combo
    return None


def check_nJ_sum(I, J):
    """I, J componentwise linear, I cap J in mI and I cap J = n J with n disjoint from J."""
    name = "nJ_sum"
    inputs = _inputs(I=I, J=J)
    if not (_proper(I) and _proper(J)):
        return not_applicable(name, "zero or unit ideal", inputs)
    direct = is_cwl(I + J)
    if not (is_cwl(I) and is_cwl(J)):
        return not_applicable(name, "I and J must be componentwise linear", inputs, direct=direct)
    K = I & J
    combo = find_prime_multiplier(K, J)
    details = {"intersection": str(K)}
    if combo is not None:
        details["prime"] = [I.ring.names[i] for i in combo]
    if not K <= product(maximal_ideal(I.ring), I):
        return not_applicable(name, "I cap J is not contained in mI", inputs, direct=direct,
                              details=details)
    if combo is None:
        return not_applicable(name, "no monomial prime n disjoint from Supp(J) with I cap J = nJ",
                              inputs, direct=direct, details=details)
    wit = [("intersection", K), ("prime", variable_ideal(I.ring, combo))]
    return Verdict(name, True, True, witnesses=wit, inputs=inputs, direct=direct,
                   consistent=direct, details=details)
