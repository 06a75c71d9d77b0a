"""Pure-Python versions of the hot loops.

Same signatures and results as the compiled ``_kernels`` extension; used
when the extension is missing or ``CWLSUM_PURE=1`` is set.  Points are
tuples of non-negative ints, all of the same length.
"""
from itertools import product


def _divides(g, a):
    for gi, ai in zip(g, a):
        if gi > ai:
            return False
    return True


def minimal_elements(points):
    """Divisibility-minimal elements of ``points`` (deduplicated, any order)."""
    pts = sorted(set(points), key=sum)
    keep = []
    for p in pts:
        for q in keep:
            if _divides(q, p):
                break
        else:
            keep.append(p)
    return keep


def membership(gens, points):
    """For each point, whether some generator divides it."""
    out = []
    for p in points:
        for g in gens:
            if _divides(g, p):
                out.append(True)
                break
        else:
            out.append(False)
    return out


def _is_cone(mask, n):
    faces = [b for b in range(1 << n) if (mask >> b) & 1]
    for i in range(n):
        bit = 1 << i
        if all((mask >> (b | bit)) & 1 for b in faces):
            return True
    return False


def koszul_candidates(gens, n, values):
    """Upper Koszul complexes on the exponent grid that are not cones.

    ``values[i]`` lists the exponents to try in coordinate ``i``.  For each
    grid point ``a`` the complex is encoded as a bitmask over subsets ``b`` of
    the variables: bit ``b`` is set iff ``a - b >= 0`` and ``x^(a-b)`` lies in
    the ideal generated by ``gens``.  Void complexes and cones are acyclic
    and are skipped.  Returns a list of ``(a, mask)`` pairs.
    """
    out = []
    full = 1 << n
    for a in product(*values):
        if not any(_divides(g, a) for g in gens):
            continue
        mask = 0
        for b in range(full):
            c = list(a)
            ok = True
            for i in range(n):
                if (b >> i) & 1:
                    c[i] -= 1
                    if c[i] < 0:
                        ok = False
                        break
            if ok and any(_divides(g, c) for g in gens):
                mask |= 1 << b
        if not _is_cone(mask, n):
            out.append((tuple(a), mask))
    return out
