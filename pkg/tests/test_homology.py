import pytest
from hypothesis import given, settings, strategies as st

from cwlsum.homology import SimplicialComplex, reduced_betti, reduced_betti_mask
from cwlsum.linalg import rank, rank_sparse


def closure(facets):
    out = set()
    for f in facets:
        s = f
        while True:
            out.add(s)
            if s == 0:
                break
            s = (s - 1) & f
    return out


def test_void_and_empty():
    assert reduced_betti([]) == ()
    assert reduced_betti([0]) == (1,)


def test_point_and_two_points():
    assert reduced_betti(closure([0b1])) == ()
    assert reduced_betti(closure([0b1, 0b10])) == (0, 1)


def test_circle_and_sphere():
    circle = closure([0b011, 0b110, 0b101])
    assert reduced_betti(circle) == (0, 0, 1)
    sphere = closure([0b0111, 0b1011, 0b1101, 0b1110])
    assert reduced_betti(sphere) == (0, 0, 0, 1)


def test_simplex_acyclic():
    assert reduced_betti(closure([0b1111])) == ()


def test_from_facets():
    K = SimplicialComplex.from_facets(4, [[0, 1], [1, 2], [2, 3], [3, 0]])
    assert K.is_closed()
    assert K.reduced_betti() == (0, 0, 1)


def test_mask_matches_faces():
    faces = closure([0b011, 0b110, 0b101])
    mask = sum(1 << f for f in faces)
    assert reduced_betti_mask(3, mask) == reduced_betti(faces)


def test_rank_examples():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2
    assert rank([[2, 3], [4, 5]]) == 2
    assert rank([]) == 0
    assert rank_sparse([{0: 0}, {}]) == 0


def _frac_rank(M):
    from fractions import Fraction
    A = [[Fraction(v) for v in row] for row in M]
    r = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(A)) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c] / A[r][c]
                A[i] = [a - f * b for a, b in zip(A[i], A[r])]
        r += 1
    return r


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 6).flatmap(lambda c: st.lists(
    st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=1, max_size=7)))
def test_rank_matches_fraction_elimination(M):
    assert rank(M) == _frac_rank(M)


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 31), min_size=1, max_size=5))
def test_euler_characteristic(facets):
    faces = closure(facets)
    h = reduced_betti(faces)
    chi = sum((-1) ** (bin(f).count("1") - 1) for f in faces)
    assert chi == sum((-1) ** (k - 1) * r for k, r in enumerate(h))


def test_cone_is_acyclic():
    # cone over a circle with apex 3
    circle = [0b011, 0b110, 0b101]
    assert reduced_betti(closure([f | 0b1000 for f in circle])) == ()


def test_unclosed_rejected():
    with pytest.raises(ValueError):
        SimplicialComplex.from_facets(2, [[0, 5]])
