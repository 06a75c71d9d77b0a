"""Reduced simplicial homology over Q.

Faces are bitsets over the vertex set.  The empty face is bitset 0; a
complex that contains only the empty face has reduced homology k in
dimension -1, and the void complex (no faces at all) is acyclic.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .linalg import rank_sparse


def _bits(b):
    out = []
    i = 0
    while b:
        if b & 1:
            out.append(i)
        b >>= 1
        i += 1
    return out


def _boundary_rank(upper, lower_index):
    rows = []
    for face in upper:
        row = {}
        for pos, v in enumerate(_bits(face)):
            row[lower_index[face & ~(1 << v)]] = -1 if pos % 2 else 1
        rows.append(row)
    return rank_sparse(rows)


def reduced_betti(faces):
    """Ranks of reduced homology as a tuple indexed by dimension + 1.

    ``faces`` must be closed under taking subsets.
    """
    faces = set(faces)
    if not faces:
        return ()
    by_size = {}
    for f in faces:
        by_size.setdefault(bin(f).count("1"), []).append(f)
    top = max(by_size)
    for lst in by_size.values():
        lst.sort()
    index = {k: {f: i for i, f in enumerate(v)} for k, v in by_size.items()}
    # ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces
    ranks = {0: 0}
    for k in range(1, top + 1):
        ranks[k] = _boundary_rank(by_size.get(k, []), index.get(k - 1, {})) if k in by_size else 0
    out = []
    for k in range(0, top + 1):  # size k <-> dimension k-1
        f_k = len(by_size.get(k, ()))
        out.append(f_k - ranks[k] - ranks.get(k + 1, 0))
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@lru_cache(maxsize=None)
def reduced_betti_mask(n, mask):
    """Reduced homology of the complex on ``n`` vertices whose faces are the set bits of ``mask``."""
    return reduced_betti(b for b in range(1 << n) if (mask >> b) & 1)


@dataclass(frozen=True)
class SimplicialComplex:
    n_vertices: int
    faces: frozenset

    @classmethod
    def from_facets(cls, n_vertices, facets):
        """Facets as bitsets or as iterables of vertex indices."""
        faces = set()
        for f in facets:
            if not isinstance(f, int):
                f = sum(1 << v for v in set(f))
            if f >> n_vertices:
                raise ValueError(f"facet {_bits(f)} uses a vertex >= {n_vertices}")
            sub = f
            while True:  # enumerate all subsets of f
                faces.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & f
        return cls(n_vertices, frozenset(faces))

    def is_closed(self):
        return all(f & ~(1 << v) in self.faces for f in self.faces for v in _bits(f))

    def reduced_betti(self):
        return reduced_betti(self.faces)
