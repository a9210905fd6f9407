"""Abstract simplicial complexes on {0..m-1} with ghost vertices.

Faces are stored as int bitmasks.  Vertex indices are 0-based here; files
and reports use 1-based indices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on ``m`` vertices given by its facets; vertices in no facet
    are ghosts.  An empty facet list means K = {∅}."""

    m: int
    facets: tuple[tuple[int, ...], ...]
    ghosts: frozenset[int] = field(default=None)

    def __post_init__(self) -> None:
        facets = sorted({tuple(sorted(set(f))) for f in self.facets} or {()})
        masks = [mask_of(f) for f in facets]
        for f in facets:
            if any(v < 0 or v >= self.m for v in f):
                raise ValueError(f"facet {f} has a vertex outside 0..{self.m - 1}")
        for a, b in combinations(masks, 2):
            if a & b in (a, b):
                raise ValueError("a facet contains another facet")
        used = 0
        for mk in masks:
            used |= mk
        present = set(members(used))
        ghosts = frozenset(range(self.m)) - present if self.ghosts is None \
            else frozenset(self.ghosts)
        if ghosts & present:
            raise ValueError(f"ghost vertices {sorted(ghosts & present)} appear in facets")
        if ghosts | present != set(range(self.m)):
            missing = set(range(self.m)) - ghosts - present
            raise ValueError(f"vertices {sorted(missing)} are neither ghosts nor in a facet")
        object.__setattr__(self, "facets", tuple(facets))
        object.__setattr__(self, "ghosts", ghosts)

    @cached_property
    def facet_masks(self) -> tuple[int, ...]:
        return tuple(mask_of(f) for f in self.facets)

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @property
    def vertices(self) -> tuple[int, ...]:
        """Non-ghost vertices in increasing order."""
        return tuple(v for v in range(self.m) if v not in self.ghosts)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    @cached_property
    def face_masks(self) -> frozenset[int]:
        faces = set()
        for fm in self.facet_masks:
            if fm in faces:
                continue
            # enumerate submasks
            s = fm
            while True:
                faces.add(s)
                if s == 0:
                    break
                s = (s - 1) & fm
        return frozenset(faces)

    def faces(self, size: int | None = None) -> list[tuple[int, ...]]:
        out = [members(f) for f in self.face_masks]
        if size is not None:
            out = [f for f in out if len(f) == size]
        return sorted(out, key=lambda f: (len(f), f))

    @cached_property
    def vertex_degrees(self) -> dict[int, int]:
        """Number of facets containing each non-ghost vertex."""
        deg = {v: 0 for v in self.vertices}
        for f in self.facets:
            for v in f:
                deg[v] += 1
        return deg

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        nb = {v: set() for v in self.vertices}
        for f in self.facets:
            for a, b in combinations(f, 2):
                nb[a].add(b)
                nb[b].add(a)
        return {v: frozenset(s) for v, s in nb.items()}

    def ridges(self) -> dict[tuple[int, ...], list[int]]:
        """Codimension-one faces of facets, mapped to the facet indices containing them."""
        out: dict[tuple[int, ...], list[int]] = {}
        for idx, f in enumerate(self.facets):
            for v in f:
                r = tuple(x for x in f if x != v)
                out.setdefault(r, []).append(idx)
        return out


def is_face(K: SimplicialComplex, I: Iterable[int]) -> bool:
    return mask_of(I) in K.face_masks


def minimal_nonfaces(K: SimplicialComplex) -> list[tuple[int, ...]]:
    """Inclusion-minimal non-faces (ghost singletons included), sorted
    lexicographically.

    Every proper subset of a minimal non-face is a face, so candidates are a
    face plus one larger vertex, up to size dim K + 2.
    """
    faces = K.face_masks
    out = [(g,) for g in sorted(K.ghosts)]
    verts = K.vertices
    by_size: dict[int, list[int]] = {}
    for f in faces:
        by_size.setdefault(bin(f).count("1"), []).append(f)
    for k in range(2, K.dim + 3):
        found = []
        for f in by_size.get(k - 1, []):
            top = f.bit_length() - 1
            for v in verts:
                if v <= top:
                    continue
                cand = f | (1 << v)
                if cand in faces:
                    continue
                if all((cand & ~(1 << u)) in faces for u in members(cand)):
                    found.append(members(cand))
        out.extend(found)
    return sorted(out)


def f_vector(K: SimplicialComplex) -> tuple[int, ...]:
    counts = [0] * (K.dim + 2)
    for f in K.face_masks:
        counts[bin(f).count("1")] += 1
    return tuple(counts)


def h_vector(K: SimplicialComplex, n: int) -> tuple[int, ...]:
    """h-vector relative to ``n``; requires dim K = n - 1."""
    if K.dim != n - 1:
        raise ValueError(f"dim K = {K.dim} but n - 1 = {n - 1}")
    f = f_vector(K)
    return tuple(
        sum((-1) ** (i - j) * comb(n - j, i - j) * f[j] for j in range(i + 1))
        for i in range(n + 1))


def add_ghost_vertices(K: SimplicialComplex, count: int) -> SimplicialComplex:
    if count < 0:
        raise ValueError("count must be nonnegative")
    return SimplicialComplex(K.m + count, K.facets,
                             K.ghosts | frozenset(range(K.m, K.m + count)))


def _vertex_signature(K: SimplicialComplex, v: int) -> tuple:
    nb = K.neighbors[v]
    return (K.vertex_degrees[v], len(nb),
            tuple(sorted(K.vertex_degrees[u] for u in nb)))


def complex_isomorphisms(K1: SimplicialComplex, K2: SimplicialComplex) -> Iterator[dict[int, int]]:
    """Yield every bijection of non-ghost vertices carrying K1 onto K2.

    Backtracking assigns K1 vertices in order of decreasing facet degree;
    candidates are tried in increasing index order, so the output order is
    deterministic.  Ghost vertices are ignored.
    """
    if f_vector(K1) != f_vector(K2) or len(K1.vertices) != len(K2.vertices):
        return
    sig1 = {v: _vertex_signature(K1, v) for v in K1.vertices}
    sig2 = {v: _vertex_signature(K2, v) for v in K2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return
    order = sorted(K1.vertices, key=lambda v: (-K1.vertex_degrees[v], v))
    facets2 = set(K2.facet_masks)
    # facets of K1 that become fully assigned at each step
    pos = {v: i for i, v in enumerate(order)}
    closing: list[list[tuple[int, ...]]] = [[] for _ in order]
    for f in K1.facets:
        if f:
            closing[max(pos[v] for v in f)].append(f)
    nb1, nb2 = K1.neighbors, K2.neighbors
    sigma: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(sorted(sigma.items()))
            return
        v = order[i]
        for w in K2.vertices:
            if w in used or sig2[w] != sig1[v]:
                continue
            if any((u in nb1[v]) != (sigma[u] in nb2[w]) for u in order[:i]):
                continue
            sigma[v] = w
            if all(mask_of(sigma[x] for x in f) in facets2 for f in closing[i]):
                used.add(w)
                yield from extend(i + 1)
                used.discard(w)
            del sigma[v]

    yield from extend(0)
