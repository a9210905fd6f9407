"""Test corpus: named marked fans, seeded generators and broken fixtures.

The bundled ``corpus/*.fan`` files are written by ``scripts/build_corpus.py``
from the constructors below and are checked against them by the tests.
"""
from __future__ import annotations

import random
from itertools import combinations, product
from pathlib import Path

from .exactfield import QuadraticScalar, determinant
from .fan import MarkedFan
from .fanfile import load
from .simplicial import SimplicialComplex

CORPUS_DIR = Path(__file__).parent / "corpus"
INVALID_DIR = CORPUS_DIR / "invalid"


def standard_lattice(n: int) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def cpn(n: int, ghosts: int = 0) -> MarkedFan:
    """Fan of CP^n: rays e_1..e_n and -(e_1+...+e_n)."""
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)] + [(-1,) * n]
    facets = tuple(combinations(range(n + 1), n))
    m = n + 1 + ghosts
    rays += [rays[0]] * ghosts
    K = SimplicialComplex(m, facets, frozenset(range(n + 1, m)))
    return MarkedFan(n, K, tuple(rays), standard_lattice(n))


def cross_polytope(n: int, scales: tuple | None = None) -> MarkedFan:
    """Rays +-e_i (vertex 2i is +e_i, 2i+1 is -e_i); facets pick one sign per axis."""
    scales = scales or (1,) * (2 * n)
    rays = []
    for i in range(n):
        for s, k in ((1, 2 * i), (-1, 2 * i + 1)):
            rays.append(tuple(s * scales[k] if j == i else 0 for j in range(n)))
    facets = tuple(tuple(2 * i + b for i, b in enumerate(bits))
                   for bits in product((0, 1), repeat=n))
    return MarkedFan(n, SimplicialComplex(2 * n, facets), tuple(rays), standard_lattice(n))


def square(scales: tuple | None = None) -> MarkedFan:
    """Cross-polytope fan in the plane with the 4-cycle labelling
    (1, 2, 3, 4) = (e_1, e_2, -e_1, -e_2)."""
    s = scales or (1, 1, 1, 1)
    rays = ((s[0], 0), (0, s[1]), (-s[2], 0), (0, -s[3]))
    facets = ((0, 1), (1, 2), (2, 3), (0, 3))
    return MarkedFan(2, SimplicialComplex(4, facets), rays, standard_lattice(2))


def hirzebruch(a: int, scales: tuple | None = None) -> MarkedFan:
    """Hirzebruch surface fan: rays (1,0), (0,1), (-1,a), (0,-1)."""
    s = scales or (1, 1, 1, 1)
    base = ((1, 0), (0, 1), (-1, a), (0, -1))
    rays = tuple(tuple(s[i] * x for x in v) for i, v in enumerate(base))
    facets = ((0, 1), (1, 2), (2, 3), (0, 3))
    return MarkedFan(2, SimplicialComplex(4, facets), rays, standard_lattice(2))


def sqrt2_four_cycle() -> MarkedFan:
    """4-cycle with markings (1,0), (0,1), (-1,0), (0,-sqrt 2)."""
    r2 = QuadraticScalar(0, 1, 2)
    rays = ((1, 0), (0, 1), (-1, 0), (0, -r2))
    gens = ((1, 0), (0, 1), (0, r2))
    facets = ((0, 1), (1, 2), (2, 3), (0, 3))
    return MarkedFan(2, SimplicialComplex(4, facets), rays, gens, field=2)


def ghost_torus(count: int = 2) -> MarkedFan:
    """n = 0 and K = {∅} on ``count`` ghost vertices."""
    K = SimplicialComplex(count, (), frozenset(range(count)))
    return MarkedFan(0, K, ((),) * count, ())


def relabel(F: MarkedFan, perm: list[int], phi=None) -> MarkedFan:
    """Vertex i of F becomes vertex perm[i]; markings are mapped by ``phi``
    (an n x n integer matrix, default identity) and so is the lattice."""
    from .exactfield import ExactMatrix
    apply = (lambda v: v) if phi is None else (lambda v: ExactMatrix(phi) @ v)
    m = F.m
    rays = [None] * m
    for i in range(m):
        rays[perm[i]] = apply(F.markings[i])
    facets = tuple(tuple(perm[v] for v in f) for f in F.K.facets if f)
    K = SimplicialComplex(m, facets, frozenset(perm[g] for g in F.K.ghosts))
    gens = tuple(apply(g) for g in F.lattice_generators)
    return MarkedFan(F.n, K, tuple(rays), gens, field=F.field)


def _random_invertible(rng: random.Random, n: int) -> list[list[int]]:
    while True:
        M = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        if determinant(M) != 0:
            return M


def _stack(n: int, extra: int, seed: int):
    """Boundary of a stacked n-polytope: the boundary of an n-simplex with
    ``extra`` seeded random facets subdivided, plus the subdivision history."""
    rng = random.Random(seed)
    facets = [tuple(f) for f in combinations(range(n + 1), n)]
    history = []
    m = n + 1
    for _ in range(extra):
        I = facets.pop(rng.randrange(len(facets)))
        v = m
        m += 1
        history.append((I, v))
        facets.extend(tuple(sorted(set(I) - {u} | {v})) for u in I)
    return m, tuple(sorted(facets)), history


def stacked_sphere(n: int, extra: int, seed: int, marking_seed: int | None = None) -> MarkedFan:
    """Complete fan over a seeded stacked (n-1)-sphere.

    Each new vertex is marked by a positive combination of the markings of
    the facet it subdivides, which keeps the fan complete and simplicial.
    With ``marking_seed`` None the start is the CP^n fan and all weights are
    1; otherwise the start is a random integer linear image of it and the
    weights are random in 1..3.
    """
    m, facets, history = _stack(n, extra, seed)
    rays: list[tuple] = [tuple(int(i == j) for j in range(n)) for i in range(n)] + [(-1,) * n]
    if marking_seed is None:
        weight = lambda: 1
    else:
        mrng = random.Random(marking_seed)
        M = _random_invertible(mrng, n)
        rays = [tuple(sum(M[r][c] * v[c] for c in range(n)) for r in range(n)) for v in rays]
        weight = lambda: mrng.randint(1, 3)
    for I, v in history:
        w = [weight() for _ in I]
        rays.append(tuple(sum(wi * rays[u][k] for wi, u in zip(w, I)) for k in range(n)))
    return MarkedFan(n, SimplicialComplex(m, facets), tuple(rays), standard_lattice(n))


def random_octahedron_marking(seed: int) -> MarkedFan:
    """Octahedron complex with markings g(s_k * (+-e_i)) for a random
    invertible integer matrix g and positive integer scales s_k."""
    rng = random.Random(seed)
    M = _random_invertible(rng, 3)
    base = cross_polytope(3, tuple(rng.randint(1, 4) for _ in range(6)))
    rays = tuple(tuple(sum(M[r][c] * v[c] for c in range(3)) for r in range(3))
                 for v in base.markings)
    return MarkedFan(3, base.K, rays, standard_lattice(3))


def builtin_fans() -> dict[str, MarkedFan]:
    """Constructors behind the bundled valid corpus, keyed by file stem."""
    return {
        "cp1": cpn(1),
        "cp2": cpn(2),
        "cp3": cpn(3),
        "cp4": cpn(4),
        "cp2-ghost": cpn(2, ghosts=1),
        "cp2-relabeled": relabel(cpn(2), [1, 0, 2]),
        "cp2-coarse": MarkedFan(2, cpn(2).K, ((2, 0), (0, 1), (-2, -1)), standard_lattice(2)),
        "square": square(),
        "square-scaled": square((1, 2, 1, 2)),
        "hirzebruch-1": hirzebruch(1),
        "hirzebruch-2": hirzebruch(2),
        "hirzebruch-1-scaled": hirzebruch(1, (2, 1, 1, 3)),
        "octahedron": cross_polytope(3),
        "16-cell": cross_polytope(4),
        "stacked2-seed7": stacked_sphere(3, 4, seed=7),
        "stacked3-seed11": stacked_sphere(4, 3, seed=11),
        "sqrt2-4cycle": sqrt2_four_cycle(),
        "ghost2": ghost_torus(2),
        "ghost4": ghost_torus(4),
    }


def invalid_fans() -> dict[str, tuple[MarkedFan, str]]:
    """Engineered failures, each with the check expected to reject it."""
    cp2 = cpn(2)
    Z2 = standard_lattice(2)
    K3 = cp2.K
    return {
        "cp2-missing-cone": (
            MarkedFan(2, SimplicialComplex(3, ((0, 1), (0, 2))), cp2.markings, Z2),
            "pseudomanifold"),
        "overlapping-cones": (
            MarkedFan(2, K3, ((1, 0), (0, 1), (1, 1)), Z2), "wall_separation"),
        "dependent-facet": (
            MarkedFan(2, K3, ((1, 0), (1, 0), (-1, -1)), Z2), "facet_independence"),
        "marking-outside-lattice": (
            MarkedFan(2, K3, cp2.markings, ((2, 0), (0, 1))), "lattice_membership"),
        "odd-wall": (
            MarkedFan(2, SimplicialComplex(4, ((0, 1), (1, 2), (0, 2), (0, 3))),
                      ((1, 0), (0, 1), (-1, -1), (-1, 0)), Z2),
            "pseudomanifold"),
        "rank-deficient": (
            MarkedFan(2, SimplicialComplex(2, ((0,), (1,))), ((1, 0), (-1, 0)), Z2),
            "marking_rank"),
    }


def corpus_paths() -> list[Path]:
    return sorted(CORPUS_DIR.glob("*.fan"))


def load_corpus() -> dict[str, MarkedFan]:
    return {p.stem: load(p) for p in corpus_paths()}


def load_invalid() -> dict[str, MarkedFan]:
    return {p.stem: load(p) for p in sorted(INVALID_DIR.glob("*.fan"))}
