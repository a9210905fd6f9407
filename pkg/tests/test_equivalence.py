import pytest
from hypothesis import given, strategies as st

from toric_basic.corpus import (cpn, cross_polytope, ghost_torus, hirzebruch, relabel,
                                sqrt2_four_cycle, square, stacked_sphere)
from toric_basic.equivalence import (FanIsomorphism, invariant_fingerprint,
                                     marked_fan_isomorphic, orbit_summary, p_equivalent,
                                     verify_isomorphism)
from toric_basic.exactfield import ExactMatrix
from toric_basic.facering import basic_betti
from toric_basic.fan import MarkedFan

SWAP = [[0, 1], [1, 0]]


def test_relabelled_cp2_found_with_swap():
    F = cpn(2)
    G = relabel(F, [1, 0, 2])  # rays (0,1), (1,0), (-1,-1)
    iso = marked_fan_isomorphic(F, G)
    assert iso is not None
    assert iso.sigma == {0: 0, 1: 1, 2: 2}
    assert iso.phi == ExactMatrix(SWAP)
    assert all(verify_isomorphism(F, G, iso).values())


def test_relabel_with_matrix():
    F = cpn(2)
    G = relabel(F, [1, 0, 2], SWAP)
    iso = marked_fan_isomorphic(F, G)
    assert iso is not None and all(verify_isomorphism(F, G, iso).values())


def test_cp2_vs_square():
    assert marked_fan_isomorphic(cpn(2), square()) is None
    assert not p_equivalent(cpn(2), square())


def test_scaled_square_fails_on_lattice_for_all_eight_automorphisms():
    F, G = square(), square((1, 2, 1, 2))
    assert marked_fan_isomorphic(F, G) is None
    assert orbit_summary(F, G) == {"lattice": 8}


def test_scaled_square_needs_lattice_check():
    # with Gamma = Z x 2Z the scaled square is the image of the square under diag(1,2)
    G = MarkedFan(2, square().K, square((1, 2, 1, 2)).markings, ((1, 0), (0, 2)))
    iso = marked_fan_isomorphic(square(), G)
    assert iso is not None and iso.phi == ExactMatrix([[1, 0], [0, 2]])


def test_hirzebruch_surfaces_distinguished():
    assert not p_equivalent(hirzebruch(1), hirzebruch(2))
    assert p_equivalent(hirzebruch(0), square())


def test_fingerprints():
    fp = invariant_fingerprint(cpn(2))
    assert (fp.n, fp.f_vector, fp.h_vector) == (2, (1, 3, 3), (1, 1, 1))
    fp = invariant_fingerprint(square())
    assert (fp.n, fp.f_vector, fp.h_vector) == (2, (1, 4, 4), (1, 2, 1))
    assert invariant_fingerprint(cpn(2)) == invariant_fingerprint(relabel(cpn(2), [2, 0, 1]))


def test_ghosts_ignored():
    assert p_equivalent(cpn(2), cpn(2, ghosts=1))
    assert p_equivalent(ghost_torus(2), ghost_torus(4))


def test_quadratic_field_fans():
    F = sqrt2_four_cycle()
    assert p_equivalent(F, F)
    assert not p_equivalent(F, square())
    with pytest.raises(ValueError):
        from toric_basic.exactfield import QuadraticScalar
        r3 = QuadraticScalar(0, 1, 3)
        G = MarkedFan(2, F.K, ((1, 0), (0, 1), (-1, 0), (0, -r3)), ((1, 0), (0, 1), (0, r3)))
        marked_fan_isomorphic(F, G)


def test_verify_rejects_bad_witness():
    F = cpn(2)
    iso = FanIsomorphism({0: 0, 1: 1, 2: 2}, ExactMatrix([[2, 0], [0, 1]]))
    v = verify_isomorphism(F, F, iso)
    assert not v["markings"] and not v["lattice"] and v["complex"]


@st.composite
def relabelled_pairs(draw):
    F = draw(st.sampled_from([cpn(2), cpn(3), square(), hirzebruch(1), cross_polytope(3),
                              stacked_sphere(3, 2, 5)]))
    perm = draw(st.permutations(range(F.m)))
    phi = draw(st.sampled_from(_unimodular(F.n)))
    return F, relabel(F, list(perm), phi)


def _unimodular(n):
    I = [[int(i == j) for j in range(n)] for i in range(n)]
    shear = [row[:] for row in I]
    shear[0][n - 1] = 2
    flip = [row[:] for row in I]
    flip[n - 1][n - 1] = -1
    cyc = [I[(i + 1) % n] for i in range(n)]
    return [I, shear, flip, cyc]


@given(relabelled_pairs())
def test_relabelled_copies_are_isomorphic(pair):
    F, G = pair
    assert invariant_fingerprint(F) == invariant_fingerprint(G)
    iso = marked_fan_isomorphic(F, G)
    assert iso is not None and all(verify_isomorphism(F, G, iso).values())
    back = marked_fan_isomorphic(G, F)
    assert back is not None
    assert basic_betti(F) == basic_betti(G)


@given(relabelled_pairs(), st.data())
def test_transitivity(pair, data):
    F, G = pair
    perm = data.draw(st.permutations(range(F.m)))
    H = relabel(G, list(perm))
    assert p_equivalent(F, G) and p_equivalent(G, H) and p_equivalent(F, H)


def test_equivalence_relation_on_corpus(corpus):
    names = sorted(corpus)
    eq = {(a, b): p_equivalent(corpus[a], corpus[b]) for a in names for b in names}
    for a in names:
        assert eq[(a, a)]
        for b in names:
            assert eq[(a, b)] == eq[(b, a)]
            if eq[(a, b)]:
                assert basic_betti(corpus[a]) == basic_betti(corpus[b])
                for c in names:
                    if eq[(b, c)]:
                        assert eq[(a, c)]
