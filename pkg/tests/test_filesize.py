import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frcodes import (
    KOutOfRange,
    SizeLimitExceeded,
    affine_fr_code,
    circulant_graph,
    complete_graph,
    cycle_graph,
    dual,
    dual_indicator_bound,
    file_size_from_dual,
    file_size_profile,
    fr_code,
    girth,
    graph_to_fr,
    mols_fr_code,
    mols_prime,
    petersen_graph,
    phi_bound,
    projective_plane_incidence_graph,
    psi_bound,
    steiner_triple_system,
    supported_file_size,
    turan_graph,
)
from frcodes.filesize import (
    affine_law,
    min_union_size,
    mols_law,
    phi_sequence,
    profile_from_dual,
    psi_sequence,
    regular_graph_law,
    steiner_dual_law,
    turan_law,
)
import oracles


def small_codes():
    yield "fano", fr_code([[1, 2, 4], [1, 3, 7], [1, 5, 6], [2, 3, 5], [2, 6, 7], [3, 4, 6], [4, 5, 7]])
    yield "C6", graph_to_fr(cycle_graph(6))
    yield "K4", graph_to_fr(complete_graph(4))
    yield "K5", graph_to_fr(complete_graph(5))
    yield "petersen", graph_to_fr(petersen_graph())
    yield "circ8", graph_to_fr(circulant_graph(8, [1, 4]))
    yield "turan8_2", graph_to_fr(turan_graph(8, 2))
    yield "turan6_3", graph_to_fr(turan_graph(6, 3))
    yield "ag22", affine_fr_code(2, 2, 3)
    yield "ag32", affine_fr_code(3, 2, 4)
    yield "mols3", mols_fr_code(mols_prime(3), 2)
    yield "sts9", steiner_triple_system(9)


CODES = dict(small_codes())


def test_fano_profile(fano):
    prof = file_size_profile(fano)
    assert prof.m_values == (3, 5, 6, 6, 7, 7, 7)
    assert prof.n_values == (4, 2, 1, 1, 0, 0, 0)
    assert phi_sequence(7, 3, 3) == prof.m_values


def test_k_equals_n_is_theta(petersen_code):
    assert supported_file_size(petersen_code, 10) == petersen_code.theta


def test_k_out_of_range(fano):
    with pytest.raises(KOutOfRange):
        supported_file_size(fano, 0)
    with pytest.raises(KOutOfRange):
        supported_file_size(fano, 8)


def test_single_block_profile():
    c = fr_code([[4, 9, 11]])
    assert file_size_profile(c).m_values == (3,)


@pytest.mark.parametrize("name", sorted(CODES))
def test_profile_matches_brute_force(name):
    c = CODES[name]
    expected = oracles.profile(oracles.blocks_of(c))
    assert list(file_size_profile(c).m_values) == expected


@pytest.mark.parametrize("name", sorted(CODES))
def test_profile_through_dual(name):
    c = CODES[name]
    direct = file_size_profile(c).m_values
    assert profile_from_dual(c).m_values == direct
    for k in range(1, c.n + 1):
        assert file_size_from_dual(c, k) == direct[k - 1]


@pytest.mark.parametrize("name", sorted(CODES))
def test_psi_bounds_the_dual(name):
    c = CODES[name]
    psi = psi_sequence(c.n, c.alpha, c.rho)
    d = dual(c)
    for ell in range(1, c.theta + 1):
        assert supported_file_size(d, ell) <= psi[ell - 1]


@pytest.mark.parametrize("name", sorted(CODES))
def test_phi_is_an_upper_bound(name):
    c = CODES[name]
    prof = file_size_profile(c)
    phi = phi_sequence(c.n, c.alpha, c.rho)
    for k in range(1, c.n + 1):
        assert prof.m(k) <= phi[k - 1]
        assert prof.m(k) <= dual_indicator_bound(c.n, c.alpha, c.rho, k)


def test_832_recursions():
    assert [phi_bound(8, 3, 2, k) for k in range(1, 9)] == [3, 5, 7, 9, 10, 11, 12, 12]
    assert [psi_bound(8, 3, 2, l) for l in range(1, 13)] == [2, 3, 4, 5, 6, 6, 7, 7, 7, 8, 8, 8]


def test_indicator_bound():
    # psi values exceeding n - k = 5: 6,6,7,7,7,8,8,8
    assert dual_indicator_bound(8, 3, 2, 3) == 8
    assert dual_indicator_bound(8, 3, 2, 8) == 12


def test_jobs_do_not_change_results(petersen_code):
    for k in range(1, 10):
        assert supported_file_size(petersen_code, k, jobs=3) == supported_file_size(petersen_code, k)


def test_budget_exhaustion():
    big = graph_to_fr(complete_graph(30))
    with pytest.raises(SizeLimitExceeded):
        file_size_profile(big, budget=1000)
    masks = graph_to_fr(projective_plane_incidence_graph(3)).masks
    with pytest.raises(SizeLimitExceeded):
        min_union_size(masks, 13, rho=2, budget=50)


def test_min_union_size_on_plain_masks():
    assert min_union_size([0b0011, 0b0110, 0b1100], 2) == 3
    assert min_union_size([0b1, 0b1], 2) == 1


# --- closed-form laws, each against brute force -------------------------------


def test_regular_graph_law_petersen(petersen_code):
    g = girth(petersen_graph())
    prof = file_size_profile(petersen_code)
    for k in range(1, 7):
        assert prof.m(k) == regular_graph_law(3, g, k)
    assert regular_graph_law(3, g, 7) is None


@pytest.mark.parametrize("graph", [projective_plane_incidence_graph(2), cycle_graph(9), circulant_graph(12, [1, 5])])
def test_regular_graph_law_other_graphs(graph):
    c = graph_to_fr(graph)
    g = girth(graph)
    prof = file_size_profile(c)
    for k in range(1, c.n + 1):
        law = regular_graph_law(c.alpha, g, k)
        if law is not None:
            assert prof.m(k) == law


def test_turan_law():
    prof = file_size_profile(graph_to_fr(turan_graph(8, 2)))
    assert prof.m_values == (4, 7, 10, 12, 14, 15, 16, 16)
    assert [turan_law(8, 2, k) for k in range(1, 5)] == [4, 7, 10, 12]
    assert turan_law(8, 2, 5) is None
    prof63 = file_size_profile(graph_to_fr(turan_graph(6, 3)))
    for k in range(1, 5):
        assert prof63.m(k) == turan_law(6, 3, k)


def test_steiner_dual_law_on_fano_and_sts9():
    for theta in (7, 9):
        c = steiner_triple_system(theta)
        d = dual(c)
        for k in range(1, 4):
            assert supported_file_size(d, k) == steiner_dual_law(c.rho, k)


def test_affine_law():
    c = affine_fr_code(3, 2, 4)
    assert [supported_file_size(c, k) for k in (1, 2)] == [affine_law(3, 2, 1), affine_law(3, 2, 2)] == [3, 5]
    assert affine_law(3, 2, 3) is None


def test_affine_law_needs_independent_directions():
    # lexicographic directions (0,0,1), (0,1,0), (0,1,1) are linearly
    # dependent, so three hyperplanes cover 6 points, not the formula's 7
    c = affine_fr_code(2, 3, 3)
    assert affine_law(2, 3, 3) == 7
    assert supported_file_size(c, 3) == 6
    assert supported_file_size(c, 2) == affine_law(2, 3, 2)


def test_mols_law():
    c = mols_fr_code(mols_prime(5), 4)
    for k in range(1, 5):
        assert supported_file_size(c, k) == mols_law(5, k)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=5, max_value=11).flatmap(
        lambda n: st.tuples(st.just(n), st.sets(st.integers(1, n // 2), min_size=1, max_size=3))
    )
)
def test_profile_vs_brute_force_on_circulants(params):
    n, offsets = params
    c = graph_to_fr(circulant_graph(n, sorted(offsets)))
    blocks = oracles.blocks_of(c)
    for k in range(1, c.n + 1):
        assert supported_file_size(c, k) == oracles.min_union(blocks, k)


def test_psi_is_phi_of_dual_parameters():
    for n, a, r in [(8, 3, 2), (7, 3, 3), (10, 3, 2), (12, 3, 4)]:
        theta = n * a // r
        assert psi_sequence(n, a, r) == phi_sequence(theta, r, a)
