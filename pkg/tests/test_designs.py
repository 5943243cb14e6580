from itertools import combinations

import pytest

from conftest import fixture_path, ingest
from frcodes import (
    InadmissibleOrder,
    LatinSquare,
    NotLatin,
    NotOrthogonal,
    NotPrime,
    NotSteiner,
    RhoOutOfRange,
    SideConditionViolated,
    affine_design,
    affine_fr_code,
    are_orthogonal,
    cycle_graph,
    dual,
    graph_to_fr,
    is_maximal_arc,
    is_resolvable,
    is_steiner_system,
    load_latin_squares,
    maximal_arc_search,
    mols_design,
    mols_fr_code,
    mols_prime,
    steiner_triple_system,
)
from frcodes.designs import affine_side_condition, latin_squares_from_json, latin_squares_to_json
import oracles


@pytest.mark.parametrize("theta", [7, 9, 13, 15, 19, 21, 25, 27])
def test_sts_is_steiner(theta):
    c = steiner_triple_system(theta)
    assert c.alpha == 3
    assert c.rho == (theta - 1) // 2
    assert c.n == theta * (theta - 1) // 6
    assert sorted(c.point_ids) == list(range(theta))
    assert oracles.is_steiner_2(oracles.blocks_of(c))


def test_sts7_is_fano_shaped():
    assert steiner_triple_system(7).params == (7, 3, 3)


def test_sts15_and_dual():
    c = steiner_triple_system(15)
    assert (c.n, c.rho) == (35, 7)
    assert dual(c).params == (15, 7, 3)


@pytest.mark.parametrize("theta", [1, 2, 4, 5, 6, 8, 10, 11, 12])
def test_sts_inadmissible(theta):
    with pytest.raises(InadmissibleOrder):
        steiner_triple_system(theta)


def test_is_steiner_system(fano):
    assert is_steiner_system(fano)
    assert not is_steiner_system(graph_to_fr(cycle_graph(5)))
    assert is_steiner_system(steiner_triple_system(15))
    assert is_steiner_system(ingest("s2413_pg23.json"))


def test_fano_arc_matches_brute_force(fano):
    arcs = oracles.maximal_arcs(oracles.blocks_of(fano), 4)
    assert arcs, "complements of lines are size-4 arcs"
    assert maximal_arc_search(fano, 4) == arcs[0]


@pytest.mark.parametrize("theta, size", [(7, 4), (9, 5), (13, 7), (15, 8)])
def test_arc_search_agrees_with_brute_force(theta, size):
    c = steiner_triple_system(theta)
    arcs = oracles.maximal_arcs(oracles.blocks_of(c), size)
    found = maximal_arc_search(c, size)
    assert found == (arcs[0] if arcs else None)


def test_bose_sts15_has_no_hyperoval_but_pg32_does():
    # existence is per-isomorphism-class, not per order
    assert maximal_arc_search(steiner_triple_system(15), 8) is None
    pg = ingest("sts15_pg32.json")
    arc = maximal_arc_search(pg, 8)
    assert arc is not None and is_maximal_arc(pg, arc)


def test_arc_search_needs_steiner(pentagon_code):
    with pytest.raises(NotSteiner):
        maximal_arc_search(pentagon_code, 2)


def test_affine_small_instances():
    assert affine_fr_code(2, 2, 3).params == (6, 2, 3)
    c = affine_fr_code(3, 2, 4)
    assert c.params == (12, 3, 4) and c.theta == 9


@pytest.mark.parametrize("q, m, rho", [(2, 2, 3), (3, 2, 4), (2, 3, 7), (5, 2, 6), (3, 3, 5)])
def test_affine_resolvable_structure(q, m, rho):
    d = affine_design(q, m, rho)
    blocks = [set(b) for b in d.code.blocks]
    cls_of = {b: i for i, cls in enumerate(d.parallel_classes) for b in cls}
    for i, j in combinations(range(len(blocks)), 2):
        meet = len(blocks[i] & blocks[j])
        assert meet == (0 if cls_of[i] == cls_of[j] else q ** (m - 2))


def test_affine_parameter_errors():
    with pytest.raises(NotPrime):
        affine_fr_code(4, 2, 2)
    with pytest.raises(RhoOutOfRange):
        affine_fr_code(2, 2, 4)
    assert not affine_side_condition(2, 2, 3)
    with pytest.raises(SideConditionViolated):
        affine_fr_code(2, 2, 3, strict=True)
    assert affine_fr_code(3, 2, 3, strict=True).params == (9, 3, 3)


def test_mols_prime():
    sq3 = mols_prime(3)
    assert len(sq3) == 2 and are_orthogonal(sq3[0], sq3[1])
    assert len(mols_prime(5)) == 4
    assert len(mols_prime(2)) == 1
    assert not are_orthogonal(sq3[0], sq3[0])
    with pytest.raises(NotPrime):
        mols_prime(6)


def test_mols_net_parameters():
    c = mols_fr_code(mols_prime(5), 4)
    assert c.params == (20, 5, 4) and c.theta == 25
    one = mols_fr_code(mols_prime(5), 1)
    assert one.params == (5, 5, 1)
    assert sorted(x for b in one.blocks for x in b) == list(range(25))


def test_mols_errors():
    with pytest.raises(RhoOutOfRange):
        mols_fr_code(mols_prime(5), 5)
    sq = mols_prime(3)[0]
    with pytest.raises(NotOrthogonal):
        mols_design([sq, sq], 2)
    with pytest.raises(NotLatin):
        LatinSquare.from_rows([[1, 1], [2, 2]])


def test_order25_ingestion():
    squares = load_latin_squares(fixture_path("mols25.json"))
    assert len(squares) == 24
    assert mols_fr_code(squares, 7).params == (175, 25, 7)


def test_latin_json_round_trip():
    sq = mols_prime(5)
    assert latin_squares_from_json(latin_squares_to_json(sq)) == sq


def test_resolvability():
    d = is_resolvable(affine_fr_code(2, 2, 3))
    assert d is not None and len(d.parallel_classes) == 3
    assert is_resolvable(steiner_triple_system(7)) is None
    net = mols_design(mols_prime(5), 3)
    found = is_resolvable(net.code)
    assert found is not None
    assert {frozenset(c) for c in found.parallel_classes} == {frozenset(c) for c in net.parallel_classes}
