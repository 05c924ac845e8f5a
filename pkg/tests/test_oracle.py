from __future__ import annotations

import random

import pytest

from planarity_ht.constraints import choose_reference_sets, reference_set_variants
from planarity_ht.corpus import exhaustive_proper_graphs
from planarity_ht.drawing import count_crossings_level, count_crossings_radial
from planarity_ht.graphs import LevelGraph
from planarity_ht.oracle import BudgetExceededError, brute_level, brute_radial
from tests.conftest import make_path


def test_path_is_level_planar_in_one_state(path3):
    result = brute_level(path3)
    assert result.planar and result.states_examined == 1
    assert count_crossings_level(result.witness, path3).planar


def test_k22_level_nonplanar_after_four_states(k22):
    result = brute_level(k22)
    assert not result.planar
    assert result.states_examined == 4
    assert result.witness is None


def test_two_disjoint_edges_level_planar():
    g = LevelGraph(2, {"a": 1, "c": 1, "b": 2, "d": 2}, (("a", "b"), ("c", "d")))
    assert brute_level(g).planar


def test_k22_radial_planar(k22):
    refs, aug = choose_reference_sets(k22)
    result = brute_radial(aug, refs)
    assert result.planar
    assert count_crossings_radial(result.witness, aug, refs).planar


def test_budget_exceeded(k22):
    with pytest.raises(BudgetExceededError):
        brute_level(k22, budget=3)
    refs, aug = choose_reference_sets(k22)
    with pytest.raises(BudgetExceededError):
        brute_radial(aug, refs, budget=1)


def test_path_radial_planar(path3):
    refs, aug = choose_reference_sets(path3)
    result = brute_radial(aug, refs)
    assert result.planar


def test_level_planar_implies_radial_planar_on_sample():
    for g in exhaustive_proper_graphs(2, 3, cap=60):
        if brute_level(g).planar:
            refs, aug = choose_reference_sets(g)
            assert brute_radial(aug, refs).planar


def test_radial_decision_invariant_under_reference_choice():
    for g in exhaustive_proper_graphs(2, 3, cap=60):
        decisions = {
            brute_radial(aug, refs).planar for refs, aug in reference_set_variants(g)
        }
        assert len(decisions) == 1


def test_oracle_invariant_under_relabeling():
    rng = random.Random(13)
    for g in exhaustive_proper_graphs(2, 3, cap=25):
        names = list(g.level)
        shuffled = names[:]
        rng.shuffle(shuffled)
        rename = dict(zip(names, shuffled))
        h = LevelGraph(
            g.k,
            {rename[v]: lv for v, lv in g.level.items()},
            tuple(sorted((rename[u], rename[v]) for u, v in g.edges)),
        )
        assert brute_level(g).planar == brute_level(h).planar
        refs_g, aug_g = choose_reference_sets(g)
        refs_h, aug_h = choose_reference_sets(h)
        assert brute_radial(aug_g, refs_g).planar == brute_radial(aug_h, refs_h).planar


def test_witness_reverification():
    for g in exhaustive_proper_graphs(2, 2, cap=30):
        result = brute_level(g)
        if result.planar:
            assert count_crossings_level(result.witness, g).planar
        refs, aug = choose_reference_sets(g)
        radial = brute_radial(aug, refs)
        if radial.planar:
            assert count_crossings_radial(radial.witness, aug, refs).planar


def test_long_path_planar_both_modes():
    g = make_path(6)
    assert brute_level(g).planar
    refs, aug = choose_reference_sets(g)
    assert brute_radial(aug, refs).planar
