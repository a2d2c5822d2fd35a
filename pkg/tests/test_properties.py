"""Randomized property suites at full strength (200+ instances each)."""

import props


def test_group_axioms():
    assert props.check_group_axioms(250) == 250


def test_fiber_structure():
    assert props.check_fiber_structure(200) == 200


def test_rewrite_confluence():
    assert props.check_confluence(200) == 200


def test_hom_multiplicativity_and_gradedness():
    assert props.check_hom_mult_graded(200) == 200
