"""Tests for the verification oracles."""

import pytest

from circiso.circulant import make_graph
from circiso.oracle import (
    STATUS_INCONCLUSIVE,
    STATUS_ISOMORPHIC,
    STATUS_NON_ISOMORPHIC,
    VertexBijection,
    exhaustive_type2_sweep,
    isomorphic_bruteforce,
    verify_bijection_is_isomorphism,
)
from circiso.transform import Shear, apply_to_graph


def test_vertex_bijection_validation():
    VertexBijection(3, (2, 0, 1))
    with pytest.raises(ValueError):
        VertexBijection(3, (0, 0, 1))


def test_verify_bijection_examples():
    g = make_graph(27, (1, 3, 8, 10))
    h = make_graph(27, (3, 4, 5, 13))
    theta = VertexBijection.from_shear(Shear(27, 3, 1))
    assert verify_bijection_is_isomorphism(theta, g, h)
    assert verify_bijection_is_isomorphism(VertexBijection.identity(27), g, g)
    assert not verify_bijection_is_isomorphism(
        VertexBijection.identity(27), make_graph(27, (1, 3)), make_graph(27, (1, 4))
    )


def test_verify_bijection_accepts_labeled_targets():
    g = make_graph(16, (1, 2, 7))
    labeled = apply_to_graph(Shear(16, 2, 2), g)
    assert verify_bijection_is_isomorphism(VertexBijection.from_shear(Shear(16, 2, 2)), g, labeled)


def test_bruteforce_finds_witness_for_orbit_pair():
    g = make_graph(27, (1, 3, 8, 10))
    h = make_graph(27, (3, 4, 5, 13))
    outcome = isomorphic_bruteforce(g, h)
    assert outcome.status == STATUS_ISOMORPHIC
    assert verify_bijection_is_isomorphism(outcome.witness, g, h)


def test_bruteforce_negative_pair():
    g = make_graph(27, (1, 3, 8, 10))
    h = make_graph(27, (1, 3, 8, 11))
    outcome = isomorphic_bruteforce(g, h)
    assert outcome.status == STATUS_NON_ISOMORPHIC
    assert outcome.witness is None


def test_bruteforce_self_is_isomorphic():
    g = make_graph(27, (1, 3, 8, 10))
    outcome = isomorphic_bruteforce(g, g)
    assert outcome.status == STATUS_ISOMORPHIC
    assert verify_bijection_is_isomorphism(outcome.witness, g, g)


def test_bruteforce_degree_mismatch_is_cheap():
    outcome = isomorphic_bruteforce(make_graph(27, (1, 3)), make_graph(27, (1, 3, 8)))
    assert outcome.status == STATUS_NON_ISOMORPHIC
    assert outcome.nodes == 0


def test_bruteforce_budget_exhaustion_is_not_a_negative():
    g = make_graph(27, (1, 3, 8, 10))
    h = make_graph(27, (1, 3, 8, 11))
    outcome = isomorphic_bruteforce(g, h, budget=50)
    assert outcome.status == STATUS_INCONCLUSIVE
    assert outcome.witness is None


def test_sweep_27():
    report = exhaustive_type2_sweep(make_graph(27, (1, 3, 8, 10)), 3)
    assert len(report.rows) == 9
    assert report.circulant_shifts() == tuple(range(9))
    assert report.type2_shifts() == (1, 2, 4, 5, 7, 8)
    assert report.rows[0].identical and report.rows[0].t == 0
    assert report.rows[3].identical  # shift 3 lands back on the base set


def test_sweep_16():
    report = exhaustive_type2_sweep(make_graph(16, (1, 2, 7)), 2)
    assert len(report.rows) == 8
    assert report.type2_shifts() == (2, 6)
    by_t = {row.t: row for row in report.rows}
    assert by_t[2].image_jumps == (2, 3, 5)
    assert by_t[6].image_jumps == (2, 3, 5)
    assert by_t[4].identical


def test_sweep_81_pattern_follows_n_steps():
    report = exhaustive_type2_sweep(make_graph(81, (3, 7, 20, 34)), 3)
    assert len(report.rows) == 27
    assert report.circulant_shifts() == tuple(range(0, 27, 3))
    assert report.type2_shifts() == (3, 6, 12, 15, 21, 24)
    identical = tuple(row.t for row in report.rows if row.identical)
    assert identical == (0, 9, 18)


def test_sweep_requires_common_factor():
    with pytest.raises(ValueError):
        exhaustive_type2_sweep(make_graph(27, (1, 2)), 2)


def test_sweep_rows_carry_adams_multipliers():
    # dropping the odd jumps' partner turns every circulant image Adam's
    report = exhaustive_type2_sweep(make_graph(16, (1, 7)), 2)
    assert report.type2_shifts() == ()
    circ = [row for row in report.rows if row.circulant and not row.identical]
    assert [row.adams_multiplier for row in circ] == [3, 3]
    assert [row.image_jumps for row in circ] == [(3, 5), (3, 5)]


def test_order_16_odd_variant_is_not_isomorphic():
    # the order-16 type-2 pair is ({1,2,7}, {2,3,5}); the all-odd variant
    # (1,3,7) is provably not isomorphic to (2,3,5) at all
    outcome = isomorphic_bruteforce(make_graph(16, (1, 3, 7)), make_graph(16, (2, 3, 5)))
    assert outcome.status == STATUS_NON_ISOMORPHIC
