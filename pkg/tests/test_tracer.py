"""Numerical braid tracing: gates, purity, and loop geometry."""

from fractions import Fraction

import pytest

from toricarr.arrangement import verify_chain
from toricarr.fixtures import standard_chain, type_c
from toricarr.rootmaps import base_generators, stage_root_map
from toricarr.tracer import (base_basepoint, make_loop_spec, stage_monodromy,
                             trace_loop)


@pytest.fixture(scope="module")
def type_c3_chain():
    arr = type_c(3)
    return verify_chain(arr, standard_chain("type-c-3", arr))


@pytest.fixture(scope="module")
def type_c3_monodromy(type_c3_chain):
    return {j: stage_monodromy(type_c3_chain, j) for j in (2, 3)}


def test_rank_three_type_c_passes_the_homology_gate(type_c3_monodromy):
    # stage_monodromy raises on any mismatch with the closed-form image,
    # so reaching this point certifies the traced linking numbers.
    assert len(type_c3_monodromy[2]) == 3
    assert len(type_c3_monodromy[3]) == 8


def test_traced_words_of_a_strict_stage_are_pure(type_c3_monodromy):
    for results in type_c3_monodromy.values():
        for res in results:
            assert res.permutation == tuple(range(1, res.n + 1))
            assert res.pure_word is not None
            assert sorted(res.strand_roots) == list(range(1, res.n + 1))


def test_result_labels_follow_base_generator_order(type_c3_chain,
                                                   type_c3_monodromy):
    for j, results in type_c3_monodromy.items():
        labels = [label for label, _ in base_generators(type_c3_chain, j)]
        assert [res.label for res in results] == labels
        assert all(res.stage == j for res in results)


def test_basepoint_coordinates_are_nested_rest_values(type_c3_chain):
    b2 = base_basepoint(type_c3_chain, 2)
    b3 = base_basepoint(type_c3_chain, 3)
    assert len(b2) == 1 and len(b3) == 2
    assert b3[:1] == b2
    assert abs(b3[1]) > abs(b3[0])  # later coordinates rest farther out


def test_loop_spec_geometry(type_c3_chain):
    spec = make_loop_spec(type_c3_chain, 3, ("axis", 2))
    assert spec.stage == 3 and spec.line == 2
    start = spec.path(0.0)
    assert abs(spec.path(1.0) - start) < 1e-9  # closed loop
    assert abs(start - base_basepoint(type_c3_chain, 3)[1]) < 1e-9


def test_trace_loop_reports_a_bounded_sweep(type_c3_chain):
    data = stage_root_map(type_c3_chain, 3)
    spec = make_loop_spec(type_c3_chain, 3, ("axis", 1))
    word, order0, max_mod = trace_loop(data, spec)
    assert word.n == 7
    assert sorted(order0) == list(range(1, 8))
    fiber_rest = base_basepoint(type_c3_chain, 4)[2]  # rest scale of line 3
    assert max_mod < 0.75 * abs(fiber_rest)


def test_smaller_epsilon_reproduces_the_monodromy(type_c3_chain,
                                                  type_c3_monodromy):
    fine = stage_monodromy(type_c3_chain, 2, epsilon=Fraction(1, 12))
    for a, b in zip(type_c3_monodromy[2], fine):
        assert a.linking == b.linking
        assert a.permutation == b.permutation
