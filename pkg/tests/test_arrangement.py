"""Arrangements, posets of layers, fiber ideals and fibration chains."""

from fractions import Fraction

import pytest

from toricarr.arrangement import (Arrangement, build_poset, chain_candidates,
                                  compute_composition, essentialize,
                                  expand_character, find_chain, is_M_ideal,
                                  is_TM_ideal, make_hypersurface, verify_chain)
from toricarr.errors import CapExceededError, InfeasibleError
from toricarr.fixtures import EXAMPLES, example_a, standard_chain, type_c


def test_imprimitive_characters_expand_into_components():
    hyps = expand_character((2, 0), 0)
    assert [h.value for h in hyps] == [Fraction(0), Fraction(1, 2)]
    assert all(h.chi0 == (1, 0) for h in hyps)


def test_hypersurface_values_are_normalized_mod_one():
    h = make_hypersurface((0, 1), Fraction(5, 4))
    assert h.chi0 == (0, 1)
    assert h.value == Fraction(1, 4)
    with pytest.raises(AssertionError):
        make_hypersurface((0, 3), Fraction(0))  # imprimitive character


def test_poset_cap_is_enforced():
    arr = example_a()
    with pytest.raises(CapExceededError):
        build_poset(arr, cap=3)


def test_essentialize_splits_off_torus_factors():
    # a single hypersurface x = 1 inside a two-torus
    arr = Arrangement.from_characters(2, [(1, 0)])
    ess, factors = essentialize(arr)
    assert factors == 1
    assert ess.dim == 1 and ess.is_essential()
    already, factors = essentialize(example_a())
    assert factors == 0 and already.dim == 2


def test_fiber_ideal_witnesses():
    arr = example_a()
    ok, witness = is_M_ideal(arr, (1, 0))
    assert ok and witness is None  # a fiber ideal, just not strict
    # removing y = 1 breaks the ideal property: x = 1 and y = x^2 meet
    # outside every invariant hypersurface
    smaller = Arrangement.from_characters(2, [(2, 0), (-2, 1)])
    ok, witness = is_M_ideal(smaller, (1, 0))
    assert not ok
    h1, h2, component = witness
    assert {h1.chi0, h2.chi0} == {(1, 0), (2, -1)}


def test_composition_requires_a_fiber_ideal():
    smaller = Arrangement.from_characters(2, [(2, 0), (-2, 1)])
    with pytest.raises(InfeasibleError):
        compute_composition(smaller, (1, 0))


def test_verify_chain_classifications():
    arr = example_a()
    assert verify_chain(arr, [(0, 1)]).classification == \
        "strictly-supersolvable"
    assert verify_chain(arr, [(1, 0)]).classification == "supersolvable"
    bad = verify_chain(Arrangement.from_characters(2, [(2, 0), (-2, 1)]),
                       [(1, 0)])
    assert bad.classification == "invalid"
    assert bad.failure is not None


def test_find_chain_prefers_strict_chains():
    for name in ("example-a", "circuit-6-3", "type-c-2", "type-c-3"):
        arr = EXAMPLES[name]()
        stages = find_chain(arr)
        assert stages is not None
        assert verify_chain(arr, stages).is_strict()


def test_find_chain_fails_on_a_non_supersolvable_arrangement():
    arr = Arrangement.from_characters(
        2, [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2)])
    assert find_chain(arr) is None
    assert find_chain(arr, strict_only=True) is None


def test_chain_candidates_are_admissible_directions():
    arr = example_a()
    cands = chain_candidates(arr)
    assert (0, 1) in cands and (1, 0) in cands


def test_chain_data_shape_for_type_c():
    arr = type_c(3)
    chain = verify_chain(arr, standard_chain("type-c-3", arr))
    assert chain.fiber_ranks() == (3, 5, 7)
    assert chain.is_strict()
    for j in (2, 3):
        st = chain.stage(j)
        assert st.index == j
        assert len(st.solved_final) == len(st.solved)
        # triangular normal form: stage j roots involve coordinates < j only
        for s in st.solved_final:
            assert len(s.exponents) == j - 1
