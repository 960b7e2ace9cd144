"""Free words, braid words and the Artin actions."""

import pytest

from toricarr.words import (AbelianBraidVector, BraidWord, FreeWord,
                            PureBraidWord, artin_full, artin_pure,
                            braid_equal, linking_numbers, pair_index,
                            pair_list, permutation_braid, pure_equal,
                            pure_to_sigma, sigma_to_pure)


def test_free_words_reduce_and_round_trip():
    w = FreeWord.parse(3, "y1 y2 y2^-1 y1^-1 y3")
    assert w == FreeWord.generator(3, 3)
    assert FreeWord.parse(3, w.serialize()) == w
    assert w.inverse().serialize() == "y3^-1"
    # conjugation is u^-1 v u, freely reduced
    assert FreeWord.parse(2, "y1 y2").conjugate_by(
        FreeWord.generator(2, 1)).serialize() == "y2 y1"


def test_abelianization_counts_signed_occurrences():
    w = FreeWord.parse(2, "y1 y2 y1 y2^-1 y1^-1")
    assert w.abelianization() == [1, 0]


def test_braid_permutation_and_purity():
    b = BraidWord.parse(3, "s1 s2 s1")
    assert b.permutation() == (3, 2, 1)
    assert not b.is_pure()
    assert (b * b).permutation() == (1, 2, 3)


def test_artin_action_composes_along_the_word():
    # letters act in order: the action of b*a is (action of a) after b
    a = BraidWord.parse(4, "s1 s3^-1")
    b = BraidWord.parse(4, "s2 s2 s1^-1")
    w = FreeWord.parse(4, "y1 y4^-1 y2")
    assert artin_full(b * a, w) == artin_full(a, artin_full(b, w))


def test_artin_action_of_a_generator():
    # s_i maps y_i -> y_i y_{i+1} y_i^-1 and y_{i+1} -> y_i
    assert artin_full(BraidWord.parse(3, "s1"),
                      FreeWord.generator(3, 1)).serialize() == "y1 y2 y1^-1"
    assert artin_full(BraidWord.parse(3, "s1"),
                      FreeWord.generator(3, 2)).serialize() == "y1"


def test_pure_generator_action_fixes_the_product_of_generators():
    n = 4
    total = FreeWord.make(n, [(q, 1) for q in range(1, n + 1)])
    for i, j in pair_list(n):
        pure = PureBraidWord.make(n, [((i, j), 1)])
        assert artin_pure(pure, total) == total


def test_sigma_and_pure_conversions_are_mutually_inverse():
    pure = PureBraidWord.parse(4, "a(1,3) a(2,4)^-1 a(1,2)")
    assert pure_equal(sigma_to_pure(pure_to_sigma(pure)), pure)
    braid = BraidWord.parse(4, "s1^2 s3^-2")
    assert braid_equal(pure_to_sigma(sigma_to_pure(braid)), braid)


def test_sigma_to_pure_rejects_non_pure_words():
    with pytest.raises(AssertionError):
        sigma_to_pure(BraidWord.parse(3, "s1"))


def test_linking_numbers_of_simple_braids():
    n = 3
    lk = linking_numbers(BraidWord.parse(n, "s1^2"))
    want = [0] * len(pair_list(n))
    want[pair_index(1, 2, n)] = 1
    assert lk == AbelianBraidVector(n, tuple(want))
    # a full twist on three strands links every pair once
    lk = linking_numbers(BraidWord.parse(n, "s1 s2 s1 s1 s2 s1"))
    assert lk == AbelianBraidVector(n, (1, 1, 1))


def test_permutation_braid_realizes_its_permutation():
    perm = (3, 1, 4, 2)
    assert permutation_braid(perm).permutation() == perm


def test_abelian_vector_relabels_coherently():
    n = 3
    v = AbelianBraidVector(n, (1, 2, 3))  # pairs (1,2), (1,3), (2,3)
    swapped = v.relabel({1: 2, 2: 1, 3: 3})
    assert swapped == AbelianBraidVector(n, (1, 3, 2))
