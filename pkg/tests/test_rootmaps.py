"""Root data of chain stages and the closed-form homology rows."""

from fractions import Fraction

from toricarr.arrangement import Arrangement, verify_chain
from toricarr.fixtures import circuit, example_a, standard_chain, type_c
from toricarr.rootmaps import (CoefficientMapData, RootMapData,
                               base_generators, homological_root_hom,
                               stage_root_map)
from toricarr.words import AbelianBraidVector, pair_index


def vec(n, entries):
    coords = [0] * (n * (n - 1) // 2)
    for (i, j), c in entries.items():
        coords[pair_index(i, j, n)] += c
    return AbelianBraidVector(n, tuple(coords))


def test_stage_root_map_kind_tracks_strictness():
    arr = example_a()
    strict = verify_chain(arr, [(0, 1)])
    assert isinstance(stage_root_map(strict, 2), RootMapData)
    loose = verify_chain(arr, [(1, 0)])
    data = stage_root_map(loose, 2)
    assert isinstance(data, CoefficientMapData)
    assert sorted(d for d, _, _ in data.factors) == [1, 1, 2]
    assert data.n == 5


def test_base_generator_labels_are_stage_major():
    arr = example_a()
    chain = verify_chain(arr, [(0, 1)])
    labels = [lab for lab, _ in base_generators(chain, 2)]
    assert labels == [("axis", 1), ("hyp", 1, 1), ("hyp", 2, 1)]
    # lasso labels carry the hypersurface they encircle
    gens = dict(base_generators(chain, 2))
    assert gens[("axis", 1)] is None
    assert gens[("hyp", 1, 1)].value == Fraction(0)
    assert gens[("hyp", 2, 1)].value == Fraction(1, 2)


def test_homology_rows_of_the_rank_two_example():
    chain = verify_chain(example_a(), [(0, 1)])
    h = homological_root_hom(chain, 2)
    rows = dict(zip(h.row_labels, h.rows))
    # fiber roots (0, x^2, 1): the coordinate loop spins x^2 twice about 0;
    # each lasso about x = +-1 makes the roots x^2 and 1 collide once
    assert rows[("axis", 1)] == vec(3, {(1, 2): 2})
    assert rows[("hyp", 1, 1)] == vec(3, {(2, 3): 1})
    assert rows[("hyp", 2, 1)] == vec(3, {(2, 3): 1})


def test_base_classes_record_windings_about_reciprocal_roots():
    # rank-three chain with a stage-two hypersurface of negative exponent
    # (x1 x2 = 1): the stage-one coordinate loop, based far from the
    # punctures, also winds once about it, which the stage-three map records
    arr = type_c(3)
    chain = verify_chain(arr, standard_chain("type-c-3", arr))
    h = homological_root_hom(chain, 3)
    labels = list(h.row_labels)
    cls = dict(zip(h.row_labels, h.base_classes))
    sf2 = chain.stage(2).solved_final
    recip = next(p for p, s in enumerate(sf2, start=1)
                 if s.exponents == (-1,))
    axis_cls = list(cls[("axis", 1)])
    expect = [0] * len(labels)
    expect[labels.index(("axis", 1))] = 1
    expect[labels.index(("hyp", recip, 2))] = 1
    assert axis_cls == expect
    # lassos, and axis loops with no reciprocal roots above, are unchanged
    for lab in labels:
        if lab == ("axis", 1):
            continue
        expect = [0] * len(labels)
        expect[labels.index(lab)] = 1
        assert list(cls[lab]) == expect


def test_effective_rows_combine_base_classes_with_rows():
    arr = type_c(3)
    chain = verify_chain(arr, standard_chain("type-c-3", arr))
    h = homological_root_hom(chain, 3)
    rows = dict(zip(h.row_labels, h.rows))
    eff = dict(zip(h.row_labels, h.effective_rows()))
    labels = list(h.row_labels)
    sf2 = chain.stage(2).solved_final
    recip = next(p for p, s in enumerate(sf2, start=1)
                 if s.exponents == (-1,))
    for lab in labels:
        if lab == ("axis", 1):
            want = rows[lab] + rows[("hyp", recip, 2)]
            assert eff[lab] == want and eff[lab] != rows[lab]
        else:
            assert eff[lab] == rows[lab]


def test_circuit_rows_scale_with_the_winding_exponent():
    for n, m in ((6, 3), (6, 2), (4, 2)):
        chain = verify_chain(circuit(n, m), [(0, 1)])
        h = homological_root_hom(chain, 2)
        rows = dict(zip(h.row_labels, h.rows))
        assert rows[("axis", 1)] == vec(3, {(1, 2): m})
