import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from d5jacobi.errors import BasisMismatchError, InvalidRootError
from d5jacobi.lattice import (
    A3_EDGES,
    AFFINE_A3_CARTAN,
    D5_EDGES,
    GENERATOR_NAMES,
    RANK,
    RECURRENCE_ROOTS,
    RECURRENCE_ROOTS_PRELIMINARY,
    RECURRENCE_WORD,
    STANDARD_ROOTS,
    STANDARD_WORD,
    DivisorClass,
    LatticeMap,
    anticanonical,
    anticanonical_decomposition,
    basis_change_final,
    basis_change_preliminary,
    cartan_matrix,
    cls,
    compose,
    conjugate,
    dynkin_edges,
    generator,
    intersect,
    lattice_suite,
    phi_star,
    reflect,
    reflection_map,
    root_permutation,
    self_intersection,
    surface_root_correspondence,
    translation_vector,
    weyl_generator_map,
    word_map,
)

ALL_ROOT_DATA = [STANDARD_ROOTS, RECURRENCE_ROOTS, RECURRENCE_ROOTS_PRELIMINARY]


def test_intersection_form_values():
    hx, hy, f1 = generator("XY", 0), generator("XY", 1), generator("XY", 2)
    assert intersect(hx, hy) == 1
    assert intersect(hx, hx) == 0
    assert intersect(f1, f1) == -1
    assert intersect(f1, generator("XY", 3)) == 0
    assert self_intersection(anticanonical("XY")) == 0


def test_parse_class_notation():
    c = cls("XY", "2Hx + Hy - F135678")
    assert c.coeffs == (2, 1, -1, 0, -1, 0, -1, -1, -1, -1)
    assert str(c) == "2Hx + Hy - F1 - F3 - F5 - F6 - F7 - F8"
    assert cls("FG", "Hf - E56") == generator("FG", 0) - generator("FG", 6) - generator("FG", 7)


def test_parse_rejects_wrong_basis_symbols():
    with pytest.raises(BasisMismatchError):
        cls("XY", "Hf - E1")


def test_mixed_bases_rejected():
    with pytest.raises(BasisMismatchError):
        generator("XY", 0) + generator("FG", 0)


def test_anticanonical_vector():
    assert anticanonical("XY").coeffs == (2, 2) + (-1,) * 8


@pytest.mark.parametrize("roots", ALL_ROOT_DATA, ids=["standard", "recurrence", "preliminary"])
def test_root_data(roots):
    delta = anticanonical(roots.basis)
    assert anticanonical_decomposition(roots) == delta
    for r in roots.surface_roots + roots.symmetry_roots:
        assert self_intersection(r) == -2
    for d, a in itertools.product(roots.surface_roots, roots.symmetry_roots):
        assert intersect(d, a) == 0
    for d in roots.surface_roots:
        assert intersect(delta, d) == 0
    assert dynkin_edges(roots.surface_roots) == set(D5_EDGES)
    assert dynkin_edges(roots.symmetry_roots) == set(A3_EDGES)
    assert cartan_matrix(roots.symmetry_roots) == AFFINE_A3_CARTAN
    total = roots.symmetry_roots[0]
    for a in roots.symmetry_roots[1:]:
        total = total + a
    assert total == delta


def test_reflection_examples():
    a = STANDARD_ROOTS.symmetry_roots
    assert reflect(a[1], a[1]) == -a[1]
    orth = cls("FG", "E1 + E2")
    assert intersect(orth, a[1]) == 0
    assert reflect(a[1], orth) == orth
    assert reflect(a[0], cls("FG", "Hf")) == cls("FG", "Hf + Hg - E1 - E2")


def test_reflection_requires_root():
    with pytest.raises(InvalidRootError):
        reflection_map(cls("XY", "Hx"))


@pytest.mark.parametrize("name", GENERATOR_NAMES)
def test_generators_are_involutive_isometries_fixing_delta(name):
    m = weyl_generator_map(name)
    delta = anticanonical("FG")
    assert m.is_isometry()
    assert compose(m, m).is_identity()
    assert m(delta) == delta


def test_sigma_permutations():
    a = STANDARD_ROOTS.symmetry_roots
    d = STANDARD_ROOTS.surface_roots
    assert root_permutation(weyl_generator_map("s2"), a) == (2, 1, 0, 3)
    assert root_permutation(weyl_generator_map("s2"), d) == (1, 0, 2, 3, 4, 5)
    assert root_permutation(weyl_generator_map("s3"), a) == (0, 3, 2, 1)


def test_standard_word_translation():
    assert translation_vector(word_map(STANDARD_WORD), STANDARD_ROOTS.symmetry_roots) == (-1, 1, -1, 1)


def test_recurrence_word_translation():
    assert translation_vector(word_map(RECURRENCE_WORD), STANDARD_ROOTS.symmetry_roots) == (0, -1, 0, 1)


def test_word_order_is_significant():
    left = word_map(STANDARD_WORD, order="left")
    assert left != word_map(STANDARD_WORD)
    assert translation_vector(left, STANDARD_ROOTS.symmetry_roots) != (-1, 1, -1, 1)


def test_w1_sigma_relation_on_lattice():
    assert word_map(("w1", "s3", "s2")) == word_map(("s3", "s2", "w3"))


def test_phi_star():
    m = phi_star()
    assert m(cls("XY", "F5")) == cls("XY", "Hx - F8")
    assert m.is_isometry()
    assert m(anticanonical("XY")) == anticanonical("XY")
    assert translation_vector(m, RECURRENCE_ROOTS_PRELIMINARY.symmetry_roots) == (0, -1, 0, 1)
    assert translation_vector(m, RECURRENCE_ROOTS.symmetry_roots) == (-1, 1, -1, 1)
    pairs = list(itertools.combinations_with_replacement(range(RANK), 2))
    assert len(pairs) == 55
    for i, j in pairs:
        gi, gj = generator("XY", i), generator("XY", j)
        assert intersect(m(gi), m(gj)) == intersect(gi, gj)


def test_basis_change_final():
    fwd, inv = basis_change_final()
    assert fwd(cls("XY", "Hx")) == cls("FG", "Hf + Hg - E5 - E6")
    assert fwd.is_isometry() and inv.is_isometry()
    assert compose(fwd, inv).is_identity()
    assert compose(inv, fwd).is_identity()
    assert fwd.inverse() == inv
    assert fwd(anticanonical("XY")) == anticanonical("FG")
    assert [fwd(a) for a in RECURRENCE_ROOTS.symmetry_roots] == list(STANDARD_ROOTS.symmetry_roots)


def test_basis_change_preliminary_maps_roots():
    fwd, inv = basis_change_preliminary()
    assert compose(fwd, inv).is_identity()
    assert sorted(map(str, (fwd(d) for d in RECURRENCE_ROOTS_PRELIMINARY.surface_roots))) == sorted(
        map(str, STANDARD_ROOTS.surface_roots))


def test_surface_root_correspondence_is_recorded():
    fwd, _ = basis_change_final()
    assert surface_root_correspondence(fwd) == (0, 1, 2, 3, 4, 5)


def test_conjugated_dynamics():
    fwd, _ = basis_change_final()
    assert conjugate(fwd, phi_star()) == word_map(STANDARD_WORD)
    pre, _ = basis_change_preliminary()
    assert conjugate(pre, phi_star()) == word_map(RECURRENCE_WORD)


def test_non_isometry_has_no_inverse_formula():
    m = LatticeMap(2 * np.eye(RANK, dtype=np.int64), "XY", "XY", "double")
    with pytest.raises(InvalidRootError):
        m.inverse()


def test_lattice_suite_passes():
    reports = lattice_suite()
    assert len(reports) == 7
    assert all(r.passed for r in reports), [r.check for r in reports if not r.passed]


classes = st.lists(st.integers(-20, 20), min_size=RANK, max_size=RANK).map(lambda v: DivisorClass(tuple(v), "FG"))


@settings(max_examples=60, deadline=None)
@given(classes, classes, st.lists(st.sampled_from(GENERATOR_NAMES), min_size=1, max_size=6))
def test_words_preserve_intersection(c1, c2, word):
    m = word_map(word)
    assert intersect(m(c1), m(c2)) == intersect(c1, c2)
    assert m.inverse()(m(c1)) == c1


@settings(max_examples=60, deadline=None)
@given(classes, st.sampled_from(STANDARD_ROOTS.symmetry_roots + STANDARD_ROOTS.surface_roots))
def test_reflection_properties(c, alpha):
    r = reflect(alpha, c)
    assert reflect(alpha, r) == c
    assert intersect(r, alpha) == -intersect(c, alpha)
    assert intersect(r, r) == intersect(c, c)
