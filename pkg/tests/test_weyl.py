import random
from fractions import Fraction as Q

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from d5jacobi.errors import IndeterminatePointError
from d5jacobi.weyl import (
    GENERATOR_NAMES,
    GENERATORS,
    RECURRENCE_WORD,
    STANDARD_WORD,
    GeneratorWord,
    ParamPointState,
    apply_generator,
    apply_word,
    check_identity,
    check_normalization,
    check_relations,
    check_word_decompositions,
    composed_recurrence_step,
    composed_standard_step,
    corrupted_table,
    presentation_relations,
    random_state,
    word_from_string,
)


def state(a, t, f, g):
    return ParamPointState(tuple(Q(v) for v in a), Q(t), Q(f), Q(g))


def test_w1_hand_example():
    out = apply_generator("w1", state(("1/4",) * 4, 1, 2, 3))
    assert out == state(("1/2", "-1/4", "1/2", "1/4"), 1, 2, "23/8")


def test_s2_action():
    st0 = state(("1/3", "1/5", "2/7", "19/105"), "3/4", "5/6", "-2/9")
    out = apply_generator("s2", st0)
    assert out.a == (st0.a[2], st0.a[1], st0.a[0], st0.a[3])
    assert out.t == -st0.t
    assert out.f == st0.f
    assert out.g == st0.g + st0.t


def test_w1_fixes_point_when_a1_vanishes():
    st0 = state(("1/2", 0, "1/3", "1/6"), 2, 5, 7)
    out = apply_generator("w1", st0)
    assert (out.f, out.g, out.t) == (st0.f, st0.g, st0.t)
    assert out.a == st0.a


def test_indeterminacy_raised():
    with pytest.raises(IndeterminatePointError) as exc:
        apply_generator("w1", state(("1/4",) * 4, 1, 0, 3))
    assert exc.value.denominator == "f"
    assert isinstance(exc.value, ZeroDivisionError)


def test_word_reports_applied_prefix():
    # w2 sends f to f + a2/g = 1, where w3 is indeterminate
    st0 = state(("1/4",) * 4, 1, "11/12", 3)
    with pytest.raises(IndeterminatePointError) as exc:
        apply_word(("w3", "w2"), st0)
    assert exc.value.prefix == ("w2",)
    assert exc.value.generator == "w3"


def test_empty_word_rejected():
    with pytest.raises(ValueError):
        GeneratorWord(())
    with pytest.raises(ValueError):
        GeneratorWord(("w9",))
    with pytest.raises(ValueError):
        GeneratorWord(("w1",), order="middle")


def test_word_parsing():
    assert word_from_string("s3s2w3w1w2w0") == STANDARD_WORD
    assert word_from_string(RECURRENCE_WORD) == RECURRENCE_WORD


def test_rightmost_letter_acts_first():
    st0 = state(("1/3", "1/5", "2/7", "19/105"), "3/4", "5/6", "-2/9")
    assert apply_word(("w1", "w2"), st0) == apply_generator("w1", apply_generator("w2", st0))
    assert apply_word(("w1", "w2"), st0, order="left") == apply_generator("w2", apply_generator("w1", st0))


def test_relations_table_covers_the_presentation():
    labels = {label for label, _, _ in presentation_relations()}
    for j in range(4):
        assert f"w{j}^2 = e" in labels
    assert "w0w1w0 = w1w0w1" in labels
    assert "w0w2 = w2w0" in labels
    assert "w1w3 = w3w1" in labels
    assert "w1s3s2 = s3s2w3" in labels
    assert {"s1^2 = e", "s2^2 = e", "s3^2 = e"} <= labels


def test_relations_pass():
    rep = check_relations(seed=0, trials=100)
    assert rep.passed
    assert rep.details[-1]["item"] == "worst rejection count"


def test_relations_deterministic_for_seed():
    a = check_relations(seed=7, trials=20).to_dict()
    b = check_relations(seed=7, trials=20).to_dict()
    assert a == b


def test_corrupted_w2_breaks_braid_relation():
    def bad_w2(st):
        a0, a1, a2, a3 = st.a
        return ParamPointState((a0, a1 + a2, -a2, a2 + a3), st.t, st.f - a2 / st.g, st.g)

    rep = check_relations(seed=0, trials=20, table=corrupted_table("w2", bad_w2))
    assert not rep.passed
    failing = {d["item"] for d in rep.details if not d["passed"]}
    assert "w1w2w1 = w2w1w2" in failing


def test_normalization_preserved():
    assert check_normalization(seed=1, trials=50).passed


def test_word_decompositions():
    reports = check_word_decompositions(seed=3, trials=100)
    assert all(r.passed for r in reports), [r.check for r in reports if not r.passed]


def test_composed_steps_parameter_images():
    st0 = state(("1/3", "1/5", "2/7", "19/105"), "3/4", "5/6", "-2/9")
    std = composed_standard_step(st0)
    rec = composed_recurrence_step(st0)
    assert std.a == tuple(a + d for a, d in zip(st0.a, (1, -1, 1, -1)))
    assert rec.a == tuple(a + d for a, d in zip(st0.a, (0, 1, 0, -1)))
    assert std.t == st0.t and rec.t == st0.t


def test_check_identity_detects_false_identity():
    rep = check_identity("w1 = w2", GENERATORS["w1"], GENERATORS["w2"], seed=0, trials=10)
    assert not rep.passed
    assert rep.max_residual == "10"


rationals = st.fractions(min_value=-50, max_value=50, max_denominator=50)


@settings(max_examples=100, deadline=None)
@given(st.lists(rationals, min_size=3, max_size=3), rationals, rationals, rationals,
       st.sampled_from(GENERATOR_NAMES))
def test_generators_are_involutions_preserving_normalization(a, t, f, g, name):
    assume(t != 0)
    st0 = ParamPointState((a[0], a[1], a[2], 1 - sum(a)), t, f, g)
    try:
        once = apply_generator(name, st0)
        twice = apply_generator(name, once)
    except IndeterminatePointError:
        assume(False)
    assert once.normalization == 1
    assert twice == st0


def test_random_state_is_normalized():
    rng = random.Random(0)
    for _ in range(50):
        s = random_state(rng)
        assert s.normalization == 1
        assert s.t != 0
