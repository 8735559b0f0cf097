"""Birational representation of the extended affine Weyl group W~(A3(1)).

A generator acts simultaneously on the root variables ``a0..a3``, the
parameter ``t`` and the point ``(f, g)``.  Arithmetic is generic: states built
from :class:`fractions.Fraction` stay exact, states built from mpmath numbers
stay at their context's precision.

Words are tuples of generator names.  With ``order="right"`` (the default)
the rightmost generator is applied first, so ``("s3", "s2", "w3", "w1", "w2",
"w0")`` means ``s3 o s2 o w3 o w1 o w2 o w0``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

from .errors import IndeterminatePointError, SamplingExhaustedError
from .report import ResidualTracker, VerificationReport

GENERATOR_NAMES = ("w0", "w1", "w2", "w3", "s1", "s2", "s3")
STANDARD_WORD = ("s3", "s2", "w3", "w1", "w2", "w0")
RECURRENCE_WORD = ("s3", "s2", "w1", "w2", "w0", "w1")


@dataclass(frozen=True)
class ParamPointState:
    a: tuple
    t: object
    f: object
    g: object

    def __post_init__(self):
        if len(self.a) != 4:
            raise ValueError("four root variables a0..a3 are required")
        object.__setattr__(self, "a", tuple(self.a))

    @property
    def normalization(self):
        return self.a[0] + self.a[1] + self.a[2] + self.a[3]

    def as_tuple(self) -> tuple:
        return (*self.a, self.t, self.f, self.g)


def _nonzero(value, gen: str, what: str):
    if value == 0:
        raise IndeterminatePointError(gen, what)
    return value


def _w0(st: ParamPointState) -> ParamPointState:
    a0, a1, a2, a3 = st.a
    d = _nonzero(st.g + st.t, "w0", "g + t")
    return ParamPointState((-a0, a0 + a1, a2, a0 + a3), st.t, st.f + a0 / d, st.g)


def _w1(st: ParamPointState) -> ParamPointState:
    a0, a1, a2, a3 = st.a
    d = _nonzero(st.f, "w1", "f")
    return ParamPointState((a0 + a1, -a1, a1 + a2, a3), st.t, st.f, st.g - a1 / d)


def _w2(st: ParamPointState) -> ParamPointState:
    a0, a1, a2, a3 = st.a
    d = _nonzero(st.g, "w2", "g")
    return ParamPointState((a0, a1 + a2, -a2, a2 + a3), st.t, st.f + a2 / d, st.g)


def _w3(st: ParamPointState) -> ParamPointState:
    a0, a1, a2, a3 = st.a
    d = _nonzero(st.f - 1, "w3", "f - 1")
    return ParamPointState((a0 + a3, a1, a2 + a3, -a3), st.t, st.f, st.g - a3 / d)


def _s1(st: ParamPointState) -> ParamPointState:
    a0, a1, a2, a3 = st.a
    t = _nonzero(st.t, "s1", "t")
    return ParamPointState((a3, a2, a1, a0), -t, -st.g / t, st.f * t)


def _s2(st: ParamPointState) -> ParamPointState:
    a0, a1, a2, a3 = st.a
    return ParamPointState((a2, a1, a0, a3), -st.t, st.f, st.g + st.t)


def _s3(st: ParamPointState) -> ParamPointState:
    a0, a1, a2, a3 = st.a
    return ParamPointState((a0, a3, a2, a1), -st.t, 1 - st.f, -st.g)


GENERATORS: Mapping[str, Callable[[ParamPointState], ParamPointState]] = {
    "w0": _w0, "w1": _w1, "w2": _w2, "w3": _w3, "s1": _s1, "s2": _s2, "s3": _s3,
}


@dataclass(frozen=True)
class GeneratorWord:
    names: tuple[str, ...]
    order: str = "right"

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if not self.names:
            raise ValueError("a generator word must be non-empty")
        bad = [n for n in self.names if n not in GENERATOR_NAMES]
        if bad:
            raise ValueError(f"unknown generators {bad}; expected names from {GENERATOR_NAMES}")
        if self.order not in ("right", "left"):
            raise ValueError(f"order must be 'right' or 'left', got {self.order!r}")

    def application_sequence(self) -> tuple[str, ...]:
        return tuple(reversed(self.names)) if self.order == "right" else self.names

    def __str__(self) -> str:
        return "".join(self.names)


def apply_generator(gen: str, state: ParamPointState, table=GENERATORS) -> ParamPointState:
    try:
        fn = table[gen]
    except KeyError:
        raise ValueError(f"unknown generator {gen!r}") from None
    return fn(state)


def apply_word(word, state: ParamPointState, order: str | None = None, table=GENERATORS) -> ParamPointState:
    """Fold ``apply_generator`` over a word.

    ``word`` is a :class:`GeneratorWord` or a sequence of names; ``order``
    overrides the word's own order flag.  An indeterminacy error is re-raised
    with the prefix of generators already applied.
    """
    if not isinstance(word, GeneratorWord):
        word = GeneratorWord(tuple(word), order or "right")
    elif order is not None:
        word = replace(word, order=order)
    done: list[str] = []
    for gen in word.application_sequence():
        try:
            state = apply_generator(gen, state, table)
        except IndeterminatePointError as exc:
            raise IndeterminatePointError(exc.generator, exc.denominator, done) from None
        done.append(gen)
    return state


def composed_standard_step(state: ParamPointState, table=GENERATORS) -> ParamPointState:
    """One step of the standard equation realised as ``s3 s2 w3 w1 w2 w0``."""
    return apply_word(STANDARD_WORD, state, table=table)


def composed_recurrence_step(state: ParamPointState, table=GENERATORS) -> ParamPointState:
    """One step of the recurrence dynamics as ``s3 s2 w1 w2 w0 w1`` (w1-conjugate of the standard step)."""
    return apply_word(RECURRENCE_WORD, state, table=table)


# --------------------------------------------------------------------------
# Randomised identity testing


def random_rational(rng: random.Random, bound: int = 1000) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_state(rng: random.Random, bound: int = 1000) -> ParamPointState:
    """Random exact state with ``a0 + a1 + a2 + a3 = 1``."""
    a0, a1, a2 = (random_rational(rng, bound) for _ in range(3))
    t = Fraction(0)
    while t == 0:
        t = random_rational(rng, bound)
    return ParamPointState((a0, a1, a2, 1 - a0 - a1 - a2), t, random_rational(rng, bound), random_rational(rng, bound))


def _adjacent(j: int, k: int) -> bool:
    return (j - k) % 4 in (1, 3)


def presentation_relations() -> list[tuple[str, tuple[str, ...], tuple[str, ...]]]:
    """(label, lhs word, rhs word) for the defining relations; an empty word is the identity."""
    rels = []
    for j in range(4):
        rels.append((f"w{j}^2 = e", (f"w{j}", f"w{j}"), ()))
    for j in range(4):
        for k in range(j + 1, 4):
            wj, wk = f"w{j}", f"w{k}"
            if _adjacent(j, k):
                rels.append((f"{wj}{wk}{wj} = {wk}{wj}{wk}", (wj, wk, wj), (wk, wj, wk)))
            else:
                rels.append((f"{wj}{wk} = {wk}{wj}", (wj, wk), (wk, wj)))
    for i in (1, 2, 3):
        rels.append((f"s{i}^2 = e", (f"s{i}", f"s{i}"), ()))
    rels += [
        ("s2s3 = s3s2", ("s2", "s3"), ("s3", "s2")),
        ("s1s2s1 = s3", ("s1", "s2", "s1"), ("s3",)),
        ("(s1s2)^4 = e", ("s1", "s2") * 4, ()),
        ("w1s3s2 = s3s2w3", ("w1", "s3", "s2"), ("s3", "s2", "w3")),
    ]
    # s w_j s = w_{s(j)} for the diagram action of each automorphism
    perms = {"s1": (3, 2, 1, 0), "s2": (2, 1, 0, 3), "s3": (0, 3, 2, 1)}
    for s, p in perms.items():
        for j in range(4):
            rels.append((f"{s}w{j}{s} = w{p[j]}", (s, f"w{j}", s), (f"w{p[j]}",)))
    return rels


def _word_image(word: Sequence[str], state: ParamPointState, table) -> ParamPointState:
    return apply_word(word, state, table=table) if word else state


def _sample_identity(rng, lhs_fn, rhs_fn, max_rejections):
    """Draw states until both sides evaluate; return (state, lhs, rhs, rejections)."""
    rejected = 0
    while True:
        st = random_state(rng)
        try:
            return st, lhs_fn(st), rhs_fn(st), rejected
        except IndeterminatePointError:
            rejected += 1
            if rejected > max_rejections:
                raise SamplingExhaustedError(f"more than {max_rejections} indeterminate samples") from None


def check_identity(label: str, lhs_fn, rhs_fn, seed: int, trials: int,
                   max_rejections: int = 1000) -> VerificationReport:
    """Exact randomised test of ``lhs_fn(state) == rhs_fn(state)``."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(f"{seed}:{label}")
    tr = ResidualTracker(label, seed=seed)
    worst_rejections = 0
    failures = 0
    for _ in range(trials):
        st, lhs, rhs, rej = _sample_identity(rng, lhs_fn, rhs_fn, max_rejections)
        worst_rejections = max(worst_rejections, rej)
        if lhs != rhs:
            failures += 1
    tr.add(label, failures, failures == 0, trials=trials, failures=failures, max_rejections_per_sample=worst_rejections)
    rep = tr.report(samples=trials)
    rep.max_residual = str(failures)
    return rep


def check_relations(seed: int = 0, trials: int = 100, table=GENERATORS,
                    max_rejections: int = 1000) -> VerificationReport:
    """Test every presentation relation at ``trials`` random exact states.

    The residual of a relation is the number of sampled states where the two
    sides differ; any nonzero count fails the report.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    tr = ResidualTracker("weyl.relations", seed=seed)
    worst_rejections = 0
    for label, lhs, rhs in presentation_relations():
        sub = check_identity(label, lambda st, w=lhs: _word_image(w, st, table),
                             lambda st, w=rhs: _word_image(w, st, table), seed, trials, max_rejections)
        d = sub.details[0]
        worst_rejections = max(worst_rejections, d["max_rejections_per_sample"])
        tr.add(label, int(d["failures"]), sub.passed, trials=trials,
               max_rejections_per_sample=d["max_rejections_per_sample"])
    rep = tr.report(samples=trials)
    rep.details.append({"item": "worst rejection count", "residual": "0", "passed": True,
                        "max_rejections_per_sample": worst_rejections})
    return rep


def check_normalization(seed: int = 0, trials: int = 100) -> VerificationReport:
    tr = ResidualTracker("weyl.normalization", seed=seed)
    rng = random.Random(f"{seed}:normalization")
    for gen in GENERATOR_NAMES:
        bad = 0
        for _ in range(trials):
            st, img, _, _ = _sample_identity(rng, lambda s, g=gen: apply_generator(g, s), lambda s: s, 1000)
            bad += img.normalization != 1
        tr.add(f"{gen} preserves a0+a1+a2+a3 = 1", bad, bad == 0)
    return tr.report(samples=trials)


def check_word_decompositions(seed: int = 0, trials: int = 100) -> list[VerificationReport]:
    """Both words against the direct step and against each other, plus their parameter shifts."""
    from .painleve import StdOrbitState, std_step_forward

    def direct(st: ParamPointState) -> ParamPointState:
        out = std_step_forward(StdOrbitState(st.a, st.t, st.f, st.g))
        return ParamPointState(out.a, out.t, out.f, out.g)

    def conj(st: ParamPointState) -> ParamPointState:
        return apply_generator("w1", composed_standard_step(apply_generator("w1", st)))

    def shifted(vec):
        return lambda st: ParamPointState(tuple(a + d for a, d in zip(st.a, vec)), st.t, None, None)

    def params_only(fn):
        return lambda st: replace(fn(st), f=None, g=None)

    return [
        check_identity("weyl.word_std = direct step", composed_standard_step, direct, seed, trials),
        check_identity("weyl.word_rec = w1 o word_std o w1", composed_recurrence_step, conj, seed, trials),
        check_identity("weyl.word_std shifts a by (1,-1,1,-1)", params_only(composed_standard_step),
                       shifted((1, -1, 1, -1)), seed, trials),
        check_identity("weyl.word_rec shifts a by (0,1,0,-1)", params_only(composed_recurrence_step),
                       shifted((0, 1, 0, -1)), seed, trials),
    ]


def weyl_suite(seed: int = 0, trials: int = 100) -> list[VerificationReport]:
    return [check_relations(seed, trials), check_normalization(seed, trials),
            *check_word_decompositions(seed, trials)]


def corrupted_table(gen: str, fn: Callable[[ParamPointState], ParamPointState]) -> dict:
    """Copy of the generator table with one entry replaced (for mutation tests)."""
    table = dict(GENERATORS)
    table[gen] = fn
    return table


def word_from_string(text: str | Iterable[str]) -> tuple[str, ...]:
    """Split ``"s3s2w3w1w2w0"`` into generator names."""
    if not isinstance(text, str):
        return tuple(text)
    names = [text[i:i + 2] for i in range(0, len(text), 2)]
    GeneratorWord(tuple(names))
    return tuple(names)
