"""Exact integer arithmetic on the rank-10 Picard lattice of a D5(1) Sakai surface.

Two named bases are used throughout, both ordered the same way
``(H1, H2, point-class 1, ..., point-class 8)``:

* ``XY`` -- ``(Hx, Hy, F1, ..., F8)``, the surface of the time-evolved Jacobi recurrence;
* ``FG`` -- ``(Hf, Hg, E1, ..., E8)``, the standard surface of the d-P(A3(1)/D5(1)) equation.

The intersection form is ``H1.H2 = 1``, ``Hi.Hi = 0``, ``H.point = 0`` and
``point_i.point_j = -delta_ij`` in either basis.

Classes can be written in the compact notation of the literature, e.g.
``cls("XY", "2Hx + Hy - F135678")`` where a multi-digit subscript means a sum
``F1 + F3 + F5 + F6 + F7 + F8``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import BasisMismatchError, InvalidRootError
from .report import ResidualTracker, VerificationReport

RANK = 10
BASES = ("XY", "FG")
SYMBOLS = {
    "XY": ("Hx", "Hy", "F"),
    "FG": ("Hf", "Hg", "E"),
}

GRAM = np.zeros((RANK, RANK), dtype=np.int64)
GRAM[0, 1] = GRAM[1, 0] = 1
for _i in range(2, RANK):
    GRAM[_i, _i] = -1
GRAM.setflags(write=False)


def _check_basis(basis: str) -> str:
    if basis not in BASES:
        raise BasisMismatchError(f"unknown basis {basis!r}; expected one of {BASES}")
    return basis


@dataclass(frozen=True)
class DivisorClass:
    coeffs: tuple[int, ...]
    basis: str

    def __post_init__(self):
        _check_basis(self.basis)
        if len(self.coeffs) != RANK:
            raise ValueError(f"a divisor class needs {RANK} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def _same(self, other: "DivisorClass") -> None:
        if not isinstance(other, DivisorClass):
            raise TypeError(f"expected DivisorClass, got {type(other).__name__}")
        if other.basis != self.basis:
            raise BasisMismatchError(f"basis {self.basis} vs {other.basis}")

    def __add__(self, other):
        self._same(other)
        return DivisorClass(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.basis)

    def __sub__(self, other):
        self._same(other)
        return DivisorClass(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.basis)

    def __neg__(self):
        return DivisorClass(tuple(-a for a in self.coeffs), self.basis)

    def __mul__(self, k: int):
        return DivisorClass(tuple(k * a for a in self.coeffs), self.basis)

    __rmul__ = __mul__

    def vector(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        h1, h2, p = SYMBOLS[self.basis]
        names = [h1, h2] + [f"{p}{i}" for i in range(1, 9)]
        terms = []
        for c, name in zip(self.coeffs, names):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            terms.append(f"{sign} {mag}{name}")
        if not terms:
            return "0"
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


_TERM = re.compile(r"\s*([+-])?\s*(\d*)\s*(H[a-z]|[EF]\d+)\s*")


def cls(basis: str, expr: str) -> DivisorClass:
    """Parse a class written as e.g. ``"5Hx + 2Hy - F1234 - 2F5678"``."""
    h1, h2, p = SYMBOLS[_check_basis(basis)]
    coeffs = [0] * RANK
    pos = 0
    expr = expr.strip()
    if expr == "0":
        return DivisorClass(tuple(coeffs), basis)
    while pos < len(expr):
        m = _TERM.match(expr, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {expr!r} at position {pos}")
        sign = -1 if m.group(1) == "-" else 1
        mult = int(m.group(2)) if m.group(2) else 1
        sym = m.group(3)
        if sym == h1:
            coeffs[0] += sign * mult
        elif sym == h2:
            coeffs[1] += sign * mult
        elif sym[0] == p:
            for digit in sym[1:]:
                i = int(digit)
                if not 1 <= i <= 8:
                    raise ValueError(f"point index {i} out of range in {expr!r}")
                coeffs[1 + i] += sign * mult
        else:
            raise BasisMismatchError(f"symbol {sym!r} does not belong to basis {basis}")
        pos = m.end()
    return DivisorClass(tuple(coeffs), basis)


def generator(basis: str, index: int) -> DivisorClass:
    coeffs = [0] * RANK
    coeffs[index] = 1
    return DivisorClass(tuple(coeffs), basis)


def generators(basis: str) -> list[DivisorClass]:
    return [generator(basis, i) for i in range(RANK)]


def intersect(c1: DivisorClass, c2: DivisorClass) -> int:
    c1._same(c2)
    return int(c1.vector() @ GRAM @ c2.vector())


def self_intersection(c: DivisorClass) -> int:
    return intersect(c, c)


def reflect(alpha: DivisorClass, c: DivisorClass) -> DivisorClass:
    """Reflection in a -2 class: ``c + (c.alpha) alpha``."""
    if self_intersection(alpha) != -2:
        raise InvalidRootError(f"{alpha} has self-intersection {self_intersection(alpha)}, not -2")
    return c + intersect(c, alpha) * alpha


def anticanonical(basis: str) -> DivisorClass:
    h1, h2, p = SYMBOLS[_check_basis(basis)]
    return cls(basis, f"2{h1} + 2{h2} - {p}12345678")


# --------------------------------------------------------------------------
# Root data


@dataclass(frozen=True)
class RootSystemData:
    basis: str
    surface_roots: tuple[DivisorClass, ...]
    symmetry_roots: tuple[DivisorClass, ...]
    surface_labels: tuple[str, ...] = ("d0", "d1", "d2", "d3", "d4", "d5")
    symmetry_labels: tuple[str, ...] = ("a0", "a1", "a2", "a3")


# weights of the surface roots in -K
D5_MARKS = (1, 1, 2, 2, 1, 1)
D5_EDGES = frozenset({(0, 2), (1, 2), (2, 3), (3, 4), (3, 5)})
A3_EDGES = frozenset({(0, 1), (1, 2), (2, 3), (0, 3)})
AFFINE_A3_CARTAN = (
    (2, -1, 0, -1),
    (-1, 2, -1, 0),
    (0, -1, 2, -1),
    (-1, 0, -1, 2),
)

STANDARD_ROOTS = RootSystemData(
    basis="FG",
    surface_roots=tuple(cls("FG", e) for e in (
        "E1 - E2", "E3 - E4", "Hf - E1 - E3", "Hg - E5 - E7", "E5 - E6", "E7 - E8",
    )),
    symmetry_roots=tuple(cls("FG", e) for e in (
        "Hg - E12", "Hf - E56", "Hg - E34", "Hf - E78",
    )),
)

# Surface roots of the recurrence surface with the preliminary symmetry roots
# obtained from the first (unadjusted) identification.
RECURRENCE_ROOTS_PRELIMINARY = RootSystemData(
    basis="XY",
    surface_roots=tuple(cls("XY", e) for e in (
        "Hx - F12", "Hx - F34", "Hy - F56", "F6 - F7", "F5 - F6", "F7 - F8",
    )),
    symmetry_roots=tuple(cls("XY", e) for e in (
        "F1 - F2", "Hy - F13", "F3 - F4", "2Hx + Hy - F135678",
    )),
)

RECURRENCE_ROOTS = RootSystemData(
    basis="XY",
    surface_roots=RECURRENCE_ROOTS_PRELIMINARY.surface_roots,
    symmetry_roots=tuple(cls("XY", e) for e in (
        "Hy - F23", "F13 - Hy", "Hy - F14", "2Hx + Hy - F135678",
    )),
)


def anticanonical_decomposition(roots: RootSystemData) -> DivisorClass:
    """Weighted sum d0 + d1 + 2d2 + 2d3 + d4 + d5 of the surface roots."""
    total = DivisorClass((0,) * RANK, roots.basis)
    for mark, d in zip(D5_MARKS, roots.surface_roots):
        total = total + mark * d
    return total


def gram_matrix(classes: Sequence[DivisorClass]) -> list[list[int]]:
    return [[intersect(a, b) for b in classes] for a in classes]


def dynkin_edges(classes: Sequence[DivisorClass]) -> set[tuple[int, int]]:
    """Pairs (i, j), i < j, joined in the Dynkin diagram (intersection 1)."""
    g = gram_matrix(classes)
    return {(i, j) for i in range(len(classes)) for j in range(i + 1, len(classes)) if g[i][j] == 1}


def cartan_matrix(roots: Sequence[DivisorClass]) -> tuple[tuple[int, ...], ...]:
    rows = []
    for a in roots:
        row = []
        for b in roots:
            num = 2 * intersect(a, b)
            den = intersect(b, b)
            if num % den:
                raise InvalidRootError("non-integral Cartan entry")
            row.append(num // den)
        rows.append(tuple(row))
    return tuple(rows)


# --------------------------------------------------------------------------
# Lattice maps


@dataclass(frozen=True)
class LatticeMap:
    """Integer matrix whose columns are the images of the source basis vectors."""

    matrix: np.ndarray
    source_basis: str
    target_basis: str
    name: str = ""

    def __post_init__(self):
        m = np.array(self.matrix, dtype=np.int64)
        if m.shape != (RANK, RANK):
            raise ValueError(f"lattice maps are {RANK}x{RANK}, got {m.shape}")
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        _check_basis(self.source_basis)
        _check_basis(self.target_basis)

    @classmethod
    def from_images(cls_, images: Sequence[DivisorClass], source_basis: str, name: str = "") -> "LatticeMap":
        targets = {c.basis for c in images}
        if len(targets) != 1:
            raise BasisMismatchError("images are expressed in different bases")
        return cls_(np.array([c.coeffs for c in images]).T, source_basis, targets.pop(), name)

    def __call__(self, c: DivisorClass) -> DivisorClass:
        if c.basis != self.source_basis:
            raise BasisMismatchError(f"map {self.name or '?'} acts on {self.source_basis}, got {c.basis}")
        return DivisorClass(tuple(int(v) for v in self.matrix @ c.vector()), self.target_basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticeMap):
            return NotImplemented
        return (self.source_basis == other.source_basis and self.target_basis == other.target_basis
                and bool(np.array_equal(self.matrix, other.matrix)))

    def __hash__(self):
        return hash((self.source_basis, self.target_basis, self.matrix.tobytes()))

    def is_identity(self) -> bool:
        return self.source_basis == self.target_basis and bool(np.array_equal(self.matrix, np.eye(RANK, dtype=np.int64)))

    def is_isometry(self) -> bool:
        """``intersect(Mc1, Mc2) == intersect(c1, c2)`` on every pair of generators."""
        return bool(np.array_equal(self.matrix.T @ GRAM @ self.matrix, GRAM))

    def inverse(self) -> "LatticeMap":
        """Exact inverse of an isometry: ``G M^T G`` (the Gram matrix is its own inverse)."""
        if not self.is_isometry():
            raise InvalidRootError(f"map {self.name or '?'} is not an isometry; no integral inverse formula")
        inv = GRAM @ self.matrix.T @ GRAM
        return LatticeMap(inv, self.target_basis, self.source_basis, f"({self.name})^-1" if self.name else "")

    def images(self) -> list[DivisorClass]:
        return [self(g) for g in generators(self.source_basis)]


def identity_map(basis: str) -> LatticeMap:
    return LatticeMap(np.eye(RANK, dtype=np.int64), basis, basis, "e")


def reflection_map(alpha: DivisorClass, name: str = "") -> LatticeMap:
    basis = alpha.basis
    return LatticeMap.from_images([reflect(alpha, g) for g in generators(basis)], basis,
                                  name or f"w[{alpha}]")


def compose(*maps: LatticeMap, order: str = "right") -> LatticeMap:
    """Compose lattice maps.

    ``order="right"`` applies the rightmost map first, so ``compose(a, b)`` is
    ``a o b``; ``order="left"`` applies the leftmost first.
    """
    if not maps:
        raise ValueError("compose needs at least one map")
    if order not in ("right", "left"):
        raise ValueError(f"order must be 'right' or 'left', got {order!r}")
    seq = list(reversed(maps)) if order == "right" else list(maps)
    out = seq[0]
    for m in seq[1:]:
        if m.source_basis != out.target_basis:
            raise BasisMismatchError(f"cannot apply {m.name or '?'} ({m.source_basis}) after "
                                     f"{out.name or '?'} ({out.target_basis})")
        out = LatticeMap(m.matrix @ out.matrix, out.source_basis, m.target_basis)
    names = [m.name or "?" for m in maps]
    return LatticeMap(out.matrix, out.source_basis, out.target_basis, "".join(names) if order == "right" else ";".join(names))


def conjugate(change: LatticeMap, m: LatticeMap) -> LatticeMap:
    """Express ``m`` in the target basis of the basis change: ``change o m o change^-1``."""
    return compose(change, m, change.inverse())


# --- extended affine Weyl group W(A3(1)) acting on the FG lattice

GENERATOR_NAMES = ("w0", "w1", "w2", "w3", "s1", "s2", "s3")


def _reflections(*exprs: str) -> list[LatticeMap]:
    return [reflection_map(cls("FG", e), f"w[{e}]") for e in exprs]


def weyl_generator_map(name: str) -> LatticeMap:
    """Lattice action of a generator of the extended affine Weyl group (FG basis).

    ``w_j`` is the reflection in the standard symmetry root ``a_j``; the
    diagram automorphisms are products of reflections in -2 classes.
    """
    if name in ("w0", "w1", "w2", "w3"):
        j = int(name[1])
        return reflection_map(STANDARD_ROOTS.symmetry_roots[j], name)
    if name == "s1":
        parts = _reflections("E1 - E7", "E2 - E8", "E3 - E5", "E4 - E6", "Hf - Hg")
    elif name == "s2":
        parts = _reflections("E1 - E3", "E2 - E4")
    elif name == "s3":
        parts = _reflections("E5 - E7", "E6 - E8")
    else:
        raise ValueError(f"unknown generator {name!r}; expected one of {GENERATOR_NAMES}")
    m = compose(*parts)
    return LatticeMap(m.matrix, "FG", "FG", name)


def word_map(word: Iterable[str], order: str = "right") -> LatticeMap:
    maps = [weyl_generator_map(g) for g in word]
    m = compose(*maps, order=order)
    return LatticeMap(m.matrix, "FG", "FG", "".join(word) if order == "right" else ";".join(word))


STANDARD_WORD = ("s3", "s2", "w3", "w1", "w2", "w0")
RECURRENCE_WORD = ("s3", "s2", "w1", "w2", "w0", "w1")


def translation_vector(m: LatticeMap, roots: Sequence[DivisorClass], delta: DivisorClass | None = None):
    """Return k with ``m(a_i) = a_i + k_i delta`` for every root, or None if m is not such a translation."""
    if delta is None:
        delta = anticanonical(m.source_basis)
    d = delta.vector()
    nz = int(np.flatnonzero(d)[0])
    out = []
    for a in roots:
        diff = m(a).vector() - a.vector()
        if diff[nz] % d[nz]:
            return None
        k = int(diff[nz] // d[nz])
        if not np.array_equal(diff, k * d):
            return None
        out.append(k)
    return tuple(out)


def root_permutation(m: LatticeMap, roots: Sequence[DivisorClass]) -> tuple[int, ...] | None:
    """Index permutation p with ``m(roots[i]) == roots[p[i]]``, or None."""
    perm = []
    for a in roots:
        img = m(a)
        hits = [j for j, b in enumerate(roots) if b == img]
        if len(hits) != 1:
            return None
        perm.append(hits[0])
    return tuple(perm)


# --- maps transcribed from the recurrence analysis


def phi_star() -> LatticeMap:
    """Push-forward of the full forward step of the recurrence, Pic(X) -> Pic(X_bar), XY basis."""
    images = [
        "5Hx + 2Hy - F1234 - 2F5678",
        "2Hx + Hy - F5678",
        "2Hx + Hy - F25678",
        "2Hx + Hy - F15678",
        "2Hx + Hy - F45678",
        "2Hx + Hy - F35678",
        "Hx - F8",
        "Hx - F7",
        "Hx - F6",
        "Hx - F5",
    ]
    return LatticeMap.from_images([cls("XY", e) for e in images], "XY", "phi*")


def basis_change_final() -> tuple[LatticeMap, LatticeMap]:
    """(XY -> FG, FG -> XY) coordinate changes identifying the recurrence surface with the standard one.

    Both directions are transcribed independently; callers can check that they
    are mutually inverse.
    """
    xy_in_fg = [
        "Hf + Hg - E5 - E6",
        "Hf + 2Hg - E1 - E3 - E5 - E6",
        "Hf + Hg - E1 - E5 - E6",
        "E2",
        "Hf + Hg - E3 - E5 - E6",
        "E4",
        "Hg - E6",
        "Hg - E5",
        "E7",
        "E8",
    ]
    fg_in_xy = [
        "2Hx + Hy - F1 - F3 - F5 - F6",
        "Hx + Hy - F1 - F3",
        "Hx - F1",
        "F2",
        "Hx - F3",
        "F4",
        "Hx + Hy - F1 - F3 - F6",
        "Hx + Hy - F1 - F3 - F5",
        "F7",
        "F8",
    ]
    fwd = LatticeMap.from_images([cls("FG", e) for e in xy_in_fg], "XY", "B")
    inv = LatticeMap.from_images([cls("XY", e) for e in fg_in_xy], "FG", "B^-1")
    return fwd, inv


def basis_change_preliminary() -> tuple[LatticeMap, LatticeMap]:
    """(XY -> FG, FG -> XY) for the first identification, before the w1 adjustment."""
    fg_in_xy = [
        "2Hx + Hy - F1356",
        "Hx",
        "Hx - F1",
        "F2",
        "Hx - F3",
        "F4",
        "Hx - F6",
        "Hx - F5",
        "F7",
        "F8",
    ]
    inv = LatticeMap.from_images([cls("XY", e) for e in fg_in_xy], "FG", "Bpre^-1")
    fwd = inv.inverse()
    return LatticeMap(fwd.matrix, "XY", "FG", "Bpre"), inv


# --------------------------------------------------------------------------
# Verification


def _exact(tr: ResidualTracker, item: str, ok: bool, **extra) -> bool:
    return tr.add(item, 0 if ok else 1, ok, **extra)


def check_root_data(roots: RootSystemData, name: str) -> VerificationReport:
    tr = ResidualTracker(f"lattice.roots.{name}")
    minus_k = anticanonical(roots.basis)
    _exact(tr, "-K.-K = 0", self_intersection(minus_k) == 0)
    for lab, d in zip(roots.surface_labels, roots.surface_roots):
        _exact(tr, f"{lab}^2 = -2", self_intersection(d) == -2)
        _exact(tr, f"-K.{lab} = 0", intersect(minus_k, d) == 0)
    for lab, a in zip(roots.symmetry_labels, roots.symmetry_roots):
        _exact(tr, f"{lab}^2 = -2", self_intersection(a) == -2)
        _exact(tr, f"{lab} orthogonal to surface roots",
               all(intersect(a, d) == 0 for d in roots.surface_roots))
    _exact(tr, "surface roots form D5(1)", dynkin_edges(roots.surface_roots) == set(D5_EDGES))
    _exact(tr, "symmetry Cartan matrix is affine A3", cartan_matrix(roots.symmetry_roots) == AFFINE_A3_CARTAN)
    _exact(tr, "d0+d1+2d2+2d3+d4+d5 = -K", anticanonical_decomposition(roots) == minus_k)
    total = roots.symmetry_roots[0]
    for a in roots.symmetry_roots[1:]:
        total = total + a
    _exact(tr, "a0+a1+a2+a3 = -K", total == minus_k)
    return tr.report()


def check_reflections() -> VerificationReport:
    tr = ResidualTracker("lattice.reflections")
    delta = anticanonical("FG")
    for name in GENERATOR_NAMES:
        m = weyl_generator_map(name)
        _exact(tr, f"{name} isometry", m.is_isometry())
        _exact(tr, f"{name} involution", compose(m, m).is_identity())
        _exact(tr, f"{name} fixes delta", m(delta) == delta)
    for j, a in enumerate(STANDARD_ROOTS.symmetry_roots):
        _exact(tr, f"w{j}(a{j}) = -a{j}", reflect(a, a) == -a)
    expected = {
        "s1": ((3, 2, 1, 0), (5, 4, 3, 2, 1, 0)),
        "s2": ((2, 1, 0, 3), (1, 0, 2, 3, 4, 5)),
        "s3": ((0, 3, 2, 1), (0, 1, 2, 3, 5, 4)),
    }
    for name, (sym, surf) in expected.items():
        m = weyl_generator_map(name)
        _exact(tr, f"{name} permutes symmetry roots", root_permutation(m, STANDARD_ROOTS.symmetry_roots) == sym)
        _exact(tr, f"{name} permutes surface roots", root_permutation(m, STANDARD_ROOTS.surface_roots) == surf)
    return tr.report()


def check_translations() -> VerificationReport:
    tr = ResidualTracker("lattice.translations")
    std = word_map(STANDARD_WORD)
    v = translation_vector(std, STANDARD_ROOTS.symmetry_roots)
    _exact(tr, "s3s2w3w1w2w0 translation = <-1,1,-1,1>", v == (-1, 1, -1, 1), vector=str(v))
    rec = word_map(RECURRENCE_WORD)
    v = translation_vector(rec, STANDARD_ROOTS.symmetry_roots)
    _exact(tr, "s3s2w1w2w0w1 translation = <0,-1,0,1>", v == (0, -1, 0, 1), vector=str(v))
    phi = phi_star()
    delta = anticanonical("XY")
    _exact(tr, "phi* isometry", phi.is_isometry())
    _exact(tr, "phi* fixes delta", phi(delta) == delta)
    v = translation_vector(phi, RECURRENCE_ROOTS_PRELIMINARY.symmetry_roots)
    _exact(tr, "phi* on preliminary symmetry roots = <0,-1,0,1>", v == (0, -1, 0, 1), vector=str(v))
    v = translation_vector(phi, RECURRENCE_ROOTS.symmetry_roots)
    _exact(tr, "phi* on final symmetry roots = <-1,1,-1,1>", v == (-1, 1, -1, 1), vector=str(v))
    perm = root_permutation(phi, RECURRENCE_ROOTS.surface_roots)
    _exact(tr, "phi* permutes surface roots", perm is not None, permutation=str(perm))
    return tr.report()


def check_basis_changes() -> VerificationReport:
    tr = ResidualTracker("lattice.basis_changes")
    for label, (fwd, inv) in (("final", basis_change_final()), ("preliminary", basis_change_preliminary())):
        _exact(tr, f"{label} forward isometry", fwd.is_isometry())
        _exact(tr, f"{label} inverse isometry", inv.is_isometry())
        _exact(tr, f"{label} forward o inverse = e", compose(fwd, inv).is_identity())
        _exact(tr, f"{label} inverse o forward = e", compose(inv, fwd).is_identity())
        _exact(tr, f"{label} maps -K to -K", fwd(anticanonical("XY")) == anticanonical("FG"))
        perm = surface_root_correspondence(fwd)
        _exact(tr, f"{label} surface roots correspond label-by-label", perm == tuple(range(6)),
               permutation=str(perm))
    fwd, _ = basis_change_final()
    ok = all(fwd(a) == b for a, b in zip(RECURRENCE_ROOTS.symmetry_roots, STANDARD_ROOTS.symmetry_roots))
    _exact(tr, "final change sends recurrence symmetry roots to standard ones", ok)
    pre, _ = basis_change_preliminary()
    ok = all(pre(a) == b for a, b in zip(RECURRENCE_ROOTS_PRELIMINARY.symmetry_roots, STANDARD_ROOTS.symmetry_roots))
    _exact(tr, "preliminary change sends preliminary roots to standard ones", ok)
    w1 = weyl_generator_map("w1")
    _exact(tr, "final change = w1 o preliminary change", compose(w1, pre) == LatticeMap(fwd.matrix, "XY", "FG"))
    return tr.report()


def surface_root_correspondence(change: LatticeMap) -> tuple[int, ...] | None:
    """Induced matching of recurrence surface roots onto standard surface roots (indices)."""
    perm = []
    for d in RECURRENCE_ROOTS.surface_roots:
        img = change(d)
        hits = [j for j, e in enumerate(STANDARD_ROOTS.surface_roots) if e == img]
        if len(hits) != 1:
            return None
        perm.append(hits[0])
    return tuple(perm)


def conjugation_identity_check() -> VerificationReport:
    """The recurrence step is the standard step up to the basis change, and w1-conjugate to it before adjustment."""
    tr = ResidualTracker("lattice.conjugation")
    phi = phi_star()
    std = word_map(STANDARD_WORD)
    rec = word_map(RECURRENCE_WORD)
    w1 = weyl_generator_map("w1")
    fwd, _ = basis_change_final()
    pre, _ = basis_change_preliminary()
    _exact(tr, "w1 s3 s2 = s3 s2 w3", word_map(("w1", "s3", "s2")) == word_map(("s3", "s2", "w3")))
    _exact(tr, "s3s2w1w2w0w1 = w1 o (s3s2w3w1w2w0) o w1", rec == compose(w1, std, w1))
    _exact(tr, "final: B o phi* o B^-1 = s3s2w3w1w2w0", conjugate(fwd, phi) == std)
    _exact(tr, "preliminary: Bpre o phi* o Bpre^-1 = s3s2w1w2w0w1", conjugate(pre, phi) == rec)
    _exact(tr, "preliminary: Bpre o phi* o Bpre^-1 = w1 o std o w1", conjugate(pre, phi) == compose(w1, std, w1))
    return tr.report()


def lattice_suite() -> list[VerificationReport]:
    return [
        check_root_data(STANDARD_ROOTS, "standard"),
        check_root_data(RECURRENCE_ROOTS, "recurrence"),
        check_root_data(RECURRENCE_ROOTS_PRELIMINARY, "recurrence_preliminary"),
        check_reflections(),
        check_translations(),
        check_basis_changes(),
        conjugation_identity_check(),
    ]
