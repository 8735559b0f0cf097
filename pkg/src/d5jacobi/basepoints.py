"""Indeterminacy checks for the base points of both surfaces.

Each half-map is written as a pair of bihomogeneous forms ``(N, D)`` in the
homogeneous coordinates ``([xn : xd], [yn : yd])`` of P1 x P1, so a point is a
base point exactly when both forms vanish there.

Infinitely near points are tested with probe curves instead of explicit
blow-up charts.  In a chart ``(u, e)`` whose exceptional coordinate is ``e``,
the pulled-back forms factor as ``e^kN * N~`` and ``e^kD * D~``.  Probing along
``(u* + c, eps)`` for generic ``c`` measures ``kN`` and ``kD``; probing along
``(u* + c eps, eps)`` detects whether the reduced forms vanish at ``u*``.  All
arithmetic is exact over the rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import VerificationError
from .report import ResidualTracker, VerificationReport


class EpsPoly:
    """Polynomial in a probe parameter eps with exact coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs):
        c = [Fraction(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.c = c

    @classmethod
    def lift(cls, v) -> "EpsPoly":
        return v if isinstance(v, EpsPoly) else cls([v])

    def __add__(self, other):
        o = EpsPoly.lift(other).c
        n = max(len(self.c), len(o))
        return EpsPoly([(self.c[i] if i < len(self.c) else 0) + (o[i] if i < len(o) else 0) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return EpsPoly([-v for v in self.c])

    def __sub__(self, other):
        return self + (-EpsPoly.lift(other))

    def __rsub__(self, other):
        return EpsPoly.lift(other) - self

    def __mul__(self, other):
        o = EpsPoly.lift(other).c
        if not self.c or not o:
            return EpsPoly([])
        out = [Fraction(0)] * (len(self.c) + len(o) - 1)
        for i, u in enumerate(self.c):
            if u:
                for j, v in enumerate(o):
                    out[i + j] += u * v
        return EpsPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = EpsPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def order(self) -> float:
        """Order of vanishing at eps = 0 (infinity for the zero polynomial)."""
        for i, v in enumerate(self.c):
            if v:
                return i
        return float("inf")

    def __eq__(self, other):
        return self.c == EpsPoly.lift(other).c

    def __repr__(self):
        return f"EpsPoly({[str(v) for v in self.c]})"


EPS = EpsPoly([0, 1])


# --------------------------------------------------------------------------
# Half-maps as bihomogeneous forms


def phi1_forms(xn, xd, yn, yd, p):
    """x_bar = (y - n)(y - n - beta) / (s^2 x y (y + alpha))."""
    n, al, be, s = p["n"], p["alpha"], p["beta"], p["s"]
    num = (yn - n * yd) * (yn - (n + be) * yd) * xd
    den = s * s * xn * yn * (yn + al * yd)
    return num, den


def phi2_forms(xn, xd, yn, yd, p):
    """y_under = -y - (alpha s^2 x^2 + s c x - d) / (1 - s x)^2 with c = 2n-1-alpha+beta+s, d = 2n+beta-1."""
    n, al, be, s = p["n"], p["alpha"], p["beta"], p["s"]
    c = 2 * n - 1 - al + be + s
    d = 2 * n + be - 1
    q = xd - s * xn
    num = -(yn * q * q + yd * (al * s * s * xn * xn + s * c * xn * xd - d * xd * xd))
    den = yd * q * q
    return num, den


def fflip_forms(fn, fd, gn, gd, p):
    """f_bar = 1 - f - a2/g - a0/(g + t)."""
    a0, a2, t = p["a"][0], p["a"][2], p["t"]
    num = (fd - fn) * gn * (gn + t * gd) - a2 * fd * gd * (gn + t * gd) - a0 * fd * gd * gn
    den = fd * gn * (gn + t * gd)
    return num, den


def gflip_forms(fn, fd, gn, gd, p):
    """g_bar = -t + a1/f + a3/(f - 1) - g."""
    a1, a3, t = p["a"][1], p["a"][3], p["t"]
    num = -t * fn * (fn - fd) * gd + a1 * fd * (fn - fd) * gd + a3 * fd * fn * gd - gn * fn * (fn - fd)
    den = gd * fn * (fn - fd)
    return num, den


HALF_MAPS = {"phi1": phi1_forms, "phi2": phi2_forms, "f-flip": fflip_forms, "g-flip": gflip_forms}


# --------------------------------------------------------------------------
# Base point data

Chart = Callable[[object, object, dict], tuple]


@dataclass(frozen=True)
class BasePoint:
    """A base point in a chart.

    ``chart`` maps chart coordinates ``(u, v)`` to homogeneous coordinates
    ``(xn, xd, yn, yd)``; ``coords`` gives the point as functions of the
    parameters.  ``exceptional`` is the index (0 or 1) of the exceptional
    coordinate for infinitely near points and None for proper points.
    """

    label: str
    half_map: str
    chart_name: str
    chart: Chart
    coords: Callable[[dict], tuple]
    coord_text: str
    exceptional: int | None = None
    predecessor: str | None = None


def _rec_points() -> list[BasePoint]:
    xy = lambda u, v, p: (u, 1, v, 1)
    Xy = lambda u, v, p: (1, u, v, 1)
    XY = lambda u, v, p: (1, u, 1, v)
    # q6 chart: X = s + u5, Y = u5 v5
    c6 = lambda u, v, p: (1, p["s"] + u, 1, u * v)
    # q7 chart: u5 = U6 V6, v5 = V6
    c7 = lambda U, V, p: c6(U * V, V, p)
    # q8 chart: U6 = U7 V7 - s^3, V6 = V7
    c8 = lambda U, V, p: c7(U * V - p["s"] ** 3, V, p)
    return [
        BasePoint("q1", "phi1", "(x, y)", xy, lambda p: (0, p["n"]), "x = 0, y = n"),
        BasePoint("q2", "phi1", "(x, y)", xy, lambda p: (0, p["n"] + p["beta"]), "x = 0, y = n + beta"),
        BasePoint("q3", "phi1", "(X = 1/x, y)", Xy, lambda p: (0, 0), "X = 0, y = 0"),
        BasePoint("q4", "phi1", "(X = 1/x, y)", Xy, lambda p: (0, -p["alpha"]), "X = 0, y = -alpha"),
        BasePoint("q5", "phi2", "(X = 1/x, Y = 1/y)", XY, lambda p: (p["s"], 0), "X = s, Y = 0"),
        BasePoint("q6", "phi2", "(u5 = X - s, v5 = Y/(X - s))", c6, lambda p: (0, 0),
                      "u5 = 0, v5 = 0", exceptional=0, predecessor="q5"),
        BasePoint("q7", "phi2", "(U6 = u5/v5, V6 = v5)", c7, lambda p: (-p["s"] ** 3, 0),
                      "U6 = -s^3, V6 = 0", exceptional=1, predecessor="q6"),
        BasePoint("q8", "phi2", "(U7 = (U6 + s^3)/V6, V7 = V6)", c8,
                      lambda p: (p["s"] ** 4 * (1 - 2 * p["n"] + p["s"] - p["alpha"] - p["beta"]), 0),
                      "U7 = s^4 (1 - 2n + s - alpha - beta), V7 = 0", exceptional=1, predecessor="q7"),
    ]


def _std_points() -> list[BasePoint]:
    Fg = lambda u, v, p: (1, u, v, 1)
    fG = lambda u, v, p: (u, 1, 1, v)
    # p2: u1 = 1/f, v1 = f (g + t)  =>  g = v1 u1 - t
    c2 = lambda u, v, p: (1, u, v * u - p["t"], 1)
    # p4: u3 = 1/f, v3 = f g  =>  g = v3 u3
    c4 = lambda u, v, p: (1, u, v * u, 1)
    # p6: U5 = f g, V5 = 1/g  =>  f = U5 V5
    c6 = lambda U, V, p: (U * V, 1, 1, V)
    # p8: U7 = (f - 1) g, V7 = 1/g  =>  f = 1 + U7 V7
    c8 = lambda U, V, p: (1 + U * V, 1, 1, V)
    return [
        BasePoint("p1", "f-flip", "(F = 1/f, g)", Fg, lambda p: (0, -p["t"]), "F = 0, g = -t"),
        BasePoint("p2", "f-flip", "(u1 = 1/f, v1 = f (g + t))", c2, lambda p: (0, -p["a"][0]),
                      "u1 = 0, v1 = -a0", exceptional=0, predecessor="p1"),
        BasePoint("p3", "f-flip", "(F = 1/f, g)", Fg, lambda p: (0, 0), "F = 0, g = 0"),
        BasePoint("p4", "f-flip", "(u3 = 1/f, v3 = f g)", c4, lambda p: (0, -p["a"][2]),
                      "u3 = 0, v3 = -a2", exceptional=0, predecessor="p3"),
        BasePoint("p5", "g-flip", "(f, G = 1/g)", fG, lambda p: (0, 0), "f = 0, G = 0"),
        BasePoint("p6", "g-flip", "(U5 = f g, V5 = 1/g)", c6, lambda p: (p["a"][1], 0),
                      "U5 = a1, V5 = 0", exceptional=1, predecessor="p5"),
        BasePoint("p7", "g-flip", "(f, G = 1/g)", fG, lambda p: (1, 0), "f = 1, G = 0"),
        BasePoint("p8", "g-flip", "(U7 = (f - 1) g, V7 = 1/g)", c8, lambda p: (p["a"][3], 0),
                      "U7 = a3, V7 = 0", exceptional=1, predecessor="p7"),
    ]


BASE_POINTS = {"recurrence": _rec_points(), "standard": _std_points()}

_GENERIC_OFFSETS = (Fraction(3, 7), Fraction(-5, 11), Fraction(13, 4))
_PROBE_SLOPE = Fraction(2, 3)
_CONTROL_SHIFT = Fraction(1, 7919)


def recurrence_params(alpha, beta, s, n) -> dict:
    return {"alpha": Fraction(alpha), "beta": Fraction(beta), "s": Fraction(s), "n": Fraction(n)}


def standard_params(a, t) -> dict:
    return {"a": tuple(Fraction(v) for v in a), "t": Fraction(t)}


def standard_params_for_recurrence(alpha, beta, s, n) -> dict:
    """Standard parameters matched to the recurrence: a = (n + beta, -n, n + alpha, 1 - n - alpha - beta), t = -s."""
    al, be, n = Fraction(alpha), Fraction(beta), Fraction(n)
    return standard_params((n + be, -n, n + al, 1 - n - al - be), -Fraction(s))


def _forms_at(bp: BasePoint, u, v, params):
    return HALF_MAPS[bp.half_map](*bp.chart(u, v, params), params)


def is_proper_base_point(bp: BasePoint, point, params) -> bool:
    num, den = _forms_at(bp, Fraction(point[0]), Fraction(point[1]), params)
    return num == 0 and den == 0


def probe_orders(bp: BasePoint, point, params) -> dict:
    """Vanishing orders of (N, D) along generic and point probes for an infinitely near point."""
    e = bp.exceptional
    other = 1 - e
    base = [Fraction(point[0]), Fraction(point[1])]

    def along(coord):
        args = [None, None]
        args[e] = EPS
        args[other] = coord
        num, den = _forms_at(bp, args[0], args[1], params)
        return EpsPoly.lift(num).order(), EpsPoly.lift(den).order()

    generic = [along(EpsPoly([base[other] + c])) for c in _GENERIC_OFFSETS]
    k_num = min(g[0] for g in generic)
    k_den = min(g[1] for g in generic)
    o_num, o_den = along(base[other] + _PROBE_SLOPE * EPS)
    return {"k_num": k_num, "k_den": k_den, "o_num": o_num, "o_den": o_den}


def is_near_base_point(bp: BasePoint, point, params) -> tuple[bool, dict]:
    orders = probe_orders(bp, point, params)
    k = min(orders["k_num"], orders["k_den"])
    if k == float("inf"):
        raise VerificationError(f"{bp.label}: map vanishes identically on the exceptional chart {bp.chart_name}")
    return orders["o_num"] > k and orders["o_den"] > k, orders


def check_point(bp: BasePoint, params) -> tuple[bool, dict]:
    """Is the stated point a base point, and is a shifted copy of it not one (control)?"""
    point = bp.coords(params)
    if bp.exceptional is None:
        ok = is_proper_base_point(bp, point, params)
        shifted = (point[0], Fraction(point[1]) + _CONTROL_SHIFT)
        control = is_proper_base_point(bp, shifted, params)
        info = {}
    else:
        ok, info = is_near_base_point(bp, point, params)
        shifted = list(point)
        shifted[1 - bp.exceptional] = Fraction(shifted[1 - bp.exceptional]) + _CONTROL_SHIFT
        control, _ = is_near_base_point(bp, shifted, params)
    return ok and not control, {"base_point": ok, "shifted_is_base_point": control, **info}


def verify_base_points(which: str, params: dict) -> VerificationReport:
    """Check every listed base point of one surface at exact rational parameters."""
    if which not in BASE_POINTS:
        raise ValueError(f"surface must be one of {sorted(BASE_POINTS)}")
    tr = ResidualTracker(f"basepoints.{which}")
    for bp in BASE_POINTS[which]:
        ok, info = check_point(bp, params)
        extra = {k: (str(v) if not isinstance(v, (bool, str)) else v) for k, v in info.items()}
        point = bp.coords(params)
        tr.add(f"{bp.label} {bp.coord_text}", 0 if ok else 1, ok, chart=bp.chart_name,
               value=f"({point[0]}, {point[1]})", map=bp.half_map, **extra)
    return tr.report()


def base_points_suite(alpha, beta, s, n_values) -> list[VerificationReport]:
    reports = []
    for n in n_values:
        rec = recurrence_params(alpha, beta, s, n)
        tag = f"[alpha={rec['alpha']},beta={rec['beta']},s={rec['s']},n={n}]"
        rp = verify_base_points("recurrence", rec)
        sp = verify_base_points("standard", standard_params_for_recurrence(alpha, beta, s, n))
        rp.check += tag
        sp.check += tag
        reports += [rp, sp]
    return reports
