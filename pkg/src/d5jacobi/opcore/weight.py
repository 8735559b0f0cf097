"""Parameters of the weight x^alpha (1-x)^beta exp(-s x) on [0, 1]."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from ..errors import DomainError
from .quadrature import make_context, to_mpf

DEFAULT_DIGITS = 60


def exact(value) -> Fraction:
    """Parse decimal strings, ints and Fractions exactly; binary floats are rejected."""
    if isinstance(value, float):
        raise TypeError("pass decimal strings or Fractions, not binary floats")
    return Fraction(value)


@dataclass(frozen=True)
class WeightParams:
    alpha: Fraction
    beta: Fraction
    s: Fraction
    precision: int = DEFAULT_DIGITS

    def __post_init__(self):
        for name in ("alpha", "beta", "s"):
            object.__setattr__(self, name, exact(getattr(self, name)))
        if self.alpha <= -1 or self.beta <= -1:
            raise DomainError(f"alpha, beta must exceed -1 (got {self.alpha}, {self.beta})")
        if self.s < 0:
            raise DomainError(f"s must be non-negative (got {self.s})")
        if self.precision < 10:
            raise DomainError("precision must be at least 10 digits")

    @classmethod
    def of(cls, alpha, beta, s, precision: int = DEFAULT_DIGITS) -> "WeightParams":
        return cls(exact(alpha), exact(beta), exact(s), int(precision))

    @cached_property
    def ctx(self):
        return make_context(self.precision)

    def mp(self, value):
        return to_mpf(self.ctx, value)

    @property
    def tolerance(self):
        """Pass threshold 10^(-p/2) for relative residuals."""
        return self.ctx.mpf(10) ** (-(self.precision // 2))

    def with_precision(self, digits: int) -> "WeightParams":
        return WeightParams(self.alpha, self.beta, self.s, digits)

    def require_ladder_domain(self) -> None:
        if self.alpha <= 0:
            raise DomainError("ladder quantities need alpha > 0: y^(alpha-1) is not integrable at 0 otherwise")
        if self.s <= 0:
            raise DomainError("ladder quantities and the x_n, y_n variables need s > 0")

    def weight(self, x):
        ctx = self.ctx
        x = self.mp(x) if not hasattr(x, "context") else x
        return x ** self.mp(self.alpha) * (1 - x) ** self.mp(self.beta) * ctx.exp(-self.mp(self.s) * x)

    def v_prime(self, x):
        """Derivative of v = -ln w: ``-alpha/x - beta/(x-1) + s``."""
        a, b, s = self.mp(self.alpha), self.mp(self.beta), self.mp(self.s)
        return -a / x - b / (x - 1) + s
