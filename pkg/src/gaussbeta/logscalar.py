"""Positive reals stored by their natural logarithm."""

from __future__ import annotations

import math
from dataclasses import dataclass

from gaussbeta.errors import DomainError

# exp() of anything beyond this is refused; keeps clear of float overflow.
MAX_LINEAR_LOG = 700.0


@dataclass(frozen=True, order=True)
class LogScalar:
    """A strictly positive quantity ``exp(log_value)``.

    Products and powers act on the logarithm, so values such as ``e**(8*n*g)``
    never pass through a float.
    """

    log_value: float

    def __post_init__(self):
        if math.isnan(self.log_value):
            raise DomainError("LogScalar cannot hold NaN")

    @classmethod
    def from_value(cls, value: float) -> LogScalar:
        if not value > 0:
            raise DomainError(f"LogScalar requires a positive value, got {value!r}")
        return cls(math.log(value))

    @property
    def value(self) -> float:
        if abs(self.log_value) > MAX_LINEAR_LOG:
            raise DomainError(
                f"refusing to materialize exp({self.log_value:.6g}); "
                "keep this quantity in log domain"
            )
        return math.exp(self.log_value)

    def is_finite(self) -> bool:
        return math.isfinite(self.log_value)

    def __mul__(self, other: LogScalar | float) -> LogScalar:
        if not isinstance(other, LogScalar):
            other = LogScalar.from_value(other)
        return LogScalar(self.log_value + other.log_value)

    __rmul__ = __mul__

    def __truediv__(self, other: LogScalar | float) -> LogScalar:
        if not isinstance(other, LogScalar):
            other = LogScalar.from_value(other)
        return LogScalar(self.log_value - other.log_value)

    def __rtruediv__(self, other: float) -> LogScalar:
        return LogScalar.from_value(other) / self

    def __pow__(self, exponent: float) -> LogScalar:
        return LogScalar(self.log_value * exponent)

    def reciprocal(self) -> LogScalar:
        return LogScalar(-self.log_value)

    @staticmethod
    def min(*items: LogScalar) -> LogScalar:
        return LogScalar(min(item.log_value for item in items))

    def __repr__(self):
        return f"LogScalar(log_value={self.log_value!r})"
