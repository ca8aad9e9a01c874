from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class OutOfValidityRange(ValueError):
    """A route was asked for parameters outside the range where it holds."""


class ValuationError(ArithmeticError):
    """The generating-function denominator has the wrong leading behaviour."""


class NoStabilization(RuntimeError):
    """Interpolants kept changing up to the degree cap."""


class Route(str, enum.Enum):
    BRUTE = "brute"
    STIRLING = "stirling"
    # star-only routes
    BELL = "bell"
    REC = "rec"
    GENFUN = "genfun"
    SUM_RULE = "sum_rule"
    # non-star routes at roots of unity
    GENERAL = "general"
    CLOSED_S1 = "closed_s1"
    CLOSED_S2 = "closed_s2"
    CLOSED_S2_RSTIRLING = "closed_s2_rstirling"
    M1_DET = "m1_det"

    def __str__(self) -> str:
        return self.value


STAR_ROUTES = (Route.BRUTE, Route.STIRLING, Route.BELL, Route.REC,
               Route.GENFUN, Route.SUM_RULE)
PLAIN_ROUTES = (Route.BRUTE, Route.STIRLING, Route.GENERAL, Route.CLOSED_S1,
                Route.CLOSED_S2, Route.CLOSED_S2_RSTIRLING, Route.M1_DET)
GENERIC_Q_ROUTES = (Route.BRUTE, Route.STIRLING)


@dataclass(frozen=True)
class ZetaQuery:
    """Parameters of one zeta value.

    ``q is None`` means q = zeta_n with the same n as the summation bound;
    otherwise q is a rational number.
    """

    n: int
    m: int
    s: int
    q: Fraction | None = None
    star: bool = True

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.m < 0:
            raise ValueError("m must be nonnegative")
        if self.s == 0:
            raise ValueError("s must be a nonzero integer")
        if self.q is not None:
            object.__setattr__(self, "q", Fraction(self.q))

    @property
    def at_root_of_unity(self) -> bool:
        return self.q is None

    @property
    def q_label(self) -> str:
        return f"zeta_{self.n}" if self.q is None else str(self.q)


@dataclass(frozen=True)
class ValueRecord:
    query: ZetaQuery
    route: Route
    value: object
