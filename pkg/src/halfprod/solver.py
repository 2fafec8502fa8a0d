"""Decide which of the two half-product equations a coprime pair satisfies.

For coprime a, b >= 1 exactly one of

    a*x + b*y     = (a-1)(b-1)/2        (PLAIN, tag 0)
    1 + a*x + b*y = (a-1)(b-1)/2        (PLUS_ONE, tag 1)

has a nonnegative integral solution (x, y), and that solution is unique.
Two independent routes are provided: a constructive one built on the modular
residue construction (x1 = k*a^-1 mod b decides via the sign of y1), and a
brute-force oracle that scans a full residue window of the smaller variable.
The two must agree everywhere; the test suite enforces this.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass, field

from .arith import check_natural
from .errors import DomainError, InternalConsistencyError, ResourceLimitError

#: Largest window the brute-force oracle will scan (min(a, b) values per
#: equation).  Override with the HALFPROD_MAX_SCAN environment variable.
DEFAULT_MAX_SCAN = 10**7

_MAX_SCAN_ENV = "HALFPROD_MAX_SCAN"


class EquationTag(enum.IntEnum):
    """Which of the paired equations is solvable; the 0/1 codes double as gamma bits."""

    PLAIN = 0
    PLUS_ONE = 1


PLAIN = EquationTag.PLAIN
PLUS_ONE = EquationTag.PLUS_ONE


@dataclass(frozen=True)
class SolutionRecord:
    """The unique nonnegative solution for a coprime pair, self-validating.

    Carries a, b and the half product redundantly so a record can be checked
    (and serialized) without recomputing anything.  Construction re-verifies
    the equation, coprimality, and the residue bounds x < b, y < a.
    """

    a: int
    b: int
    equation: EquationTag
    x: int
    y: int
    half_product: int = field(init=False)

    def __post_init__(self) -> None:
        for name in ("a", "b", "x", "y"):
            check_natural(getattr(self, name), name)
        if self.a < 1 or self.b < 1:
            raise DomainError("a and b must be >= 1")
        if math.gcd(self.a, self.b) != 1:
            raise DomainError(f"gcd({self.a}, {self.b}) != 1")
        k = half_product(self.a, self.b)
        object.__setattr__(self, "half_product", k)
        object.__setattr__(self, "equation", EquationTag(self.equation))
        if self.equation.value + self.a * self.x + self.b * self.y != k:
            raise InternalConsistencyError(
                f"record does not satisfy its equation: "
                f"{self.equation.value} + {self.a}*{self.x} + {self.b}*{self.y} != {k}"
            )
        if self.x >= self.b or self.y >= self.a:
            raise InternalConsistencyError(
                f"solution out of residue window: x={self.x} (< {self.b}?), y={self.y} (< {self.a}?)"
            )

    def swapped(self) -> "SolutionRecord":
        """The record for the pair (b, a); coordinates swap."""
        return SolutionRecord(self.b, self.a, self.equation, self.y, self.x)

    def to_dict(self) -> dict:
        """JSON-ready dict; unbounded integers as decimal strings, tag as 0/1."""
        return {
            "a": str(self.a),
            "b": str(self.b),
            "equation": int(self.equation),
            "x": str(self.x),
            "y": str(self.y),
            "half_product": str(self.half_product),
        }


def half_product(a: int, b: int) -> int:
    """(a-1)(b-1)/2, exact.  Coprimality makes the product even."""
    check_natural(a, "a")
    check_natural(b, "b")
    if a < 1 or b < 1:
        raise DomainError("a and b must be >= 1")
    if math.gcd(a, b) != 1:
        raise DomainError(f"gcd({a}, {b}) != 1")
    num = (a - 1) * (b - 1)
    if num % 2:  # both even would contradict coprimality
        raise InternalConsistencyError(f"({a}-1)({b}-1) is odd for a coprime pair")
    return num // 2


def _require_coprime_pair(a: int, b: int) -> None:
    check_natural(a, "a")
    check_natural(b, "b")
    if a < 1 or b < 1:
        raise DomainError("a and b must be >= 1")
    if math.gcd(a, b) != 1:
        raise DomainError(
            f"gcd({a}, {b}) = {math.gcd(a, b)} != 1; "
            "reduce by the gcd first (see the gamma operations)"
        )


def solve_constructive(a: int, b: int) -> SolutionRecord:
    """Produce the unique solution via the modular residue construction.

    x1 is the residue of k * a^-1 mod b in [0, b-1] and y1 = (k - a*x1)/b;
    x2, y2 are the analogues for k-1.  Internally x1 + x2 = b - 1 and
    y1 + y2 = -1, so exactly one branch has y >= 0; both identities are
    asserted on every call.
    """
    _require_coprime_pair(a, b)
    if a == 1 or b == 1:
        return SolutionRecord(a, b, PLAIN, 0, 0)
    k = half_product(a, b)
    inv = pow(a, -1, b)
    x1 = (k % b) * inv % b
    y1 = (k - a * x1) // b
    x2 = ((k - 1) % b) * inv % b
    y2 = (k - 1 - a * x2) // b
    if x1 + x2 != b - 1 or y1 + y2 != -1:
        raise InternalConsistencyError(
            f"residue construction identities failed for ({a}, {b}): "
            f"x1+x2={x1 + x2} (want {b - 1}), y1+y2={y1 + y2} (want -1)"
        )
    if (y1 >= 0) == (y2 >= 0):
        raise InternalConsistencyError(
            f"expected exactly one nonnegative branch for ({a}, {b}); got y1={y1}, y2={y2}"
        )
    if y1 >= 0:
        return SolutionRecord(a, b, PLAIN, x1, y1)
    return SolutionRecord(a, b, PLUS_ONE, x2, y2)


def max_scan_limit() -> int:
    """Current oracle scan guard (env override or the built-in default)."""
    raw = os.environ.get(_MAX_SCAN_ENV)
    if raw is None:
        return DEFAULT_MAX_SCAN
    try:
        value = int(raw)
    except ValueError:
        raise DomainError(f"{_MAX_SCAN_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise DomainError(f"{_MAX_SCAN_ENV} must be >= 1, got {value}")
    return value


def solve_oracle(a: int, b: int, max_scan: int | None = None) -> SolutionRecord:
    """Brute-force route: scan a full residue window for both equations.

    Scans the smaller of the two windows (y over [0, a-1] when a <= b, else
    x over [0, b-1]); any nonnegative solution lies inside because
    a*x, b*y <= k < ab/2.  Asserts that exactly one solution exists across
    both equations before returning it.
    """
    _require_coprime_pair(a, b)
    limit = max_scan if max_scan is not None else max_scan_limit()
    if min(a, b) > limit:
        raise ResourceLimitError(
            f"oracle scan window min({a}, {b}) exceeds the guard {limit}"
        )
    k = half_product(a, b)
    found: list[tuple[EquationTag, int, int]] = []
    for tag in (PLAIN, PLUS_ONE):
        rem = k - tag.value
        if a <= b:
            for y in range(a):
                if rem >= 0 and rem % a == 0:
                    found.append((tag, rem // a, y))
                rem -= b
        else:
            for x in range(b):
                if rem >= 0 and rem % b == 0:
                    found.append((tag, x, rem // b))
                rem -= a
    if len(found) != 1:
        raise InternalConsistencyError(
            f"expected exactly one solution for ({a}, {b}), scan found {found}"
        )
    tag, x, y = found[0]
    return SolutionRecord(a, b, tag, x, y)


def which_equation(a: int, b: int) -> EquationTag:
    """Tag of solve_constructive(a, b), computed without building the record."""
    _require_coprime_pair(a, b)
    if a == 1 or b == 1:
        return PLAIN
    k = (a - 1) * (b - 1) // 2
    x1 = (k % b) * pow(a, -1, b) % b
    return PLAIN if k - a * x1 >= 0 else PLUS_ONE
