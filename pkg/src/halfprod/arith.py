"""Exact integer helpers: gcd, extended gcd, modular inverse.

Values are plain Python ints, so every operation is arbitrary precision for
free.  Public entry points reject negatives; signs appear only in the Bezout
coefficients returned by ext_gcd.
"""

from __future__ import annotations

import math

from .errors import DomainError, NotInvertibleError


def check_natural(value: int, name: str = "value") -> int:
    """Reject anything that is not a nonnegative int."""
    if not isinstance(value, int) or isinstance(value, bool):
        raise DomainError(f"{name} must be an int, got {type(value).__name__}")
    if value < 0:
        raise DomainError(f"{name} must be nonnegative, got {value}")
    return value


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(a, 0) == a.  Rejects gcd(0, 0)."""
    check_natural(a, "a")
    check_natural(b, "b")
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b)."""
    check_natural(a, "a")
    check_natural(b, "b")
    if a == 0 and b == 0:
        raise DomainError("ext_gcd(0, 0) is undefined")
    r0, r1 = a, b
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return r0, s0, t0


def mod_inverse(a: int, m: int) -> int:
    """The unique w with 0 < w < m and a*w == 1 (mod m).  Requires m >= 2."""
    check_natural(a, "a")
    check_natural(m, "m")
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if math.gcd(a, m) != 1:
        raise NotInvertibleError(f"{a} is not invertible mod {m} (gcd={math.gcd(a, m)})")
    return pow(a % m, -1, m)
