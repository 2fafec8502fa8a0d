"""Classification bits for arbitrary pairs, runs over sequences, densities.

gamma(a, b) records which of the two half-product equations is solvable
after dividing a and b by their gcd: 0 for the plain equation, 1 for the
plus-one variant.  Two routes exist:

* gamma_direct reduces the pair and asks the constructive solver;
* gamma_fast short-circuits divisor pairs to 0 and otherwise reads the
  parity of the normalized modular inverse theta: with A = a/g odd the bit
  is 0 iff theta(b, a) is odd, with A even iff theta(a, b) is odd.

The two must agree everywhere (enforced by the acceptance suite).  On top
sit delta runs (the bit stream of consecutive sequence terms, with
alternation and minimal-period annotations), fixed-first-argument rows with
their proved periods, and the H/G density sweeps as exact rationals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import check_natural
from .errors import DomainError, InternalConsistencyError, ResourceLimitError
from .sequences import GENERATE_GUARD, SequenceSpec, generate
from .solver import which_equation

DENSITY_GUARD = 10**4


def theta(a: int, b: int) -> int:
    """Normalized inverse: the w in (0, b/g) with (a/g)*w == 1 (mod b/g).

    Requires b/gcd(a, b) > 1; a/g is automatically coprime to b/g.
    """
    check_natural(a, "a")
    check_natural(b, "b")
    if a < 1 or b < 1:
        raise DomainError("a and b must be >= 1")
    g = math.gcd(a, b)
    modulus = b // g
    if modulus == 1:
        raise DomainError(f"theta({a}, {b}) undefined: b/gcd = 1")
    return pow(a // g, -1, modulus)


def gamma_direct(a: int, b: int) -> int:
    """The bit via gcd reduction plus the constructive solver."""
    check_natural(a, "a")
    check_natural(b, "b")
    if a < 1 or b < 1:
        raise DomainError("a and b must be >= 1")
    g = math.gcd(a, b)
    return int(which_equation(a // g, b // g))


def gamma_fast(a: int, b: int) -> int:
    """The bit via divisibility short-circuit and theta parity."""
    check_natural(a, "a")
    check_natural(b, "b")
    if a < 1 or b < 1:
        raise DomainError("a and b must be >= 1")
    if b % a == 0 or a % b == 0:
        return 0
    g = math.gcd(a, b)
    if (a // g) % 2:
        t = pow((b // g) % (a // g), -1, a // g)  # theta(b, a)
    else:
        t = pow((a // g) % (b // g), -1, b // g)  # theta(a, b)
    return 0 if t % 2 else 1


@dataclass(frozen=True)
class DeltaRun:
    """Window of bits for consecutive terms of a sequence.

    bits[i] is the bit of (a_{start+i}, a_{start+i+1}); terms holds the
    count+1 window values.  alternates_from is the least sequence index from
    which the bits strictly alternate through the window end (None when not
    even the final two bits alternate); period is the least p <= count/2
    repeating across the window (None if absent).
    """

    spec: SequenceSpec
    start: int
    bits: tuple[int, ...]
    terms: tuple[int, ...]
    alternates_from: int | None
    period: int | None

    def to_dict(self, include_bits: bool = True) -> dict:
        payload = {
            "spec": self.spec.text(),
            "start": str(self.start),
            "count": str(len(self.bits)),
            "alternates_from": None if self.alternates_from is None else str(self.alternates_from),
            "period": None if self.period is None else str(self.period),
        }
        if include_bits:
            payload["bits"] = list(self.bits)
            payload["terms"] = [str(t) for t in self.terms]
        return payload

    def csv_rows(self) -> list[tuple[str, str, str, str]]:
        """Rows (n, a_n, a_{n+1}, gamma), one per bit."""
        return [
            (str(self.start + i), str(self.terms[i]), str(self.terms[i + 1]), str(bit))
            for i, bit in enumerate(self.bits)
        ]


def _alternation_start(bits: tuple[int, ...], start: int) -> int | None:
    if len(bits) < 2:
        return None
    j = len(bits) - 2
    last_equal = None
    while j >= 0:
        if bits[j] == bits[j + 1]:
            last_equal = j
            break
        j -= 1
    if last_equal is None:
        return start
    if last_equal == len(bits) - 2:
        return None
    return start + last_equal + 1


def _minimal_period(bits: tuple[int, ...]) -> int | None:
    n = len(bits)
    for p in range(1, n // 2 + 1):
        if all(bits[i] == bits[i + p] for i in range(n - p)):
            return p
    return None


def delta_run(spec: SequenceSpec, start: int = 1, count: int = 32) -> DeltaRun:
    """Bits of consecutive terms a_start .. a_{start+count}, annotated."""
    check_natural(start, "start")
    check_natural(count, "count")
    if start < 1:
        raise DomainError("start must be >= 1")
    if count < 1:
        raise DomainError("count must be >= 1")
    if count > GENERATE_GUARD:
        raise ResourceLimitError(f"count={count} exceeds the guard {GENERATE_GUARD}")
    terms = generate(spec, start + count)[start - 1 :]
    if any(t < 1 for t in terms):
        raise DomainError(
            f"sequence {spec.text()} has a term < 1 inside the window; bits undefined"
        )
    bits = tuple(gamma_fast(terms[i], terms[i + 1]) for i in range(count))
    return DeltaRun(
        spec,
        start,
        bits,
        tuple(terms),
        _alternation_start(bits, start),
        _minimal_period(bits),
    )


@dataclass(frozen=True)
class GammaRow:
    """Bits of (k, n) for n = 1..count with the proved period confirmed.

    period is k for odd k and 2k for even k; zeros/ones count the bits in
    one period.  detected_period is the least repeating window length found
    empirically (equals period when the window spans it twice).
    """

    k: int
    bits: tuple[int, ...]
    period: int
    zeros_per_period: int
    ones_per_period: int
    detected_period: int | None

    def to_dict(self, include_bits: bool = True) -> dict:
        payload = {
            "k": str(self.k),
            "count": str(len(self.bits)),
            "period": str(self.period),
            "zeros_per_period": str(self.zeros_per_period),
            "ones_per_period": str(self.ones_per_period),
            "detected_period": None if self.detected_period is None else str(self.detected_period),
        }
        if include_bits:
            payload["bits"] = list(self.bits)
        return payload

    def csv_rows(self) -> list[tuple[str, str]]:
        return [(str(n + 1), str(bit)) for n, bit in enumerate(self.bits)]


def gamma_row(k: int, count: int) -> GammaRow:
    """Row of bits with the second argument running from 1 to count.

    Requires count >= 2k so at least the odd-k period is seen twice.  The
    proved period (k odd, 2k even) is asserted against the window, as is the
    zero/one surplus (one for odd k, two for even k); violations raise
    InternalConsistencyError.
    """
    check_natural(k, "k")
    check_natural(count, "count")
    if k < 1:
        raise DomainError("k must be >= 1")
    if count < 2 * k:
        raise DomainError(f"count must be >= 2k = {2 * k} to observe the period twice")
    if count > GENERATE_GUARD:
        raise ResourceLimitError(f"count={count} exceeds the guard {GENERATE_GUARD}")
    bits = tuple(gamma_fast(k, n) for n in range(1, count + 1))
    period = k if k % 2 else 2 * k
    if any(bits[i] != bits[i + period] for i in range(len(bits) - period)):
        raise InternalConsistencyError(f"window of gamma({k}, .) not {period}-periodic")
    window = bits[:period]
    zeros = window.count(0)
    ones = window.count(1)
    expected_gap = 1 if k % 2 else 2
    if zeros - ones != expected_gap:
        raise InternalConsistencyError(
            f"zero/one surplus for k={k} is {zeros - ones}, expected {expected_gap}"
        )
    detected = _minimal_period(bits)
    if count >= 2 * period and detected != period:
        raise InternalConsistencyError(
            f"detected period {detected} for k={k} differs from the proved {period}"
        )
    return GammaRow(k, bits, period, zeros, ones, detected)


@dataclass(frozen=True)
class DensityReport:
    """Zero-bit fractions over pairs 1 <= a <= b <= x, exact rationals.

    h counts all pairs, g only coprime ones; the diagonal a = b is included
    in both as the set definition demands.
    """

    x: int
    total_pairs: int
    zero_pairs: int
    h: Fraction
    coprime_total: int
    coprime_zero: int
    g: Fraction

    def to_dict(self) -> dict:
        return {
            "x": str(self.x),
            "total_pairs": str(self.total_pairs),
            "zero_pairs": str(self.zero_pairs),
            "h": f"{self.h.numerator}/{self.h.denominator}",
            "h_decimal": decimal_string(self.h),
            "coprime_total": str(self.coprime_total),
            "coprime_zero": str(self.coprime_zero),
            "g": f"{self.g.numerator}/{self.g.denominator}",
            "g_decimal": decimal_string(self.g),
        }


def decimal_string(value: Fraction, places: int = 6) -> str:
    """Deterministic fixed-point rendering (round half up), no float involved."""
    scaled = value * 10**places
    whole = (scaled.numerator + scaled.denominator // 2) // scaled.denominator
    digits = str(whole).rjust(places + 1, "0")
    return f"{digits[:-places]}.{digits[-places:]}"


def density(x: int) -> DensityReport:
    """Exact H(x) and G(x) by a full quadratic sweep with gamma_fast.

    The sweep aggregates per a-row, so partitioning by rows and summing the
    per-row counts reproduces the same totals deterministically.
    """
    check_natural(x, "x")
    if x < 1:
        raise DomainError("x must be >= 1")
    if x > DENSITY_GUARD:
        raise ResourceLimitError(f"x={x} exceeds the guard {DENSITY_GUARD}")
    total = zero = cop_total = cop_zero = 0
    gcd = math.gcd
    for a in range(1, x + 1):
        row_total = row_zero = row_cop = row_cop_zero = 0
        for b in range(a, x + 1):
            bit = gamma_fast(a, b)
            row_total += 1
            if bit == 0:
                row_zero += 1
            if gcd(a, b) == 1:
                row_cop += 1
                if bit == 0:
                    row_cop_zero += 1
        total += row_total
        zero += row_zero
        cop_total += row_cop
        cop_zero += row_cop_zero
    return DensityReport(
        x,
        total,
        zero,
        Fraction(zero, total),
        cop_total,
        cop_zero,
        Fraction(cop_zero, cop_total),
    )
