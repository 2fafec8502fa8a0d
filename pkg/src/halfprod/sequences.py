"""Exact generators for every sequence the toolkit works with.

Conventions, fixed once and used everywhere:

* Fibonacci: F0 = 0, F1 = 1; backward extension F(-1) = 1, F(-2) = -1 is
  available to the closed-form layer only.
* Fibonacci-like t(u,v): t1 = u, t2 = v, then the Fibonacci recurrence;
  closed form t_n = F(n-2)*u + F(n-1)*v (hence the F(-1) = 1 convention).
* Balancing B: B1 = 1, B2 = 6, B_n = 6B_{n-1} - B_{n-2}; B0 = 0 extends the
  recurrence backwards.
* Lucas-balancing C: C1 = 3, C2 = 17, same recurrence; C0 = 1 (consistent
  with C_n^2 = 8*B_n^2 + 1 at n = 0).
* Auxiliary b: b1 = 0, b2 = 2, b_n = 6b_{n-1} - b_{n-2} + 2; b0 = 0.  Kept
  on the integer recurrence, never the irrational closed form.

Everything is exact; no floats anywhere.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .arith import check_natural
from .errors import (
    DomainError,
    InternalConsistencyError,
    ResourceLimitError,
    SpecSyntaxError,
)

FIB_INDEX_GUARD = 10**6
BALANCING_INDEX_GUARD = 10**4
CUBE_SUM_GUARD = 10**3
GENERATE_GUARD = 10**5


class _Rollout:
    """Append-only cache for a linear rollout.

    Entries never change once written, so readers may index without the
    lock; the lock only serializes extension.
    """

    def __init__(self, seed: list[int], step: Callable[[list[int]], int]):
        self._terms = list(seed)
        self._step = step
        self._lock = threading.Lock()

    def __getitem__(self, n: int) -> int:
        terms = self._terms
        if n < len(terms):
            return terms[n]
        with self._lock:
            while len(self._terms) <= n:
                self._terms.append(self._step(self._terms))
        return self._terms[n]


_fib_table = _Rollout([0, 1], lambda t: t[-1] + t[-2])
_balancing_table = _Rollout([0, 1], lambda t: 6 * t[-1] - t[-2])
_lucas_balancing_table = _Rollout([1, 3], lambda t: 6 * t[-1] - t[-2])
_b_aux_table = _Rollout([0, 0], lambda t: 6 * t[-1] - t[-2] + 2)


def _check_index(n: int, guard: int, name: str) -> int:
    check_natural(n, name)
    if n > guard:
        raise ResourceLimitError(f"{name}={n} exceeds the guard {guard}")
    return n


def fib(n: int) -> int:
    """F_n for n >= 0."""
    return _fib_table[_check_index(n, FIB_INDEX_GUARD, "n")]


def _fib_back(n: int) -> int:
    """Fibonacci with the two fixed backward extensions F(-1)=1, F(-2)=-1."""
    if n >= 0:
        return fib(n)
    if n == -1:
        return 1
    if n == -2:
        return -1
    raise DomainError(f"Fibonacci index {n} below the supported extension")


@dataclass(frozen=True)
class FibLikePair:
    """Seed pair (u, v) of a Fibonacci-like sequence; must be coprime."""

    u: int
    v: int

    def __post_init__(self) -> None:
        check_natural(self.u, "u")
        check_natural(self.v, "v")
        if self.u < 1 or self.v < 1:
            raise DomainError("seeds must be >= 1")
        if math.gcd(self.u, self.v) != 1:
            raise DomainError(f"gcd({self.u}, {self.v}) != 1")


def _as_pair(pair) -> FibLikePair:
    if isinstance(pair, FibLikePair):
        return pair
    u, v = pair
    return FibLikePair(u, v)


def fiblike(pair, n: int) -> int:
    """n-th term of the Fibonacci-like sequence seeded by the pair, n >= 1."""
    p = _as_pair(pair)
    check_natural(n, "n")
    if n < 1:
        raise DomainError("fiblike index starts at 1")
    return _fib_back(n - 2) * p.u + _fib_back(n - 1) * p.v


def balancing(n: int) -> int:
    """B_n for n >= 0 (B0 = 0)."""
    return _balancing_table[_check_index(n, BALANCING_INDEX_GUARD, "n")]


def lucas_balancing(n: int) -> int:
    """C_n for n >= 0 (C0 = 1)."""
    return _lucas_balancing_table[_check_index(n, BALANCING_INDEX_GUARD, "n")]


def b_aux(m: int) -> int:
    """b_m for m >= 0 (b0 = b1 = 0), via the integer recurrence."""
    return _b_aux_table[_check_index(m, BALANCING_INDEX_GUARD, "m")]


def fib_cube_sum(m: int) -> int:
    """Sum of F_i^3 for i = 1..m, computed twice and cross-checked.

    The direct summation and the quarter-of-F(3m+3)+F(3m) closed form must
    agree exactly; a mismatch raises InternalConsistencyError.
    """
    _check_index(m, CUBE_SUM_GUARD, "m")
    if m < 1:
        raise DomainError("m must be >= 1")
    direct = sum(fib(i) ** 3 for i in range(1, m + 1))
    closed = (
        Fraction(fib(3 * m + 3) + fib(3 * m), 4)
        - fib(m + 1) ** 3
        - fib(m) ** 3
        + Fraction(1, 2)
    )
    if closed != direct:
        raise InternalConsistencyError(
            f"cube-sum closed form disagrees with direct sum at m={m}: {closed} != {direct}"
        )
    return direct


def fib_cube_alt_sum(m: int) -> int:
    """Alternating sum of (-1)^i * F_i^3 for i = 1..m, dual-computed.

    May be negative.  The sign pattern of the closed form is validated
    against the direct signed summation on every call.
    """
    _check_index(m, CUBE_SUM_GUARD, "m")
    if m < 1:
        raise DomainError("m must be >= 1")
    direct = sum((-1) ** i * fib(i) ** 3 for i in range(1, m + 1))
    s = (-1) ** m
    closed = (
        Fraction(s * fib(3 * m + 3) - s * fib(3 * m), 4)
        - s * fib(m + 1) ** 3
        + s * fib(m) ** 3
        + Fraction(1, 2)
    )
    if closed != direct:
        raise InternalConsistencyError(
            f"alternating cube-sum closed form disagrees at m={m}: {closed} != {direct}"
        )
    return direct


# --- uniform sequence specs -------------------------------------------------

_SIMPLE_KINDS = ("fib", "balancing", "lucasbal", "baux")
_TWO_PARAM_KINDS = ("fiblike", "arith", "geom")


@dataclass(frozen=True)
class SequenceSpec:
    """Uniform description of a positive integer sequence, 1-indexed.

    Canonical text forms: ``fib``, ``fiblike:u,v``, ``power:k``,
    ``arith:a,r``, ``balancing``, ``lucasbal``, ``baux``, ``geom:a,r``,
    ``custom:t1,t2,..;c1,c2,..;d`` (initial terms; recurrence coefficients
    most-recent-first; additive constant d).
    """

    kind: str
    params: tuple[int, ...] = ()
    initial: tuple[int, ...] = ()
    coeffs: tuple[int, ...] = ()
    const: int = 0

    def __post_init__(self) -> None:
        kind = self.kind
        if kind in _SIMPLE_KINDS:
            if self.params or self.initial or self.coeffs or self.const:
                raise DomainError(f"{kind} takes no parameters")
        elif kind == "power":
            if len(self.params) != 1:
                raise DomainError("power needs exactly one parameter k")
            if self.params[0] < 1:
                raise DomainError("power exponent must be >= 1")
        elif kind in _TWO_PARAM_KINDS:
            if len(self.params) != 2:
                raise DomainError(f"{kind} needs exactly two parameters")
            if any(p < 1 for p in self.params):
                raise DomainError(f"{kind} parameters must be >= 1")
            if kind == "fiblike":
                FibLikePair(*self.params)
        elif kind == "custom":
            if not self.coeffs:
                raise DomainError("custom recurrence needs at least one coefficient")
            if len(self.initial) != len(self.coeffs):
                raise DomainError(
                    "custom needs as many initial terms as recurrence coefficients"
                )
            if any(t < 1 for t in self.initial) or any(c < 1 for c in self.coeffs):
                raise DomainError("custom initial terms and coefficients must be >= 1")
        else:
            raise DomainError(f"unknown sequence kind {kind!r}")

    # constructors mirroring the text grammar
    @classmethod
    def fibonacci(cls) -> "SequenceSpec":
        return cls("fib")

    @classmethod
    def fiblike(cls, u: int, v: int) -> "SequenceSpec":
        return cls("fiblike", (u, v))

    @classmethod
    def power(cls, k: int) -> "SequenceSpec":
        return cls("power", (k,))

    @classmethod
    def arith(cls, a: int, r: int) -> "SequenceSpec":
        return cls("arith", (a, r))

    @classmethod
    def balancing(cls) -> "SequenceSpec":
        return cls("balancing")

    @classmethod
    def lucas_balancing(cls) -> "SequenceSpec":
        return cls("lucasbal")

    @classmethod
    def b_aux(cls) -> "SequenceSpec":
        return cls("baux")

    @classmethod
    def geometric(cls, a: int, r: int) -> "SequenceSpec":
        return cls("geom", (a, r))

    @classmethod
    def custom(cls, initial, coeffs, const: int = 0) -> "SequenceSpec":
        return cls("custom", (), tuple(initial), tuple(coeffs), const)

    def text(self) -> str:
        """Canonical text form; parse() round-trips it."""
        if self.kind in _SIMPLE_KINDS:
            return self.kind
        if self.kind == "custom":
            return "custom:{};{};{}".format(
                ",".join(map(str, self.initial)),
                ",".join(map(str, self.coeffs)),
                self.const,
            )
        return "{}:{}".format(self.kind, ",".join(map(str, self.params)))

    @classmethod
    def parse(cls, text: str) -> "SequenceSpec":
        """Parse the canonical text form; SpecSyntaxError carries the grammar."""
        grammar = (
            "expected one of: fib | fiblike:u,v | power:k | arith:a,r | "
            "balancing | lucasbal | baux | geom:a,r | custom:t1,..;c1,..;d"
        )

        def ints(chunk: str) -> tuple[int, ...]:
            try:
                return tuple(int(p) for p in chunk.split(","))
            except ValueError:
                raise SpecSyntaxError(f"cannot parse {text!r}: {grammar}") from None

        head, sep, rest = text.strip().partition(":")
        if head in _SIMPLE_KINDS:
            if sep:
                raise SpecSyntaxError(f"{head} takes no arguments: {grammar}")
            return cls(head)
        if head == "power":
            vals = ints(rest)
            if len(vals) != 1:
                raise SpecSyntaxError(f"power takes one argument: {grammar}")
            return cls("power", vals)
        if head in _TWO_PARAM_KINDS:
            vals = ints(rest)
            if len(vals) != 2:
                raise SpecSyntaxError(f"{head} takes two arguments: {grammar}")
            return cls(head, vals)
        if head == "custom":
            parts = rest.split(";")
            if len(parts) != 3:
                raise SpecSyntaxError(f"custom needs three ;-separated groups: {grammar}")
            const = ints(parts[2])
            if len(const) != 1:
                raise SpecSyntaxError(f"custom additive constant must be a single integer: {grammar}")
            return cls.custom(ints(parts[0]), ints(parts[1]), const[0])
        raise SpecSyntaxError(f"unknown sequence kind {head!r}: {grammar}")


def generate(spec: SequenceSpec, count: int) -> list[int]:
    """First `count` terms of the sequence (indices 1..count)."""
    check_natural(count, "count")
    if count > GENERATE_GUARD:
        raise ResourceLimitError(f"count={count} exceeds the guard {GENERATE_GUARD}")
    kind = spec.kind
    if kind == "fib":
        return [fib(n) for n in range(1, count + 1)]
    if kind == "fiblike":
        u, v = spec.params
        terms = [u, v]
        while len(terms) < count:
            terms.append(terms[-1] + terms[-2])
        return terms[:count]
    if kind == "power":
        (k,) = spec.params
        return [n**k for n in range(1, count + 1)]
    if kind == "arith":
        a, r = spec.params
        return [a + (n - 1) * r for n in range(1, count + 1)]
    if kind == "balancing":
        return [balancing(n) for n in range(1, count + 1)]
    if kind == "lucasbal":
        return [lucas_balancing(n) for n in range(1, count + 1)]
    if kind == "baux":
        return [b_aux(m) for m in range(1, count + 1)]
    if kind == "geom":
        a, r = spec.params
        terms = []
        t = a
        for _ in range(count):
            terms.append(t)
            t *= r
        return terms
    if kind == "custom":
        terms = list(spec.initial)
        while len(terms) < count:
            nxt = sum(c * terms[-1 - i] for i, c in enumerate(spec.coeffs)) + spec.const
            if nxt < 0:
                raise DomainError(
                    f"custom recurrence went negative at index {len(terms) + 1}: {nxt}"
                )
            terms.append(nxt)
        return terms[:count]
    raise DomainError(f"unknown sequence kind {kind!r}")
