"""Circular-word arithmetic in an ordinary integer base.

Executable cross-check of the classical picture that motivates the
Fibonacci construction: length-n circular words over digits 0..b-1, added
digit-wise with the final carry wrapped around to the other end, form the
cyclic group of integers modulo b^n - 1.  The period of the base-b
expansion of 1/q (for gcd(b, q) = 1) is the distinguished word whose first
q multiples are carry-free: in base 10 with q = 7 this is 142857.

Unlike the Fibonacci modules, words here are written most significant
digit first, matching everyday decimal notation, so index 0 is the
*largest* power of the base.  Carries therefore propagate toward index 0
and the final carry wraps to the rightmost digit.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidWordError


@dataclass(frozen=True)
class BaseBWord:
    """Fixed-length digit word in base b, most significant digit first."""

    digits: tuple[int, ...]
    base: int

    def __post_init__(self):
        if self.base < 2:
            raise InvalidWordError(f"base must be > 1, got {self.base}")
        if len(self.digits) < 1:
            raise InvalidWordError("word must have length >= 1")
        if any(d < 0 or d >= self.base for d in self.digits):
            raise InvalidWordError(f"digits out of range for base {self.base}: {self.digits}")

    def __str__(self) -> str:
        if self.base <= 10:
            return "".join(str(d) for d in self.digits)
        return ",".join(str(d) for d in self.digits)

    def value(self) -> int:
        out = 0
        for d in self.digits:
            out = out * self.base + d
        return out


def word_from_value(value: int, base: int, length: int) -> BaseBWord:
    """Fixed-width base-b digits of a value, leading zeros kept."""
    if value < 0 or value >= base**length:
        raise InvalidWordError(f"{value} does not fit in {length} base-{base} digits")
    digits = []
    for _ in range(length):
        digits.append(value % base)
        value //= base
    return BaseBWord(tuple(reversed(digits)), base)


def parse_base_b(text: str, base: int) -> BaseBWord:
    if "," in text:
        return BaseBWord(tuple(int(p) for p in text.split(",")), base)
    return BaseBWord(tuple(int(c) for c in text), base)


def circ_add_base_b(u: BaseBWord, v: BaseBWord) -> BaseBWord:
    """Digit-wise addition with the final carry wrapped to the right end.

    The all-(b-1) word is the same class as the all-zero word and is
    canonicalized to it.
    """
    if u.base != v.base:
        raise InvalidWordError(f"base mismatch: {u.base} vs {v.base}")
    if len(u.digits) != len(v.digits):
        raise InvalidWordError(f"length mismatch: {len(u.digits)} vs {len(v.digits)}")
    b = u.base
    n = len(u.digits)
    digits = [x + y for x, y in zip(u.digits, v.digits)]
    for _ in range(2 * n + 2):
        carry = 0
        for i in range(n - 1, -1, -1):
            digits[i] += carry
            carry, digits[i] = divmod(digits[i], b)
        if carry == 0:
            break
        digits[n - 1] += carry  # wrap the leftmost carry to the right end
    else:
        raise InvalidWordError("carry propagation failed to settle")
    if all(d == b - 1 for d in digits):
        digits = [0] * n
    return BaseBWord(tuple(digits), b)


def multiplicative_order(b: int, q: int) -> int:
    """Least n >= 1 with b^n congruent to 1 mod q; requires gcd(b, q) = 1."""
    from math import gcd

    if q < 1:
        raise InvalidWordError(f"q must be >= 1, got {q}")
    if gcd(b, q) != 1:
        raise InvalidWordError(f"gcd({b}, {q}) != 1: expansion of 1/{q} is not purely periodic")
    n = 1
    acc = b % q
    while acc != 1 % q:
        acc = (acc * b) % q
        n += 1
        if n > q:
            raise InvalidWordError(f"no multiplicative order of {b} mod {q}")
    return n


def period_word(b: int, q: int) -> BaseBWord:
    """Period of the base-b expansion of 1/q, leading zeros kept.

    Its value is (b^n - 1) / q where n is the multiplicative order of b
    mod q; for q = 1 the period is the single digit 0.
    """
    n = multiplicative_order(b, q)
    value = (b**n - 1) // q
    word = word_from_value(value, b, n)
    if all(d == b - 1 for d in word.digits):
        word = BaseBWord((0,) * n, b)
    return word


@dataclass(frozen=True)
class CyclicGroupReport:
    """Multiples table of the period word and its verification result."""

    b: int
    q: int
    period: BaseBWord
    multiples: tuple[BaseBWord, ...]
    ok: bool
    details: tuple[str, ...]


def verify_cyclic_group(b: int, q: int) -> CyclicGroupReport:
    """Check the multiples table of the period word of 1/q.

    For i = 1..q, the i-fold circular sum must equal the base-b digits of
    i times the period's value, and the q-th multiple must be the zero
    class.
    """
    period = period_word(b, q)
    n = len(period.digits)
    value = period.value()
    details = []
    multiples = []
    ok = True
    acc = period
    for i in range(1, q + 1):
        if i > 1:
            acc = circ_add_base_b(acc, period)
        expected_value = i * value
        if i == q:
            expected = BaseBWord((0,) * n, b)
            line_ok = acc == expected
            details.append(f"{i} * period = {acc} (zero class: {'ok' if line_ok else 'FAIL'})")
        else:
            expected = word_from_value(expected_value, b, n)
            line_ok = acc == expected
            details.append(f"{i} * period = {acc} (digits of {expected_value}: {'ok' if line_ok else 'FAIL'})")
        ok = ok and line_ok
        multiples.append(acc)
    return CyclicGroupReport(b, q, period, tuple(multiples), ok, tuple(details))
