"""Fibonacci numeration primitives, digit words, and the infinite binary word.

Conventions used throughout the package:

* Fibonacci numbers follow F0 = 1, F1 = 2, Fk = F(k-1) + F(k-2), extended
  backward with F(-1) = 1, F(-2) = 0 (the unique values consistent with the
  recurrence).  The classical sequence f1 = f2 = 1 is exposed separately as
  ``classical_fib``.
* A digit word is a tuple of nonnegative ints.  Index 0 is the leftmost
  character of the text form and the least significant position: "0010" has
  value F2 = 3.
* A circular word is an ordinary digit word read cyclically (indices mod the
  length) with a fixed origin.  Equality is positional: "1000" and "0001"
  are distinct circular words even though they are rotations of each other.
* Words over the two-letter alphabet {a, b} are plain strings.

All arithmetic is exact (Python ints).
"""

from __future__ import annotations

import threading

from .errors import CapacityError, InvalidWordError

Word = tuple[int, ...]

_FIB_CACHE = [0, 1, 1, 2]  # _FIB_CACHE[k + 2] == fib(k), seeded from F(-2)
_FIB_LOCK = threading.Lock()


def fib(k: int) -> int:
    """Fibonacci number Fk with F0 = 1, F1 = 2; defined for k >= -2."""
    if k < -2:
        raise InvalidWordError(f"fib index must be >= -2, got {k}")
    if len(_FIB_CACHE) <= k + 2:
        with _FIB_LOCK:
            while len(_FIB_CACHE) <= k + 2:
                _FIB_CACHE.append(_FIB_CACHE[-1] + _FIB_CACHE[-2])
    return _FIB_CACHE[k + 2]


def classical_fib(n: int) -> int:
    """Classical Fibonacci number fn with f1 = f2 = 1; defined for n >= 1."""
    if n < 1:
        raise InvalidWordError(f"classical fib index must be >= 1, got {n}")
    # fn == F(n-2) under the package convention.
    return fib(n - 2)


def as_word(digits) -> Word:
    """Coerce a digit sequence to a validated word tuple."""
    w = tuple(int(d) for d in digits)
    if not w:
        raise InvalidWordError("word must have length >= 1")
    if any(d < 0 for d in w):
        raise InvalidWordError(f"word digits must be nonnegative: {w}")
    return w


def valuation(word) -> int:
    """Sum of digit * F(index) over the word, read positionally."""
    w = as_word(word)
    return sum(d * fib(i) for i, d in enumerate(w) if d)


def zeckendorf(n: int, length: int) -> Word:
    """Binary word of the given length, no adjacent ones, with value n.

    Greedy from the largest Fibonacci number that fits.  The result is the
    unique such word; n must satisfy 0 <= n < F(length).
    """
    if length < 1:
        raise InvalidWordError(f"length must be >= 1, got {length}")
    if n < 0:
        raise InvalidWordError(f"value must be nonnegative, got {n}")
    if n >= fib(length):
        raise CapacityError(f"{n} does not fit in {length} digits (max {fib(length) - 1})")
    digits = [0] * length
    rem = n
    for i in range(length - 1, -1, -1):
        if fib(i) <= rem:
            digits[i] = 1
            rem -= fib(i)
    assert rem == 0
    return tuple(digits)


def is_admissible(word) -> bool:
    """True iff all digits are 0/1 and no two cyclically adjacent ones."""
    w = as_word(word)
    if any(d > 1 for d in w):
        return False
    n = len(w)
    return not any(w[i - 1] == 1 and w[i] == 1 for i in range(n))


def is_linear_admissible(word) -> bool:
    """True iff all digits are 0/1 with no adjacent ones, ignoring the wrap."""
    w = as_word(word)
    if any(d > 1 for d in w):
        return False
    return not any(w[i - 1] == 1 and w[i] == 1 for i in range(1, len(w)))


def rotate(word) -> Word:
    """One circular shift: the last digit moves to the front."""
    w = as_word(word)
    return (w[-1],) + w[:-1]


def alternating_word(n: int, first: int = 0) -> Word:
    """The word first, 1-first, first, ... of length n."""
    if n < 1:
        raise InvalidWordError(f"length must be >= 1, got {n}")
    if first not in (0, 1):
        raise InvalidWordError("first digit must be 0 or 1")
    return tuple((i + first) % 2 for i in range(n))


def parse_word(text: str) -> Word:
    """Parse "010010" (single digits) or "1,0,12" (comma separated)."""
    text = text.strip()
    if not text:
        raise InvalidWordError("empty word text")
    try:
        if "," in text:
            return as_word(int(part) for part in text.split(","))
        return as_word(int(ch) for ch in text)
    except ValueError as exc:
        raise InvalidWordError(f"cannot parse word {text!r}") from exc


def format_word(word) -> str:
    """Inverse of parse_word: contiguous digits when all are <= 9."""
    w = as_word(word)
    if all(d <= 9 for d in w):
        return "".join(str(d) for d in w)
    return ",".join(str(d) for d in w)


_WORD_ITERATE = "abaababa"


def fibonacci_word_prefix(n: int) -> str:
    """Prefix of length n of the fixed point of a -> ab, b -> a."""
    if n < 0:
        raise InvalidWordError(f"prefix length must be nonnegative, got {n}")
    global _WORD_ITERATE
    while len(_WORD_ITERATE) < n:
        _WORD_ITERATE = "".join("ab" if c == "a" else "a" for c in _WORD_ITERATE)
    return _WORD_ITERATE[:n]


def letter_counts(letters: str) -> tuple[int, int]:
    """(number of a's, number of b's); rejects other letters."""
    if set(letters) - {"a", "b"}:
        raise InvalidWordError(f"alphabet is {{a, b}}: {letters!r}")
    count_a = letters.count("a")
    return count_a, len(letters) - count_a


def check_balanced(letters: str, window: int) -> bool:
    """True iff all length-``window`` factors have a-counts within 1."""
    if window < 1 or window > len(letters):
        raise InvalidWordError(f"window must be in 1..{len(letters)}, got {window}")
    count = letters[:window].count("a")
    lo = hi = count
    for i in range(window, len(letters)):
        count += (letters[i] == "a") - (letters[i - window] == "a")
        lo = min(lo, count)
        hi = max(hi, count)
    return hi - lo <= 1


def iter_words_binary(n: int):
    """Yield all binary words of length n in lexicographic order."""
    if n < 1:
        raise InvalidWordError(f"length must be >= 1, got {n}")
    for bits in range(1 << n):
        yield tuple((bits >> (n - 1 - i)) & 1 for i in range(n))


def iter_admissible(n: int):
    """Yield all cyclically admissible binary words of length n in lex order.

    Includes the zero word.  The count over all of them is the n-th Lucas
    number (for n >= 2).
    """
    if n < 1:
        raise InvalidWordError(f"length must be >= 1, got {n}")
    prefix = [0] * n

    def rec(i: int):
        if i == n:
            if not (prefix[0] == 1 and prefix[-1] == 1):
                yield tuple(prefix)
            return
        prefix[i] = 0
        yield from rec(i + 1)
        if i == 0 or prefix[i - 1] == 0:
            prefix[i] = 1
            yield from rec(i + 1)
            prefix[i] = 0

    yield from rec(0)
