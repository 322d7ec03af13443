"""Rewriting moves on circular digit words and normalization to Z-form.

Two families of moves act on a circular word w of length n (indices mod n):

* rule A at position k: decrement w[k-1] and w[k], increment w[k+1]
  (the relation F(k-1) + F(k) = F(k+1));
* rule B at position k: subtract 2 from w[k], increment w[k-2] and w[k+1]
  (the relation 2 F(k) = F(k-2) + F(k+1)).

Backward moves are the exact inverses.  Moves are value shifts guarded by
nonnegativity, so they apply on the full alphabet of nonnegative ints, not
just on the binary patterns 110 <-> 001 and 0020 <-> 1001 that they induce
there.  Every nonzero circular word of even length is equivalent, under
these moves, to an admissible word that is unique except for the single
orbit containing 1^n, where (01)^l and (10)^l are both reachable and are
identified; (01)^l is the canonical representative.

``orbit`` explores equivalence classes by breadth-first search and is the
reference oracle.  ``normalize`` is the production normalizer: it computes
the exact class invariant of the word in Z[phi] modulo (phi^n - 1), then
reconstructs the admissible representative by a small bounded search around
the quotient.  The two routes are independent and are cross-checked
exhaustively in the test suite.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    InapplicableMoveError,
    InvalidWordError,
    NormalizationError,
    ZeroWordError,
)
from .fibcore import (
    Word,
    alternating_word,
    as_word,
    fib,
    is_admissible,
    zeckendorf,
)


@dataclass(frozen=True)
class Move:
    """A single rewriting move: rule 'A' or 'B', anchor position, direction."""

    rule: str
    position: int
    forward: bool = True

    def __post_init__(self):
        if self.rule not in ("A", "B"):
            raise InvalidWordError(f"rule must be 'A' or 'B', got {self.rule!r}")


def _consume_produce(move: Move, n: int) -> tuple[dict[int, int], dict[int, int]]:
    # A move consumes units from some slots and produces units at others;
    # all consumed amounts must be in stock simultaneously.  At lengths
    # where window positions collide mod n the amounts accumulate, which
    # keeps forward and backward moves exact inverses of each other.
    k = move.position % n
    if move.rule == "A":
        eats = (((k - 1) % n, 1), (k, 1))
        makes = (((k + 1) % n, 1),)
    else:
        eats = ((k, 2),)
        makes = (((k - 2) % n, 1), ((k + 1) % n, 1))
    if not move.forward:
        eats, makes = makes, eats
    consume: dict[int, int] = {}
    produce: dict[int, int] = {}
    for i, v in eats:
        consume[i] = consume.get(i, 0) + v
    for i, v in makes:
        produce[i] = produce.get(i, 0) + v
    return consume, produce


def apply_move(word, move: Move) -> Word:
    """Apply one move; raises InapplicableMoveError if its guards fail."""
    w = as_word(word)
    n = len(w)
    consume, produce = _consume_produce(move, n)
    if any(w[i] < v for i, v in consume.items()):
        raise InapplicableMoveError(f"move {move} does not apply to {w}")
    out = list(w)
    for i, v in consume.items():
        out[i] -= v
    for i, v in produce.items():
        out[i] += v
    return tuple(out)


def move_window(move: Move, n: int) -> tuple[int, ...]:
    """Positions touched by the move, in rule order."""
    k = move.position % n
    if move.rule == "A":
        return ((k - 1) % n, k, (k + 1) % n)
    return ((k - 2) % n, k, (k + 1) % n)


def crosses_seam(move: Move, n: int) -> bool:
    """True iff the move's index window wraps past position n-1."""
    window = move_window(move, n)
    return any(window[j] > window[j + 1] for j in range(len(window) - 1))


def applicable_moves(word):
    """All moves (both rules, both directions) that apply to the word."""
    w = as_word(word)
    n = len(w)
    out = []
    for k in range(n):
        for rule in ("A", "B"):
            for forward in (True, False):
                move = Move(rule, k, forward)
                consume, _ = _consume_produce(move, n)
                if all(w[i] >= v for i, v in consume.items()):
                    out.append(move)
    return out


def _neighbors(w: Word, digit_cap: int):
    n = len(w)
    for k in range(n):
        for rule in ("A", "B"):
            for forward in (True, False):
                consume, produce = _consume_produce(Move(rule, k, forward), n)
                if any(w[i] < v for i, v in consume.items()):
                    continue
                out = list(w)
                for i, v in consume.items():
                    out[i] -= v
                for i, v in produce.items():
                    out[i] += v
                if max(out) <= digit_cap:
                    yield tuple(out)


@dataclass(frozen=True)
class OrbitResult:
    """BFS closure of a word under the moves, with a truncation flag."""

    words: frozenset[Word]
    truncated: bool
    digit_cap: int

    def admissible_members(self) -> set[Word]:
        return {w for w in self.words if is_admissible(w)}


def default_digit_cap(word) -> int:
    w = as_word(word)
    return max(2, max(w)) + 1


def orbit(word, digit_cap: int | None = None, size_cap: int = 10**6) -> OrbitResult:
    """Breadth-first closure of the word under all moves, both directions.

    States with any digit above ``digit_cap`` are pruned.  If more than
    ``size_cap`` states are reached the search stops and the result is
    flagged as truncated (never an exception).
    """
    w = as_word(word)
    if digit_cap is None:
        digit_cap = default_digit_cap(w)
    if digit_cap < max(2, max(w)):
        raise InvalidWordError(f"digit cap {digit_cap} below max digit of {w}")
    seen = {w}
    queue = deque([w])
    truncated = False
    while queue:
        cur = queue.popleft()
        for nxt in _neighbors(cur, digit_cap):
            if nxt not in seen:
                if len(seen) >= size_cap:
                    truncated = True
                    queue.clear()
                    break
                seen.add(nxt)
                queue.append(nxt)
    return OrbitResult(frozenset(seen), truncated, digit_cap)


def normal_form_by_orbit(
    word,
    size_cap: int = 10**6,
    cap_ceiling: int = 16,
) -> set[Word]:
    """Reference normalizer: admissible orbit members found by BFS.

    Starts at the default digit cap and doubles it (up to ``cap_ceiling``)
    while the search completes without finding an admissible word; a
    truncated, inconclusive search raises instead of guessing.
    """
    w = as_word(word)
    cap = default_digit_cap(w)
    while True:
        result = orbit(w, cap, size_cap)
        members = result.admissible_members()
        if members:
            return members
        if result.truncated:
            raise NormalizationError(
                f"orbit of {w} truncated at {size_cap} states (digit cap {cap})"
            )
        if cap >= cap_ceiling:
            return set()
        cap = min(2 * cap, cap_ceiling)


# --- class invariant in Z[phi] -------------------------------------------
#
# Sending the digit at position i to phi^i identifies a length-n circular
# word with an element of Z[phi] modulo the ideal generated by phi^n - 1,
# because both rules rewrite along identities that hold for the powers of
# phi and the wrap identifies phi^n with 1.  Elements of Z[phi] are stored
# as integer pairs (x, y) meaning x + y*phi.


def _pair_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    x, y = a
    u, v = b
    return (x * u + y * v, x * v + y * u + y * v)


def phi_pair(word) -> tuple[int, int]:
    """Exact pair (x, y) with sum of digit * phi^index == x + y*phi."""
    w = as_word(word)
    x = y = 0
    fa, fb = 1, 0  # phi^i == fa + fb*phi, starting at i = 0
    for d in w:
        if d:
            x += d * fa
            y += d * fb
        fa, fb = fb, fa + fb
    return x, y


def _modulus_pair(n: int) -> tuple[int, int]:
    # phi^n - 1
    fa, fb = 1, 0
    for _ in range(n):
        fa, fb = fb, fa + fb
    return fa - 1, fb


def _iround(p: int, q: int) -> int:
    # round(p / q) for q > 0, half away from zero
    if p >= 0:
        return (2 * p + q) // (2 * q)
    return -((-2 * p + q) // (2 * q))


# Offsets (c1, c2) tried around the rounded quotient, nearest first.  The
# admissible representative's quotient lies within about 4 of the input's
# in both coordinates; 6 leaves margin.
_SEARCH_WINDOW = 6
_OFFSETS = sorted(
    ((c1, c2) for c1 in range(-_SEARCH_WINDOW, _SEARCH_WINDOW + 1)
     for c2 in range(-_SEARCH_WINDOW, _SEARCH_WINDOW + 1)),
    key=lambda c: (abs(c[0]) + abs(c[1]), max(abs(c[0]), abs(c[1])), c),
)


def class_key(word) -> tuple[int, int]:
    """Canonical residue of the word's Z[phi] pair modulo (phi^n - 1).

    Words of the same length are equivalent under the moves iff their keys
    are equal, except that the all-zero word shares the identity's key
    without being reachable from it.
    """
    w = as_word(word)
    n = len(w)
    nu = _modulus_pair(n)
    p, q = nu
    norm = p * p + p * q - q * q
    if norm == 0:
        raise InvalidWordError(f"degenerate modulus at length {n}")
    x, y = phi_pair(w)
    # (x + y*phi) * conj(nu), with conj(p + q*phi) = (p + q) - q*phi
    num1 = x * (p + q) - y * q
    num2 = y * p - x * q
    if norm < 0:
        norm, num1, num2 = -norm, -num1, -num2
    q1, q2 = num1 // norm, num2 // norm
    rem = (x, y)
    sub = _pair_mul((q1, q2), nu)
    return (rem[0] - sub[0], rem[1] - sub[1])


def normalize(word) -> Word:
    """The unique admissible circular word equivalent to the input.

    Requires even length and a nonzero word.  If the input lies in the
    orbit of 1^n the canonical representative (01)^(n/2) is returned.
    """
    w = as_word(word)
    n = len(w)
    if n % 2 != 0:
        raise InvalidWordError(f"normalization requires even length, got {n}")
    if not any(w):
        raise ZeroWordError("the zero word is not a group element")
    if is_admissible(w):
        return _canonical_identity(w)
    return _normalize_cached(w)


@lru_cache(maxsize=1 << 18)
def _normalize_cached(w: Word) -> Word:
    n = len(w)
    nu = _modulus_pair(n)
    p, q = nu
    norm = p * p + p * q - q * q
    x, y = phi_pair(w)
    num1 = x * (p + q) - y * q
    num2 = y * p - x * q
    if norm < 0:
        norm, num1, num2 = -norm, -num1, -num2
    q1, q2 = _iround(num1, norm), _iround(num2, norm)
    max_value = fib(n) - 1
    for c1, c2 in _OFFSETS:
        sx, sy = _pair_mul((q1 + c1, q2 + c2), nu)
        ax, ay = x - sx, y - sy
        value = ax + 2 * ay  # the valuation of any word with pair (ax, ay)
        if value < 1 or value > max_value:
            continue
        candidate = zeckendorf(value, n)
        if phi_pair(candidate) != (ax, ay):
            continue
        if candidate[0] == 1 and candidate[-1] == 1:
            continue  # linear Zeckendorf form, but not cyclically admissible
        return _canonical_identity(candidate)
    raise NormalizationError(
        f"no admissible equivalent of {w} found; the uniqueness assumption may be violated"
    )


def _canonical_identity(w: Word) -> Word:
    n = len(w)
    if n % 2 == 0 and w == alternating_word(n, first=1):
        return alternating_word(n, first=0)
    return w


def equivalent(u, v) -> bool:
    """True iff both words normalize to the same admissible word."""
    wu, wv = as_word(u), as_word(v)
    if len(wu) != len(wv):
        raise InvalidWordError(f"length mismatch: {len(wu)} vs {len(wv)}")
    return normalize(wu) == normalize(wv)
