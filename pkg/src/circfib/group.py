"""The abelian group of admissible circular words of even length 2l.

Carrier: admissible binary circular words of length 2l containing at least
one 1, with (10)^l identified with (01)^l; the canonical representative of
that identity class is (01)^l.  Addition is digit-wise sum followed by
normalization; the zero word is excluded by construction and rejected.

The group of parameter l decomposes as Z/d x Z/d for odd l and
Z/5d x Z/d for even l, where d = F(l-2) for even l and d = F(l-1) + F(l-3)
for odd l.  ``decompose`` certifies this empirically from the elements
rather than assuming it.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import (
    InvalidWordError,
    ResourceBoundError,
    StructureMismatchError,
    ZeroWordError,
)
from .fibcore import (
    Word,
    alternating_word,
    as_word,
    classical_fib,
    fib,
    is_admissible,
    iter_admissible,
)
from .rewrite import normalize

DEFAULT_ENUM_BOUND = 10


def identity(ell: int) -> Word:
    """The identity element (01)^l."""
    if ell < 1:
        raise InvalidWordError(f"ell must be >= 1, got {ell}")
    return alternating_word(2 * ell, first=0)


def canonical(word) -> Word:
    """Validate an admissible nonzero word and canonicalize the identity."""
    w = as_word(word)
    if len(w) % 2 != 0:
        raise InvalidWordError(f"group elements have even length, got {len(w)}")
    if not any(w):
        raise ZeroWordError("the zero word is not a group element")
    if not is_admissible(w):
        raise InvalidWordError(f"not an admissible circular word: {w}")
    if w == alternating_word(len(w), first=1):
        return alternating_word(len(w), first=0)
    return w


def add(u, v) -> Word:
    """Group law: digit-wise sum, then normalization."""
    wu, wv = as_word(u), as_word(v)
    if len(wu) != len(wv):
        raise InvalidWordError(f"length mismatch: {len(wu)} vs {len(wv)}")
    return normalize(tuple(a + b for a, b in zip(wu, wv)))


def neg(u) -> Word:
    """Inverse: complement every digit, then normalize."""
    w = canonical(u)
    return normalize(tuple(1 - d for d in w))


def scalar_mul(k: int, u) -> Word:
    """k-fold sum of u by binary doubling; k may be negative or zero."""
    w = canonical(u)
    if k < 0:
        return neg(scalar_mul(-k, w))
    acc = identity(len(w) // 2)
    base = w
    while k:
        if k & 1:
            acc = add(acc, base)
        k >>= 1
        if k:
            base = add(base, base)
    return acc


def enumerate_elements(ell: int, max_ell: int = DEFAULT_ENUM_BOUND) -> list[Word]:
    """All group elements of parameter l, in lexicographic word order."""
    if ell < 1:
        raise InvalidWordError(f"ell must be >= 1, got {ell}")
    if ell > max_ell:
        raise ResourceBoundError(f"ell={ell} exceeds enumeration bound {max_ell}")
    n = 2 * ell
    skip = alternating_word(n, first=1)
    return [w for w in iter_admissible(n) if any(w) and w != skip]


def d_value(ell: int) -> int:
    """The invariant-factor parameter d of the group of parameter l."""
    if ell < 1:
        raise InvalidWordError(f"ell must be >= 1, got {ell}")
    if ell % 2 == 0:
        return fib(ell - 2)
    return fib(ell - 1) + fib(ell - 3)


def predicted_invariant_factors(ell: int) -> tuple[int, int]:
    """(e1, e2) with e2 | e1: (d, d) for odd l, (5d, d) for even l."""
    d = d_value(ell)
    return (5 * d, d) if ell % 2 == 0 else (d, d)


@dataclass(frozen=True)
class GroupStructure:
    order: int
    invariant_factors: tuple[int, int]
    d: int


def element_order(u) -> int:
    """Least k >= 1 with k*u equal to the identity."""
    w = canonical(u)
    ident = identity(len(w) // 2)
    acc = w
    k = 1
    while acc != ident:
        acc = add(acc, w)
        k += 1
        if k > 10**6:
            raise StructureMismatchError(f"element order of {w} exceeds 10^6")
    return k


def _cyclic_subgroup(w: Word) -> set[Word]:
    ident = identity(len(w) // 2)
    out = {ident}
    acc = w
    while acc != ident:
        out.add(acc)
        acc = add(acc, w)
    return out


def decompose(ell: int, max_ell: int = DEFAULT_ENUM_BOUND) -> GroupStructure:
    """Empirical invariant factors, certified by exhibiting two generators.

    Finds g1 of maximal order e1 (the exponent) and, unless the group is
    cyclic, g2 with a cyclic subgroup of size order/e1 meeting <g1> only in
    the identity.  Order d^2 with exponent d does not by itself force
    Z/d x Z/d, so the two-generator certificate is required; failure raises
    StructureMismatchError, as does disagreement with the predicted
    decomposition.
    """
    elements = enumerate_elements(ell, max_ell)
    order = len(elements)
    orders = {u: element_order(u) for u in elements}
    e1 = max(orders.values())
    if order % e1 != 0:
        raise StructureMismatchError(f"exponent {e1} does not divide order {order}")
    e2 = order // e1
    g1 = next(u for u, k in orders.items() if k == e1)
    if e2 > 1:
        sub1 = _cyclic_subgroup(g1)
        for g2 in elements:
            if orders[g2] != e2:
                continue
            sub2 = _cyclic_subgroup(g2)
            if sub1 & sub2 == {identity(ell)}:
                break
        else:
            raise StructureMismatchError(
                f"no second generator certifies rank 2 at ell={ell}"
            )
    result = GroupStructure(order, (e1, e2), d_value(ell))
    expected = predicted_invariant_factors(ell)
    if result.invariant_factors != expected:
        raise StructureMismatchError(
            f"ell={ell}: computed factors {result.invariant_factors}, expected {expected}"
        )
    return result


def repeat_morphism(u, n: int) -> Word:
    """Concatenate the word with itself n times.

    Cyclic admissibility is preserved by literal repetition, so no
    normalization is needed; the map is an injective homomorphism into the
    group of parameter n*l.
    """
    if n < 1:
        raise InvalidWordError(f"repetition count must be >= 1, got {n}")
    return canonical(canonical(u) * n)


@dataclass(frozen=True)
class GcdCheck:
    m: int
    n: int
    lhs: int
    rhs: int

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class GcdPropertyReport:
    pair_checks: tuple[GcdCheck, ...]
    even_index_checks: tuple[GcdCheck, ...]

    @property
    def failures(self) -> list[GcdCheck]:
        return [c for c in self.pair_checks + self.even_index_checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failures


def gcd_property_report(max_ell: int) -> GcdPropertyReport:
    """Check gcd(d_m, d_n) == d_gcd(m, n) for 2 <= m, n <= max_ell.

    Also checks that d at even index 2l equals the classical Fibonacci
    number f(2l).
    """
    if max_ell < 2:
        raise InvalidWordError(f"max_ell must be >= 2, got {max_ell}")
    pairs = tuple(
        GcdCheck(m, n, gcd(d_value(m), d_value(n)), d_value(gcd(m, n)))
        for m in range(2, max_ell + 1)
        for n in range(2, max_ell + 1)
    )
    evens = tuple(
        GcdCheck(2 * ell, 2 * ell, d_value(2 * ell), classical_fib(2 * ell))
        for ell in range(1, max_ell // 2 + 1)
    )
    return GcdPropertyReport(pairs, evens)
