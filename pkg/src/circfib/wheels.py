"""Wheel graphs, spanning-tree enumeration, and the taxonomy bijection.

The l-wheel has rim vertices v0..v(l-1) on a cycle plus a center joined to
every rim vertex: 2l edges in all, spokes r_i = c-v_i and rim edges
s_i = v_i-v_(i+1 mod l).  Degenerate small cases: at l = 1 the rim edge
would be a self-loop and is dropped from the graph (self-loops never occur
in spanning trees); at l = 2 the two rim edges are parallel and are kept as
distinguishable edges of a multigraph.

A spanning tree encodes a circular word of length 2l: position 2i is 1 iff
spoke i is in the tree, position 2i+1 is 0 iff rim edge i is in the tree
(note the inversion on rim bits).  These raw words are exactly the nonzero
binary circular words whose cyclic blocks of zeros all have even length,
and normalizing them maps the spanning trees bijectively onto the group of
parameter l, which transports the group law onto trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidWordError, ResourceBoundError
from .fibcore import Word, as_word, iter_words_binary
from .group import DEFAULT_ENUM_BOUND, add, enumerate_elements, identity
from .rewrite import normalize


@dataclass(frozen=True)
class WheelTree:
    """A spanning tree of the l-wheel, as index sets of spokes and rim edges."""

    ell: int
    spokes: frozenset[int]
    rims: frozenset[int]

    def edge_count(self) -> int:
        return len(self.spokes) + len(self.rims)


def wheel_edges(ell: int) -> list[tuple[str, int, int, int]]:
    """Edges as (kind, index, endpoint, endpoint); the center is vertex l."""
    if ell < 1:
        raise InvalidWordError(f"ell must be >= 1, got {ell}")
    center = ell
    edges = []
    for i in range(ell):
        edges.append(("r", i, center, i))
    for i in range(ell):
        j = (i + 1) % ell
        if i == j:
            continue  # l = 1: the rim edge is a self-loop, excluded
        edges.append(("s", i, i, j))
    return edges


def spanning_trees(ell: int, max_ell: int = DEFAULT_ENUM_BOUND) -> list[WheelTree]:
    """All spanning trees, by backtracking with union-find acyclicity."""
    if ell > max_ell:
        raise ResourceBoundError(f"ell={ell} exceeds enumeration bound {max_ell}")
    edges = wheel_edges(ell)
    need = ell  # a spanning tree of l+1 vertices has l edges
    parent = list(range(ell + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            x = parent[x]
        return x

    chosen: list[tuple[str, int]] = []
    out: list[WheelTree] = []

    def rec(idx: int):
        if len(chosen) == need:
            out.append(
                WheelTree(
                    ell,
                    frozenset(i for kind, i in chosen if kind == "r"),
                    frozenset(i for kind, i in chosen if kind == "s"),
                )
            )
            return
        if idx == len(edges) or len(chosen) + (len(edges) - idx) < need:
            return
        kind, i, a, b = edges[idx]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            chosen.append((kind, i))
            rec(idx + 1)
            chosen.pop()
            parent[ra] = ra
        rec(idx + 1)

    rec(0)
    return out


def count_trees_matrix(ell: int) -> int:
    """Spanning-tree count via the integer determinant of the reduced Laplacian."""
    if ell < 1:
        raise InvalidWordError(f"ell must be >= 1, got {ell}")
    size = ell + 1
    lap = [[0] * size for _ in range(size)]
    for _, _, a, b in wheel_edges(ell):
        lap[a][a] += 1
        lap[b][b] += 1
        lap[a][b] -= 1
        lap[b][a] -= 1
    minor = [row[:ell] for row in lap[:ell]]  # delete the center row/column
    return _det_bareiss(minor)


def _det_bareiss(m: list[list[int]]) -> int:
    # Fraction-free Gaussian elimination; exact over the integers.
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def tree_to_word(tree: WheelTree) -> Word:
    """Raw taxonomy word: spoke bits at even positions, inverted rim bits at odd."""
    w = []
    for i in range(tree.ell):
        w.append(1 if i in tree.spokes else 0)
        w.append(0 if i in tree.rims else 1)
    return tuple(w)


def taxonomy(tree: WheelTree) -> Word:
    """Group element of the tree: normal form of the raw taxonomy word."""
    return normalize(tree_to_word(tree))


def is_tree_word(word) -> bool:
    """True iff the word is binary, nonzero, and its cyclic zero blocks have even length.

    These are exactly the raw taxonomy words of spanning trees.
    """
    w = as_word(word)
    if any(d > 1 for d in w):
        return False
    if not any(w):
        return False
    n = len(w)
    start = w.index(1)
    run = 0
    for k in range(1, n + 1):
        d = w[(start + k) % n]
        if d == 0:
            run += 1
        else:
            if run % 2 == 1:
                return False
            run = 0
    return True


@lru_cache(maxsize=32)
def taxonomy_table(ell: int, max_ell: int = DEFAULT_ENUM_BOUND) -> dict[Word, WheelTree]:
    """Inverse of the taxonomy map, built by enumeration.

    Raises if two trees normalize to the same element, which would falsify
    the bijection; the tables are cached per l.
    """
    table: dict[Word, WheelTree] = {}
    for tree in spanning_trees(ell, max_ell):
        element = taxonomy(tree)
        if element in table:
            raise InvalidWordError(
                f"taxonomy collision at ell={ell}: {table[element]} and {tree}"
            )
        table[element] = tree
    return table


def tree_add(t1: WheelTree, t2: WheelTree, max_ell: int = DEFAULT_ENUM_BOUND) -> WheelTree:
    """The group law transported onto spanning trees via the taxonomy."""
    if t1.ell != t2.ell:
        raise InvalidWordError(f"wheel size mismatch: {t1.ell} vs {t2.ell}")
    table = taxonomy_table(t1.ell, max_ell)
    return table[add(taxonomy(t1), taxonomy(t2))]


def star_tree(ell: int) -> WheelTree:
    """The all-spokes tree; its taxonomy word is 1^(2l), the identity class."""
    return WheelTree(ell, frozenset(range(ell)), frozenset())


@dataclass(frozen=True)
class IdentityFiberReport:
    """Fiber sizes of the tree-word map onto group elements at one l."""

    ell: int
    tree_word_count: int
    group_order: int
    fiber_sizes: dict[Word, int]

    @property
    def identity_fiber(self) -> int:
        return self.fiber_sizes.get(identity(self.ell), 0)

    @property
    def bijective(self) -> bool:
        return (
            self.tree_word_count == self.group_order
            and all(v == 1 for v in self.fiber_sizes.values())
        )


def identity_fiber_report(ell: int, max_ell: int = DEFAULT_ENUM_BOUND) -> IdentityFiberReport:
    """How many even-zero-block words normalize to each group element.

    The taxonomy is expected to be a bijection, so every fiber should have
    size one, with the identity class represented by 1^(2l) alone.  The
    report records the actual sizes rather than presuming them.
    """
    fiber: dict[Word, int] = {}
    count = 0
    for w in iter_words_binary(2 * ell):
        if not is_tree_word(w):
            continue
        count += 1
        element = normalize(w)
        fiber[element] = fiber.get(element, 0) + 1
    order = len(enumerate_elements(ell, max_ell))
    return IdentityFiberReport(ell, count, order, fiber)
