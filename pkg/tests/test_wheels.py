import itertools

import pytest

from circfib.errors import InvalidWordError, ResourceBoundError
from circfib.fibcore import format_word, iter_words_binary, parse_word
from circfib.group import enumerate_elements, identity
from circfib.wheels import (
    WheelTree,
    count_trees_matrix,
    identity_fiber_report,
    is_tree_word,
    spanning_trees,
    star_tree,
    taxonomy,
    taxonomy_table,
    tree_add,
    tree_to_word,
    wheel_edges,
)

A004146 = [1, 5, 16, 45, 121, 320, 841, 2205]


def test_wheel_edges_degenerate_cases():
    assert len(wheel_edges(1)) == 1  # the rim self-loop is excluded
    edges2 = wheel_edges(2)
    assert len(edges2) == 4  # two spokes plus two parallel rim edges
    assert [e[:2] for e in edges2 if e[0] == "s"] == [("s", 0), ("s", 1)]


def test_spanning_tree_counts():
    for ell, expected in enumerate(A004146, start=1):
        assert len(spanning_trees(ell)) == expected


def test_spanning_trees_are_trees():
    for ell in (1, 2, 3, 4):
        for tree in spanning_trees(ell):
            assert tree.edge_count() == ell


def test_spanning_trees_bound():
    with pytest.raises(ResourceBoundError):
        spanning_trees(11)


def test_matrix_count_agrees():
    for ell in range(1, 9):
        assert count_trees_matrix(ell) == A004146[ell - 1]


def test_tree_to_word_examples():
    star3 = star_tree(3)
    assert format_word(tree_to_word(star3)) == "111111"
    t = WheelTree(3, frozenset({0}), frozenset({0, 1}))
    assert format_word(tree_to_word(t)) == "100001"
    t2 = WheelTree(3, frozenset({0, 1}), frozenset({1}))
    assert format_word(tree_to_word(t2)) == "111001"


def test_taxonomy_examples():
    assert taxonomy(star_tree(3)) == identity(3)
    t = WheelTree(3, frozenset({0}), frozenset({0, 1}))
    assert format_word(taxonomy(t)) == "010000"


def test_taxonomy_bijective():
    for ell in range(1, 6):
        table = taxonomy_table(ell)
        assert set(table) == set(enumerate_elements(ell))


def test_is_tree_word():
    assert is_tree_word(parse_word("111111"))
    assert not is_tree_word(parse_word("1010"))
    assert is_tree_word(parse_word("1001"))
    assert not is_tree_word(parse_word("0000"))
    assert not is_tree_word(parse_word("0120"))


def test_tree_words_are_even_zero_block_words():
    for ell in (1, 2, 3, 4):
        raw = {tree_to_word(t) for t in spanning_trees(ell)}
        assert len(raw) == len(spanning_trees(ell))  # injective on trees
        expected = {w for w in iter_words_binary(2 * ell) if is_tree_word(w)}
        assert raw == expected


def test_identity_fiber_report():
    for ell in (1, 2, 3, 4):
        report = identity_fiber_report(ell)
        assert report.bijective
        assert report.identity_fiber == 1
        assert report.tree_word_count == report.group_order


def test_tree_add_identity_and_inverse():
    for ell in (1, 2, 3):
        star = star_tree(ell)
        trees = spanning_trees(ell)
        for t in trees:
            assert tree_add(t, star) == t
            assert any(tree_add(t, s) == star for s in trees)


def test_tree_add_group_axioms_ell2():
    trees = spanning_trees(2)
    for t1, t2 in itertools.product(trees, repeat=2):
        assert tree_add(t1, t2) == tree_add(t2, t1)
    for t1, t2, t3 in itertools.product(trees, repeat=3):
        assert tree_add(tree_add(t1, t2), t3) == tree_add(t1, tree_add(t2, t3))


def test_tree_add_size_mismatch():
    with pytest.raises(InvalidWordError):
        tree_add(star_tree(2), star_tree(3))
