import pytest

from circfib.errors import InvalidWordError, PartitionError
from circfib.fibcore import fib, parse_word, valuation
from circfib.group import d_value, enumerate_elements, identity
from circfib.orderq import pi_words
from circfib.typology import (
    T01,
    T10,
    T11,
    classify,
    fib_partition,
    image_sets,
    k_pi_type_check,
    sigma_relation_check,
    structural_class,
)


def test_classify_examples():
    assert classify(parse_word("0001")) == T01
    assert classify(parse_word("0010")) == T10
    assert classify(parse_word("001001")) == T11


def test_classify_identity_conventions():
    assert classify(identity(3)) == T01
    # the other identity representative canonicalizes to (01)^l first
    assert classify(parse_word("1010")) == T01


def test_classify_total_and_unique():
    for ell in range(2, 6):
        for u in enumerate_elements(ell):
            assert classify(u) in (T01, T10, T11)


def test_structural_class_examples():
    assert structural_class(parse_word("0010")) == classify(parse_word("0010"))
    assert structural_class(parse_word("1000")) == classify(parse_word("1000")) == T10
    assert structural_class(parse_word("001001")) == T11
    with pytest.raises(InvalidWordError):
        structural_class(identity(2))


def test_structural_class_agrees_exhaustively():
    for ell in range(2, 6):
        ident = identity(ell)
        for u in enumerate_elements(ell):
            if u == ident:
                continue
            assert structural_class(u) == classify(u), u


def test_class_sizes_ell2():
    tags = {}
    for u in enumerate_elements(2):
        tags.setdefault(classify(u), []).append(u)
    assert len(tags[T01]) == 3  # includes the identity by convention
    assert len(tags[T10]) == 2
    assert T11 not in tags


def test_image_sets_ell2_values():
    sets = image_sets(2)
    assert sets[T10].computed == frozenset({1, 3, 4})
    assert sets[T10].formula == frozenset({1, 3, 4})
    assert sets[T10].exact and sets[T10].offset == 0
    assert sets[T01].computed == frozenset({2, 5, 7})
    assert sets[T01].formula == frozenset({1, 4, 6})
    assert sets[T01].offset == 1
    assert sets[T11].computed == frozenset() == sets[T11].formula


def test_image_set_offsets_stable():
    for ell in range(2, 6):
        sets = image_sets(ell)
        assert sets[T10].exact, ell
        assert sets[T01].offset == 1, ell
        assert sets[T11].offset == 0, ell  # exact wherever nonempty


def test_sigma_relation():
    assert sigma_relation_check(1)
    assert sigma_relation_check(2)
    assert sigma_relation_check(3)
    assert sigma_relation_check(4)


def test_fib_partition_small():
    blocks = fib_partition(3)
    assert [b.block for b in blocks] == ["ba", "ba", "ab", "ab"]
    assert {(b.a_count, b.b_count) for b in blocks} == {(1, 1)}

    blocks = fib_partition(4)
    assert len(blocks) == 3
    assert all(len(b.block) == 7 for b in blocks)
    assert {(b.a_count, b.b_count) for b in blocks} == {(4, 3)}


def test_fib_partition_block_count_is_d():
    for ell in range(3, 9):
        blocks = fib_partition(ell)
        assert len(blocks) == d_value(ell)
        assert len(blocks[0].block) * len(blocks) == fib(2 * ell - 2)


def test_fib_partition_block_weight_equals_second_pi_valuation():
    # each block's weighted count 2a + b equals the valuation of P' at q = d(l)
    for ell in range(3, 8):
        blocks = fib_partition(ell)
        _, pi_prime = pi_words(d_value(ell))
        assert 2 * blocks[0].a_count + blocks[0].b_count == valuation(pi_prime)


def test_fib_partition_domain():
    with pytest.raises(InvalidWordError):
        fib_partition(2)


def test_k_pi_type_check():
    for ell in (3, 4, 5):
        report = k_pi_type_check(ell)
        assert report.q == d_value(ell)
        assert report.single_tag_per_family
        assert report.families_distinct
        # under this package's conventions the families come out mirrored
        assert set(report.pi_tags) == {T01}
        assert set(report.pi_prime_tags) == {T10}
