import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import partitions
from simcores.errors import DomainError
from simcores.partitions import (
    EMPTY,
    BoundaryWord,
    Partition,
    a_core_of,
    boundary_word,
    cells,
    conjugate,
    first_column_hooks,
    from_beta_set,
    hook_length,
    hook_lengths,
    is_core,
    is_core_beta,
    is_core_cellscan,
    is_self_conjugate,
    parse_partition,
    partition_from_beads,
    remove_rim_hook,
    rim_hook_cells,
    size_from_beta_set,
    word_to_partition,
)

P = Partition([5, 4, 2, 1, 1])


def test_parse_and_validate():
    assert parse_partition("5,4,2,1,1") == P
    assert parse_partition("(3,1)") == (3, 1)
    assert parse_partition("") == EMPTY
    with pytest.raises(DomainError, match="weakly decreasing"):
        parse_partition("1,2")
    with pytest.raises(DomainError):
        parse_partition("3,0")
    with pytest.raises(DomainError):
        parse_partition("a,b")
    assert P.size == 13 and P.length == 5
    assert str(P) == "(5,4,2,1,1)" and str(EMPTY) == "()"


def test_conjugate_example():
    assert conjugate(P) == (5, 3, 2, 2, 1)
    assert conjugate(EMPTY) == EMPTY
    assert is_self_conjugate((2, 1)) and not is_self_conjugate((2,))


def test_hooks_example():
    assert hook_length(P, (1, 1)) == 9
    assert hook_length(P, (2, 2)) == 4
    assert first_column_hooks(P) == [9, 7, 4, 2, 1]
    assert hook_lengths(P) == [[9, 6, 4, 3, 1], [7, 4, 2, 1], [4, 1], [2], [1]]
    with pytest.raises(DomainError):
        hook_length(P, (3, 3))
    with pytest.raises(DomainError):
        hook_length(EMPTY, (1, 1))


def test_core_reduction_example():
    assert a_core_of(P, 6) == (3, 1, 1, 1, 1)
    assert not is_core(P, 6) and is_core((3, 1, 1, 1, 1), 6)
    assert a_core_of(P, 1) == EMPTY


def test_rim_hook_removal_example():
    (cell,) = rim_hook_cells(P, 6)
    assert hook_length(P, cell) == 6
    assert remove_rim_hook(P, cell).size == 7
    assert remove_rim_hook(P, (1, 1)) == (3, 1)  # hook 9 removes the whole rim from (1,1)


def test_boundary_word_example():
    w = boundary_word(P)
    assert str(w) == "1001011010"
    # trailing horizontal steps do not change the word
    longer = BoundaryWord.from_string("100101101011")
    assert longer.canonical() == w
    assert word_to_partition(longer) == P
    assert len(w.inversions()) == P.size
    assert str(boundary_word(EMPTY)) == ""
    with pytest.raises(DomainError):
        BoundaryWord.from_string("102")


def test_beads():
    assert partition_from_beads([-1, 9, 7, 4, 2, 1]) == P
    assert partition_from_beads([3, 4, 5]) == EMPTY
    assert from_beta_set([3, 1]) == (2, 1)
    assert size_from_beta_set([9, 7, 4, 2, 1]) == 13
    with pytest.raises(DomainError):
        from_beta_set([0, 2])


@given(partitions)
def test_conjugation_is_an_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size
    assert len(list(cells(p))) == p.size


@given(partitions)
def test_beta_set_round_trip(p):
    beta = first_column_hooks(p)
    assert from_beta_set(beta) == p
    assert size_from_beta_set(beta) == p.size
    assert partition_from_beads([-3, -2, -1, *beta]) == p


@given(partitions)
def test_boundary_word_round_trip(p):
    w = boundary_word(p)
    assert word_to_partition(w) == p
    assert len(w.inversions()) == p.size


@settings(max_examples=200)
@given(partitions, st.integers(1, 9))
def test_core_tests_agree(p, a):
    assert is_core_beta(first_column_hooks(p), a) == is_core_cellscan(p, a) == is_core(p, a)
    assert is_core(p, a) == is_core(conjugate(p), a)


@settings(max_examples=200)
@given(partitions, st.integers(1, 9))
def test_rim_hook_removal_shrinks_by_hook(p, a):
    for c in rim_hook_cells(p, a):
        q = remove_rim_hook(p, c)
        assert q.size == p.size - a
        assert a_core_of(q, a) == a_core_of(p, a)


@settings(max_examples=200)
@given(partitions, st.integers(1, 9))
def test_core_reduction(p, a):
    core = a_core_of(p, a)
    assert is_core(core, a)
    assert (p.size - core.size) % a == 0
    assert a_core_of(core, a) == core
    # peeling hooks one at a time reaches the same core
    q = p
    while (hooks := rim_hook_cells(q, a)):
        q = remove_rim_hook(q, hooks[-1])
    assert q == core
