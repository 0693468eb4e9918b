import pytest
from hypothesis import given

from qsymops.compositions import (
    PartialSumSet,
    coarsenings,
    composition,
    compositions_of,
    compositions_up_to,
    concat,
    format_composition,
    from_partial_sums,
    lex_leq,
    odot,
    omega,
    parse_composition,
    partial_sums,
    refinements,
    reverse,
    size,
)

from conftest import comps


@pytest.mark.parametrize("alpha, n, elems", [
    ((2, 1), 3, (2,)),
    ((), 0, ()),
    ((1, 1, 1), 3, (1, 2)),
])
def test_partial_sums(alpha, n, elems):
    assert partial_sums(alpha) == (n, elems)
    assert from_partial_sums(PartialSumSet(n, elems)) == alpha


def test_from_partial_sums_no_cuts():
    assert from_partial_sums((4, ())) == (4,)


@pytest.mark.parametrize("bad", [(3, (0,)), (3, (3,)), (3, (2, 1)), (1, (1,)), (-1, ())])
def test_from_partial_sums_rejects(bad):
    with pytest.raises(ValueError):
        from_partial_sums(bad)


def test_composition_rejects_nonpositive():
    with pytest.raises(ValueError):
        composition([2, 0])


def test_concat_odot_reverse():
    assert concat((1, 2), (3,)) == (1, 2, 3)
    assert concat((), (2,)) == (2,)
    assert concat((2,), (1,)) == (2, 1)
    assert odot((1, 2), (3,)) == (1, 5)
    assert odot((), (1, 1)) == (1, 1)
    assert odot((1,), (1,)) == (2,)
    assert reverse((1, 2)) == (2, 1)
    assert reverse(()) == ()
    assert reverse((3,)) == (3,)


def test_omega_examples():
    assert omega((2,)) == (1, 1)
    assert omega(()) == ()
    assert omega((2, 1)) == (2, 1)
    assert omega((1, 1, 1)) == (3,)


def test_coarsenings():
    assert coarsenings((1, 1)) == {(1, 1), (2,)}
    assert coarsenings((3,)) == {(3,)}
    assert coarsenings((1, 1, 1)) == {(1, 1, 1), (1, 2), (2, 1), (3,)}
    assert refinements((2,)) == {(2,), (1, 1)}


def test_compositions_of():
    assert list(compositions_of(0)) == [()]
    assert list(compositions_of(2)) == [(2,), (1, 1)]
    assert len(list(compositions_of(4))) == 8
    assert len(list(compositions_up_to(6))) == 64


def test_lex_leq():
    assert lex_leq((1, 2), (2, 1))
    assert lex_leq((2,), (2,))
    assert not lex_leq((2, 1), (1, 1, 1))
    assert lex_leq((2,), (2, 1))


def test_parse_format():
    assert parse_composition("[2,1,3]") == (2, 1, 3)
    assert parse_composition("[]") == ()
    assert format_composition((2, 1)) == "[2,1]"
    for bad in ["2,1", "[0]", "[a]"]:
        with pytest.raises(ValueError):
            parse_composition(bad)


@given(comps(8))
def test_omega_involution_and_size(a):
    assert omega(omega(a)) == a
    assert size(omega(a)) == size(a)
    assert from_partial_sums(partial_sums(a)) == a


@given(comps(4), comps(4))
def test_omega_swaps_concat_and_odot(a, b):
    assert omega(concat(a, b)) == odot(omega(b), omega(a))
    assert omega(odot(a, b)) == concat(omega(b), omega(a))


@given(comps(6))
def test_refinement_coarsening_duality(a):
    for b in refinements(a):
        assert a in coarsenings(b)
    assert len(refinements(a)) == 2 ** (size(a) - len(a)) if a else 1
