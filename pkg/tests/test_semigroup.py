import pytest
from hypothesis import given, strategies as st

import oracles
from sifre.errors import DimensionMismatch, EmptyInput, NonMinimalInput, NonPositiveGenerator, SifreError
from sifre.semigroup import (
    AffineSemigroup,
    NumericalSemigroup,
    SymmetryClass,
    make_affine,
    make_numerical,
    parse_affine_generators,
    parse_generators,
)

gens_lists = st.lists(st.integers(2, 25), min_size=1, max_size=5)


def content_one(gens):
    from math import gcd
    from functools import reduce
    return reduce(gcd, gens) == 1


# -- worked examples ---------------------------------------------------------------

def test_gaps_of_4_5():
    S = NumericalSemigroup([4, 5])
    assert S.gaps == (1, 2, 3, 6, 7, 11)
    assert S.frobenius == 11


def test_7_9_10_gap_data():
    S = NumericalSemigroup([7, 9, 10])
    assert S.gaps == (1, 2, 3, 4, 5, 6, 8, 11, 12, 13, 15, 22)
    assert S.frobenius == 22
    assert S.gap_data.genus == 12
    assert S.pseudo_frobenius == (11, 22)
    # F/2 = 11 is the only unpaired gap
    assert S.symmetry_class is SymmetryClass.PSEUDO_SYMMETRIC


def test_symmetric_example():
    assert NumericalSemigroup([4, 5]).symmetry_class is SymmetryClass.SYMMETRIC
    assert NumericalSemigroup([31, 37, 41]).symmetry_class is SymmetryClass.NEITHER


def test_minimization_drops_redundant():
    S = NumericalSemigroup([155, 185, 205, 328, 410])
    assert S.generators == (155, 185, 205, 328)
    kept = NumericalSemigroup([155, 185, 205, 328, 410], minimize=False)
    assert kept.generators == (155, 185, 205, 328, 410)
    assert not kept.is_minimal
    assert kept.content == 1


def test_strict_rejects_redundant():
    with pytest.raises(NonMinimalInput):
        NumericalSemigroup([3, 5, 6], strict=True)
    with pytest.raises(NonMinimalInput):
        make_numerical([3, 3, 5], strict=True)


@pytest.mark.parametrize("bad, err", [([], EmptyInput), ([0, 3], NonPositiveGenerator), ([-2, 5], NonPositiveGenerator)])
def test_bad_numerical_input(bad, err):
    with pytest.raises(err):
        NumericalSemigroup(bad)


def test_errors_are_value_errors():
    assert issubclass(SifreError, ValueError)


def test_content_and_scaling():
    S = NumericalSemigroup([31, 37, 41])
    T = S.scale(19)
    assert T.content == 19
    assert T.generators == (589, 703, 779)
    assert T.contains(19 * 109) and not T.contains(109)
    assert T.scale_down(19) == S
    with pytest.raises(SifreError):
        T.frobenius


def test_factorization_is_lex_smallest():
    S = NumericalSemigroup([31, 37, 41])
    assert S.factorization(109) == (1, 1, 1)
    assert S.factorization(150) == (1, 1, 2)
    assert S.factorization(1) is None
    assert S.factorizations(0) == [(0, 0, 0)]


def test_apery_set():
    S = NumericalSemigroup([7, 9, 10])
    assert S.apery_set() == (0, 9, 10, 18, 19, 20, 29)
    assert max(S.apery_set()) - 7 == S.frobenius
    assert S.apery_set(9)[0] == 0


def test_parse():
    assert parse_generators("31, 37,41") == [31, 37, 41]
    assert parse_affine_generators("2,0;0,2;1,1") == [(2, 0), (0, 2), (1, 1)]
    with pytest.raises(ValueError):
        parse_generators("3,a")


# -- affine ------------------------------------------------------------------------

def test_affine_membership_and_factorization():
    A = AffineSemigroup([(2, 0), (0, 2), (1, 1)])
    assert A.contains((3, 1)) and not A.contains((1, 0)) and not A.contains((2, 1))
    assert A.factorizations((2, 2)) == [(0, 0, 2), (1, 1, 0)]
    assert A.factorization((2, 2)) == (0, 0, 2)


def test_affine_minimization_and_errors():
    A = make_affine([(1, 0), (0, 1), (1, 1)])
    assert A.generators == ((1, 0), (0, 1))
    with pytest.raises(NonMinimalInput):
        AffineSemigroup([(1, 0), (0, 1), (1, 1)], strict=True)
    with pytest.raises(DimensionMismatch):
        AffineSemigroup([(1, 0), (1,)])
    with pytest.raises(DimensionMismatch):
        A.contains((1, 1, 1))
    with pytest.raises(NonPositiveGenerator):
        AffineSemigroup([(0, 0)])


# -- properties against the brute-force oracle -------------------------------------------

@given(gens_lists, st.integers(0, 200))
def test_membership_matches_sieve(gens, x):
    S = NumericalSemigroup(gens)
    assert S.contains(x) == oracles.sieve(gens, x)[x]


@given(gens_lists.filter(content_one))
def test_gap_data_matches_oracle(gens):
    S = NumericalSemigroup(gens)
    assert list(S.gaps) == oracles.gaps(gens)
    assert S.frobenius == oracles.frobenius(gens)
    assert list(S.pseudo_frobenius) == oracles.pseudo_frobenius(gens)
    assert S.symmetry_class.value == oracles.symmetry(gens)


@given(gens_lists.filter(content_one))
def test_frobenius_is_max_apery_minus_multiplicity(gens):
    S = NumericalSemigroup(gens)
    ap = S.apery_set()
    assert S.frobenius == max(ap) - S.generators[0]
    # each Apery element is the least element of S in its residue class
    m = S.generators[0]
    assert sorted(a % m for a in ap) == list(range(m))
    assert all(not S.contains(a - m) for a in ap if a)


@given(st.lists(st.integers(2, 12), min_size=1, max_size=4), st.integers(0, 60))
def test_factorizations_match_oracle(gens, x):
    S = NumericalSemigroup(gens, minimize=False)
    expected = oracles.factorizations(x, list(S.generators))
    assert S.factorizations(x) == expected
    assert S.factorization(x) == (expected[0] if expected else None)


@given(gens_lists.filter(content_one), st.integers(2, 7), st.integers(0, 150))
def test_scaled_membership(gens, c, x):
    S = NumericalSemigroup(gens)
    assert S.scale(c).contains(x) == (x % c == 0 and S.contains(x // c))


@given(gens_lists, st.permutations(range(5)))
def test_presentation_order_irrelevant(gens, perm):
    shuffled = [gens[i] for i in perm if i < len(gens)]
    assert NumericalSemigroup(shuffled) == NumericalSemigroup(gens)


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)).filter(any), min_size=1, max_size=4))
def test_affine_membership_matches_oracle(gens):
    A = AffineSemigroup(gens)
    box = (7, 7)
    members = oracles.affine_members(gens, box)
    for z in [(i, j) for i in range(8) for j in range(8)]:
        assert A.contains(z) == (z in members)


def test_small_examples():
    S = NumericalSemigroup([2, 4, 6])
    assert S.generators == (2,) and S.content == 2
    T = NumericalSemigroup([4, 5])
    assert not T.contains(11) and T.contains(0) and T.contains(12) and not T.contains(-4)
    assert T.scale(1) == T
    assert NumericalSemigroup([2, 3]).gaps == (1,)
    U = NumericalSemigroup([3, 5]).scale(3)
    assert U.generators == (9, 15) and U.content == 3 and U.contains(24)
    assert AffineSemigroup([(2, 0), (0, 2), (1, 1)]).contains((0, 0))
