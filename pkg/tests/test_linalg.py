from hypothesis import given, strategies as st

import oracles
from sifre.linalg import integer_rank

matrices = st.integers(1, 6).flatmap(
    lambda cols: st.lists(st.lists(st.integers(-4, 4), min_size=cols, max_size=cols), min_size=0, max_size=7)
)


def test_small_cases():
    assert integer_rank([]) == 0
    assert integer_rank([[0, 0], [0, 0]]) == 0
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[0, 1], [1, 0]]) == 2


def test_large_entries_stay_exact():
    big = 10 ** 30
    assert integer_rank([[big, big + 1], [big + 1, big + 2]]) == 2
    assert integer_rank([[big, 2 * big], [3, 6]]) == 1


@given(matrices)
def test_rank_matches_fraction_oracle(rows):
    assert integer_rank(rows) == oracles.rank(rows)


@given(matrices)
def test_rank_of_transpose(rows):
    if rows:
        cols = [list(c) for c in zip(*rows)]
        assert integer_rank(cols) == integer_rank(rows)


@given(matrices)
def test_input_not_modified(rows):
    copy = [list(r) for r in rows]
    integer_rank(rows)
    assert rows == copy
