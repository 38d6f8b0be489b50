"""Laurent polynomial arithmetic, splitting and semiring membership."""

import pytest
from hypothesis import given, strategies as st

from quivertl.laurent import (
    Laurent,
    ONE,
    SplitImpossible,
    T,
    T_INV,
    ZERO,
    is_in_plus_semiring,
    split_symmetric,
)


def L(*pairs):
    return Laurent(pairs)


small_polys = st.dictionaries(
    st.integers(-6, 6), st.integers(-9, 9), max_size=6
).map(Laurent)

nonneg_polys = st.dictionaries(
    st.integers(-6, 6), st.integers(0, 9), max_size=6
).map(Laurent)


class TestArithmetic:
    def test_zero_and_one(self):
        assert ZERO.is_zero()
        assert ONE.constant_term() == 1
        assert str(ZERO) == "0"

    def test_add_cancel(self):
        assert T + T_INV - T == T_INV
        assert L((3, 2)) + L((3, -2)) == ZERO

    def test_mul(self):
        assert (T + T_INV) * (T + T_INV) == L((2, 1), (0, 2), (-2, 1))
        assert T * T_INV == ONE

    def test_shift(self):
        assert L((0, 1), (2, 1)).shift(-1) == L((-1, 1), (1, 1))
        assert ONE.shift(3, 5) == L((3, 5))

    def test_bar(self):
        assert L((2, 1), (-1, 3)).bar() == L((-2, 1), (1, 3))
        assert (T + T_INV).bar() == T + T_INV

    def test_str_canonical(self):
        assert str(L((-1, 1), (1, 1))) == "t^-1 + t"
        assert str(L((0, 1), (2, 1))) == "1 + t^2"
        assert str(L((3, -2))) == "-2*t^3"

    def test_json_pairs_round_trip(self):
        p = L((-2, 3), (0, 1), (5, -4))
        assert Laurent.from_pairs(p.to_pairs()) == p
        assert p.to_pairs() == [[-2, 3], [0, 1], [5, -4]]

    @given(small_polys, small_polys, small_polys)
    def test_ring_laws(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)

    @given(small_polys, small_polys)
    def test_bar_is_ring_map(self, a, b):
        assert (a + b).bar() == a.bar() + b.bar()
        assert (a * b).bar() == a.bar() * b.bar()
        assert a.bar().bar() == a


class TestSplitSymmetric:
    def test_examples(self):
        e, n = split_symmetric(L((0, 1), (2, 1)))
        assert e == ONE and n == L((2, 1))
        e, n = split_symmetric(T + T_INV + L((2, 1)))
        assert e == T + T_INV and n == L((2, 1))
        e, n = split_symmetric(ONE)
        assert e == ONE and n == ZERO

    def test_impossible(self):
        # the forced symmetric part would leave t^1 with coefficient -1
        with pytest.raises(SplitImpossible):
            split_symmetric(L((-1, 2), (1, 1)))

    @given(nonneg_polys)
    def test_split_recomposes(self, f):
        try:
            e, n = split_symmetric(f)
        except SplitImpossible:
            return
        assert e + n == f
        assert e.bar() == e
        assert all(k >= 1 and c > 0 for k, c in n.terms.items())

    @given(nonneg_polys, st.dictionaries(st.integers(1, 6), st.integers(0, 9), max_size=4))
    def test_split_unique_construction(self, sym_half, pos):
        # build f = (bar-symmetric) + (positive); the split must recover it
        e = sym_half + sym_half.bar() - Laurent({0: sym_half.constant_term()})
        n = Laurent(pos)
        got_e, got_n = split_symmetric(e + n)
        assert got_e == e and got_n == n


class TestPlusSemiring:
    def test_members(self):
        assert is_in_plus_semiring(ZERO)
        assert is_in_plus_semiring(ONE)
        assert is_in_plus_semiring(T + T_INV)
        assert is_in_plus_semiring((T + T_INV) * (T + T_INV) + (T + T_INV) * 3 + 2)

    def test_non_members(self):
        assert not is_in_plus_semiring(T)
        assert not is_in_plus_semiring(T + T_INV - 1)
        assert not is_in_plus_semiring(L((2, 1), (0, 2), (-2, 1), (0, -1)))
        assert not is_in_plus_semiring(-ONE)

    @given(st.lists(st.tuples(st.integers(0, 4), st.integers(1, 5)), max_size=4))
    def test_sums_of_powers_are_members(self, terms):
        total = ZERO
        for k, c in terms:
            power = ONE
            for _ in range(k):
                power = power * (T + T_INV)
            total = total + power * c
        assert is_in_plus_semiring(total)
