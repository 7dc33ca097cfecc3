import pytest
from hypothesis import given, strategies as st

from restricted_hanoi import (
    CapacityError,
    State,
    StateError,
    all_states,
    decode,
    encode,
    format_state,
    parse_state,
    peg_content,
)


def big_first(*pegs, m=3):
    return State.from_largest_first(pegs, m)


class TestEncoding:
    def test_empty(self):
        assert encode(State((), 3)) == 0

    def test_all_on_first_peg(self):
        assert encode(big_first(1, 1)) == 0

    def test_disc_one_is_least_significant(self):
        # u_2 u_1 = 1 2
        assert encode(big_first(1, 2)) == 1

    def test_decode_examples(self):
        assert decode(0, 2, 3) == big_first(1, 1)
        assert decode(1, 2, 3) == State((2, 1), 3)
        assert decode(8, 2, 3) == big_first(3, 3)

    @pytest.mark.parametrize("m", [3, 4, 5])
    @pytest.mark.parametrize("n", range(0, 7))
    def test_bijection(self, n, m):
        if m**n > 20_000:
            pytest.skip("covered by the property test")
        for code in range(m**n):
            assert encode(decode(code, n, m)) == code

    @given(st.integers(0, 6), st.integers(3, 5), st.data())
    def test_bijection_property(self, n, m, data):
        code = data.draw(st.integers(0, m**n - 1))
        assert encode(decode(code, n, m)) == code

    def test_out_of_range_code(self):
        with pytest.raises(StateError):
            decode(9, 2, 3)
        with pytest.raises(StateError):
            decode(-1, 2, 3)

    def test_capacity(self):
        with pytest.raises(CapacityError):
            decode(0, 64, 3)
        with pytest.raises(CapacityError):
            next(all_states(40, 3))
        # 3**39 < 2**63 < 3**40
        top = decode(3**39 - 1, 39, 3)
        assert top == State((3,) * 39, 3)
        assert encode(top) == 3**39 - 1
        with pytest.raises(CapacityError):
            encode(State((3,) * 40, 3))

    def test_bad_peg_label(self):
        with pytest.raises(StateError):
            State((4,), 3)


class TestAllStates:
    def test_counts(self):
        assert len(list(all_states(0, 3))) == 1
        assert len(list(all_states(2, 3))) == 9
        assert len(list(all_states(2, 4))) == 16

    @pytest.mark.parametrize("n,m", [(3, 3), (3, 4), (4, 5)])
    def test_ascending_codes_no_duplicates(self, n, m):
        codes = [encode(s) for s in all_states(n, m)]
        assert codes == list(range(m**n))


class TestPegContent:
    def test_examples(self):
        assert peg_content(big_first(1, 1), 1) == {1, 2}
        assert peg_content(big_first(1, 2), 3) == set()
        assert peg_content(big_first(3, 1, 3), 3) == {1, 3}

    @given(st.integers(0, 6), st.integers(3, 6), st.data())
    def test_partition(self, n, m, data):
        s = State(tuple(data.draw(st.lists(st.integers(1, m), min_size=n, max_size=n))), m)
        parts = [peg_content(s, p) for p in range(1, m + 1)]
        assert sum(len(x) for x in parts) == n
        assert set().union(*parts) == set(range(1, n + 1))


class TestText:
    def test_comma_form(self):
        assert parse_state("1,1", 2, 4) == State((1, 1), 4)

    def test_digit_form_is_largest_first(self):
        s = parse_state("21", 2, 3)
        assert s.peg_of(2) == 2 and s.peg_of(1) == 1

    def test_empty(self):
        assert parse_state("", 0, 3) == State((), 3)

    def test_wide_pegs_use_commas(self):
        s = State.from_largest_first((10, 2), 12)
        assert format_state(s) == "10,2"
        assert parse_state("10,2", 2, 12) == s

    @pytest.mark.parametrize("text,n,m", [("1,2,3", 2, 3), ("4", 1, 3), ("x", 1, 3), ("0", 1, 3)])
    def test_errors(self, text, n, m):
        with pytest.raises(StateError):
            parse_state(text, n, m)

    @given(st.integers(0, 6), st.integers(3, 14), st.data())
    def test_round_trip(self, n, m, data):
        s = State(tuple(data.draw(st.lists(st.integers(1, m), min_size=n, max_size=n))), m)
        assert parse_state(format_state(s), n, m) == s
