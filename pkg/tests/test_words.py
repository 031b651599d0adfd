import pytest
from hypothesis import given
from hypothesis import strategies as st

from wordcf.fields import GF
from wordcf.poly import parse_poly
from wordcf.words import (
    Word,
    aux_words,
    block,
    check_identities,
    first_difference_rank,
    first_letters_differ,
    last_letters_differ,
    length_closed_form_ok,
    lengths,
    prefix,
    residual_suffixes,
    tail_periodic_symbols,
    theta_series,
    word_fraction,
    word_poly,
)

symbols = st.text(alphabet="12", min_size=0, max_size=40)
nonempty_symbols = st.text(alphabet="12", min_size=1, max_size=40)


def test_blocks_by_hand():
    assert block(1).symbols == "1"
    assert block(2).symbols == "1221"
    assert block(3).symbols == "12212121221"
    assert len(block(3)) == 11


def test_prefix_examples():
    assert prefix(4).symbols == "1221"
    assert prefix(0).symbols == ""
    assert prefix(11).symbols == "12212121221"


@pytest.mark.parametrize("n", range(1, 13))
def test_prefix_chain(n):
    assert block(n + 1).startswith(block(n))


def test_length_recurrence_values():
    table = lengths(5)
    assert table == (0, 1, 4, 11, 28, 69)
    assert len(block(5)) == 69


@pytest.mark.parametrize("n", range(1, 31))
def test_length_parity_is_odd(n):
    table = lengths(n)
    assert (table[n] + table[n - 1]) % 2 == 1


@pytest.mark.parametrize("n", range(31))
def test_length_closed_form_matches_recurrence(n):
    assert length_closed_form_ok(n)


def test_block_lengths_match_table():
    table = lengths(12)
    for n in range(13):
        assert len(block(n)) == table[n]


class TestAuxWords:
    def test_first_index_values(self):
        aux = aux_words(1)
        assert aux.u.symbols == "12"
        assert aux.v.symbols == "21"
        assert aux.up.symbols == "1221212"
        assert len(aux.up) == 3 * 1 + 0 + 4

    def test_second_index_residual(self):
        assert aux_words(2).i.symbols == "1221"

    def test_decomposition_invariants(self):
        for n in range(1, 9):
            aux = aux_words(n)
            table = lengths(n)
            assert aux.u == aux.g + aux.f
            assert aux.v == aux.h + aux.f
            assert last_letters_differ(aux.g, aux.h)
            assert len(aux.g) == (table[n] + table[n - 1] + 3) // 2
            assert len(aux.f) == len(aux.j) == (table[n] + table[n - 1] - 1) // 2


def test_letter_relations():
    assert last_letters_differ(Word("12"), Word("21"))
    assert first_letters_differ(Word("1221"), Word("21"))
    assert not last_letters_differ(Word("1"), Word("1"))
    assert not first_letters_differ(Word("1"), Word("1"))
    with pytest.raises(ValueError):
        last_letters_differ(Word(""), Word("1"))


class TestWordEncoding:
    def test_single_letter(self):
        assert word_poly(Word("1")) == parse_poly("1")

    def test_block_two(self):
        assert word_poly(Word("1221")) == parse_poly("T^3+2*T^2+2*T+1")

    def test_homomorphism_example(self):
        a, b = Word("1"), Word("2")
        lhs = word_poly(a + b)
        rhs = word_poly(a).shift(len(b)) + word_poly(b)
        assert lhs == rhs == parse_poly("T+2")

    def test_empty_word_encodes_to_zero(self):
        assert word_poly(Word("")).is_zero

    @given(a=symbols, b=symbols)
    def test_homomorphism(self, a, b):
        wa, wb = Word(a), Word(b)
        assert word_poly(wa + wb) == word_poly(wa).shift(len(b)) + word_poly(wb)

    def test_fraction_reduces_only_powers_of_t(self):
        f = word_fraction(Word("1221"))
        assert f.num == parse_poly("T^3+2*T^2+2*T+1")
        assert f.den == parse_poly("T^4")

    def test_general_alphabet(self):
        w = Word("1221", alphabet=(1, -1))
        assert word_poly(w) == parse_poly("T^3-T^2-T+1")
        assert str(w) == "1,-1,-1,1"
        assert str(Word("1221")) == "1221"

    def test_alphabet_must_be_distinct(self):
        with pytest.raises(ValueError):
            Word("12", alphabet=(1, 1))

    def test_gf_coefficients(self):
        assert word_poly(Word("1221"), GF(3)).coeffs == (1, 2, 2, 1)


class TestFirstDifferenceRank:
    def test_against_tail_periodic_approximant(self):
        # the word versus u v v v ... at n = 1 first differs at rank 10
        w = prefix(40).symbols
        assert first_difference_rank(w, tail_periodic_symbols("12", "21", 40)) == 10

    def test_against_pure_periodic_approximant(self):
        w = prefix(40).symbols
        assert first_difference_rank(w, tail_periodic_symbols("", "1221212", 40)) == 15

    def test_rank_one(self):
        assert first_difference_rank("21", "12") == 1

    def test_agreeing_streams_raise(self):
        with pytest.raises(ValueError, match="streams agree to horizon"):
            first_difference_rank("1212", "1212")
        with pytest.raises(ValueError, match="streams agree to horizon"):
            first_difference_rank(iter("121212"), iter("121211"), horizon=3)

    @given(a=nonempty_symbols, b=nonempty_symbols)
    def test_rank_equals_valuation_of_encoding_difference(self, a, b):
        # pad to the same length so the encodings share a denominator
        n = max(len(a), len(b))
        a, b = a.ljust(n, "1"), b.ljust(n, "1")
        pa, pb = word_poly(Word(a)), word_poly(Word(b))
        if pa == pb:
            return
        rank = first_difference_rank(a, b)
        assert rank == n - (pa - pb).degree


def test_identity_report_boundary_and_generic():
    at_one = check_identities(1)
    assert {c.status for c in at_one} == {"pass", "skip"}
    skipped = [c for c in at_one if c.status == "skip"]
    assert [c.name for c in skipped] == ["u == u_prev v_prev^2"]
    for n in (2, 5, 10):
        assert all(c.status == "pass" for c in check_identities(n))


def test_residual_suffixes_at_one():
    a, b = residual_suffixes(1)
    assert a.symbols == "21212212121221"
    assert b.symbols == "1221212"
    assert first_letters_differ(a, b)


def test_theta_series_letters():
    s = theta_series(9)
    assert s.top == -1
    assert s.known_down == -9
    assert s.coeffs == prefix(9).values()
    s3 = theta_series(9, GF(3))
    assert s3.coeffs == tuple(v % 3 for v in prefix(9).values())


def test_word_concat_requires_same_alphabet():
    with pytest.raises(ValueError):
        Word("1") + Word("1", alphabet=(1, 3))
