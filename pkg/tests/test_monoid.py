import pytest
from hypothesis import given
from hypothesis import strategies as st

from enumtree.monoid import (
    GEN_S,
    GEN_T,
    IDENTITY,
    Mat2,
    complement,
    index_to_word,
    mat_mul,
    matrix_to_word,
    mirror_index,
    word_to_index,
    word_to_matrix,
)
from oracles import bfs_words

words = st.text(alphabet=st.sampled_from("ST"), max_size=64)


def test_generator_products():
    assert mat_mul(GEN_S, GEN_T) == Mat2(1, 1, 1, 2)
    assert mat_mul(IDENTITY, Mat2(3, 4, 8, 11)) == Mat2(3, 4, 8, 11)
    assert word_to_matrix("SSTSST") == Mat2(3, 4, 8, 11)


def test_mat2_invariants_enforced():
    with pytest.raises(ValueError):
        Mat2(1, 0, 0, 2)  # det 2
    with pytest.raises(ValueError):
        Mat2(1, 2, 1, 1)  # det -1
    with pytest.raises(ValueError):
        Mat2(1, -1, 0, 1)  # negative entry


def test_complement_examples():
    assert complement(Mat2(3, 4, 8, 11)) == Mat2(11, 8, 4, 3)
    assert complement(IDENTITY) == IDENTITY
    assert complement(GEN_S) == GEN_T


@given(words)
def test_complement_involution(w):
    x = word_to_matrix(w)
    assert complement(complement(x)) == x


@given(st.tuples(words, words))
def test_complement_is_multiplicative(pair):
    a, b = map(word_to_matrix, pair)
    assert complement(mat_mul(a, b)) == mat_mul(complement(a), complement(b))


@given(words)
def test_left_t_factor_via_complement(w):
    a = word_to_matrix(w)
    assert mat_mul(GEN_T, a) == complement(mat_mul(GEN_S, complement(a)))


def test_word_matrix_examples():
    assert word_to_matrix("TSS") == Mat2(3, 1, 2, 1)
    assert word_to_matrix("") == IDENTITY
    assert matrix_to_word(Mat2(3, 1, 2, 1)) == "TSS"
    assert matrix_to_word(IDENTITY) == ""


@given(words)
def test_word_round_trip(w):
    assert matrix_to_word(word_to_matrix(w)) == w


def _strips_s(x: Mat2) -> bool:
    return x.c >= x.a and x.d >= x.b


@given(words.filter(lambda w: w != ""))
def test_unique_leading_factor_trichotomy(w):
    x = word_to_matrix(w)
    assert _strips_s(x) != _strips_s(complement(x))


def test_index_examples():
    assert word_to_index("") == 1
    assert word_to_index("TSS") == 9
    assert word_to_index("SSTSST") == 100
    assert index_to_word(1) == ""
    assert index_to_word(9) == "TSS"
    assert index_to_word(100) == "SSTSST"


def test_index_against_breadth_first_enumeration():
    for position, w in enumerate(bfs_words(6), start=1):
        assert word_to_index(w) == position
        assert index_to_word(position) == w


@given(words)
def test_index_round_trip(w):
    assert index_to_word(word_to_index(w)) == w


@given(st.integers(min_value=1, max_value=2**40))
def test_index_round_trip_from_int(k):
    assert word_to_index(index_to_word(k)) == k


def test_index_validation():
    with pytest.raises(ValueError):
        index_to_word(0)
    with pytest.raises(ValueError):
        word_to_matrix("SXT")


@given(words)
def test_determinant_preserved(w):
    x = word_to_matrix(w)
    assert x.a * x.d - x.b * x.c == 1


@given(words)
def test_complement_mirrors_tree_index(w):
    x = word_to_matrix(w)
    k = word_to_index(w)
    assert word_to_index(matrix_to_word(complement(x))) == mirror_index(k)


def test_mirror_index_is_same_row_involution():
    for k in range(1, 1 << 10):
        mk = mirror_index(k)
        assert mk.bit_length() == k.bit_length()
        assert mirror_index(mk) == k
