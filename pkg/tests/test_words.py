import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidwork.words import (
    BraidWord,
    compose,
    conjugate_right,
    generator,
    identity,
    invert,
    permutation_image,
    power,
    reduce_free,
    word,
)


def letters_strategy(n, max_len=24):
    alphabet = [i for i in range(-(n - 1), n) if i != 0]
    return st.lists(st.sampled_from(alphabet), max_size=max_len).map(tuple)


def words_strategy(n, max_len=24):
    return letters_strategy(n, max_len).map(lambda ls: BraidWord(n, ls))


def test_letter_range_is_validated():
    with pytest.raises(ValueError):
        word(3, 3)
    with pytest.raises(ValueError):
        word(3, 0)
    with pytest.raises(ValueError):
        word(2, -2)


def test_reduce_free_examples():
    assert reduce_free(word(3, 1, -1)).letters == ()
    assert reduce_free(word(3, 1, 2, -2, 1)).letters == (1, 1)
    assert reduce_free(word(3, 1, 2, 1)).letters == (1, 2, 1)


def test_compose_and_invert_examples():
    assert compose(word(3, 1), word(3, 2)).letters == (1, 2)
    assert invert(word(3, 1, 2)).letters == (-2, -1)
    assert power(word(6, 1), 3).letters == (1, 1, 1)
    assert power(word(6, 1, 2), -2).letters == (-2, -1, -2, -1)


def test_strand_count_mismatch_is_an_error():
    with pytest.raises(ValueError):
        compose(word(3, 1), word(4, 1))
    with pytest.raises(ValueError):
        conjugate_right(word(3, 1), word(5, 1))


def test_conjugate_right_spells_the_seven_letter_twist():
    tau1 = conjugate_right(word(6, 1), word(6, 2, -3, 4))
    assert tau1.letters == (-4, 3, -2, 1, 2, -3, 4)


def test_json_round_trip():
    w = word(6, 1, 1, 1)
    assert w.to_json() == {"n": 6, "word": [1, 1, 1]}
    assert BraidWord.from_json(w.to_json()) == w


@given(words_strategy(4))
@settings(max_examples=200)
def test_reduce_free_has_no_cancelling_pairs(w):
    reduced = reduce_free(w)
    assert all(
        reduced.letters[k] != -reduced.letters[k + 1]
        for k in range(len(reduced.letters) - 1)
    )


@given(words_strategy(4), words_strategy(4))
@settings(max_examples=200)
def test_permutation_image_is_a_homomorphism(u, v):
    pu, pv = permutation_image(u), permutation_image(v)
    puv = permutation_image(compose(u, v))
    assert puv == tuple(pv[x] for x in pu)


@given(words_strategy(5))
@settings(max_examples=200)
def test_inverse_image_is_inverse_permutation(u):
    p = permutation_image(u)
    q = permutation_image(invert(u))
    assert tuple(q[x] for x in p) == tuple(range(5))
