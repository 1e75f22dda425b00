import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidwork.catalog import artin_system, coxeter_system, tau_word
from braidwork.groups import ARTIN3_A, ARTIN3_B, PERM3_R, PERM3_S, PERM3_T, artin_from_word
from braidwork.hurwitz import (
    OrbitCapExceeded,
    act_letter,
    act_word,
    orbit,
    ordered_product,
    schreier_generators,
    stabilizes,
)
from braidwork.garside import equal
from braidwork.words import BraidWord, compose, conjugate_right, invert, word

from test_words import words_strategy

s, t, r = PERM3_S, PERM3_T, PERM3_R
a, b = ARTIN3_A, ARTIN3_B


# --- independent oracle ----------------------------------------------------
# Exhaustive closure over S_3^n computed from scratch: permutations as
# image tuples, composition written out directly, both generator signs.

def _mul(p, q):
    return tuple(q[x] for x in p)


def _inv(p):
    out = [0, 0, 0]
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def oracle_orbit_size(base):
    seen = {base}
    frontier = [base]
    while frontier:
        nxt = []
        for tup in frontier:
            for i in range(len(tup) - 1):
                g, h = tup[i], tup[i + 1]
                images = [
                    tup[:i] + (_mul(_mul(g, h), _inv(g)), g) + tup[i + 2:],
                    tup[:i] + (h, _mul(_mul(_inv(h), g), h)) + tup[i + 2:],
                ]
                for im in images:
                    if im not in seen:
                        seen.add(im)
                        nxt.append(im)
        frontier = nxt
    return len(seen)


ORACLE_S = (1, 0, 2)
ORACLE_T = (0, 2, 1)


def oracle_alternating(n):
    return tuple(ORACLE_S if i % 2 == 0 else ORACLE_T for i in range(n))


# sizes computed by the oracle, frozen as regression values
ORACLE_ORBIT_SIZES = {2: 3, 3: 8, 4: 27, 5: 80, 6: 240}


def test_oracle_orbit_sizes_are_the_frozen_values():
    for n, expected in ORACLE_ORBIT_SIZES.items():
        assert oracle_orbit_size(oracle_alternating(n)) == expected


def test_orbit_sizes_match_oracle():
    for n, expected in ORACLE_ORBIT_SIZES.items():
        assert len(orbit(coxeter_system(n))) == expected


# --- action basics ---------------------------------------------------------

def test_act_letter_examples():
    assert act_letter(1, 1, (s, t, s)) == (r, s, s)
    tup = (s, t, r, s)
    assert act_letter(1, -1, act_letter(1, 1, tup)) == tup
    assert act_letter(2, 1, act_letter(2, -1, tup)) == tup


def test_act_letter_index_range():
    with pytest.raises(ValueError):
        act_letter(3, 1, (s, t, s))


def test_act_word_examples():
    assert act_word(word(4, -1, 2), (s, t, s, t)) == (r, t, t, t)
    assert act_word(word(4), (s, t, s, t)) == (s, t, s, t)
    tau1 = tau_word(1, 6)
    conj = artin_from_word("BB")
    expected = tuple(conj * g * conj.inverse() for g in artin_system(6))
    assert act_word(tau1, artin_system(6)) == expected
    assert expected[0] == artin_from_word("BBabb")


def test_act_word_arity_mismatch():
    with pytest.raises(ValueError):
        act_word(word(5, 1), (s, t, s))


def test_stabilizes_examples():
    assert stabilizes(word(2, 1, 1, 1), (s, t))
    assert not stabilizes(word(2, 1), (s, t))
    assert stabilizes(tau_word(1, 6), coxeter_system(6))
    assert not stabilizes(tau_word(1, 6), artin_system(6))


def test_orbit_of_constant_tuple_is_a_point():
    assert len(orbit((s, s))) == 1
    assert len(orbit((t, t, t))) == 1


def test_orbit_cap_raises():
    with pytest.raises(OrbitCapExceeded):
        orbit(coxeter_system(6), cap=100)


def test_artin_orbit_needs_a_cap():
    # the length-5 alternating Artin system has an infinite orbit
    with pytest.raises(OrbitCapExceeded):
        orbit(artin_system(5), cap=50)


def test_short_artin_orbits_match_coxeter_orbits():
    # for lengths up to 4 the Artin and Coxeter stabilizers coincide,
    # so the orbits have the same size
    for n in (2, 3, 4):
        assert len(orbit(artin_system(n))) == ORACLE_ORBIT_SIZES[n]


def test_transversal_is_positive_prefix_closed_and_correct():
    table = orbit(coxeter_system(4))
    words = set(w.letters for w in table.transversal.values())
    for elt, w in table.transversal.items():
        assert all(letter > 0 for letter in w.letters)
        assert act_word(w, table.base) == elt
        if w.letters:
            # removing the letter applied last (the leftmost one) gives
            # another transversal word: the Schreier property in BFS order
            assert w.letters[1:] in words


def test_schreier_generators_stabilize_and_count():
    table = orbit(coxeter_system(3))
    gens = schreier_generators(table)
    assert len(gens) == len(table) * 2
    for g in gens:
        assert stabilizes(g, table.base)


def test_schreier_generator_contains_triple_twist_for_two_strands():
    table = orbit(coxeter_system(2))
    gens = schreier_generators(table)
    assert any(equal(g, word(2, 1, 1, 1)) for g in gens)


# --- properties ------------------------------------------------------------

TRANSPOSITIONS = (s, t, r)


@given(words_strategy(5, max_len=16), st.lists(st.sampled_from(TRANSPOSITIONS),
                                               min_size=5, max_size=5))
@settings(max_examples=300)
def test_product_invariant(w, entries):
    tup = tuple(entries)
    assert ordered_product(act_word(w, tup)) == ordered_product(tup)


@given(words_strategy(5, max_len=10), words_strategy(5, max_len=10),
       st.lists(st.sampled_from(TRANSPOSITIONS), min_size=5, max_size=5))
@settings(max_examples=200)
def test_action_is_compatible_with_composition(u, v, entries):
    tup = tuple(entries)
    assert act_word(compose(u, v), tup) == act_word(u, act_word(v, tup))


@given(st.integers(min_value=1, max_value=4),
       st.lists(st.sampled_from(TRANSPOSITIONS), min_size=5, max_size=5))
@settings(max_examples=100)
def test_inverse_acts_like_square_on_transposition_tuples(i, entries):
    tup = tuple(entries)
    assert act_letter(i, -1, tup) == act_word(word(5, i, i), tup)


def test_equal_words_act_identically_on_the_full_orbit():
    table = orbit(coxeter_system(6))
    pairs = [
        (word(6, 1, 2, 1), word(6, 2, 1, 2)),
        (word(6, 1, 3), word(6, 3, 1)),
        (word(6, 4, -4, 5), word(6, 5)),
    ]
    for u, v in pairs:
        assert equal(u, v)
        for elt in table.transversal:
            assert act_word(u, elt) == act_word(v, elt)


# --- desk-scale free-action checks ----------------------------------------

def reduced_words(letters, max_len):
    """Freely reduced words over the given letters and their inverses,
    as tuples of (index, sign)."""
    out = [()]
    frontier = [()]
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for idx in range(len(letters)):
                for sign in (1, -1):
                    if w and w[-1] == (idx, -sign):
                        continue
                    nxt.append(w + ((idx, sign),))
        out.extend(nxt)
        frontier = nxt
    return out


def test_squares_subgroup_moves_alternating_artin_systems():
    aa, bb = artin_from_word("aa"), artin_from_word("bb")
    letters = (aa, bb)
    for wspec in reduced_words(letters, max_len=3):
        if not wspec:
            continue
        h = artin_from_word("")
        for idx, sign in wspec:
            h = h * (letters[idx] if sign > 0 else letters[idx].inverse())
        for n in range(2, 7):
            system = artin_system(n)
            conjugated = tuple(h * g * h.inverse() for g in system)
            assert conjugated != system


def test_twist_words_act_freely_on_the_alternating_artin_system():
    tau1, tau2 = tau_word(1, 6), tau_word(2, 6)
    letters = (tau1, tau2)
    seen = {}
    for wspec in reduced_words(letters, max_len=2):
        braid = word(6)
        for idx, sign in wspec:
            braid = compose(braid, letters[idx] if sign > 0 else invert(letters[idx]))
        image = act_word(braid, artin_system(6))
        assert image not in seen, f"collision between {seen[image]} and {wspec}"
        seen[image] = wspec
