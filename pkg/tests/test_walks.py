import warnings
from math import comb

import pytest

from blobalg.presentation import evaluate_word, is_reduced, phi_equal
from blobalg.walks import (
    Walk,
    all_walks,
    check_diamond_moves,
    check_walk_suite,
    edge_word,
    factor_walk_words,
    parse_walk,
    path_word,
    tail_word,
    walk_words,
)
from blobalg.words import blob_cap_word, cap_word, parse_word, unit


def test_walk_validation():
    with pytest.raises(ValueError):
        Walk((1, 2))
    with pytest.raises(ValueError):
        Walk((0, 2))
    assert parse_walk("0,-1,0,1").sigma == (0, -1, 0, 1)


def test_counts():
    for n in range(0, 13):
        assert len(all_walks(n)) == 2 ** n
        for m in range(-n, n + 1, 2):
            assert len(all_walks(n, m)) == comb(n, (n + m) // 2)
    assert len(all_walks(3, 1)) == 3


def test_parity_violation_warns_and_returns_empty():
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        assert all_walks(3, 0) == []
    assert caught


def test_lexicographic_order():
    sigmas = [w.sigma for w in all_walks(3)]
    assert sigmas == sorted(sigmas)


def test_edge_words():
    assert str(edge_word(((2, 0), (3, 1)))) == "e U2 U1"
    assert str(edge_word(((1, -1), (2, 0)))) == "U1"
    assert str(edge_word(((0, 0), (1, -1)))) == "1"
    assert str(edge_word(((3, 2), (4, 3)))) == "1"
    assert str(edge_word(((3, -2), (4, -3)))) == "1"
    assert str(edge_word(((4, 0), (5, 1)))) == "e U4 U2 U3 U1"
    # variant truncates the descending run
    assert str(edge_word(((3, 1), (4, 0)), variant=True)) == "U3"
    assert str(edge_word(((3, 1), (4, 0)), variant=False)) == "U3 U2 U1"
    with pytest.raises(ValueError):
        edge_word(((2, 0), (4, 1)))


def test_path_words_examples():
    assert str(path_word(parse_walk("0,-1,0,1"))) == "U1 e U2 U1"
    assert str(path_word(parse_walk("0,1,2,1"))) == "e U2 U1"
    # all-descending path gives the empty word
    assert str(path_word(parse_walk("0,-1,-2,-3"))) == "1"
    # the zig-zag to weight 0 lands on the cap word (in the algebra)
    for n in (2, 4, 6):
        sigma = tuple((0, -1)[i % 2] for i in range(n + 1))
        assert phi_equal(path_word(Walk(sigma)), cap_word(0, n))
    # continuing up by one step gives the blobbed cap word
    for n in (3, 5):
        sigma = tuple((0, -1)[i % 2] for i in range(n)) + (1,)
        assert phi_equal(path_word(Walk(sigma)), blob_cap_word(1, n))


def test_word_set_examples():
    got = walk_words(3, 1)
    expected = [parse_word(t, 3) for t in
             ["U1 e U2 U1", "e U1 e U2 U1", "U2 U1 e U2 U1"]]
    assert len(got) == len(expected)
    for w, ref in zip(sorted(got, key=lambda w: str(evaluate_word(w).diagram)),
                      sorted(expected, key=lambda w: str(evaluate_word(w).diagram))):
        assert phi_equal(w, ref)

    got = walk_words(2, 0)
    refs = [parse_word("U1", 2), parse_word("e U1", 2)]
    assert {evaluate_word(w).diagram for w in got} == {evaluate_word(r).diagram for r in refs}
    assert all(evaluate_word(w).coeff.is_one() for w in got)

    for n in range(0, 7):
        assert walk_words(n, -n) == [unit(n)]


def test_factorizations():
    assert factor_walk_words(3, -3) == [(unit(3), unit(3))]
    pairs = factor_walk_words(3, 1)
    assert pairs[0] == (unit(3), blob_cap_word(1, 3))
    assert {str(p) for p, _ in pairs} == {"1", "e", "U2"}
    for prefix, tail in factor_walk_words(4, 0):
        assert tail == cap_word(0, 4)
        assert evaluate_word(prefix).coeff.is_one()


def test_factorizations_verify_everywhere():
    for n in range(0, 8):
        for m in range(-n, n + 1, 2):
            for (prefix, tail), p in zip(factor_walk_words(n, m), all_walks(n, m)):
                assert phi_equal(prefix * tail, path_word(p))
                assert is_reduced(prefix)
                assert tail == tail_word(m, n)


def test_walk_words_reduced_and_variant_agrees():
    for n in range(0, 7):
        for p in all_walks(n):
            std = path_word(p)
            var = path_word(p, variant=True)
            assert is_reduced(std)
            assert len(var.letters) <= len(std.letters)
            assert phi_equal(std, var)


def test_walk_suite_report():
    for n in (2, 3, 4):
        rep = check_walk_suite(n)
        assert rep.passed, [c.instance for c in rep.checks if not c.passed]


def test_diamond_moves():
    for n in range(2, 7):
        rep = check_diamond_moves(n)
        assert rep.passed, [c.instance for c in rep.checks if not c.passed]
    # the ridge family includes the worked example U2 (U1 e U2 U1) = e U2 U1
    rep = check_diamond_moves(3)
    assert any("zigzag" in c.instance for c in rep.checks)
