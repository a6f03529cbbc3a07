import pytest

from blobalg.diamond import (
    DiamondWalk,
    all_diamond_walks,
    check_diamond_walks,
    check_envelope_words,
    diamond_from_dict,
    diamond_to_dict,
    diamond_walk,
    envelope_word,
    expected_lowest,
    heights_leq,
    to_diamond,
    weight_of_diamond,
)
from blobalg.presentation import phi_equal
from blobalg.walks import all_walks, parse_walk, path_word


def test_parse_rules():
    assert str(to_diamond(parse_walk("0,1,0"))) == "SS"
    assert str(to_diamond(parse_walk("0,-1,-2"))) == "NN"
    assert str(to_diamond(parse_walk("0,-1,0,1"))) == "NSS"


def test_start_height_accounting():
    t = diamond_walk("NSS")
    assert t.start_height == 2 * 3 - 2 * 1
    assert t.heights() == (4, 5, 4, 3)
    assert t.heights()[-1] == t.n
    with pytest.raises(ValueError):
        DiamondWalk(("N", "S"), 5)
    with pytest.raises(ValueError):
        DiamondWalk(("N", "X"), 2)


def test_bijection_to_n10():
    for n in range(0, 11):
        walks = all_walks(n)
        images = {to_diamond(p) for p in walks}
        assert len(images) == len(walks) == 2 ** n
        assert images == set(all_diamond_walks(n))


def test_lowest_point_characterization():
    for n in range(1, 9):
        for m in range(-n, n + 1, 2):
            lows = {to_diamond(p).lowest for p in all_walks(n, m)}
            assert lows == {expected_lowest(n, m)}
            fibre = {t for t in all_diamond_walks(n) if t.lowest == expected_lowest(n, m)}
            assert fibre == {to_diamond(p) for p in all_walks(n, m)}


def test_signed_lowest_points_differ_by_one():
    assert expected_lowest(4, 2) - expected_lowest(4, -2) == 1
    assert {to_diamond(p).lowest for p in all_walks(4, 2)} == {3}
    assert {to_diamond(p).lowest for p in all_walks(4, -2)} == {2}


def test_weight_recovery():
    for n in range(0, 9):
        for m in range(-n, n + 1, 2):
            for p in all_walks(n, m):
                assert weight_of_diamond(to_diamond(p)) == m


def test_poset():
    for t in all_diamond_walks(4):
        assert heights_leq(t, t)
    top = diamond_walk("S" * 4)
    for t in all_diamond_walks(4):
        assert heights_leq(t, top)
    fibre6 = [t for t in all_diamond_walks(6) if t.lowest == expected_lowest(6, 0)]
    assert any(
        not heights_leq(a, b) and not heights_leq(b, a)
        for i, a in enumerate(fibre6) for b in fibre6[i + 1:]
    )
    with pytest.raises(ValueError):
        heights_leq(diamond_walk("S"), diamond_walk("SS"))


def test_envelope_figure_captions():
    assert str(envelope_word(diamond_walk("SSSS"))) == "e U1 e U2 U1 U3"
    assert str(envelope_word(diamond_walk("SSSSSS"))) == "e U1 e U2 U1 U3 e U2 U4 U1 U3 U5"


def test_envelope_minimal_walk_is_unit():
    for n in range(0, 7):
        assert str(envelope_word(diamond_walk("N" * n))) == "1"


def test_envelope_equals_walk_word_in_algebra():
    for n in range(0, 7):
        for p in all_walks(n):
            got = envelope_word(to_diamond(p))
            assert phi_equal(got, path_word(p)), p


def test_json_roundtrip():
    t = diamond_walk("NSS")
    data = diamond_to_dict(t)
    assert data == {"steps": "NSS", "start_height": 4}
    assert diamond_from_dict(data) == t
    with pytest.raises(ValueError):
        diamond_from_dict({"steps": "NSS", "start_height": 0})


def test_check_reports():
    for n in range(0, 9):
        rep = check_diamond_walks(n)
        assert rep.passed, [c.instance for c in rep.checks if not c.passed]
    for n in range(0, 7):
        rep = check_envelope_words(n)
        assert rep.passed, [c.instance for c in rep.checks if not c.passed]
        assert rep.meta["letter_equal_standard"] >= 1 or n >= 4
