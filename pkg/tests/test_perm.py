import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from baxterlab.perm import (
    BAXTER_PATTERNS,
    ContractError,
    PermutationParseError,
    Symmetry,
    VincularPattern,
    apply_symmetry,
    complement,
    format_perm,
    inverse,
    is_baxter,
    is_fixed,
    parse_perm,
    quarter_cycle_check,
    reverse,
    stats,
    vincular_occurrences,
)

from oracles import CELL_MAPS, is_baxter_by_definition, matrix_image, quadruples

perms = st.integers(0, 12).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)
small_perms = st.integers(0, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(tuple)


@pytest.mark.parametrize("text, expected", [
    ("41352", (4, 1, 3, 5, 2)),
    ("1", (1,)),
    ("2,4,1,3", (2, 4, 1, 3)),
    ("2 4 1 3", (2, 4, 1, 3)),
    ("10,1,2,3,4,5,6,7,8,9", (10, 1, 2, 3, 4, 5, 6, 7, 8, 9)),
    ("()", ()),
])
def test_parse_perm(text, expected):
    assert parse_perm(text) == expected


@pytest.mark.parametrize("text, token", [
    ("1123", "'1'"),
    ("1,5,2", "'5'"),
    ("1,,2", "empty token"),
    ("1,x", "'x'"),
])
def test_parse_perm_errors_name_the_token(text, token):
    with pytest.raises(PermutationParseError, match=token):
        parse_perm(text)


@given(perms)
def test_parse_format_roundtrip(w):
    assert parse_perm(format_perm(w)) == w


def test_format_switches_to_commas_above_nine():
    assert format_perm((2, 5, 3, 1, 4)) == "25314"
    assert format_perm(tuple(range(1, 11))) == "1,2,3,4,5,6,7,8,9,10"


def test_apply_symmetry_examples():
    assert apply_symmetry((2, 5, 3, 1, 4), Symmetry.ROTATE90CW) == (2, 5, 3, 1, 4)
    assert apply_symmetry((3, 1, 2), "identity") == (3, 1, 2)
    assert apply_symmetry((4, 1, 3, 5, 2), Symmetry.INVERSE) == (2, 5, 3, 1, 4)


@pytest.mark.parametrize("name", sorted(CELL_MAPS))
@given(w=perms)
def test_symmetry_matches_matrix_picture(name, w):
    assert apply_symmetry(w, name) == matrix_image(w, CELL_MAPS[name])


@given(perms)
def test_dihedral_relations(w):
    cw = lambda v: apply_symmetry(v, Symmetry.ROTATE90CW)
    assert cw(cw(cw(cw(w)))) == w
    assert cw(cw(w)) == apply_symmetry(w, Symmetry.ROTATE180)
    assert apply_symmetry(w, Symmetry.ROTATE180) == reverse(complement(w))
    assert cw(w) == complement(inverse(w))
    assert apply_symmetry(cw(w), Symmetry.ROTATE90CCW) == w
    assert is_fixed(w, Symmetry.ROTATE90CW) == is_fixed(w, Symmetry.ROTATE90CCW)


@given(perms)
def test_quarter_fixed_lengths(w):
    if w and is_fixed(w, Symmetry.ROTATE90CW):
        assert len(w) % 4 in (0, 1)


def test_is_fixed_examples():
    assert is_fixed((4, 1, 3, 5, 2), Symmetry.ROTATE90CW)
    assert not is_fixed((1, 2), Symmetry.ROTATE90CW)
    assert is_fixed((2, 1, 4, 3), Symmetry.ROTATE180)


def test_vincular_examples():
    assert vincular_occurrences((2, 4, 1, 3), "2-41-3") == [(1, 2, 3, 4)]
    assert vincular_occurrences((1, 2, 3, 4), "3-14-2") == []
    assert vincular_occurrences((3, 1, 4, 2), "3-14-2") == [(1, 2, 3, 4)]


def test_pattern_parse_and_str():
    p = VincularPattern.parse("3-14-2")
    assert p.pattern == (3, 1, 4, 2)
    assert p.adjacent_pairs == frozenset({2})
    assert str(p) == "3-14-2"
    with pytest.raises(ValueError):
        VincularPattern((1, 2), frozenset({2}))


@pytest.mark.parametrize("n", range(0, 8))
def test_occurrences_match_quadruple_scan(n):
    for w in itertools.permutations(range(1, n + 1)):
        for p in BAXTER_PATTERNS:
            assert vincular_occurrences(w, p) == quadruples(w, str(p))


@pytest.mark.parametrize("n", range(0, 9))
def test_fast_baxter_test_matches_definition(n):
    for w in itertools.permutations(range(1, n + 1)):
        assert is_baxter(w) == is_baxter_by_definition(w), w


def test_is_baxter_examples():
    assert not is_baxter((2, 4, 1, 3))
    assert not is_baxter((3, 1, 4, 2))
    assert is_baxter((4, 1, 3, 5, 2))
    assert is_baxter(())
    assert sum(is_baxter(w) for w in itertools.permutations(range(1, 5))) == 22


@settings(max_examples=300)
@given(small_perms)
def test_baxter_closed_under_dihedral_group(w):
    b = is_baxter(w)
    for s in Symmetry:
        assert is_baxter(apply_symmetry(w, s)) == b


def test_stats_examples():
    s = stats((3, 1, 2, 4, 8, 7, 5, 6))
    assert s.ltr_max_positions == (1, 4, 5)
    assert s.rtl_max_positions == (5, 6, 8)
    one = stats((1,))
    assert (one.descents, one.inverse_descents) == (0, 0)
    w = stats((4, 1, 3, 5, 2))
    assert (w.descents, w.inverse_descents) == (2, 2)
    empty = stats(())
    assert empty.ltr_max_positions == () and empty.descents == 0


@given(perms)
def test_stats_endpoints(w):
    s = stats(w)
    if w:
        n = len(w)
        assert 1 in s.ltr_max_positions and 1 in s.ltr_min_positions
        assert n in s.rtl_max_positions and n in s.rtl_min_positions


@pytest.mark.parametrize("n", range(1, 10))
def test_descents_equal_inverse_descents_on_baxter(n):
    from baxterlab.verify import baxter_perms
    for w in baxter_perms(n):
        s = stats(w)
        assert s.descents == s.inverse_descents, w


@pytest.mark.parametrize("n", [1, 5, 9])
def test_quarter_fixed_baxter_structure(n):
    from baxterlab.enumeration import FamilySpec, family_members
    for w in family_members(n, FamilySpec("baxter", Symmetry.ROTATE90CW)):
        assert quarter_cycle_check(w)
        s = stats(w)
        assert len(s.ltr_max_positions) == len(s.rtl_max_positions)


def test_quarter_cycle_check_examples():
    assert quarter_cycle_check((2, 5, 3, 1, 4))
    assert quarter_cycle_check((1,))
    assert quarter_cycle_check(parse_perm("296357418"))
    with pytest.raises(ContractError, match="not quarter-turn fixed"):
        quarter_cycle_check((1, 2))
