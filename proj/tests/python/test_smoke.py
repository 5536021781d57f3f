import pytest

import bregex


def test_parse_emit_roundtrip():
    r = bregex.parse("(a|ab)c")
    assert str(r) == "(a|ab)c"
    assert r.size == 9
    assert r.expanded_size == 9
    assert r.group_count == 1
    assert not r.has_lookaround
    assert bregex.validate(r) == []


def test_match_at_walkthrough():
    m = bregex.match_at("(a|ab)c", "abc")
    assert m is not None
    assert m["end"] == 3
    assert m["groups"] == {1: (0, 2)}
    assert bregex.match_at("a", "b") is None


def test_search_and_lookarounds():
    assert bregex.search("a(?=bc)b", "abc")["end"] == 2
    assert bregex.search("a(?!bc)b", "abc") is None
    rec = bregex.search("(ab*c)\\1", "abbcabbc")
    assert rec["start"] == 0
    assert rec["end"] == 8
    assert rec["groups"][1] == (0, 4)


def test_fuel_values():
    assert bregex.fuel("a*", "aa") == 12
    b = bregex.fuel_breakdown("a*", "aa")
    assert b["total"] == 12
    assert b["chunks"] == 1
    stats = bregex.match_stats("(?:a|a)*b", "aaaaaa")
    assert not stats["matched"]
    assert stats["max_depth"] <= stats["initial_fuel"]


def test_tree_render():
    text = bregex.tree("(a|ab)c", "abc")
    assert text.splitlines()[0] == "Open 1"
    assert "Mismatch" in text and "Match" in text


def test_minimize_matches_backtracking():
    assert bregex.minimize_over_choices("(?:a|b)", "a")["end"] == 1
    assert bregex.minimize_over_choices("c", "a") is None
    with pytest.raises(RuntimeError):
        bregex.minimize_over_choices("(?:aaaa)*", "aaaaaaaa")


def test_qbf_reductions():
    prefix = ["NE", "E", "NE"]
    clauses = [[1, 2], [-2, 3]]
    assert bregex.oracle_qbf(prefix, clauses) is False
    assert bregex.solve_qbf(prefix, clauses, reduction="neg") is False
    assert bregex.solve_qbf(prefix, clauses, reduction="pos") is False
    assert bregex.solve_qbf(["E"], [[1]]) is True
    regex, target = bregex.qbf_reduction(prefix, clauses)
    assert target == "x;x;x;x;x;z"
    assert regex.startswith("(?!")


def test_lexsat():
    assert bregex.solve_lexsat(3, [[1, 2], [-2, 3]]) == [True, True, True]
    assert bregex.oracle_lexsat(3, [[1, 2], [-2, 3]]) == [True, True, True]
    assert bregex.solve_lexsat(1, [[1], [-1]]) is None
    regex, target = bregex.lexsat_reduction(3, [[1, 2], [-2, 3]])
    assert "(?=" not in regex and "(?!" not in regex
    assert target == "x;x;x;x;x;z"
