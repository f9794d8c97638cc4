import json

import pytest

from baxterlab.enumeration import FamilySpec, brute_count, catalan
from baxterlab.gentree import (
    SuccessionRule,
    TreeBudgetExceeded,
    check_isomorphism,
    expand_rule,
    explicit_tree,
    rule_children,
)
from baxterlab.perm import Symmetry, is_baxter, is_fixed

from oracles import fixed_baxter

HALF = FamilySpec("baxter", Symmetry.ROTATE180)


def words(perms):
    return {"".join(map(str, w)) for w in perms}


def test_rule_children_examples():
    assert rule_children("baxter", (2, 1)) == [(1, 2), (2, 2), (3, 1)]
    assert rule_children("quarter", 1) == [2, 2]
    assert rule_children("quarter", 3) == [2, 2, 3, 3, 4, 4]
    assert rule_children("half_even", (0, 0)) == [(1, 2), (2, 1)]
    assert rule_children("half_odd", (1, 1)) == [(1, 3), (3, 1)]
    assert rule_children("half_odd", (3, 1)) == [(1, 3), (2, 2), (3, 2), (5, 1)]
    assert rule_children("catalan", 3) == [2, 3, 4]


def test_baxter_rule_child_count():
    for i in range(1, 6):
        for j in range(1, 6):
            assert len(rule_children("baxter", (i, j))) == i + j
            assert len(rule_children("half_odd", (i, j))) == i + j


@pytest.mark.parametrize("rule, label", [
    ("baxter", 3),
    ("baxter", (0, 1)),
    ("quarter", (1, 1)),
    ("quarter", 0),
    ("half_odd", (0, 2)),
])
def test_rule_children_rejects_malformed_labels(rule, label):
    with pytest.raises(ValueError):
        rule_children(rule, label)


def test_expand_rule_examples():
    assert expand_rule("quarter", 4) == [1, 2, 8, 40, 224]
    assert expand_rule("catalan", 3) == [1, 2, 5, 14]
    assert expand_rule("baxter", 3) == [1, 2, 6, 22]
    assert expand_rule("baxter", 0) == [1]
    with pytest.raises(ValueError):
        expand_rule("baxter", -1)


def test_expand_rule_closed_forms():
    assert expand_rule("quarter", 40) == [2**m * catalan(m) for m in range(41)]
    assert expand_rule("catalan", 20) == [catalan(m + 1) for m in range(21)]


def test_custom_rule():
    binary = SuccessionRule("binary", 0, lambda label: [0, 0])
    assert expand_rule(binary, 5) == [1, 2, 4, 8, 16, 32]


def test_explicit_tree_quarter_first_ranks():
    tree = explicit_tree("quarter", 2)
    assert tree.level_perms(0) == [(1,)]
    assert words(tree.level_perms(1)) == {"25314", "41352"}
    assert words(tree.level_perms(2)) == {
        "294753618", "349852167", "438951276", "814753692",
        "296357418", "672159834", "761258943", "816357492",
    }


def test_explicit_tree_small_levels():
    assert explicit_tree("half_even", 1).level_perms(1) == [(2, 1), (1, 2)]
    assert explicit_tree("half_even", 1).level_perms(0) == [()]
    assert explicit_tree("baxter", 2).level_sizes() == [1, 2, 6]
    assert words(explicit_tree("baxter", 2).level_perms(2)) == {"321", "231", "213", "312", "132", "123"}


def test_explicit_tree_parent_links():
    tree = explicit_tree("baxter", 4)
    for node in tree.iter_nodes():
        if node.parent is not None:
            assert node.perm[:] and node.parent.perm == tuple(x for x in node.perm if x != len(node.perm))
            assert node in node.parent.children


@pytest.mark.parametrize("family, rule, depth", [
    ("baxter", "baxter", 5),
    ("half_even", "half_even", 4),
    ("half_odd", "half_odd", 3),
    ("quarter", "quarter", 3),
])
def test_check_isomorphism(family, rule, depth):
    report = check_isomorphism(family, rule, depth)
    assert report.ok, [str(m) for m in report.mismatches[:3]]
    assert report.nodes_checked == sum(explicit_tree(family, depth).level_sizes()[:-1])


def test_check_isomorphism_reports_mismatch_with_path():
    wrong = SuccessionRule("wrong", 1, lambda label: [2, 2, 2])
    report = check_isomorphism("quarter", wrong, 2)
    assert not report.ok
    first = report.mismatches[0]
    assert first.path == ((1,),)
    deeper = [m for m in report.mismatches if len(m.path) == 2]
    assert deeper and deeper[0].path[0] == (1,)
    assert ">" in str(deeper[0])


def test_level_sizes_match_rules():
    for family, depth in [("baxter", 6), ("half_even", 5), ("half_odd", 4), ("quarter", 3)]:
        assert explicit_tree(family, depth).level_sizes() == expand_rule(family, depth)


def test_quarter_tree_nodes_are_fixed_baxter():
    tree = explicit_tree("quarter", 3)
    for rank, level in enumerate(tree.levels):
        for node in level:
            assert len(node.perm) == 4 * rank + 1
            assert is_baxter(node.perm) and is_fixed(node.perm, Symmetry.ROTATE90CW)


def test_half_trees_match_brute_counts():
    even = explicit_tree("half_even", 5).level_sizes()
    odd = explicit_tree("half_odd", 4).level_sizes()
    assert even == [brute_count(2 * r, HALF) for r in range(6)]
    assert odd == [brute_count(2 * r + 1, HALF) for r in range(5)]
    # frozen after the first brute-force run
    assert even == [1, 2, 6, 26, 130, 712]
    assert odd == [1, 2, 8, 38, 202]


def test_half_tree_levels_equal_fixed_sets():
    for r in range(4):
        assert sorted(explicit_tree("half_even", r).level_perms(r)) == fixed_baxter(2 * r, "rotate180")
        assert sorted(explicit_tree("half_odd", r).level_perms(r)) == fixed_baxter(2 * r + 1, "rotate180")


def test_budget_refusal_keeps_partial_tree():
    with pytest.raises(TreeBudgetExceeded, match="budget 50") as info:
        explicit_tree("baxter", 6, node_budget=50)
    assert info.value.partial.level_sizes()[:4] == [1, 2, 6, 22]


def test_serialization():
    tree = explicit_tree("quarter", 1)
    assert tree.to_lines() == ["0\t1\t-\t1", "1\t25314\t1\t2", "1\t41352\t1\t2"]
    records = [json.loads(line) for line in tree.to_json_lines()]
    assert records[1] == {"rank": 1, "perm": [2, 5, 3, 1, 4], "parent": [1], "label": 2}
    half = explicit_tree("half_even", 1)
    assert half.to_lines()[0] == "0\t()\t-\t(0,0)"
    assert half.to_records()[1]["label"] == [1, 2]


def test_unknown_family():
    with pytest.raises(ValueError):
        explicit_tree("catalan", 2)
    with pytest.raises(ValueError):
        rule_children("nope", 1)

