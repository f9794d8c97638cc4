"""
Succession rules and explicit generating trees.

A succession rule maps a node label to the ordered multiset of its
children's labels. ``expand_rule`` counts rank sizes from label
multiplicities; ``explicit_tree`` builds the permutation-level tree; and
``check_isomorphism`` compares the two node by node.
"""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterator

from .insertion import (
    admissible_largest_gaps,
    half_turn_children,
    insert_largest,
    quarter_turn_children,
)
from .perm import EMPTY, Perm, format_perm, ltr_maxima, rtl_maxima

Label = Hashable

DEFAULT_NODE_BUDGET = 500_000


@dataclass(frozen=True)
class SuccessionRule:
    name: str
    root_label: Label
    children_of: Callable[[Label], list]

    def __repr__(self):
        return f"SuccessionRule({self.name!r}, root={self.root_label!r})"


def _pair(label) -> tuple[int, int]:
    if not (isinstance(label, tuple) and len(label) == 2 and all(isinstance(x, int) for x in label)):
        raise ValueError(f"expected an (i, j) label, got {label!r}")
    return label


def _int(label) -> int:
    if not isinstance(label, int) or isinstance(label, bool) or label < 1:
        raise ValueError(f"expected a positive integer label, got {label!r}")
    return label


def _catalan_children(label):
    k = _int(label)
    return list(range(2, k + 2))


def _baxter_children(label):
    i, j = _pair(label)
    if i < 1 or j < 1:
        raise ValueError(f"baxter labels are positive, got {label!r}")
    return [(k, j + 1) for k in range(1, i + 1)] + [(i + 1, k) for k in range(j, 0, -1)]


def _half_children(label):
    i, j = _pair(label)
    if (i, j) == (0, 0):
        return [(1, 2), (2, 1)]
    if i < 1 or j < 1:
        raise ValueError(f"half-turn labels are positive apart from the root (0, 0), got {label!r}")
    left = [(1, j + 2)] + [(k, j + 1) for k in range(2, i + 1)]
    right = [(i + 1, k) for k in range(j, 1, -1)] + [(i + 2, 1)]
    return left + right


def _quarter_children(label):
    k = _int(label)
    return [x for x in range(2, k + 2) for _ in range(2)]


RULES = {
    # root 2 is the label of the length-1 permutation; rank sizes 1, 2, 5, 14, ...
    "catalan": SuccessionRule("catalan", 2, _catalan_children),
    "baxter": SuccessionRule("baxter", (1, 1), _baxter_children),
    "half_even": SuccessionRule("half_even", (0, 0), _half_children),
    "half_odd": SuccessionRule("half_odd", (1, 1), _half_children),
    "quarter": SuccessionRule("quarter", 1, _quarter_children),
}


def get_rule(rule: SuccessionRule | str) -> SuccessionRule:
    if isinstance(rule, SuccessionRule):
        return rule
    try:
        return RULES[rule]
    except KeyError:
        raise ValueError(f"unknown rule {rule!r}; choose from {sorted(RULES)}") from None


def rule_children(rule: SuccessionRule | str, label) -> list:
    """
    >>> rule_children("baxter", (2, 1))
    [(1, 2), (2, 2), (3, 1)]
    >>> rule_children("quarter", 1)
    [2, 2]
    """
    return get_rule(rule).children_of(label)


def expand_rule(rule: SuccessionRule | str, depth: int) -> list[int]:
    """Rank sizes 0..depth of the tree generated by ``rule``.

    >>> expand_rule("quarter", 4)
    [1, 2, 8, 40, 224]
    """
    rule = get_rule(rule)
    if depth < 0:
        raise ValueError("depth must be >= 0")
    level = Counter({rule.root_label: 1})
    sizes = [1]
    for _ in range(depth):
        nxt: Counter = Counter()
        for label, mult in level.items():
            for child in rule.children_of(label):
                nxt[child] += mult
        level = nxt
        sizes.append(sum(level.values()))
    return sizes


# ---------------------------------------------------------------------------
# explicit trees

FAMILIES = {
    "baxter": ((1,), 1),
    "half_even": (EMPTY, 2),
    "half_odd": ((1,), 2),
    "quarter": ((1,), 4),
}


def family_children(family: str, w: Perm) -> list[Perm]:
    if family == "baxter":
        return [insert_largest(w, g) for g in admissible_largest_gaps(w)]
    if family in ("half_even", "half_odd"):
        return half_turn_children(w)
    if family == "quarter":
        return quarter_turn_children(w)
    raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")


def family_label(family: str, w: Perm) -> Label:
    """The node label a permutation carries in its family's succession rule."""
    if family == "quarter":
        return len(ltr_maxima(w))
    return (len(ltr_maxima(w)), len(rtl_maxima(w)))


@dataclass(eq=False)
class Node:
    perm: Perm
    rank: int
    parent: "Node | None" = None
    children: list["Node"] = field(default_factory=list)

    def path(self) -> list[Perm]:
        out = []
        node = self
        while node is not None:
            out.append(node.perm)
            node = node.parent
        return out[::-1]


@dataclass
class GenTree:
    family: str
    root: Node
    levels: list[list[Node]]

    def level_perms(self, rank: int) -> list[Perm]:
        return [node.perm for node in self.levels[rank]]

    def level_sizes(self) -> list[int]:
        return [len(level) for level in self.levels]

    def iter_nodes(self) -> Iterator[Node]:
        for level in self.levels:
            yield from level

    def to_lines(self) -> list[str]:
        """``rank<TAB>perm<TAB>parent<TAB>label`` per node, root parent ``-``."""
        out = []
        for node in self.iter_nodes():
            parent = "-" if node.parent is None else format_perm(node.parent.perm)
            out.append(f"{node.rank}\t{format_perm(node.perm)}\t{parent}\t{format_label(family_label(self.family, node.perm))}")
        return out

    def to_records(self) -> list[dict]:
        return [
            {
                "rank": node.rank,
                "perm": list(node.perm),
                "parent": None if node.parent is None else list(node.parent.perm),
                "label": _label_json(family_label(self.family, node.perm)),
            }
            for node in self.iter_nodes()
        ]

    def to_json_lines(self) -> list[str]:
        return [json.dumps(r, separators=(",", ":")) for r in self.to_records()]


def format_label(label) -> str:
    if isinstance(label, tuple):
        return "(" + ",".join(str(x) for x in label) + ")"
    return str(label)


def _label_json(label):
    return list(label) if isinstance(label, tuple) else label


class TreeBudgetExceeded(RuntimeError):
    def __init__(self, message, partial: GenTree):
        super().__init__(message)
        self.partial = partial


def explicit_tree(family: str, depth: int, node_budget: int = DEFAULT_NODE_BUDGET) -> GenTree:
    """Build ranks 0..depth of the permutation-level generating tree."""
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}")
    if depth < 0:
        raise ValueError("depth must be >= 0")
    root = Node(FAMILIES[family][0], 0)
    tree = GenTree(family, root, [[root]])
    total = 1
    for rank in range(1, depth + 1):
        level = []
        for parent in tree.levels[-1]:
            for child in family_children(family, parent.perm):
                node = Node(child, rank, parent)
                parent.children.append(node)
                level.append(node)
                total += 1
                if total > node_budget:
                    tree.levels.append(level)
                    raise TreeBudgetExceeded(
                        f"explicit_tree({family}, {depth}) exceeded node budget {node_budget} at rank {rank}",
                        tree,
                    )
        tree.levels.append(level)
    return tree


@dataclass(frozen=True)
class Mismatch:
    path: tuple[Perm, ...]
    label: Label
    expected: tuple
    actual: tuple

    def __str__(self):
        route = " > ".join(format_perm(p) for p in self.path)
        return f"{route}: label {format_label(self.label)} expected {self.expected} got {self.actual}"


@dataclass
class IsomorphismReport:
    family: str
    rule: str
    depth: int
    nodes_checked: int
    mismatches: list[Mismatch]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def check_isomorphism(family: str, rule: SuccessionRule | str, depth: int,
                      node_budget: int = DEFAULT_NODE_BUDGET) -> IsomorphismReport:
    """Compare an explicit tree with a succession rule.

    Every node above the last rank is checked: the multiset of its
    children's labels must equal ``rule_children`` of its own label. The
    root must also carry the rule's root label.
    """
    rule = get_rule(rule)
    tree = explicit_tree(family, depth, node_budget)
    mismatches = []
    root_label = family_label(family, tree.root.perm)
    if root_label != rule.root_label:
        mismatches.append(Mismatch((tree.root.perm,), root_label, (rule.root_label,), (root_label,)))
    checked = 0
    for level in tree.levels[:-1]:
        for node in level:
            checked += 1
            label = family_label(family, node.perm)
            actual = Counter(family_label(family, c.perm) for c in node.children)
            expected = Counter(rule.children_of(label))
            if actual != expected:
                mismatches.append(Mismatch(
                    tuple(node.path()), label,
                    tuple(sorted(expected.elements(), key=repr)),
                    tuple(sorted(actual.elements(), key=repr)),
                ))
    return IsomorphismReport(family, rule.name, depth, checked, mismatches)
