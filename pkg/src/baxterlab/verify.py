"""Invariant suites behind ``baxterlab verify``."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from . import enumeration as en
from ._kernels import baxter_mask
from .gentree import check_isomorphism, expand_rule, explicit_tree
from .insertion import (
    admissible_boundary_labels,
    admissible_largest_gaps,
    admissible_smallest_gaps,
    brute_boundary_labels,
    brute_largest_gaps,
    brute_smallest_gaps,
    children_oracle,
    insert_boundary,
    insert_largest,
    insert_smallest,
    quarter_turn_children,
    quarter_turn_parent,
    remove,
)
from .perm import Perm, Symmetry, format_perm, inverse, is_baxter, ltr_maxima, rtl_maxima

SUITES = ("formulas", "rules", "isomorphism", "theorem")

QUARTER = en.FamilySpec("baxter", Symmetry.ROTATE90CW)
FPF = en.FamilySpec("baxter", extra="fpf_involution")


@dataclass
class Check:
    suite: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = f"  {self.detail}" if self.detail else ""
        return f"{status}\t{self.suite}\t{self.name}{tail}"


def baxter_perms(n: int) -> Iterator[Perm]:
    """Baxter permutations of length n, kernel-filtered from S_n."""
    if n == 0:
        yield ()
        return
    source = itertools.permutations(range(1, n + 1))
    while True:
        chunk = list(itertools.islice(source, 1 << 15))
        if not chunk:
            return
        for w, ok in zip(chunk, baxter_mask(chunk)):
            if ok:
                yield w


def _symmetric_cap() -> int:
    return en.brute_limit() + en.SYMMETRIC_EXTRA


def suite_formulas(max_n: int) -> list[Check]:
    out = []
    top = min(max_n, en.brute_limit())
    bad = [n for n in range(1, top + 1) if en.baxter_count(n) != en.brute_count(n)]
    out.append(Check("formulas", f"B(n) formula = brute force, n<={top}", not bad, f"witness n={bad[0]}" if bad else ""))

    cat = [1]
    for m in range(40):
        cat.append(sum(cat[i] * cat[m - i] for i in range(m + 1)))
    bad = [m for m in range(41) if en.catalan(m) != cat[m]]
    out.append(Check("formulas", "catalan(m) = convolution recurrence, m<=40", not bad))

    top = min(max_n, _symmetric_cap()) // 2
    bad = [n for n in range(1, top + 1) if en.fpf_involution_count(n) != en.brute_count(2 * n, FPF)]
    out.append(Check("formulas", f"b_n formula = brute fpf involutions, 2n<={2 * top}", not bad,
                     f"witness n={bad[0]}" if bad else ""))

    try:
        for n in range(1, 201):
            en.baxter_count(n)
            en.fpf_involution_count(n)
            en.quarter_turn_count(n)
        out.append(Check("formulas", "closed-form divisions exact, n<=200", True))
    except ArithmeticError as exc:
        out.append(Check("formulas", "closed-form divisions exact, n<=200", False, str(exc)))
    return out


def suite_rules(max_n: int) -> list[Check]:
    counts = {"largest": 0, "smallest": 0, "boundary": 0, "remove": 0, "roundtrip": 0}
    witness: dict[str, str] = {}
    for n in range(0, max_n + 1):
        for w in baxter_perms(n):
            if admissible_largest_gaps(w) != brute_largest_gaps(w):
                counts["largest"] += 1
                witness.setdefault("largest", format_perm(w))
            if admissible_smallest_gaps(w) != brute_smallest_gaps(w):
                counts["smallest"] += 1
                witness.setdefault("smallest", format_perm(w))
            for side in ("front", "back"):
                if admissible_boundary_labels(w, side) != brute_boundary_labels(w, side):
                    counts["boundary"] += 1
                    witness.setdefault("boundary", f"{format_perm(w)} {side}")
            if n >= 1 and not all(is_baxter(remove(w, k)) for k in ("largest", "smallest", "front", "back")):
                counts["remove"] += 1
                witness.setdefault("remove", format_perm(w))
            ok = all(remove(insert_largest(w, g), "largest") == w and remove(insert_smallest(w, g), "smallest") == w
                     for g in range(n + 1))
            ok = ok and all(remove(insert_boundary(w, s, j), s) == w
                            for s in ("front", "back") for j in range(1, n + 2))
            ok = ok and all(insert_boundary(w, "back", j) == inverse(insert_largest(inverse(w), j - 1))
                            for j in range(1, n + 2))
            if not ok:
                counts["roundtrip"] += 1
                witness.setdefault("roundtrip", format_perm(w))
    names = {
        "largest": "admissible_largest_gaps = brute filter",
        "smallest": "admissible_smallest_gaps = brute filter",
        "boundary": "admissible_boundary_labels = brute filter",
        "remove": "Baxter closed under the four removals",
        "roundtrip": "remove inverts insert; append = inverse-conjugated largest insert",
    }
    return [Check("rules", f"{names[k]}, n<={max_n}", counts[k] == 0,
                  f"{counts[k]} mismatches, first {witness[k]}" if counts[k] else "")
            for k in names]


def suite_isomorphism(max_n: int) -> list[Check]:
    out = []
    runs = [
        ("baxter", max(max_n - 1, 0)),
        ("half_odd", max((max_n - 1) // 2, 0)),
        ("half_even", max_n // 2),
        ("quarter", max((max_n - 1) // 4, 0)),
    ]
    for family, depth in runs:
        rep = check_isomorphism(family, family, depth)
        detail = f"{rep.nodes_checked} nodes"
        if rep.mismatches:
            detail += f", first mismatch {rep.mismatches[0]}"
        out.append(Check("isomorphism", f"{family} tree vs rule, depth {depth}", rep.ok, detail))
        sizes = explicit_tree(family, depth).level_sizes()
        out.append(Check("isomorphism", f"{family} level sizes = expand_rule, depth {depth}",
                         sizes == expand_rule(family, depth), str(sizes)))
    return out


def suite_theorem(max_n: int) -> list[Check]:
    out = []
    depth = max((max_n - 1) // 4, 0)
    tree = explicit_tree("quarter", depth)
    for m in range(depth + 1):
        n = 4 * m + 1
        formula = en.quarter_turn_count(n)
        level = tree.levels[m]
        if n <= _symmetric_cap():
            brute = sorted(en.family_members(n, QUARTER))
            ok = formula == len(level) == len(brute) and sorted(x.perm for x in level) == brute
            out.append(Check("theorem", f"n={n}: 2^m C_m = tree level = orbit brute force", ok,
                             f"formula={formula} tree={len(level)} brute={len(brute)}"))
        else:
            out.append(Check("theorem", f"n={n}: 2^m C_m = tree level", formula == len(level),
                             f"formula={formula} tree={len(level)} (brute skipped above limit)"))
    zeros = [n for n in range(1, min(max_n, _symmetric_cap()) + 1) if n % 4 != 1]
    bad = [n for n in zeros if en.quarter_turn_count(n) != 0 or en.brute_count(n, QUARTER) != 0]
    out.append(Check("theorem", f"no quarter-fixed Baxter permutations for n != 1 mod 4, n<={min(max_n, _symmetric_cap())}", not bad,
                     f"witness n={bad[0]}" if bad else ""))

    bad_node = None
    for node in tree.iter_nodes():
        w = node.perm
        if len(ltr_maxima(w)) != len(rtl_maxima(w)):
            bad_node = w
            break
        if node.parent is not None and quarter_turn_parent(w) != node.parent.perm:
            bad_node = w
            break
        if len(w) + 4 <= 13 and node.rank < depth:
            if sorted(quarter_turn_children(w)) != children_oracle(w, "quarter"):
                bad_node = w
                break
    out.append(Check("theorem", "quarter nodes: LtR=RtL maxima, parent round-trip, children = oracle",
                     bad_node is None, "" if bad_node is None else f"witness {format_perm(bad_node)}"))
    sizes = expand_rule("quarter", 30)
    ok = all(sizes[m] == 2**m * en.catalan(m) for m in range(31))
    out.append(Check("theorem", "doubled Catalan rule rank m = 2^m C_m, m<=30", ok))
    return out


RUNNERS = {
    "formulas": suite_formulas,
    "rules": suite_rules,
    "isomorphism": suite_isomorphism,
    "theorem": suite_theorem,
}


def run_suites(suite: str, max_n: int) -> list[Check]:
    names = SUITES if suite == "all" else (suite,)
    out = []
    for name in names:
        out.extend(RUNNERS[name](max_n))
    return out
