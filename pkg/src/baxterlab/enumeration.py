"""
Exact counts: closed forms, brute-force oracles, symmetric-orbit
generation and statistic tables.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterator, Literal

from . import _kernels
from .perm import Perm, Symmetry, apply_symmetry, descents, inverse, is_baxter

DEFAULT_BRUTE_LIMIT = 10
# orbit completion only visits symmetric words, so it can go further
SYMMETRIC_EXTRA = 7


class BruteLimitExceeded(RuntimeError):
    pass


def brute_limit() -> int:
    raw = os.environ.get("BAXTERLAB_BRUTE_LIMIT")
    if raw is None:
        return DEFAULT_BRUTE_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"BAXTERLAB_BRUTE_LIMIT must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# closed forms

def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what}: {num} / {den} leaves remainder {r}")
    return q


def baxter_summand(n: int, k: int) -> int:
    """Baxter permutations of length n with k descents."""
    m = n + 1
    return _exact_div(comb(m, k) * comb(m, k + 1) * comb(m, k + 2),
                      comb(m, 1) * comb(m, 2), f"B({n}) summand k={k}")


def baxter_count(n: int) -> int:
    """
    >>> [baxter_count(n) for n in range(1, 6)]
    [1, 2, 6, 22, 92]
    """
    if n < 1:
        raise ValueError("baxter_count needs n >= 1")
    return sum(baxter_summand(n, k) for k in range(n))


def catalan(m: int) -> int:
    if m < 0:
        raise ValueError("catalan needs m >= 0")
    return _exact_div(comb(2 * m, m), m + 1, f"C_{m}")


def quarter_turn_count(n: int) -> int:
    """Quarter-turn-fixed Baxter permutations of length n."""
    if n < 1:
        raise ValueError("quarter_turn_count needs n >= 1")
    if n % 4 != 1:
        return 0
    m = (n - 1) // 4
    return 2**m * catalan(m)


def fpf_involution_count(n: int) -> int:
    """Fixed-point-free involutive Baxter permutations of length 2n."""
    if n < 1:
        raise ValueError("fpf_involution_count needs n >= 1")
    return _exact_div(3 * 2 ** (n - 1) * comb(2 * n, n), (n + 1) * (n + 2), f"b_{n}")


# ---------------------------------------------------------------------------
# families and generation

@dataclass(frozen=True)
class FamilySpec:
    base: Literal["baxter", "all"] = "baxter"
    symmetry: Symmetry | None = None
    extra: Literal["fpf_involution"] | None = None

    def __post_init__(self):
        if self.base not in ("baxter", "all"):
            raise ValueError(f"unknown base family {self.base!r}")
        if self.symmetry is not None:
            object.__setattr__(self, "symmetry", Symmetry(self.symmetry))
        if self.extra not in (None, "fpf_involution"):
            raise ValueError(f"unknown extra predicate {self.extra!r}")

    @property
    def effective_symmetry(self) -> Symmetry | None:
        if self.extra == "fpf_involution":
            return Symmetry.INVERSE
        if self.symmetry is Symmetry.IDENTITY:
            return None
        return self.symmetry

    def contains(self, w: Perm) -> bool:
        if self.symmetry is not None and tuple(w) != apply_symmetry(w, self.symmetry):
            return False
        if self.extra == "fpf_involution" and (inverse(w) != tuple(w) or any(x == i for i, x in enumerate(w, 1))):
            return False
        return self.base == "all" or is_baxter(w)

    def __str__(self):
        parts = [self.base]
        if self.symmetry is not None:
            parts.append(self.symmetry.value)
        if self.extra:
            parts.append(self.extra)
        return "+".join(parts)


BAXTER = FamilySpec("baxter")


def symmetric_perms(n: int, s: Symmetry | str) -> Iterator[Perm]:
    """All permutations of length n whose matrix is invariant under ``s``.

    Rows are filled smallest-first; choosing a column for the row puts the
    whole orbit of that cell under ``s`` into the matrix, which must stay a
    partial permutation matrix.
    """
    s = Symmetry(s)
    cell = s.cell_map(n)
    row = [0] * (n + 1)
    col_used = [False] * (n + 1)

    def orbit(r, c):
        cells = [(r, c)]
        while True:
            nxt = cell(*cells[-1])
            if nxt == cells[0]:
                return cells
            cells.append(nxt)

    def place(cells):
        rows = {}
        cols = {}
        for r, c in cells:
            if rows.get(r, c) != c or cols.get(c, r) != r:
                return None
            rows[r] = c
            cols[c] = r
        if any(row[r] for r in rows) or any(col_used[c] for c in cols):
            return None
        return rows

    def rec(r):
        while r <= n and row[r]:
            r += 1
        if r > n:
            yield tuple(row[1:])
            return
        for c in range(1, n + 1):
            if col_used[c]:
                continue
            rows = place(orbit(r, c))
            if rows is None:
                continue
            for rr, cc in rows.items():
                row[rr] = cc
                col_used[cc] = True
            yield from rec(r + 1)
            for rr, cc in rows.items():
                row[rr] = 0
                col_used[cc] = False

    return rec(1)


def _check_limit(n: int, family: FamilySpec, limit: int | None) -> None:
    base = brute_limit() if limit is None else limit
    cap = base if family.effective_symmetry is None else base + SYMMETRIC_EXTRA
    if n > cap:
        raise BruteLimitExceeded(
            f"brute force for {family} refuses n={n} > limit {cap}; "
            "raise BAXTERLAB_BRUTE_LIMIT or use the tree/formula methods"
        )


def family_members(n: int, family: FamilySpec = BAXTER, limit: int | None = None) -> Iterator[Perm]:
    """Exhaustively generate the family members of length n."""
    _check_limit(n, family, limit)
    s = family.effective_symmetry
    source = itertools.permutations(range(1, n + 1)) if s is None else symmetric_perms(n, s)
    for w in source:
        if family.contains(w):
            yield w


def _scan_slice(args):
    n, first = args
    return _kernels.scan_baxter(n, first)


def _scan_all(n: int, jobs: int):
    if jobs <= 1 or n < 2:
        return _kernels.scan_baxter(n)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_scan_slice, [(n, f) for f in range(1, n + 1)]))
    count = sum(c for c, _ in parts)
    table = sum(t for _, t in parts)
    return count, table


def brute_count(n: int, family: FamilySpec = BAXTER, limit: int | None = None, jobs: int = 1) -> int:
    """Exhaustive count of the family members of length n.

    >>> brute_count(4), brute_count(5, FamilySpec("baxter", Symmetry.ROTATE90CW))
    (22, 2)
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    _check_limit(n, family, limit)
    if family == BAXTER:
        return _scan_all(n, jobs)[0]
    return sum(1 for _ in family_members(n, family, limit))


def stats_table(n: int, family: FamilySpec = BAXTER, limit: int | None = None, jobs: int = 1) -> dict[tuple[int, int], int]:
    """Joint distribution of (descents, inverse descents) over the family."""
    _check_limit(n, family, limit)
    if family == BAXTER:
        _, table = _scan_all(n, jobs)
        if n == 0:
            return {(0, 0): 1}
        return {(int(d), int(e)): int(table[d, e]) for d, e in zip(*table.nonzero())}
    out: Counter = Counter()
    for w in family_members(n, family, limit):
        out[(descents(w), descents(inverse(w)))] += 1
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# count tables

@dataclass(frozen=True)
class CountRow:
    n: int
    count: int
    method: Literal["formula", "tree", "brute"]


class CountTable(list):
    """Rows of (n, count, method)."""

    def disagreements(self) -> list[int]:
        by_n: dict[int, set[int]] = {}
        for row in self:
            by_n.setdefault(row.n, set()).add(row.count)
        return sorted(n for n, vals in by_n.items() if len(vals) > 1)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "count", "method"])
        for row in self:
            writer.writerow([row.n, row.count, row.method])
        return buf.getvalue()

    def to_json_lines(self) -> list[str]:
        return [json.dumps({"n": r.n, "count": r.count, "method": r.method}) for r in self]
