"""
Permutation values, dihedral symmetries, vincular pattern matching and
basic statistics.

A permutation is a plain tuple of the labels 1..n in one-line notation,
``w = (w_1, ..., w_n)``. Positions reported by this module are 1-indexed.
The permutation matrix has a 1 at row ``i``, column ``w_i``.
"""
from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from typing import Sequence

Perm = tuple[int, ...]

EMPTY: Perm = ()


class PermutationParseError(ValueError):
    """Raised when text cannot be read as a permutation."""


class ContractError(ValueError):
    """Raised when an operation's precondition does not hold."""


def is_permutation(labels: Sequence[int]) -> bool:
    """
    >>> [is_permutation(w) for w in [(), (1,), (2, 1), (1, 1), (0, 1)]]
    [True, True, True, False, False]
    """
    return sorted(labels) == list(range(1, len(labels) + 1))


def perm(labels: Sequence[int]) -> Perm:
    w = tuple(int(x) for x in labels)
    if not is_permutation(w):
        raise PermutationParseError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def parse_perm(text: str) -> Perm:
    """
    Read a permutation from a compact digit string or a comma/space list.

    >>> parse_perm("41352")
    (4, 1, 3, 5, 2)
    >>> parse_perm("10,1,2,3,4,5,6,7,8,9")[0]
    10
    >>> parse_perm("()")
    ()
    """
    s = text.strip()
    if s in ("()", "∅"):
        return EMPTY
    if not s:
        raise PermutationParseError("empty permutation text; use '()' for the empty permutation")
    if re.fullmatch(r"\d+", s):
        tokens = list(s)
    else:
        tokens = re.split(r"\s*,\s*|\s+", s)
    labels = []
    for tok in tokens:
        if not tok:
            raise PermutationParseError(f"empty token in {text!r}")
        if not tok.isdigit():
            raise PermutationParseError(f"bad token {tok!r} in {text!r}")
        labels.append(int(tok))
    n = len(labels)
    seen = set()
    for tok, x in zip(tokens, labels):
        if not 1 <= x <= n:
            raise PermutationParseError(f"label {tok!r} outside 1..{n}")
        if x in seen:
            raise PermutationParseError(f"duplicate label {tok!r}")
        seen.add(x)
    return tuple(labels)


def format_perm(w: Sequence[int]) -> str:
    """Compact digits when n <= 9, comma-separated otherwise."""
    if len(w) == 0:
        return "()"
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)


# ---------------------------------------------------------------------------
# dihedral group of the square

def reverse(w: Perm) -> Perm:
    return tuple(reversed(w))


def complement(w: Perm) -> Perm:
    n = len(w)
    return tuple(n + 1 - x for x in w)


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, x in enumerate(w, 1):
        inv[x - 1] = i
    return tuple(inv)


class Symmetry(str, enum.Enum):
    IDENTITY = "identity"
    REVERSE = "reverse"
    COMPLEMENT = "complement"
    INVERSE = "inverse"
    ROTATE90CW = "rotate90cw"
    ROTATE90CCW = "rotate90ccw"
    ROTATE180 = "rotate180"
    ANTIDIAGONAL = "antidiagonal"

    def cell_map(self, n: int):
        """Action on matrix cells (row, column), 1-indexed."""
        m = n + 1
        return {
            Symmetry.IDENTITY: lambda r, c: (r, c),
            Symmetry.REVERSE: lambda r, c: (m - r, c),
            Symmetry.COMPLEMENT: lambda r, c: (r, m - c),
            Symmetry.INVERSE: lambda r, c: (c, r),
            Symmetry.ROTATE90CW: lambda r, c: (c, m - r),
            Symmetry.ROTATE90CCW: lambda r, c: (m - c, r),
            Symmetry.ROTATE180: lambda r, c: (m - r, m - c),
            Symmetry.ANTIDIAGONAL: lambda r, c: (m - c, m - r),
        }[self]


def apply_symmetry(w: Perm, s: Symmetry | str) -> Perm:
    """
    Image of the permutation matrix of ``w`` under a rigid motion.

    >>> apply_symmetry((2, 5, 3, 1, 4), "rotate90cw")
    (2, 5, 3, 1, 4)
    >>> apply_symmetry((4, 1, 3, 5, 2), Symmetry.INVERSE)
    (2, 5, 3, 1, 4)
    """
    s = Symmetry(s)
    if s is Symmetry.IDENTITY:
        return tuple(w)
    if s is Symmetry.REVERSE:
        return reverse(w)
    if s is Symmetry.COMPLEMENT:
        return complement(w)
    if s is Symmetry.INVERSE:
        return inverse(w)
    if s is Symmetry.ROTATE90CW:
        return complement(inverse(w))
    if s is Symmetry.ROTATE90CCW:
        return reverse(inverse(w))
    if s is Symmetry.ROTATE180:
        return complement(reverse(w))
    return complement(reverse(inverse(w)))


def is_fixed(w: Perm, s: Symmetry | str) -> bool:
    return apply_symmetry(w, s) == tuple(w)


# ---------------------------------------------------------------------------
# vincular patterns

@dataclass(frozen=True)
class VincularPattern:
    """A classical pattern plus adjacency constraints.

    ``adjacent_pairs`` holds the 1-indexed pattern positions ``a`` whose
    occurrence positions must satisfy ``pos[a+1] == pos[a] + 1``.
    """

    pattern: Perm
    adjacent_pairs: frozenset[int]

    def __post_init__(self):
        if not all(1 <= a < len(self.pattern) for a in self.adjacent_pairs):
            raise ValueError(f"adjacency out of range for pattern {self.pattern}")

    @classmethod
    def parse(cls, text: str) -> "VincularPattern":
        """Dashes separate blocks; letters inside one block are adjacent.

        >>> VincularPattern.parse("2-41-3")
        VincularPattern(pattern=(2, 4, 1, 3), adjacent_pairs=frozenset({2}))
        """
        blocks = text.split("-")
        pattern: list[int] = []
        adjacent = set()
        for block in blocks:
            if not block:
                raise PermutationParseError(f"empty block in pattern {text!r}")
            for k, ch in enumerate(block):
                if k > 0:
                    adjacent.add(len(pattern))
                pattern.append(int(ch))
        return cls(perm(pattern), frozenset(adjacent))

    def __str__(self):
        out = []
        for a, x in enumerate(self.pattern, 1):
            if a > 1 and (a - 1) not in self.adjacent_pairs:
                out.append("-")
            out.append(str(x))
        return "".join(out)


BAXTER_PATTERNS = (VincularPattern.parse("3-14-2"), VincularPattern.parse("2-41-3"))


def _as_pattern(p: VincularPattern | str) -> VincularPattern:
    return p if isinstance(p, VincularPattern) else VincularPattern.parse(p)


def vincular_occurrences(w: Perm, p: VincularPattern | str) -> list[tuple[int, ...]]:
    """
    Every position tuple (1-indexed) at which ``w`` contains ``p``.

    Plain scan over all position subsets; meant for small n.

    >>> vincular_occurrences((2, 4, 1, 3), "2-41-3")
    [(1, 2, 3, 4)]
    """
    p = _as_pattern(p)
    k = len(p.pattern)
    order = sorted(range(k), key=lambda a: p.pattern[a])
    found = []
    for pos in itertools.combinations(range(len(w)), k):
        if any(pos[a] != pos[a - 1] + 1 for a in p.adjacent_pairs):
            continue
        vals = [w[pos[a]] for a in order]
        if all(vals[t] < vals[t + 1] for t in range(k - 1)):
            found.append(tuple(q + 1 for q in pos))
    return found


def is_baxter(w: Perm) -> bool:
    """
    True when ``w`` avoids both 3-14-2 and 2-41-3.

    For each adjacent pair (a, b) = (w_j, w_{j+1}) a 3-14-2 needs an entry
    left of the pair and one right of it, both strictly between a and b,
    with the left one larger. 2-41-3 is the mirror case. This is O(n^2).

    >>> is_baxter((2, 4, 1, 3)), is_baxter((4, 1, 3, 5, 2))
    (False, True)
    """
    n = len(w)
    for j in range(n - 1):
        a, b = w[j], w[j + 1]
        lo, hi = (a, b) if a < b else (b, a)
        left = [x for x in w[:j] if lo < x < hi]
        right = [x for x in w[j + 2:] if lo < x < hi]
        if not left or not right:
            continue
        if a < b and max(left) > min(right):
            return False
        if a > b and min(left) < max(right):
            return False
    return True


# ---------------------------------------------------------------------------
# statistics

@dataclass(frozen=True)
class PermStats:
    ltr_max_positions: tuple[int, ...]
    rtl_max_positions: tuple[int, ...]
    ltr_min_positions: tuple[int, ...]
    rtl_min_positions: tuple[int, ...]
    descents: int
    inverse_descents: int


def ltr_maxima(w: Perm) -> list[int]:
    out, best = [], 0
    for i, x in enumerate(w, 1):
        if x > best:
            out.append(i)
            best = x
    return out


def rtl_maxima(w: Perm) -> list[int]:
    out, best = [], 0
    for i in range(len(w), 0, -1):
        if w[i - 1] > best:
            out.append(i)
            best = w[i - 1]
    return out[::-1]


def ltr_minima(w: Perm) -> list[int]:
    out, best = [], len(w) + 1
    for i, x in enumerate(w, 1):
        if x < best:
            out.append(i)
            best = x
    return out


def rtl_minima(w: Perm) -> list[int]:
    out, best = [], len(w) + 1
    for i in range(len(w), 0, -1):
        if w[i - 1] < best:
            out.append(i)
            best = w[i - 1]
    return out[::-1]


def descents(w: Perm) -> int:
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def stats(w: Perm) -> PermStats:
    """
    >>> s = stats((3, 1, 2, 4, 8, 7, 5, 6))
    >>> s.ltr_max_positions, s.rtl_max_positions
    ((1, 4, 5), (5, 6, 8))
    """
    return PermStats(
        tuple(ltr_maxima(w)),
        tuple(rtl_maxima(w)),
        tuple(ltr_minima(w)),
        tuple(rtl_minima(w)),
        descents(w),
        descents(inverse(w)),
    )


def cycles(w: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        cyc = []
        x = start
        while x not in seen:
            seen.add(x)
            cyc.append(x)
            x = w[x - 1]
        out.append(tuple(cyc))
    return out


def quarter_cycle_check(w: Perm) -> bool:
    """
    Check that a quarter-turn-fixed ``w`` splits into 4-cycles
    ``(i, j, n+1-i, n+1-j)`` and, for odd n, one central fixed point.
    """
    if not is_fixed(w, Symmetry.ROTATE90CW):
        raise ContractError("not quarter-turn fixed")
    n = len(w)
    for cyc in cycles(w):
        if len(cyc) == 1:
            if 2 * cyc[0] != n + 1:
                return False
        elif len(cyc) == 4:
            i, j = cyc[0], cyc[1]
            if cyc != (i, j, n + 1 - i, n + 1 - j):
                return False
        else:
            return False
    return True
