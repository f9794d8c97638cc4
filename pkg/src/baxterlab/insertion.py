"""
Insertion and removal operators on permutations, the admissibility rules
that keep a Baxter permutation Baxter, and the symmetric child
constructions used by the half-turn and quarter-turn generating trees.

A gap ``g`` of a length-n permutation lies between positions g and g+1,
so gap 0 is the front and gap n the end.
"""
from __future__ import annotations

from typing import Literal

from ._kernels import baxter_mask
from .perm import (
    ContractError,
    Perm,
    Symmetry,
    is_baxter,
    is_fixed,
    ltr_maxima,
    ltr_minima,
    reverse,
    rtl_maxima,
    rtl_minima,
)

Side = Literal["front", "back"]
Family = Literal["baxter", "half", "quarter"]

# child lengths above these are refused by children_oracle
ORACLE_LIMITS = {"baxter": 12, "half": 12, "quarter": 13}


class OracleLimitExceeded(RuntimeError):
    pass


def _check_gap(w: Perm, g: int) -> None:
    if not 0 <= g <= len(w):
        raise ValueError(f"gap {g} out of range 0..{len(w)}")


def insert_largest(w: Perm, g: int) -> Perm:
    _check_gap(w, g)
    return tuple(w[:g]) + (len(w) + 1,) + tuple(w[g:])


def insert_smallest(w: Perm, g: int) -> Perm:
    _check_gap(w, g)
    up = tuple(x + 1 for x in w)
    return up[:g] + (1,) + up[g:]


def insert_boundary(w: Perm, side: Side, label: int) -> Perm:
    """Put ``label`` at the front or back, bumping labels >= it by one.

    >>> insert_boundary((1, 2, 3), "back", 2)
    (1, 3, 4, 2)
    """
    if not 1 <= label <= len(w) + 1:
        raise ValueError(f"label {label} out of range 1..{len(w) + 1}")
    up = tuple(x + 1 if x >= label else x for x in w)
    if side == "front":
        return (label,) + up
    if side == "back":
        return up + (label,)
    raise ValueError(f"side must be 'front' or 'back', got {side!r}")


def remove(w: Perm, which: Literal["largest", "smallest", "front", "back"]) -> Perm:
    n = len(w)
    if n == 0:
        raise ContractError("cannot remove from the empty permutation")
    if which == "largest":
        return tuple(x for x in w if x != n)
    if which == "smallest":
        return tuple(x - 1 for x in w if x != 1)
    if which == "front":
        head = w[0]
        return tuple(x - 1 if x > head else x for x in w[1:])
    if which == "back":
        tail = w[-1]
        return tuple(x - 1 if x > tail else x for x in w[:-1])
    raise ValueError(f"unknown removal {which!r}")


def _require_baxter(w: Perm) -> None:
    if not is_baxter(w):
        raise ContractError(f"not a Baxter permutation: {w}")


# ---------------------------------------------------------------------------
# admissibility rules

def admissible_largest_gaps(w: Perm) -> list[int]:
    """Gaps just left of a left-to-right maximum or just right of a
    right-to-left maximum.

    >>> admissible_largest_gaps((3, 1, 2, 4, 8, 7, 5, 6))
    [0, 3, 4, 5, 6, 8]
    """
    _require_baxter(w)
    if not w:
        return [0]
    return sorted({p - 1 for p in ltr_maxima(w)} | set(rtl_maxima(w)))


def admissible_smallest_gaps(w: Perm) -> list[int]:
    _require_baxter(w)
    if not w:
        return [0]
    return sorted({p - 1 for p in ltr_minima(w)} | set(rtl_minima(w)))


def admissible_boundary_labels(w: Perm, side: Side) -> list[int]:
    """Labels that can be put at the front/back while staying Baxter.

    Appending j works iff every entry below j sits left of j, or every
    entry above j-1 sits left of j-1. For prepending, read "right" for
    "left". A clause naming a label absent from ``w`` is false.
    """
    _require_baxter(w)
    if side not in ("front", "back"):
        raise ValueError(f"side must be 'front' or 'back', got {side!r}")
    n = len(w)
    if n == 0:
        return [1]
    pos = {x: i for i, x in enumerate(w)}

    def on_good_side(x, y):
        # x must sit on the required side of y
        return pos[x] < pos[y] if side == "back" else pos[x] > pos[y]

    out = []
    for j in range(1, n + 2):
        below = j <= n and all(on_good_side(x, j) for x in range(1, j))
        above = j >= 2 and all(on_good_side(x, j - 1) for x in range(j, n + 1))
        if below or above:
            out.append(j)
    return out


def _brute_filter(keys, candidates) -> list[int]:
    mask = baxter_mask(candidates)
    return [k for k, ok in zip(keys, mask) if ok]


def brute_largest_gaps(w: Perm) -> list[int]:
    gaps = range(len(w) + 1)
    return _brute_filter(gaps, [insert_largest(w, g) for g in gaps])


def brute_smallest_gaps(w: Perm) -> list[int]:
    gaps = range(len(w) + 1)
    return _brute_filter(gaps, [insert_smallest(w, g) for g in gaps])


def brute_boundary_labels(w: Perm, side: Side) -> list[int]:
    labels = range(1, len(w) + 2)
    return _brute_filter(labels, [insert_boundary(w, side, j) for j in labels])


# ---------------------------------------------------------------------------
# symmetric children

def half_turn_children(w: Perm) -> list[Perm]:
    """Children of ``w`` in the tree of 180-degree-fixed Baxter permutations.

    Each admissible largest gap ``g`` gets the new largest label; the new
    smallest label goes to the mirror gap. When n is even and ``g = n/2``
    the mirror is ambiguous and both sides are tried; exactly one is Baxter
    except at the empty root, whose two children are both kept.

    >>> half_turn_children((2, 1))
    [(4, 3, 2, 1), (3, 4, 1, 2), (1, 3, 2, 4)]
    """
    _require_baxter(w)
    if not is_fixed(w, Symmetry.ROTATE180):
        raise ContractError(f"not fixed under rotate180: {w}")
    n = len(w)
    if n == 0:
        return [(2, 1), (1, 2)]
    out = []
    for g in admissible_largest_gaps(w):
        big = insert_largest(w, g)
        if 2 * g < n:
            kids = [insert_smallest(big, n + 1 - g)]
        elif 2 * g > n:
            kids = [insert_smallest(big, n - g)]
        else:
            kids = [c for c in (insert_smallest(big, g + 1), insert_smallest(big, g)) if is_baxter(c)]
            if len(kids) != 1:
                raise AssertionError(f"middle insertion at {w}, gap {g} gave {len(kids)} Baxter candidates")
        c = kids[0]
        if not (is_baxter(c) and is_fixed(c, Symmetry.ROTATE180)):
            raise AssertionError(f"half-turn child {c} of {w} is not a 180-fixed Baxter permutation")
        out.append(c)
    return out


def half_turn_parent(w: Perm) -> Perm:
    if len(w) < 2:
        raise ContractError("half-turn parent needs length >= 2")
    return remove(remove(w, "largest"), "smallest")


def _quarter_right(w: Perm, j: int) -> Perm:
    """Four-insertion step for a new largest label right of w_j (1-indexed).

    The new 4-cycle is (1, a, N, N+1-a) with N = n+4, where a = j+2 when the
    pivot sits left of the centre and a = j+3 otherwise.
    """
    n = len(w)
    big_n = n + 4
    a = j + 2 if 2 * j <= n - 1 else j + 3
    v = insert_boundary(w, "front", j + 1)
    # final last entry is N+1-a; it gets bumped once by the smallest insertion
    v = insert_boundary(v, "back", big_n - a)
    # pivot w_j now sits at position j+1
    v = insert_largest(v, j + 1)
    v = insert_smallest(v, big_n - a)
    return v


def quarter_turn_children(w: Perm) -> list[Perm]:
    """Children of ``w`` in the tree of 90-degree-fixed Baxter permutations.

    >>> quarter_turn_children((1,))
    [(2, 5, 3, 1, 4), (4, 1, 3, 5, 2)]
    """
    _require_baxter(w)
    if not is_fixed(w, Symmetry.ROTATE90CW):
        raise ContractError(f"not fixed under rotate90cw: {w}")
    n = len(w)
    if n % 4 != 1:
        raise ContractError(f"quarter-turn tree nodes have length 4m+1, got {n}")
    left = {p - 1 for p in ltr_maxima(w)}
    right = set(rtl_maxima(w))
    out = []
    for g in sorted(left | right):
        if g in right:
            c = _quarter_right(w, g)
        else:
            # mirror: left of the LtR maximum at g+1 is right of the
            # RtL maximum at n-g in the reversed word
            c = reverse(_quarter_right(reverse(w), n - g))
        if not (is_baxter(c) and is_fixed(c, Symmetry.ROTATE90CW)):
            raise AssertionError(f"quarter-turn child {c} of {w} (gap {g}) is not a 90-fixed Baxter permutation")
        out.append(c)
    return out


def quarter_turn_parent(w: Perm) -> Perm:
    if len(w) < 5:
        raise ContractError("quarter-turn parent needs length >= 5")
    _require_baxter(w)
    if not is_fixed(w, Symmetry.ROTATE90CW):
        raise ContractError(f"not fixed under rotate90cw: {w}")
    v = remove(w, "front")
    v = remove(v, "back")
    v = remove(v, "largest")
    return remove(v, "smallest")


def _quarter_completion(w: Perm, a: int) -> Perm | None:
    """Length n+4 word with 4-cycle (1, a, N, N+1-a) around ``w``, or None."""
    big_n = len(w) + 4
    b = big_n + 1 - a
    if not 2 <= a <= big_n - 1 or a == b:
        return None
    ends = {1: a, a: big_n, big_n: b, b: 1}
    inner_pos = [p for p in range(1, big_n + 1) if p not in ends]
    inner_val = [x for x in range(1, big_n + 1) if x not in ends.values()]
    out = dict(ends)
    for p, x in zip(inner_pos, w):
        out[p] = inner_val[x - 1]
    return tuple(out[p] for p in range(1, big_n + 1))


def children_oracle(w: Perm, family: Family, limit: int | None = None) -> list[Perm]:
    """Exhaustive children of ``w``: every family member one step longer
    whose family removal gives back ``w``. Sorted lexicographically."""
    n = len(w)
    step = {"baxter": 1, "half": 2, "quarter": 4}[family]
    limit = ORACLE_LIMITS[family] if limit is None else limit
    if n + step > limit:
        raise OracleLimitExceeded(
            f"children_oracle({family}) refuses child length {n + step} > limit {limit}"
        )
    if family == "baxter":
        found = {insert_largest(w, g) for g in range(n + 1)}
        found = {c for c in found if is_baxter(c)}
    elif family == "half":
        found = set()
        for g in range(n + 1):
            big = insert_largest(w, g)
            for h in range(n + 2):
                c = insert_smallest(big, h)
                if is_fixed(c, Symmetry.ROTATE180) and is_baxter(c):
                    found.add(c)
    else:
        found = set()
        for a in range(1, n + 5):
            c = _quarter_completion(w, a)
            if c is None or not is_fixed(c, Symmetry.ROTATE90CW) or not is_baxter(c):
                continue
            if quarter_turn_parent(c) == tuple(w):
                found.add(c)
    return sorted(found)
