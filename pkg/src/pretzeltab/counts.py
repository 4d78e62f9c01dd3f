"""Closed-form counts of alternating oriented pretzel links per crossing number.

Links are grouped into three types by how the horizontal twist group and the
strips sit in the Seifert circle decomposition; each type reduces to a
necklace or bracelet count over strip-size tuples:

  * type 1: horizontal twists smooth horizontally, strips all odd (>= 3);
    classes are cyclic only.
  * type 2: no horizontal twists, strips all even (>= 2); dihedral classes.
  * type 3: mixed strip signs, negative strips even; dihedral classes of
    signed tuples, summed over every admissible parameter point.

Counts cover one link per mirror pair; ``CountRow.total`` doubles the sum
because every such link is chiral.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .necklaces import bracelet_count, necklace_count
from .signed_bracelets import signed_bracelet_count


class Type3Params(NamedTuple):
    """One admissible parameter point for the type 3 count.

    delta: crossings in the horizontal twist group;
    n1, k1: reduced weight and count of positive strips;
    n2, k2: reduced weight and count of negative strips.
    A point satisfies delta + k1 + n1 + 2*n2 = c, delta + k1 even and >= 2,
    k1 + k2 >= 3, n1 >= k1 >= 0, n2 >= k2 >= 0, and a family is weightless
    exactly when it is empty.
    """

    delta: int
    n1: int
    k1: int
    n2: int
    k2: int


def _check_c(c: int) -> None:
    if c < 1:
        raise ValueError(f"crossing number must be positive, got {c}")


def type3_params(c: int) -> list[Type3Params]:
    """All type 3 parameter points at crossing number c.

    Deterministic order: ascending lexicographic on (delta, k1, n1, k2, n2).
    """
    _check_c(c)
    points = []
    for delta in range(c + 1):
        for k1 in range(c - delta + 1):
            if (delta + k1) % 2 or delta + k1 < 2:
                continue
            for n1 in range(k1, c - delta - k1 + 1):
                if k1 == 0 and n1 > 0:
                    break
                rem = c - delta - k1 - n1
                if rem % 2:
                    continue
                n2 = rem // 2
                if n2 == 0:
                    if k1 >= 3:
                        points.append(Type3Params(delta, n1, k1, 0, 0))
                else:
                    for k2 in range(max(1, 3 - k1), n2 + 1):
                        points.append(Type3Params(delta, n1, k1, n2, k2))
    return points


def count_type1(c: int) -> int:
    """Type 1 links with c crossings: cyclic classes summed over delta and k."""
    _check_c(c)
    total = 0
    for delta in range(max(0, c - 8)):
        budget = c - delta
        for k in range(3, budget // 3 + 1):
            if (budget - k) % 2 == 0:
                total += necklace_count((budget - k) // 2, k)
    return total


def count_type1_alt(c: int) -> int:
    """Type 1 count by an independent route, for cross-checking.

    Folds the (delta, k) double sum by the parity of c: with q = c // 2 the
    inner index j = (delta + k - (c % 2)) / 2 starts at floor(k/2) for odd c
    and ceil(k/2) for even c.
    """
    _check_c(c)
    q, odd = divmod(c, 2)
    total = 0
    for i in range(3, q + 1):
        start = i // 2 if odd else (i + 1) // 2
        for j in range(start, q - i + 1):
            total += necklace_count(q - j, i)
    return total


def count_type2(c: int) -> int:
    """Type 2 links with c crossings: zero unless c = 2n >= 6, else the sum
    of bracelet counts over 3 <= k <= n."""
    _check_c(c)
    if c % 2 or c < 6:
        return 0
    n = c // 2
    return sum(bracelet_count(n, k) for k in range(3, n + 1))


def count_type3(c: int) -> int:
    """Type 3 links with c crossings: signed bracelet counts summed over all
    admissible parameter points."""
    _check_c(c)
    return sum(signed_bracelet_count(p.n1, p.k1, p.n2, p.k2) for p in type3_params(c))


def count_by_type(c: int, link_type: int) -> int:
    counters = {1: count_type1, 2: count_type2, 3: count_type3}
    if link_type not in counters:
        raise ValueError(f"link type must be 1, 2 or 3, got {link_type}")
    return counters[link_type](c)


@dataclass(frozen=True)
class CountRow:
    """One output row: per-type counts, their sum p, and the mirror-doubled total."""

    c: int
    p1: int
    p2: int
    p3: int
    p: int
    total: int


def count_row(c: int) -> CountRow:
    """Assemble the full row for crossing number c."""
    p1 = count_type1(c)
    p2 = count_type2(c)
    p3 = count_type3(c)
    p = p1 + p2 + p3
    return CountRow(c, p1, p2, p3, p, 2 * p)
