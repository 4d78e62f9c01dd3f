"""Strip codes for alternating oriented pretzel links and the exhaustive oracle.

A code carries a type tag (1, 2 or 3), the horizontal twist count delta, and
the ordered tuple of strip sizes (negative entries are negatively signed
strips).  Two codes describe the same link exactly when they have equal type
and delta and their strip tuples agree up to rotation (type 1) or up to
rotation and reversal (types 2 and 3).

``enumerate_classes`` generates every valid code at a crossing number,
canonicalizes, and deduplicates; it is the brute-force ground truth that the
closed-form counters in ``counts`` are checked against.  Exhaustive
enumeration grows exponentially with the crossing number, so it refuses to
run above a configurable ceiling.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .combinat import binom, compositions

DEFAULT_ENUM_CEILING = 22
CEILING_ENV_VAR = "PRETZELTAB_ENUM_CEILING"
DEFAULT_FAMILY_LIMIT = 5_000_000


class ResourceLimitError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed its size ceiling."""


def enum_ceiling() -> int:
    """Crossing-number ceiling for exhaustive enumeration.

    Defaults to DEFAULT_ENUM_CEILING; the PRETZELTAB_ENUM_CEILING environment
    variable overrides it.
    """
    raw = os.environ.get(CEILING_ENV_VAR)
    if raw is None:
        return DEFAULT_ENUM_CEILING
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{CEILING_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{CEILING_ENV_VAR} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class TCode:
    """A typed pretzel strip code: (link_type, delta, strips)."""

    link_type: int
    delta: int
    strips: tuple[int, ...]

    def __str__(self) -> str:
        body = ",".join(str(s) for s in self.strips)
        if self.link_type == 2:
            return f"P2({body})"
        return f"P{self.link_type}({self.delta};{body})"


def violation(code: TCode) -> str | None:
    """None if the code is structurally valid, else the first violated rule."""
    if code.link_type not in (1, 2, 3):
        return f"link type must be 1, 2 or 3, got {code.link_type}"
    if code.delta < 0:
        return "delta must be non-negative"
    if len(code.strips) < 3:
        return "a pretzel code needs at least 3 strips"
    if any(s == 0 for s in code.strips):
        return "strip entries must be non-zero"
    if code.link_type == 1:
        if any(s < 3 or s % 2 == 0 for s in code.strips):
            return "type 1 strips must be odd and at least 3"
    elif code.link_type == 2:
        if code.delta != 0:
            return "type 2 codes have no horizontal twist group (delta must be 0)"
        if any(s < 2 or s % 2 for s in code.strips):
            return "type 2 strips must be even and at least 2"
    else:
        if any(0 < s < 2 for s in code.strips):
            return "type 3 positive strips must be at least 2"
        if any(s < 0 and (s % 2 or s > -2) for s in code.strips):
            return "type 3 negative strips must be even and at least 2 in size"
        positive = sum(1 for s in code.strips if s > 0)
        if code.delta + positive < 2 or (code.delta + positive) % 2:
            return "delta plus the number of positive strips must be even and at least 2"
    return None


def is_valid(code: TCode) -> bool:
    return violation(code) is None


def _require_valid(code: TCode) -> None:
    problem = violation(code)
    if problem is not None:
        raise ValueError(f"invalid code {code!r}: {problem}")


def crossing_number(code: TCode) -> int:
    """delta plus the total strip size of a valid code."""
    _require_valid(code)
    return code.delta + sum(abs(s) for s in code.strips)


def _least_rotation(t: tuple[int, ...]) -> tuple[int, ...]:
    if not t:
        return t
    doubled = t + t
    k = len(t)
    return min(doubled[i:i + k] for i in range(k))


def _least_dihedral(t: tuple[int, ...]) -> tuple[int, ...]:
    return min(_least_rotation(t), _least_rotation(t[::-1]))


def canonicalize(code: TCode) -> TCode:
    """The representative of the code's equivalence class.

    Lexicographically least strip tuple over the class: the k rotations for
    type 1, the 2k rotations and reversed rotations for types 2 and 3.
    Entries compare in ordinary integer order, so negative strips sort first.
    Idempotent; delta and type are preserved.
    """
    _require_valid(code)
    if code.link_type == 1:
        strips = _least_rotation(code.strips)
    else:
        strips = _least_dihedral(code.strips)
    return TCode(code.link_type, code.delta, strips)


def _generate_type1(c: int) -> Iterator[TCode]:
    for delta in range(max(0, c - 8)):
        budget = c - delta
        for k in range(3, budget // 3 + 1):
            if (budget - k) % 2:
                continue
            for parts in compositions((budget - k) // 2, k):
                yield TCode(1, delta, tuple(2 * a + 1 for a in parts))


def _generate_type2(c: int) -> Iterator[TCode]:
    if c % 2 or c < 6:
        return
    half = c // 2
    for k in range(3, half + 1):
        for parts in compositions(half, k):
            yield TCode(2, 0, tuple(2 * a for a in parts))


def _generate_type3(c: int) -> Iterator[TCode]:
    for delta in range(max(0, c - 5)):
        budget = c - delta
        for k in range(3, budget // 2 + 1):
            for signs in product((1, -1), repeat=k):
                k1 = sum(1 for s in signs if s > 0)
                k2 = k - k1
                if (delta + k1) % 2 or delta + k1 < 2:
                    continue
                for m1 in range(2 * k1, budget - 2 * k2 + 1):
                    m2 = budget - m1
                    if m2 % 2:
                        continue
                    for pos_parts in compositions(m1 - k1, k1):
                        for neg_parts in compositions(m2 // 2, k2):
                            pos = iter(pos_parts)
                            neg = iter(neg_parts)
                            strips = tuple(
                                next(pos) + 1 if s > 0 else -2 * next(neg)
                                for s in signs
                            )
                            yield TCode(3, delta, strips)


_GENERATORS = {1: _generate_type1, 2: _generate_type2, 3: _generate_type3}


def enumerate_classes(c: int, link_type: int, ceiling: int | None = None) -> list[TCode]:
    """All equivalence classes of the given type at crossing number c.

    Generates every valid code, canonicalizes and deduplicates; returns the
    representatives sorted by (delta, strip count, strips).  Only positive
    type 1 and type 2 codes are generated (one link per mirror pair).

    Refuses c above the enumeration ceiling (``ceiling`` argument, else the
    environment override, else DEFAULT_ENUM_CEILING).
    """
    if c < 1:
        raise ValueError(f"crossing number must be positive, got {c}")
    if link_type not in _GENERATORS:
        raise ValueError(f"link type must be 1, 2 or 3, got {link_type}")
    limit = enum_ceiling() if ceiling is None else ceiling
    if c > limit:
        raise ResourceLimitError(
            f"exhaustive enumeration at {c} crossings exceeds the ceiling of {limit}"
        )
    classes = {canonicalize(code) for code in _GENERATORS[link_type](c)}
    return sorted(classes, key=lambda t: (t.delta, len(t.strips), t.strips))


_CANON = {"cyclic": _least_rotation, "dihedral": _least_dihedral}


def _canon_for(symmetry: str):
    try:
        return _CANON[symmetry]
    except KeyError:
        raise ValueError(f"symmetry must be 'cyclic' or 'dihedral', got {symmetry!r}") from None


def _guard_family(size: int, limit: int) -> None:
    if size > limit:
        raise ResourceLimitError(f"family of {size} tuples exceeds the limit of {limit}")


def composition_class_count(n: int, k: int, symmetry: str = "cyclic",
                            *, limit: int = DEFAULT_FAMILY_LIMIT) -> int:
    """Brute-force orbit count of k-part compositions of n under the chosen
    symmetry, by canonical-form deduplication of the full family."""
    canon = _canon_for(symmetry)
    _guard_family(binom(n - 1, k - 1), limit)
    return len({canon(t) for t in compositions(n, k)})


def signed_class_count(n1: int, k1: int, n2: int, k2: int, symmetry: str = "dihedral",
                       *, limit: int = DEFAULT_FAMILY_LIMIT) -> int:
    """Brute-force orbit count of signed tuples: k1 positive entries summing
    to n1 and k2 negative entries whose sizes sum to n2, under the chosen
    symmetry of the k1 + k2 positions."""
    canon = _canon_for(symmetry)
    k = k1 + k2
    _guard_family(binom(k, k2) * binom(n1 - 1, k1 - 1) * binom(n2 - 1, k2 - 1), limit)
    seen = set()
    for negatives in combinations(range(k), k2):
        spots = set(negatives)
        for pos_parts in compositions(n1, k1):
            for neg_parts in compositions(n2, k2):
                pos = iter(pos_parts)
                neg = iter(neg_parts)
                seen.add(canon(tuple(
                    -next(neg) if i in spots else next(pos) for i in range(k)
                )))
    return len(seen)
