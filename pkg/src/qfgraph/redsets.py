"""Reducibility sets for pairs of Kirillov-Reshetikhin factors in type A.

The set attached to colors (i, j), weights (r, s) and a window J collects the
positive exponent gaps m for which the ordered tensor product of the two KR
modules (restricted to J) is reducible.  Its type-A closed form is

    { r + s + d(i,j) - 2p : -d([i,j], boundary of J) <= p < min(r, s) }.

All queries reduce to window tests on the string parameter p, so membership
is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .dynkin import DynkinA, Interval


@dataclass(frozen=True)
class RSet:
    """A materialized reducibility set together with its generating data."""

    elements: frozenset[int]
    params: tuple

    def member(self, m: int) -> bool:
        """True when |m| lies in the set (reducibility in either order)."""
        return abs(m) in self.elements

    def contains_signed(self, m: int) -> bool:
        """Literal membership; negative and zero values are never members."""
        return m in self.elements

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    def __contains__(self, m: int) -> bool:
        return self.member(m)

    def __len__(self) -> int:
        return len(self.elements)


@lru_cache(maxsize=None)
def _elements(i: int, r: int, j: int, s: int, lo: int, hi: int) -> frozenset[int]:
    window = Interval(lo, hi)
    base = r + s + abs(i - j)
    reach = window.boundary_distance(Interval.hull(i, j))
    return frozenset(base - 2 * p for p in range(-reach, min(r, s)))


def r_set(diagram: DynkinA, i: int, r: int, j: int, s: int,
          window: Interval | None = None) -> RSet:
    """Reducibility set of the colored pair (i, r), (j, s) over the window.

    The window defaults to the whole diagram.  Both colors must lie in the
    window and both weights must be positive.
    """
    if window is None:
        window = diagram.whole()
    diagram.check_interval(window)
    if i not in window or j not in window:
        raise ValueError(f"colors ({i}, {j}) not inside window [{window.lo}, {window.hi}]")
    if r < 1 or s < 1:
        raise ValueError(f"weights must be positive, got ({r}, {s})")
    return RSet(_elements(i, r, j, s, window.lo, window.hi),
                params=(i, r, j, s, (window.lo, window.hi)))


def sl2_set(r: int, s: int) -> RSet:
    """Rank-one reducibility set {r + s - 2p : 0 <= p < min(r, s)}.

    This is the single-node window set; it governs whether two same-color
    q-strings coalesce.
    """
    if r < 1 or s < 1:
        raise ValueError(f"weights must be positive, got ({r}, {s})")
    return RSet(frozenset(r + s - 2 * p for p in range(min(r, s))),
                params=(None, r, None, s, None))


def string_parameter(diagram: DynkinA, i: int, r: int, j: int, s: int, m: int,
                     window: Interval | None = None) -> int | None:
    """Solve m = r + s + d(i,j) - 2p for p inside the admissible window.

    Returns None (rather than raising) on parity mismatch or when p falls
    outside [-d([i,j], boundary), min(r, s)), so callers can use this as a
    membership probe.
    """
    if window is None:
        window = diagram.whole()
    diagram.check_interval(window)
    if i not in window or j not in window:
        raise ValueError(f"colors ({i}, {j}) not inside window [{window.lo}, {window.hi}]")
    if m <= 0:
        return None
    twice_p = r + s + diagram.distance(i, j) - m
    if twice_p % 2 != 0:
        return None
    p = twice_p // 2
    reach = window.boundary_distance(Interval.hull(i, j))
    if -reach <= p < min(r, s):
        return p
    return None


def minimal_window(diagram: DynkinA, i: int, r: int, j: int, s: int,
                   m: int) -> Interval | None:
    """Smallest interval J containing i and j with m in the J-restricted set.

    With p the string parameter of m over the whole diagram: for p >= 0 the
    hull of i and j already works; for p < 0 the hull must be widened by -p
    on each side.  Returns None when m is not in the unrestricted set.
    """
    p = string_parameter(diagram, i, r, j, s, m)
    if p is None:
        return None
    hull = Interval.hull(i, j)
    if p >= 0:
        return hull
    return Interval(hull.lo + p, hull.hi - p)
