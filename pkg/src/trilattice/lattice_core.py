"""Exact integer primitives for lattice points, segments and triangles.

Nothing in here touches floating point. Areas are carried as twice the
area so they stay integral.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import DegenerateSegment, DegenerateTriangle, InvariantError, RangeError

COORD_LIMIT = 2**30
INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def check_int64(value: int, what: str = "value") -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise RangeError(f"{what} {value} does not fit in a signed 64-bit integer")
    return value


@dataclass(frozen=True, slots=True)
class LatticePoint:
    x: int
    y: int

    def __post_init__(self) -> None:
        for name in ("x", "y"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"lattice coordinate {name} must be an int, got {v!r}")
            if abs(v) > COORD_LIMIT:
                raise RangeError(f"coordinate {name}={v} outside [-2^30, 2^30]")

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y

    def as_list(self) -> list[int]:
        return [self.x, self.y]


def as_point(p: LatticePoint | Sequence[int]) -> LatticePoint:
    if isinstance(p, LatticePoint):
        return p
    x, y = p
    return LatticePoint(x, y)


def cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> int:
    """Oriented twice-area of (o, a, b); positive when counter-clockwise."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


@dataclass(frozen=True, slots=True)
class LatticeTriangle:
    v1: LatticePoint
    v2: LatticePoint
    v3: LatticePoint

    def __post_init__(self) -> None:
        for name in ("v1", "v2", "v3"):
            v = getattr(self, name)
            if not isinstance(v, LatticePoint):
                object.__setattr__(self, name, as_point(v))
        if cross(self.v1, self.v2, self.v3) == 0:
            raise DegenerateTriangle(
                f"vertices {self.v1.as_list()}, {self.v2.as_list()}, {self.v3.as_list()} are collinear"
            )

    @classmethod
    def from_coords(cls, x1: int, y1: int, x2: int, y2: int, x3: int, y3: int) -> LatticeTriangle:
        return cls(LatticePoint(x1, y1), LatticePoint(x2, y2), LatticePoint(x3, y3))

    def __iter__(self) -> Iterator[LatticePoint]:
        yield self.v1
        yield self.v2
        yield self.v3

    def edges(self) -> tuple[tuple[LatticePoint, LatticePoint], ...]:
        return ((self.v1, self.v2), (self.v2, self.v3), (self.v3, self.v1))

    def as_lists(self) -> list[list[int]]:
        return [v.as_list() for v in self]


@dataclass(frozen=True, slots=True)
class TriangleStats:
    twice_area: int
    boundary: int
    interior: int

    def __post_init__(self) -> None:
        if self.boundary < 3:
            raise InvariantError(f"boundary count {self.boundary} < 3")
        if self.twice_area != self.boundary + 2 * self.interior - 2:
            raise InvariantError(f"Pick relation violated by {self}")


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def segment_interior_count(p: LatticePoint, q: LatticePoint) -> int:
    """Number of lattice points strictly between ``p`` and ``q``."""
    if p == q:
        raise DegenerateSegment(f"segment endpoints coincide at {p.as_list()}")
    return math.gcd(q.x - p.x, q.y - p.y) - 1


def twice_area(t: Iterable[LatticePoint]) -> int:
    """``|cross(v2 - v1, v3 - v1)|``. Accepts any three points, so a
    degenerate triple simply gives 0."""
    a, b, c = t
    return abs(cross(a, b, c))


def _require_triangle(t: LatticeTriangle) -> None:
    if not isinstance(t, LatticeTriangle):
        a, b, c = t
        LatticeTriangle(a, b, c)


def boundary_count(t: LatticeTriangle) -> int:
    _require_triangle(t)
    a, b, c = t
    return (
        segment_interior_count(a, b)
        + segment_interior_count(b, c)
        + segment_interior_count(c, a)
        + 3
    )


def interior_count_pick(t: LatticeTriangle) -> int:
    area2 = twice_area(t)
    b = boundary_count(t)
    num = area2 - b + 2
    if num % 2 or num < 0:
        raise InvariantError(f"Pick parity violated: 2A={area2}, B={b}")
    return num // 2


def stats(t: LatticeTriangle) -> TriangleStats:
    return TriangleStats(twice_area(t), boundary_count(t), interior_count_pick(t))


def _ccw(t: LatticeTriangle) -> tuple[LatticePoint, LatticePoint, LatticePoint]:
    a, b, c = t
    if cross(a, b, c) < 0:
        b, c = c, b
    return a, b, c


def iter_interior_points(t: LatticeTriangle) -> Iterator[LatticePoint]:
    """Yield the strictly interior lattice points row by row (y, then x).

    Each row's open x-range comes from the three edge half-planes using
    exact floor division, so the cost is O(height + I).
    """
    _require_triangle(t)
    verts = _ccw(t)
    edges = [(verts[i], verts[(i + 1) % 3]) for i in range(3)]
    ys = [v.y for v in verts]
    for y in range(min(ys) + 1, max(ys)):
        lo, hi = -math.inf, math.inf
        empty = False
        for p, q in edges:
            # Left of p->q:  (q.x-p.x)(y-p.y) - (q.y-p.y)(x-p.x) > 0, i.e. A + B*x > 0.
            B = p.y - q.y
            A = (q.x - p.x) * (y - p.y) + (q.y - p.y) * p.x
            if B > 0:
                lo = max(lo, (-A) // B + 1)
            elif B < 0:
                # x < A / C with C = -B > 0
                hi = min(hi, -((-A) // -B) - 1)
            elif A <= 0:
                empty = True
                break
        if empty or lo > hi:
            continue
        for x in range(lo, hi + 1):
            yield LatticePoint(x, y)


def interior_points(t: LatticeTriangle) -> list[LatticePoint]:
    return list(iter_interior_points(t))


def collinear(points: Sequence[LatticePoint]) -> bool:
    if len(points) <= 2:
        return True
    first = points[0]
    second = next((p for p in points if p != first), None)
    if second is None:
        return True
    return all(cross(first, second, p) == 0 for p in points)


def scan_interior_points(t: LatticeTriangle) -> list[LatticePoint]:
    """Bounding-box membership scan. O(area); used only as a cross-check."""
    _require_triangle(t)
    a, b, c = _ccw(t)
    out = []
    for y in range(min(a.y, b.y, c.y), max(a.y, b.y, c.y) + 1):
        for x in range(min(a.x, b.x, c.x), max(a.x, b.x, c.x) + 1):
            p = LatticePoint(x, y)
            if cross(a, b, p) > 0 and cross(b, c, p) > 0 and cross(c, a, p) > 0:
                out.append(p)
    return out


def scan_boundary_points(t: LatticeTriangle) -> list[LatticePoint]:
    """Bounding-box scan for lattice points on the closed perimeter."""
    _require_triangle(t)
    a, b, c = _ccw(t)
    out = []
    for y in range(min(a.y, b.y, c.y), max(a.y, b.y, c.y) + 1):
        for x in range(min(a.x, b.x, c.x), max(a.x, b.x, c.x) + 1):
            p = LatticePoint(x, y)
            ab, bc, ca = cross(a, b, p), cross(b, c, p), cross(c, a, p)
            if min(ab, bc, ca) >= 0 and 0 in (ab, bc, ca):
                out.append(p)
    return out
