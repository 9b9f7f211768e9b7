"""Integer unimodular affine maps and canonical forms of lattice triangles.

A map ``p -> M p + t`` with an integer 2x2 matrix ``M`` of determinant
+1 or -1 permutes the lattice, so it preserves boundary and interior
counts, area and collinearity. ``normalize`` uses such maps to bring any
lattice triangle to a unique representative ``(0,0), (d,0), (a,b)`` with
``b > 0`` and ``0 <= a < b``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .errors import DegenerateInput, InvariantError, RangeError
from .lattice_core import (
    LatticePoint,
    LatticeTriangle,
    check_int64,
    cross,
    segment_interior_count,
    twice_area,
)


@dataclass(frozen=True, slots=True)
class UnimodularAffineMap:
    m11: int
    m12: int
    m21: int
    m22: int
    tx: int = 0
    ty: int = 0

    def __post_init__(self) -> None:
        for name in ("m11", "m12", "m21", "m22", "tx", "ty"):
            check_int64(getattr(self, name), name)
        if abs(self.det) != 1:
            raise DegenerateInput(f"matrix determinant is {self.det}, expected +1 or -1")

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    @classmethod
    def identity(cls) -> UnimodularAffineMap:
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, tx: int, ty: int) -> UnimodularAffineMap:
        return cls(1, 0, 0, 1, tx, ty)

    @classmethod
    def shift(cls, t: int) -> UnimodularAffineMap:
        """The shear ``(x, y) -> (x + t*y, y)``."""
        return cls(1, t, 0, 1)

    @classmethod
    def reflection(cls) -> UnimodularAffineMap:
        return cls(1, 0, 0, -1)

    def linear(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.m11, self.m12), (self.m21, self.m22))

    def to_dict(self) -> dict:
        return {
            "matrix": [[self.m11, self.m12], [self.m21, self.m22]],
            "translation": [self.tx, self.ty],
            "det": self.det,
        }


def apply(f: UnimodularAffineMap, p: LatticePoint) -> LatticePoint:
    return LatticePoint(
        f.m11 * p.x + f.m12 * p.y + f.tx,
        f.m21 * p.x + f.m22 * p.y + f.ty,
    )


def apply_triangle(f: UnimodularAffineMap, t: LatticeTriangle) -> LatticeTriangle:
    return LatticeTriangle(apply(f, t.v1), apply(f, t.v2), apply(f, t.v3))


def invert(f: UnimodularAffineMap) -> UnimodularAffineMap:
    det = f.det
    # adjugate / det is exact because det is +-1
    n11, n12, n21, n22 = f.m22 * det, -f.m12 * det, -f.m21 * det, f.m11 * det
    return UnimodularAffineMap(
        n11, n12, n21, n22,
        -(n11 * f.tx + n12 * f.ty),
        -(n21 * f.tx + n22 * f.ty),
    )


def compose(f: UnimodularAffineMap, g: UnimodularAffineMap) -> UnimodularAffineMap:
    """Return ``h`` with ``h(p) == f(g(p))``."""
    try:
        return UnimodularAffineMap(
            f.m11 * g.m11 + f.m12 * g.m21,
            f.m11 * g.m12 + f.m12 * g.m22,
            f.m21 * g.m11 + f.m22 * g.m21,
            f.m21 * g.m12 + f.m22 * g.m22,
            f.m11 * g.tx + f.m12 * g.ty + f.tx,
            f.m21 * g.tx + f.m22 * g.ty + f.ty,
        )
    except RangeError as exc:
        raise RangeError(f"composition overflows: {exc}") from None


def _ext_euclid(x: int, y: int) -> tuple[int, int, int]:
    r0, r1 = x, y
    s0, s1 = 1, 0
    t0, t1 = 0, 1
    while r1:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0 < 0:
        r0, s0, t0 = -r0, -s0, -t0
    return s0, t0, r0


def bezout(x: int, y: int) -> tuple[int, int, int]:
    """Return ``(c, d, g)`` with ``c*x + d*y == g == gcd(x, y)``.

    Among all such pairs the one with the smallest ``|d|`` is chosen, then
    the smallest ``|c|``, then the smaller ``c``.
    """
    if x == 0 and y == 0:
        raise DegenerateInput("bezout(0, 0) has no gcd")
    c0, d0, g = _ext_euclid(x, y)
    # general solution: (c0 + k*y/g, d0 - k*x/g)
    sc, sd = y // g, x // g
    if sd == 0:
        ks = [(-c0) // sc, (-c0) // sc + 1]
    else:
        ks = [d0 // sd - 1, d0 // sd, d0 // sd + 1]
    best = min(
        ((c0 + k * sc, d0 - k * sd) for k in ks),
        key=lambda cd: (abs(cd[1]), abs(cd[0]), cd[0]),
    )
    c, d = best
    if c * x + d * y != g:
        raise InvariantError(f"bezout identity failed for ({x}, {y})")
    return c, d, g


def shift_reduce(a: int, b: int) -> tuple[int, int]:
    """Reduce ``a`` into ``[0, b)``; returns ``(a mod b, t)`` with ``a + t*b`` reduced."""
    if b < 1:
        raise DegenerateInput(f"shift_reduce needs b >= 1, got {b}")
    r = a % b
    return r, (r - a) // b


@dataclass(frozen=True, slots=True)
class CanonicalTriangle:
    d: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if not (self.d >= 1 and self.b >= 1 and 0 <= self.a < self.b):
            raise InvariantError(f"not a canonical triangle: {self}")

    @property
    def sort_key(self) -> tuple[int, int, int]:
        return (self.d, self.b, self.a)

    def triangle(self) -> LatticeTriangle:
        return LatticeTriangle.from_coords(0, 0, self.d, 0, self.a, self.b)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.d, self.a, self.b)


def normalize_on_edge(
    p: LatticePoint, q: LatticePoint, r: LatticePoint
) -> tuple[CanonicalTriangle, UnimodularAffineMap]:
    """Canonical form obtained by sending ``p`` to the origin and ``q`` onto
    the positive x-axis. Depends on the vertex labelling."""
    if cross(p, q, r) == 0:
        LatticeTriangle(p, q, r)  # raises DegenerateTriangle
    f = UnimodularAffineMap.translation(-p.x, -p.y)
    x, y = q.x - p.x, q.y - p.y
    c, d, g = bezout(x, y)
    # det = -c*x/g - d*y/g = -1
    f = compose(UnimodularAffineMap(c, d, y // g, -(x // g)), f)
    r1 = apply(f, r)
    if r1.y < 0:
        f = compose(UnimodularAffineMap.reflection(), f)
        r1 = apply(f, r)
    _, t = shift_reduce(r1.x, r1.y)
    if t:
        f = compose(UnimodularAffineMap.shift(t), f)
        r1 = apply(f, r)
    return CanonicalTriangle(g, r1.x, r1.y), f


def normalize(t: LatticeTriangle) -> tuple[CanonicalTriangle, UnimodularAffineMap]:
    """Unique representative of ``t`` under unimodular affine maps, with the
    map that realises it.

    All six vertex labellings are tried and the lexicographically smallest
    ``(d, b, a)`` wins; ties keep the first labelling in ``permutations``
    order, so a canonical input maps to itself by the identity.
    """
    if not isinstance(t, LatticeTriangle):
        t = LatticeTriangle(*t)
    best: tuple[CanonicalTriangle, UnimodularAffineMap] | None = None
    for p, q, r in permutations(t):
        cand = normalize_on_edge(p, q, r)
        if best is None or cand[0].sort_key < best[0].sort_key:
            best = cand
    canon, f = best
    image = {apply(f, v) for v in t}
    if image != set(canon.triangle()):
        raise InvariantError(f"normalization witness does not reproduce {canon}")
    if canon.d * canon.b != twice_area(t):
        raise InvariantError("normalization changed the area")
    base = canon.triangle()
    if canon.d - 1 != segment_interior_count(base.v1, base.v2):
        raise InvariantError("normalization base edge count mismatch")
    return canon, f
