"""Decide whether an integer k is 2-collinear.

``k`` is 2-collinear when every lattice triangle with exactly three boundary
points and ``k`` interior points has all of its interior points on one
line. Any such triangle is unimodular-affine equivalent to
``(0,0), (1,0), (a, 2k+1)`` with ``a`` in the D-set of ``2k+1``, which
makes the question finite.

Two independent deciders are provided: ``is_2_collinear_bruteforce`` walks
every candidate triangle and tests its interior points, and
``is_2_collinear_theorem`` only looks for a residue ``3 <= a <= k`` in the
D-set, using the Schemmel totient to count them. ``survey`` runs both and
insists they agree.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable

from .errors import DomainError, InvariantError, ResourceLimit
from .lattice_core import (
    LatticePoint,
    LatticeTriangle,
    boundary_count,
    collinear,
    cross,
    interior_count_pick,
    interior_points,
    iter_interior_points,
)
from .totient import schemmel

DEFAULT_MAX_K = 5000
KNOWN_2_COLLINEAR = frozenset({1, 2, 4, 7})


@dataclass(frozen=True)
class DSet:
    n: int
    members: tuple[int, ...]

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __len__(self) -> int:
        return len(self.members)

    def to_dict(self) -> dict:
        return {"n": self.n, "size": len(self.members), "members": list(self.members)}


@dataclass(frozen=True)
class ClassificationResult:
    k: int
    is_2_collinear: bool
    method: str
    candidate_as: tuple[int, ...]
    witness: LatticeTriangle | None = None
    witness_interior: tuple[LatticePoint, ...] | None = None
    # theorem method only
    schemmel_value: int | None = None
    witness_range_as: tuple[int, ...] | None = field(default=None)

    def to_dict(self) -> dict:
        out = {
            "k": self.k,
            "method": self.method,
            "is_2_collinear": self.is_2_collinear,
            "candidate_as": list(self.candidate_as),
            "witness": self.witness.as_lists() if self.witness else None,
            "witness_interior": (
                [p.as_list() for p in self.witness_interior]
                if self.witness_interior is not None
                else None
            ),
        }
        if self.method == "theorem":
            out["schemmel"] = self.schemmel_value
            out["witness_range_as"] = list(self.witness_range_as or ())
        return out


@dataclass(frozen=True)
class SurveyRow:
    k: int
    is_2_collinear: bool
    bruteforce: ClassificationResult
    theorem: ClassificationResult

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "is_2_collinear": self.is_2_collinear,
            "bruteforce": self.bruteforce.to_dict(),
            "theorem": self.theorem.to_dict(),
        }


def d_set(n: int) -> DSet:
    if n < 1 or n % 2 == 0:
        raise DomainError(f"d_set needs an odd positive n, got {n}")
    return DSet(n, tuple(a for a in range(n) if gcd(a, n) == 1 and gcd(a - 1, n) == 1))


def _check_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")


def candidate_triangles(k: int) -> list[LatticeTriangle]:
    _check_k(k)
    n = 2 * k + 1
    out = []
    for a in d_set(n).members:
        t = LatticeTriangle.from_coords(0, 0, 1, 0, a, n)
        if boundary_count(t) != 3 or interior_count_pick(t) != k:
            raise InvariantError(f"candidate a={a} for k={k} does not have B=3, I=k")
        out.append(t)
    return out


def _first_noncollinear(points: Iterable[LatticePoint]) -> tuple[bool, int]:
    """Stream ``points``; return (collinear so far, number consumed)."""
    first = second = None
    count = 0
    for p in points:
        count += 1
        if first is None:
            first = p
        elif second is None:
            if p != first:
                second = p
        elif cross(first, second, p) != 0:
            return False, count
    return True, count


def is_2_collinear_bruteforce(k: int, max_k: int = DEFAULT_MAX_K) -> ClassificationResult:
    _check_k(k)
    if k > max_k:
        raise ResourceLimit(f"k={k} exceeds the brute-force bound {max_k}")
    cands = candidate_triangles(k)
    as_ = tuple(t.v3.x for t in cands)
    for t in cands:
        ok, seen = _first_noncollinear(iter_interior_points(t))
        if not ok:
            pts = tuple(interior_points(t))
            return ClassificationResult(k, False, "bruteforce", as_, t, pts)
        if seen != k:
            raise InvariantError(f"row scan found {seen} interior points, expected {k}")
    return ClassificationResult(k, True, "bruteforce", as_)


def badk_witness_check(k: int, a: int) -> tuple[int, bool]:
    """Check the non-collinearity witness ``(0,0), (1,0), (a, 2k+1)``.

    ``p = (2k+1) // a`` is the number of interior points on the line
    ``x = 1``; the witness works when ``2 <= p <= k - 1``.
    """
    n = 2 * k + 1
    if not 3 <= a <= k:
        raise DomainError(f"witness needs 3 <= a <= k, got a={a}, k={k}")
    if gcd(a, n) != 1 or gcd(a - 1, n) != 1:
        raise DomainError(f"a={a} is not in the D-set of {n}")
    p = n // a
    t = LatticeTriangle.from_coords(0, 0, 1, 0, a, n)
    on_line = sum(1 for q in iter_interior_points(t) if q.x == 1)
    if on_line != p:
        raise InvariantError(f"expected {p} interior points on x=1, found {on_line}")
    return p, 2 <= p <= k - 1


def is_2_collinear_theorem(k: int) -> ClassificationResult:
    _check_k(k)
    n = 2 * k + 1
    dset = d_set(n)
    phi = schemmel(n)
    if phi != len(dset):
        raise InvariantError(f"|D_{n}|={len(dset)} but schemmel({n})={phi}")
    in_range = tuple(a for a in dset.members if 3 <= a <= k)
    if k >= 2 and 2 * len(in_range) != phi - 3:
        raise InvariantError(f"|S_k & D| = {len(in_range)} but (phi-3)/2 = {(phi - 3) / 2}")
    if not in_range:
        return ClassificationResult(
            k, True, "theorem", dset.members, schemmel_value=phi, witness_range_as=in_range
        )
    a = in_range[0]
    p, valid = badk_witness_check(k, a)
    if not valid:
        raise InvariantError(f"witness a={a} for k={k} gives p={p} outside [2, k-1]")
    t = LatticeTriangle.from_coords(0, 0, 1, 0, a, n)
    pts = tuple(interior_points(t))
    if boundary_count(t) != 3 or len(pts) != k or collinear(pts):
        raise InvariantError(f"theorem witness a={a} for k={k} is not a valid witness")
    return ClassificationResult(
        k, False, "theorem", dset.members, t, pts, schemmel_value=phi, witness_range_as=in_range
    )


def classify_both(k: int, max_k: int = DEFAULT_MAX_K) -> SurveyRow:
    brute = is_2_collinear_bruteforce(k, max_k)
    thm = is_2_collinear_theorem(k)
    if brute.is_2_collinear != thm.is_2_collinear:
        raise InvariantError(f"methods disagree at k={k}")
    return SurveyRow(k, brute.is_2_collinear, brute, thm)


def survey(
    k_min: int, k_max: int, max_k: int = DEFAULT_MAX_K, jobs: int = 1
) -> list[SurveyRow]:
    _check_k(k_min)
    if k_min > k_max:
        raise DomainError(f"empty range [{k_min}, {k_max}]")
    if k_max > max_k:
        raise ResourceLimit(f"k_max={k_max} exceeds the brute-force bound {max_k}")
    ks = range(k_min, k_max + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(classify_both, ks, [max_k] * len(ks), chunksize=8))
    return [classify_both(k, max_k) for k in ks]
