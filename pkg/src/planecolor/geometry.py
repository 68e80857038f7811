"""Distance classification and forbidden-pattern constraint enumeration.

A finite point set induces four kinds of coloring obligations:

* ``ELL3``   -- three collinear points at unit spacing (pairwise squared
  distances {1, 1, 4}) must not be monochromatic;
* ``EQ1``    -- a unit equilateral triangle must not be monochromatic;
* ``EQ2``    -- a side-2 equilateral triangle must not be monochromatic;
* ``CENTROID`` -- a unit equilateral triangle colored 2-1 forces its
  centroid (when present in the set) to the majority color.

All geometry is exact: squared distances are field elements compared
against the rationals 1 and 4, never floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .field import FieldScalar, PlanePoint


class PairClass(Enum):
    UNIT = "unit"      # squared distance exactly 1
    DOUBLE = "double"  # squared distance exactly 4
    OTHER = "other"

    def __str__(self) -> str:
        return self.value


class ConstraintKind(Enum):
    ELL3 = "ell3"
    EQ1 = "eq1"
    EQ2 = "eq2"
    CENTROID = "centroid"

    def __str__(self) -> str:
        return self.value


_KIND_RANK = {k: i for i, k in enumerate(ConstraintKind)}

ALL_KINDS = frozenset(ConstraintKind)
TRIPLE_KINDS = frozenset({ConstraintKind.ELL3, ConstraintKind.EQ1, ConstraintKind.EQ2})


class DuplicatePointError(ValueError):
    """Two input points share exact coordinates (trusted data must be distinct)."""


@dataclass(frozen=True)
class Constraint:
    """A coloring obligation over indices into a point list.

    Members are stored canonically: ELL3 as (end, midpoint, end) with the
    ends sorted; EQ1/EQ2 sorted ascending; CENTROID as the sorted triangle
    followed by the centroid index.  Canonical ordering makes enumeration
    output, and therefore certificate constraint ids, reproducible.
    """

    kind: ConstraintKind
    members: tuple[int, ...]

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (_KIND_RANK[self.kind], self.members)

    def describe(self, points: Sequence[PlanePoint]) -> str:
        names = ",".join(point_name(points, i) for i in self.members)
        return f"{self.kind}({names})"


def point_name(points: Sequence[PlanePoint], index: int) -> str:
    """The point's label, or a positional placeholder for unlabeled points."""
    label = points[index].label
    return label if label is not None else f"#{index}"


def sqdist(p: PlanePoint, q: PlanePoint) -> FieldScalar:
    """Exact squared Euclidean distance."""
    return (p.x - q.x).square() + (p.y - q.y).square()


def sqdist_quadruple(p: PlanePoint, q: PlanePoint) -> FieldScalar:
    """Closed-form squared distance for quadruple points: (u + v*sqrt33)/144.

    With coordinate differences (da, db, dc, dd), u = 3da^2 + 11db^2 + dc^2
    + 33dd^2 and v = 2(da*db + dc*dd).  Kept separate from :func:`sqdist`
    so the two routes can be cross-checked against each other.
    """
    if p.quad is None or q.quad is None:
        raise ValueError("closed-form distance needs quadruple-constructed points")
    da, db, dc, dd = (p.quad[i] - q.quad[i] for i in range(4))
    u = 3 * da * da + 11 * db * db + dc * dc + 33 * dd * dd
    v = 2 * (da * db + dc * dd)
    return FieldScalar(Fraction(u, 144), 0, 0, Fraction(v, 144))


def classify_pair(p: PlanePoint, q: PlanePoint) -> PairClass:
    d = sqdist(p, q)
    if d == 1:
        return PairClass.UNIT
    if d == 4:
        return PairClass.DOUBLE
    return PairClass.OTHER


def midpoint(p: PlanePoint, q: PlanePoint) -> PlanePoint:
    return PlanePoint(
        (p.x + q.x) / 2,
        (p.y + q.y) / 2,
        quad=_average_quad((p.quad, q.quad), 2),
    )


def centroid(p: PlanePoint, q: PlanePoint, r: PlanePoint) -> PlanePoint:
    return PlanePoint(
        (p.x + q.x + r.x) / 3,
        (p.y + q.y + r.y) / 3,
        quad=_average_quad((p.quad, q.quad, r.quad), 3),
    )


def _average_quad(
    quads: Iterable[tuple[int, int, int, int] | None], k: int
) -> tuple[int, int, int, int] | None:
    acc = [0, 0, 0, 0]
    for quad in quads:
        if quad is None:
            return None
        for i in range(4):
            acc[i] += quad[i]
    if any(s % k for s in acc):
        return None
    return tuple(s // k for s in acc)  # type: ignore[return-value]


def point_index(points: Sequence[PlanePoint]) -> dict[PlanePoint, int]:
    """Coordinate -> position map; rejects duplicate coordinates."""
    index: dict[PlanePoint, int] = {}
    for i, p in enumerate(points):
        j = index.setdefault(p, i)
        if j != i:
            raise DuplicatePointError(
                f"points {point_name(points, j)} and {point_name(points, i)} coincide"
            )
    return index


def enumerate_constraints(
    points: Sequence[PlanePoint],
    kinds: Iterable[ConstraintKind] | None = None,
) -> list[Constraint]:
    """The complete, duplicate-free, canonically ordered constraint list.

    Enumeration walks the unit/double pair graph instead of all O(n^3)
    triples: equilateral triangles come from common neighbors of an edge,
    ELL3 triples from double pairs whose exact midpoint is in the set (the
    degenerate triangle inequality forces the middle point of a {1,1,4}
    triple to be that midpoint; unit distance to both ends is still checked,
    never assumed), and centroid obligations from unit triangles whose
    exact centroid is in the set.
    """
    wanted = ALL_KINDS if kinds is None else frozenset(kinds)
    index = point_index(points)
    n = len(points)

    unit_adj: list[set[int]] = [set() for _ in range(n)]
    double_adj: list[set[int]] = [set() for _ in range(n)]
    double_pairs: list[tuple[int, int]] = []
    for i in range(n):
        for j in range(i + 1, n):
            cls = classify_pair(points[i], points[j])
            if cls is PairClass.UNIT:
                unit_adj[i].add(j)
                unit_adj[j].add(i)
            elif cls is PairClass.DOUBLE:
                double_adj[i].add(j)
                double_adj[j].add(i)
                double_pairs.append((i, j))

    out: list[Constraint] = []

    need_eq1 = ConstraintKind.EQ1 in wanted or ConstraintKind.CENTROID in wanted
    eq1_triples: list[tuple[int, int, int]] = []
    if need_eq1:
        for i in range(n):
            for j in sorted(unit_adj[i]):
                if j <= i:
                    continue
                for k in sorted(unit_adj[i] & unit_adj[j]):
                    if k > j:
                        eq1_triples.append((i, j, k))
    if ConstraintKind.EQ1 in wanted:
        out.extend(Constraint(ConstraintKind.EQ1, t) for t in eq1_triples)

    if ConstraintKind.EQ2 in wanted:
        for i in range(n):
            for j in sorted(double_adj[i]):
                if j <= i:
                    continue
                for k in sorted(double_adj[i] & double_adj[j]):
                    if k > j:
                        out.append(Constraint(ConstraintKind.EQ2, (i, j, k)))

    if ConstraintKind.ELL3 in wanted:
        for i, k in double_pairs:
            j = index.get(midpoint(points[i], points[k]))
            if j is None:
                continue
            if j not in unit_adj[i] or j not in unit_adj[k]:
                raise AssertionError(
                    f"midpoint {point_name(points, j)} of a distance-2 pair is not at "
                    "unit distance from both ends"
                )
            out.append(Constraint(ConstraintKind.ELL3, (i, j, k)))

    if ConstraintKind.CENTROID in wanted:
        for i, j, k in eq1_triples:
            c = index.get(centroid(points[i], points[j], points[k]))
            if c is not None:
                out.append(Constraint(ConstraintKind.CENTROID, (i, j, k, c)))

    out.sort(key=Constraint.sort_key)
    return out
