"""Ordered point sets in F^2 with their X-support and Y-fibers."""

from __future__ import annotations

from typing import Iterable

from .field import FieldElement, FieldSpec
from .upoly import PartitionTree

__all__ = ["PointSet", "is_semi_grid", "x_support", "y_fiber"]


class PointSet:
    """Duplicate-free ordered points, stored as pairs of element codes.

    By default points are sorted ascending by (x, y) code; pass
    ``keep_order=True`` to keep the given order, which then defines codeword
    coordinates.  Subproduct trees over the X-support and over each fiber are
    built lazily and cached, so repeated evaluation or interpolation on the
    same set only pays for them once.
    """

    def __init__(self, field: FieldSpec, points: Iterable, keep_order: bool = False):
        pts = []
        for pt in points:
            x, y = pt
            if isinstance(x, FieldElement):
                field._check(x.field)
            if isinstance(y, FieldElement):
                field._check(y.field)
            x, y = int(x), int(y)
            if not (0 <= x < field.q and 0 <= y < field.q):
                raise ValueError(f"point ({x}, {y}) has a coordinate outside GF({field.q})")
            pts.append((x, y))
        if not keep_order:
            pts.sort()
        self.field = field
        self.points = tuple(pts)
        self.index = {pt: k for k, pt in enumerate(self.points)}
        if len(self.index) != len(self.points):
            raise ValueError("duplicate points in point set")
        fibers: dict[int, list[int]] = {}
        for x, y in self.points:
            fibers.setdefault(x, []).append(y)
        self.fibers = {x: tuple(sorted(ys)) for x, ys in sorted(fibers.items())}
        self._x_tree = None
        self._fiber_trees: dict[int, PartitionTree] = {}

    # -- combinatorics ---------------------------------------------------------

    @property
    def x_support(self) -> tuple[int, ...]:
        return tuple(self.fibers)

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def n_x(self) -> int:
        return len(self.fibers)

    @property
    def nu_y(self) -> int:
        return max((len(f) for f in self.fibers.values()), default=0)

    def fiber(self, alpha) -> tuple[int, ...]:
        return self.fibers.get(int(alpha), ())

    def is_semi_grid(self) -> tuple[bool, int]:
        nu = self.nu_y
        return all(len(f) == nu for f in self.fibers.values()), nu

    # -- cached trees ----------------------------------------------------------

    def x_tree(self) -> PartitionTree:
        if self._x_tree is None:
            self._x_tree = PartitionTree(self.field, self.x_support).ensure_vanishing()
        return self._x_tree

    def fiber_tree(self, alpha: int) -> PartitionTree:
        t = self._fiber_trees.get(alpha)
        if t is None:
            t = PartitionTree(self.field, self.fibers[alpha]).ensure_vanishing()
            self._fiber_trees[alpha] = t
        return t

    # -- derived sets ------------------------------------------------------------

    def subset(self, keep) -> PointSet:
        """Points satisfying the predicate ``keep(x, y)``, order preserved."""
        return PointSet(self.field, [p for p in self.points if keep(*p)], keep_order=True)

    def take(self, indices: Iterable[int]) -> PointSet:
        return PointSet(self.field, [self.points[k] for k in indices], keep_order=True)

    def elements(self) -> list[tuple[FieldElement, FieldElement]]:
        F = self.field
        return [(FieldElement(F, x), FieldElement(F, y)) for x, y in self.points]

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def __getitem__(self, k):
        return self.points[k]

    def __contains__(self, pt):
        x, y = pt
        return (int(x), int(y)) in self.index

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.field == other.field and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PointSet({self.field}, n={self.n}, n_x={self.n_x}, nu_y={self.nu_y})"


def x_support(P: PointSet) -> list[FieldElement]:
    return [FieldElement(P.field, x) for x in P.x_support]


def y_fiber(P: PointSet, alpha) -> list[FieldElement]:
    return [FieldElement(P.field, y) for y in P.fiber(alpha)]


def is_semi_grid(P: PointSet) -> tuple[bool, int]:
    return P.is_semi_grid()
