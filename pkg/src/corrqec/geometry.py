"""Planar convex regions: hulls and intersections with a snap tolerance.

A region is stored as a CCW list of vertices and classified by how many
survive deduplication: 0 empty, 1 point, 2 segment, 3+ polygon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

SNAP = 1e-9

Point = tuple[float, float]


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _close(a: Point, b: Point, tol: float = SNAP) -> bool:
    return math.hypot(a[0] - b[0], a[1] - b[1]) <= tol


def _dedup(points: Iterable[Point], tol: float) -> list[Point]:
    out: list[Point] = []
    for p in sorted(points):
        if not any(_close(p, q, tol) for q in out):
            out.append(p)
    return out


def convex_hull(points: Iterable[Point], tol: float = SNAP) -> list[Point]:
    """Monotone-chain hull, CCW, with near-collinear vertices dropped."""
    pts = _dedup(((float(x), float(y)) for x, y in points), tol)
    if len(pts) <= 2:
        return pts

    def chain(seq: Sequence[Point]) -> list[Point]:
        h: list[Point] = []
        for p in seq:
            # pop while h[-1] lies on or right of the line h[-2] -> p
            while len(h) >= 2 and _cross(h[-2], h[-1], p) <= tol * max(
                1.0, math.dist(h[-2], p)
            ):
                h.pop()
            h.append(p)
        return h

    lower = chain(pts)
    upper = chain(pts[::-1])
    # collinear input collapses to its two extreme points here
    return lower[:-1] + upper[:-1]


@dataclass(frozen=True)
class ConvexRegion:
    vertices: tuple[Point, ...]

    @classmethod
    def hull_of(cls, points: Iterable[Point], tol: float = SNAP) -> ConvexRegion:
        return cls(tuple(convex_hull(points, tol)))

    @classmethod
    def empty(cls) -> ConvexRegion:
        return cls(())

    @property
    def kind(self) -> str:
        return ("empty", "point", "segment")[len(self.vertices)] if len(self.vertices) < 3 else "polygon"

    def to_json_obj(self) -> dict:
        return {"kind": self.kind, "vertices": [[x, y] for x, y in self.vertices]}

    def contains(self, p: Point, tol: float = SNAP) -> bool:
        v = self.vertices
        if not v:
            return False
        if len(v) == 1:
            return _close(p, v[0], tol)
        if len(v) == 2:
            a, b = v
            length = math.dist(a, b)
            if abs(_cross(a, b, p)) > tol * length:
                return False
            t = ((p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])) / length**2
            return -tol / length <= t <= 1 + tol / length
        return all(
            _cross(v[i], v[(i + 1) % len(v)], p) >= -tol * math.dist(v[i], v[(i + 1) % len(v)])
            for i in range(len(v))
        )

    def issubset(self, other: ConvexRegion, tol: float = SNAP) -> bool:
        return all(other.contains(p, tol) for p in self.vertices)

    def same_as(self, other: ConvexRegion, tol: float = SNAP) -> bool:
        """Equal vertex lists up to cyclic rotation, within ``tol``."""
        a, b = self.vertices, other.vertices
        if len(a) != len(b):
            return False
        if not a:
            return True
        for shift in range(len(b)):
            if all(_close(a[i], b[(i + shift) % len(b)], tol) for i in range(len(a))):
                return True
        return False


# half-plane: (nx, ny, c) meaning nx*x + ny*y <= c, with (nx, ny) a unit vector
HalfPlane = tuple[float, float, float]


def _halfplanes(region: ConvexRegion) -> list[HalfPlane]:
    v = region.vertices
    planes: list[HalfPlane] = []
    if len(v) == 2:
        a, b = v
        length = math.dist(a, b)
        ux, uy = (b[0] - a[0]) / length, (b[1] - a[1]) / length
        # slab between the endpoints, then both sides of the carrying line
        planes.append((ux, uy, ux * b[0] + uy * b[1]))
        planes.append((-ux, -uy, -(ux * a[0] + uy * a[1])))
        planes.append((-uy, ux, -uy * a[0] + ux * a[1]))
        planes.append((uy, -ux, uy * a[0] - ux * a[1]))
        return planes
    for i in range(len(v)):
        a, b = v[i], v[(i + 1) % len(v)]
        length = math.dist(a, b)
        # CCW: interior is to the left of a -> b
        nx, ny = (b[1] - a[1]) / length, -(b[0] - a[0]) / length
        planes.append((nx, ny, nx * a[0] + ny * a[1]))
    return planes


def _clip(points: list[Point], plane: HalfPlane, tol: float) -> list[Point]:
    """Sutherland-Hodgman step on a closed (possibly degenerate) vertex loop."""
    nx, ny, c = plane

    def f(p: Point) -> float:
        return nx * p[0] + ny * p[1] - c

    if len(points) == 1:
        return points if f(points[0]) <= tol else []
    out: list[Point] = []
    for i, e in enumerate(points):
        s = points[i - 1]
        fs, fe = f(s), f(e)
        if fe <= tol:
            if fs > tol:
                t = fs / (fs - fe)
                out.append((s[0] + t * (e[0] - s[0]), s[1] + t * (e[1] - s[1])))
            out.append(e)
        elif fs <= tol:
            t = fs / (fs - fe)
            out.append((s[0] + t * (e[0] - s[0]), s[1] + t * (e[1] - s[1])))
    return out


def intersect_convex(a: ConvexRegion, b: ConvexRegion, tol: float = SNAP) -> ConvexRegion:
    """Intersection of two convex regions, collapsed by dimension."""
    if not a.vertices or not b.vertices:
        return ConvexRegion.empty()
    if len(b.vertices) == 1:
        a, b = b, a
    if len(a.vertices) == 1:
        return a if b.contains(a.vertices[0], tol) else ConvexRegion.empty()
    pts = list(a.vertices)
    for plane in _halfplanes(b):
        pts = _clip(pts, plane, tol)
        if not pts:
            return ConvexRegion.empty()
    return ConvexRegion.hull_of(pts, tol)


def intersect_all(regions: Iterable[ConvexRegion], tol: float = SNAP) -> ConvexRegion:
    it = iter(regions)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("intersection of no regions is the whole plane") from None
    for r in it:
        acc = intersect_convex(acc, r, tol)
        if not acc.vertices:
            break
    return acc
