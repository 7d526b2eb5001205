"""Exact rational plane geometry.

Coordinates are fractions.Fraction values and every predicate is decided
exactly; there are no tolerance knobs and no floating point anywhere in the
verification paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

RationalLike = Union[int, str, Fraction]

# The project-wide exact number type. Fraction already guarantees lowest
# terms and a positive denominator.
Rational = Fraction


class GeometryError(Exception):
    """Invalid geometric input (degenerate object, broken precondition)."""


def rat(value: RationalLike) -> Fraction:
    """Coerce an int, a "num/den" string, or a Fraction to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


@dataclass(frozen=True, order=True)
class Point:
    x: Fraction
    y: Fraction

    def __iter__(self):
        yield self.x
        yield self.y


def pt(x: RationalLike, y: RationalLike) -> Point:
    return Point(rat(x), rat(y))


def orientation(a: Point, b: Point, c: Point) -> int:
    """Sign of the cross product (b - a) x (c - a).

    +1 for a left turn, -1 for a right turn, 0 for collinear points.
    """
    v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def collinear(a: Point, b: Point, c: Point) -> bool:
    return orientation(a, b, c) == 0


@dataclass(frozen=True)
class Segment:
    """A segment between two distinct points; `open` marks open endpoints."""

    p: Point
    q: Point
    open: bool = False

    def __post_init__(self):
        if self.p == self.q:
            raise GeometryError("degenerate segment: identical endpoints")

    def midpoint(self) -> Point:
        return Point((self.p.x + self.q.x) / 2, (self.p.y + self.q.y) / 2)

    def endpoints(self) -> tuple[Point, Point]:
        return (self.p, self.q)


def point_on_segment(point: Point, a: Point, b: Point, *, closed: bool = True) -> bool:
    """Exact membership of `point` in the segment from a to b."""
    if orientation(a, b, point) != 0:
        return False
    lox, hix = (a.x, b.x) if a.x <= b.x else (b.x, a.x)
    loy, hiy = (a.y, b.y) if a.y <= b.y else (b.y, a.y)
    if not (lox <= point.x <= hix and loy <= point.y <= hiy):
        return False
    if not closed and (point == a or point == b):
        return False
    return True


@dataclass(frozen=True)
class SegmentIntersection:
    """Result of intersecting two closed segments.

    kind is one of "disjoint", "point", "overlap". For a single point,
    interior1/interior2 report whether the point is interior to each segment.
    """

    kind: str
    point: Point | None = None
    overlap: tuple[Point, Point] | None = None
    interior1: bool = False
    interior2: bool = False


def _line_params(a: Point, b: Point, c: Point, d: Point) -> Point | None:
    """Intersection point of lines ab and cd, or None if parallel."""
    r = (b.x - a.x, b.y - a.y)
    s = (d.x - c.x, d.y - c.y)
    denom = r[0] * s[1] - r[1] * s[0]
    if denom == 0:
        return None
    t = ((c.x - a.x) * s[1] - (c.y - a.y) * s[0]) / denom
    return Point(a.x + t * r[0], a.y + t * r[1])


def segment_intersection(s1: Segment, s2: Segment) -> SegmentIntersection:
    """Classify the intersection of two segments, treated as closed sets."""
    a, b = s1.p, s1.q
    c, d = s2.p, s2.q
    o1 = orientation(a, b, c)
    o2 = orientation(a, b, d)
    o3 = orientation(c, d, a)
    o4 = orientation(c, d, b)

    if o1 == 0 and o2 == 0:
        # Collinear: compare 1-d intervals along the dominant axis.
        key = (lambda p: p.x) if a.x != b.x or c.x != d.x else (lambda p: p.y)
        p1, p2 = sorted((a, b), key=key)
        p3, p4 = sorted((c, d), key=key)
        lo = p1 if key(p1) >= key(p3) else p3
        hi = p2 if key(p2) <= key(p4) else p4
        if key(lo) > key(hi):
            return SegmentIntersection("disjoint")
        if lo == hi:
            return SegmentIntersection(
                "point",
                point=lo,
                interior1=point_on_segment(lo, a, b, closed=False),
                interior2=point_on_segment(lo, c, d, closed=False),
            )
        return SegmentIntersection("overlap", overlap=(lo, hi))

    if o1 * o2 < 0 and o3 * o4 < 0:
        p = _line_params(a, b, c, d)
        assert p is not None
        return SegmentIntersection("point", point=p, interior1=True, interior2=True)

    # Touching cases: an endpoint of one segment lying on the other.
    for cand in (c, d):
        if point_on_segment(cand, a, b):
            if point_on_segment(cand, c, d):
                return SegmentIntersection(
                    "point",
                    point=cand,
                    interior1=point_on_segment(cand, a, b, closed=False),
                    interior2=point_on_segment(cand, c, d, closed=False),
                )
    for cand in (a, b):
        if point_on_segment(cand, c, d):
            return SegmentIntersection(
                "point",
                point=cand,
                interior1=point_on_segment(cand, a, b, closed=False),
                interior2=point_on_segment(cand, c, d, closed=False),
            )
    return SegmentIntersection("disjoint")


def open_segments_disjoint(s1: Segment, s2: Segment) -> bool:
    """True when the two segments, taken as open sets, share no point."""
    hit = segment_intersection(s1, s2)
    if hit.kind == "disjoint":
        return True
    if hit.kind == "overlap":
        return False
    return not (hit.interior1 and hit.interior2)


@dataclass(frozen=True)
class Line:
    """The line a*x + b*y = c, normalized so the first nonzero of (a, b) is 1."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise GeometryError("degenerate line: a = b = 0")
        div = self.a if self.a != 0 else self.b
        if div != 1:
            object.__setattr__(self, "a", self.a / div)
            object.__setattr__(self, "b", self.b / div)
            object.__setattr__(self, "c", self.c / div)

    @staticmethod
    def through(p: Point, q: Point) -> "Line":
        if p == q:
            raise GeometryError("two identical points do not span a line")
        a = q.y - p.y
        b = p.x - q.x
        c = a * p.x + b * p.y
        return Line(a, b, c)

    def value(self, p: Point) -> Fraction:
        """Signed affine value a*x + b*y - c; zero exactly on the line."""
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: Point) -> bool:
        return self.value(p) == 0

    def direction(self) -> tuple[Fraction, Fraction]:
        return (self.b, -self.a)


def line(a: RationalLike, b: RationalLike, c: RationalLike) -> Line:
    return Line(rat(a), rat(b), rat(c))


def lines_intersection(l1: Line, l2: Line) -> Point | None:
    """Unique crossing point of two distinct lines, or None when parallel."""
    denom = l1.a * l2.b - l2.a * l1.b
    if denom == 0:
        return None
    x = (l1.c * l2.b - l2.c * l1.b) / denom
    y = (l1.a * l2.c - l2.a * l1.c) / denom
    return Point(x, y)


@dataclass(frozen=True)
class Polygon:
    vertices: tuple[Point, ...]

    def __post_init__(self):
        if len(self.vertices) < 3:
            raise GeometryError("polygon needs at least three vertices")
        n = len(self.vertices)
        for i in range(n):
            if self.vertices[i] == self.vertices[(i + 1) % n]:
                raise GeometryError("polygon has coincident consecutive vertices")

    def __len__(self):
        return len(self.vertices)

    def edges(self) -> Iterable[tuple[Point, Point]]:
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]

    def signed_area(self) -> Fraction:
        total = Fraction(0)
        n = len(self.vertices)
        for i in range(n):
            p = self.vertices[i]
            q = self.vertices[(i + 1) % n]
            total += p.x * q.y - q.x * p.y
        return total / 2

    def area(self) -> Fraction:
        return abs(self.signed_area())


def polygon(points: Sequence[tuple[RationalLike, RationalLike] | Point]) -> Polygon:
    verts = tuple(p if isinstance(p, Point) else pt(*p) for p in points)
    return Polygon(verts)


@lru_cache(maxsize=16384)
def polygon_is_simple(poly: Polygon) -> bool:
    """Exact simplicity test: edges meet only at shared consecutive endpoints."""
    verts = poly.vertices
    n = len(verts)
    edges = [Segment(verts[i], verts[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = j == i + 1 or (i == 0 and j == n - 1)
            hit = segment_intersection(edges[i], edges[j])
            if adjacent:
                shared = edges[i].q if j == i + 1 else edges[i].p
                if hit.kind != "point" or hit.point != shared:
                    return False
            elif hit.kind != "disjoint":
                return False
    return True


def point_in_polygon(point: Point, poly: Polygon, *, check_simple: bool = True) -> str:
    """Classify a point against a simple polygon: inside, boundary, or outside.

    Uses an exact even-odd ray cast with the half-open edge rule, after an
    explicit boundary membership test.
    """
    if check_simple and not polygon_is_simple(poly):
        raise GeometryError("point_in_polygon requires a simple polygon")
    for a, b in poly.edges():
        if point_on_segment(point, a, b):
            return "boundary"
    inside = False
    for a, b in poly.edges():
        if (a.y > point.y) != (b.y > point.y):
            x_cross = a.x + (point.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if x_cross > point.x:
                inside = not inside
    return "inside" if inside else "outside"


def clip_line_to_polygon(ln: Line, poly: Polygon, *, check_simple: bool = True) -> list[Segment]:
    """Maximal open segments of the line lying in the polygon's interior.

    Boundary events split the line; the classification of each piece is read
    off its midpoint. A vertex lying on the line may therefore terminate two
    of the reported segments, which is exactly the intended behavior.
    """
    if check_simple and not polygon_is_simple(poly):
        raise GeometryError("clip_line_to_polygon requires a simple polygon")

    dx, dy = ln.direction()

    def param(p: Point) -> Fraction:
        return dx * p.x + dy * p.y

    events: dict[Fraction, Point] = {}

    def add(p: Point) -> None:
        events[param(p)] = p

    for a, b in poly.edges():
        fa = ln.value(a)
        fb = ln.value(b)
        if fa == 0 and fb == 0:
            add(a)
            add(b)
        elif fa == 0:
            add(a)
        elif fb == 0:
            add(b)
        elif (fa > 0) != (fb > 0):
            t = fa / (fa - fb)
            add(Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))

    if len(events) < 2:
        return []
    ordered = [events[k] for k in sorted(events)]
    out: list[Segment] = []
    for p, q in zip(ordered, ordered[1:]):
        mid = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
        if point_in_polygon(mid, poly, check_simple=False) == "inside":
            out.append(Segment(p, q, open=True))
    return out


def interior_point(poly: Polygon) -> Point:
    """Some exact point strictly inside a simple polygon.

    Classic construction: take the lowest-leftmost vertex v (a convex corner),
    and either the centroid of its corner triangle or the midpoint toward the
    deepest intruding vertex.
    """
    if not polygon_is_simple(poly):
        raise GeometryError("interior_point requires a simple polygon")
    verts = poly.vertices
    n = len(verts)
    vi = min(range(n), key=lambda i: (verts[i].y, verts[i].x))
    v = verts[vi]
    a = verts[(vi - 1) % n]
    b = verts[(vi + 1) % n]
    # Orient the corner triangle consistently.
    if orientation(a, v, b) < 0:
        a, b = b, a
    best = None
    best_key = None
    for i in range(n):
        q = verts[i]
        if q in (a, v, b):
            continue
        if (
            orientation(a, v, q) >= 0
            and orientation(v, b, q) >= 0
            and orientation(b, a, q) >= 0
        ):
            # q intrudes; prefer the one farthest from line ab.
            d = abs((b.x - a.x) * (q.y - a.y) - (b.y - a.y) * (q.x - a.x))
            if best_key is None or d > best_key:
                best, best_key = q, d
    if best is None:
        cand = Point((a.x + v.x + b.x) / 3, (a.y + v.y + b.y) / 3)
    else:
        cand = Point((v.x + best.x) / 2, (v.y + best.y) / 2)
    if point_in_polygon(cand, poly, check_simple=False) != "inside":
        raise GeometryError("failed to locate an interior point")
    return cand
