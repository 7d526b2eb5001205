"""Line arrangements meeting polygons.

Clipped segment systems, region decompositions of a polygon cut by
crossing-free chords, free-segment accounting relative to an inner polygon,
and an exact minimum line cover for small point sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .geom import (
    GeometryError,
    Line,
    Point,
    Polygon,
    Segment,
    lines_intersection,
    point_in_polygon,
    point_on_segment,
    polygon_is_simple,
    segment_intersection,
)


class PreconditionViolation(Exception):
    """An operation's stated precondition does not hold for the input."""


class CrossingInsidePolygon(PreconditionViolation):
    """Two arrangement lines cross strictly inside the host polygon."""

    def __init__(self, point: Point):
        super().__init__(f"arrangement lines cross inside the polygon at {point}")
        self.point = point


class DeskScaleExceeded(Exception):
    """Input size is beyond the configured exact-search limits."""


@dataclass(frozen=True)
class Arrangement:
    lines: tuple[Line, ...]

    def __post_init__(self):
        if len(set(self.lines)) != len(self.lines):
            raise GeometryError("arrangement contains duplicate lines")

    def __len__(self):
        return len(self.lines)

    def __iter__(self):
        return iter(self.lines)


def arrangement(lines: list[Line] | tuple[Line, ...]) -> Arrangement:
    return Arrangement(tuple(lines))


def crossings(arr: Arrangement) -> set[Point]:
    """All pairwise intersection points of the arrangement, deduplicated."""
    out: set[Point] = set()
    for l1, l2 in itertools.combinations(arr.lines, 2):
        p = lines_intersection(l1, l2)
        if p is not None:
            out.add(p)
    return out


def interior_crossing(arr: Arrangement, poly: Polygon) -> Point | None:
    """Some crossing point strictly inside the polygon, or None."""
    for p in sorted(crossings(arr)):
        if point_in_polygon(p, poly) == "inside":
            return p
    return None


@dataclass(frozen=True)
class ClippedSegment:
    """An open segment of one arrangement line inside the host polygon."""

    segment: Segment
    line_index: int


@dataclass(frozen=True)
class SegmentSystem:
    host: Polygon
    segments: tuple[ClippedSegment, ...]

    def __len__(self):
        return len(self.segments)

    def __iter__(self):
        return iter(self.segments)

    def by_line(self, line_index: int) -> list[ClippedSegment]:
        return [cs for cs in self.segments if cs.line_index == line_index]


def clip_arrangement(arr: Arrangement, poly: Polygon, *, check_simple: bool = True) -> SegmentSystem:
    """Clip every line of the arrangement to the polygon interior.

    The per-line pieces are maximal open segments. When no two lines cross
    inside the polygon the pieces are pairwise disjoint and there are at most
    len(arr) * floor(p/2) of them; with interior crossings the system is still
    returned but that disjointness no longer holds.
    """
    if check_simple and not polygon_is_simple(poly):
        raise GeometryError("clip_arrangement requires a simple polygon")
    from .geom import clip_line_to_polygon

    pieces: list[ClippedSegment] = []
    for idx, ln in enumerate(arr.lines):
        for seg in clip_line_to_polygon(ln, poly, check_simple=False):
            pieces.append(ClippedSegment(seg, idx))
    return SegmentSystem(poly, tuple(pieces))


@dataclass(frozen=True)
class RegionAdjacency:
    first: int
    second: int
    separator: ClippedSegment


@dataclass(frozen=True)
class RegionDecomposition:
    host: Polygon
    regions: tuple[Polygon, ...]
    adjacencies: tuple[RegionAdjacency, ...]

    def adjacency_pairs(self) -> list[tuple[int, int]]:
        return [(a.first, a.second) for a in self.adjacencies]


def _point_on_boundary(pt: Point, poly: Polygon) -> bool:
    return any(point_on_segment(pt, a, b) for a, b in poly.edges())


def _insert_on_boundary(verts: list[Point], pt: Point) -> int:
    """Index of pt among the region's vertices, inserting it on its edge."""
    for i, v in enumerate(verts):
        if v == pt:
            return i
    n = len(verts)
    for i in range(n):
        a, b = verts[i], verts[(i + 1) % n]
        if point_on_segment(pt, a, b, closed=False):
            verts.insert(i + 1, pt)
            return i + 1
    raise GeometryError(f"chord endpoint {pt} is not on the region boundary")


def _split_region(region: Polygon, chord: Segment) -> tuple[Polygon, Polygon]:
    """Split a region along a chord whose endpoints lie on its boundary."""
    verts = list(region.vertices)
    _insert_on_boundary(verts, chord.p)
    _insert_on_boundary(verts, chord.q)
    i1 = verts.index(chord.p)
    i2 = verts.index(chord.q)
    if i1 > i2:
        i1, i2 = i2, i1
    chain_a = verts[i1 : i2 + 1]
    chain_b = verts[i2:] + verts[: i1 + 1]
    return Polygon(tuple(chain_a)), Polygon(tuple(chain_b))


def region_decomposition(arr: Arrangement, poly: Polygon) -> RegionDecomposition:
    """Cut the polygon interior along all clipped segments.

    Preconditions: the polygon is simple and no two arrangement lines cross
    strictly inside it. Each segment then splits exactly one current region,
    so the construction yields #regions = #segments + 1 and an adjacency
    structure that is a tree.
    """
    if not polygon_is_simple(poly):
        raise PreconditionViolation("region_decomposition requires a simple polygon")
    hit = interior_crossing(arr, poly)
    if hit is not None:
        raise CrossingInsidePolygon(hit)

    system = clip_arrangement(arr, poly, check_simple=False)
    regions: list[Polygon] = [poly]
    adjacencies: list[RegionAdjacency] = []

    for cs in system.segments:
        mid = cs.segment.midpoint()
        host_idx = None
        for i, region in enumerate(regions):
            if point_in_polygon(mid, region, check_simple=False) == "inside":
                host_idx = i
                break
        if host_idx is None:
            raise GeometryError(f"segment {cs.segment} lies in no current region")
        part_a, part_b = _split_region(regions[host_idx], cs.segment)

        # Reattach the split region's previous adjacencies to the correct part.
        new_idx = len(regions)
        patched: list[RegionAdjacency] = []
        for adj in adjacencies:
            if host_idx not in (adj.first, adj.second):
                patched.append(adj)
                continue
            other = adj.second if adj.first == host_idx else adj.first
            sep_mid = adj.separator.segment.midpoint()
            target = host_idx if _point_on_boundary(sep_mid, part_a) else new_idx
            patched.append(RegionAdjacency(min(other, target), max(other, target), adj.separator))
        adjacencies = patched
        adjacencies.append(RegionAdjacency(host_idx, new_idx, cs))
        regions[host_idx] = part_a
        regions.append(part_b)

    return RegionDecomposition(poly, tuple(regions), tuple(adjacencies))


def segment_meets_polygon_interior(seg: Segment, poly: Polygon) -> bool:
    """Exact test: does the closed segment contain a point interior to poly?"""
    direction = (seg.q.x - seg.p.x, seg.q.y - seg.p.y)

    def param(pt: Point) -> Fraction:
        return direction[0] * pt.x + direction[1] * pt.y

    events = {param(seg.p): seg.p, param(seg.q): seg.q}
    for a, b in poly.edges():
        hit = segment_intersection(seg, Segment(a, b))
        if hit.kind == "point":
            events[param(hit.point)] = hit.point
        elif hit.kind == "overlap":
            for pt in hit.overlap:
                events[param(pt)] = pt
    ordered = [events[k] for k in sorted(events)]
    for p, q in zip(ordered, ordered[1:]):
        mid = Point((p.x + q.x) / 2, (p.y + q.y) / 2)
        if point_in_polygon(mid, poly, check_simple=False) == "inside":
            return True
    return False


def segment_meets_closed_region(seg: Segment, poly: Polygon) -> bool:
    """Does the closed segment meet the closed region bounded by poly?"""
    for endpoint in (seg.p, seg.q):
        if point_in_polygon(endpoint, poly, check_simple=False) != "outside":
            return True
    for a, b in poly.edges():
        if segment_intersection(seg, Segment(a, b)).kind != "disjoint":
            return True
    return False


def free_segments(system: SegmentSystem, inner: Polygon) -> list[ClippedSegment]:
    """Segments of the system whose closures avoid the inner polygon's interior.

    Preconditions: the inner polygon is simple, lies strictly inside the host
    with disjoint boundaries, and every one of its vertices lies on some
    segment of the system.
    """
    if not polygon_is_simple(inner):
        raise PreconditionViolation("inner polygon is not simple")
    host = system.host
    for a, b in inner.edges():
        inner_edge = Segment(a, b)
        for c, d in host.edges():
            if segment_intersection(inner_edge, Segment(c, d)).kind != "disjoint":
                raise PreconditionViolation("inner polygon touches the host boundary")
    for v in inner.vertices:
        if point_in_polygon(v, host, check_simple=False) != "inside":
            raise PreconditionViolation(f"inner vertex {v} is not inside the host")
        if not any(point_on_segment(v, cs.segment.p, cs.segment.q) for cs in system.segments):
            raise PreconditionViolation(f"inner vertex {v} lies on no segment of the system")
    return [cs for cs in system.segments if not segment_meets_polygon_interior(cs.segment, inner)]


def _vertical_through(p: Point) -> Line:
    return Line(Fraction(1), Fraction(0), p.x)


def min_line_cover(
    points: set[Point] | frozenset[Point] | list[Point],
    budget: int,
    *,
    max_points: int = 64,
    max_budget: int = 8,
) -> set[Line] | None:
    """A minimum set of lines covering all points, if the minimum is <= budget.

    Exact search: iterative deepening with the kernel rule that a line through
    more than k uncovered points is forced (any two points span a unique line,
    so skipping it would cost more than k lines), branching otherwise on the
    lines through the first uncovered point.
    """
    pts = sorted(set(points))
    if len(pts) > max_points:
        raise DeskScaleExceeded(f"{len(pts)} points exceeds the limit of {max_points}")
    if budget < 1 or budget > max_budget:
        raise DeskScaleExceeded(f"budget must be between 1 and {max_budget}")

    if not pts:
        return set()

    def collinear_groups(uncovered: list[Point]) -> dict[Line, list[Point]]:
        groups: dict[Line, list[Point]] = {}
        for a, b in itertools.combinations(uncovered, 2):
            ln = Line.through(a, b)
            if ln not in groups:
                groups[ln] = [p for p in uncovered if ln.contains(p)]
        return groups

    def search(uncovered: list[Point], k: int) -> list[Line] | None:
        if not uncovered:
            return []
        if k == 0:
            return None
        groups = collinear_groups(uncovered)
        forced = None
        if groups:
            best = min(groups.items(), key=lambda kv: (-len(kv[1]), kv[0].a, kv[0].b, kv[0].c))
            if len(best[1]) > k:
                forced = best[0]
        if forced is not None:
            rest = [p for p in uncovered if not forced.contains(p)]
            sub = search(rest, k - 1)
            return None if sub is None else [forced] + sub
        pivot = uncovered[0]
        candidates = [ln for ln in groups if ln.contains(pivot)]
        candidates.sort(key=lambda ln: (-len(groups[ln]), ln.a, ln.b, ln.c))
        candidates.append(_vertical_through(pivot))
        for ln in candidates:
            rest = [p for p in uncovered if not ln.contains(p)]
            sub = search(rest, k - 1)
            if sub is not None:
                return [ln] + sub
        return None

    for k in range(0, budget + 1):
        found = search(pts, k)
        if found is not None:
            return set(found)
    return None
