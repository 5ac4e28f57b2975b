"""Convex lattice polygons in the rank-degree plane and their dominance order.

A polygon starts at (0, 0), ends at (m, n), and has integral vertices with
strictly increasing ranks and strictly decreasing segment slopes.  The
Harder-Narasimhan polygon of a destabilized Frobenius pull-back is such a
polygon with at least two segments; the genus bounds consecutive slope gaps
by 2g - 2, which together with the fixed average slope p*d/r makes the
enumeration finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import ceil, floor

from .gfield import _is_prime

__all__ = [
    "CurveParams",
    "EQUAL",
    "GREATER_OR_EQUAL",
    "INCOMPARABLE",
    "LESS_OR_EQUAL",
    "LatticePolygon",
    "OTHER",
    "PSI1",
    "PSI2",
    "PSI3",
    "PSI4",
    "PSI_LABELS",
    "SEMISTABLE",
    "bruteforce_destabilized_polygons",
    "dominates",
    "enumerate_destabilized_polygons",
    "make_polygon",
    "max_slope_gap",
    "name_polygon",
    "polygon_of_filtration",
    "psi_polygon",
    "slopes",
]

PSI1, PSI2, PSI3, PSI4 = "Psi1", "Psi2", "Psi3", "Psi4"
PSI_LABELS = (PSI1, PSI2, PSI3, PSI4)
SEMISTABLE = "semistable"
OTHER = "other"

GREATER_OR_EQUAL = "greater-or-equal"
LESS_OR_EQUAL = "less-or-equal"
EQUAL = "equal"
INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class CurveParams:
    """Characteristic, genus, rank and degree fixing one enumeration problem."""

    p: int
    g: int
    r: int
    d: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"characteristic must be prime, got {self.p!r}")
        if self.g < 1:
            raise ValueError(f"genus must be at least 1, got {self.g}")
        if self.r < 1:
            raise ValueError(f"rank must be positive, got {self.r}")


@dataclass(frozen=True)
class LatticePolygon:
    """Strictly convex lattice polygon from (0, 0) to its endpoint."""

    vertices: tuple[tuple[int, int], ...]

    def __post_init__(self):
        verts = tuple(tuple(v) for v in self.vertices)
        for v in verts:
            if len(v) != 2 or not all(isinstance(c, int) for c in v):
                raise ValueError(f"vertices must be integral lattice points, got {v!r}")
        object.__setattr__(self, "vertices", verts)
        if len(verts) < 2:
            raise ValueError("polygon needs at least two vertices")
        if verts[0] != (0, 0):
            raise ValueError(f"polygon must start at (0, 0), got {verts[0]}")
        for (x0, _), (x1, _) in zip(verts, verts[1:]):
            if x1 <= x0:
                raise ValueError("vertex ranks must strictly increase")
        segs = self.slopes()
        for s0, s1 in zip(segs, segs[1:]):
            if s1 >= s0:
                raise ValueError(f"segment slopes must strictly decrease, got {s0} then {s1}")

    @property
    def endpoint(self):
        return self.vertices[-1]

    @property
    def segment_count(self):
        return len(self.vertices) - 1

    def slopes(self):
        """Exact segment slopes, strictly decreasing left to right."""
        return [Fraction(y1 - y0, x1 - x0)
                for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:])]

    def height_at(self, x):
        """Height of the piecewise-linear graph at abscissa x (exact rational)."""
        x = Fraction(x)
        if not 0 <= x <= self.endpoint[0]:
            raise ValueError(f"abscissa {x} outside [0, {self.endpoint[0]}]")
        for (x0, y0), (x1, y1) in zip(self.vertices, self.vertices[1:]):
            if x <= x1:
                return y0 + Fraction(y1 - y0, x1 - x0) * (x - x0)
        raise AssertionError("unreachable")

    def to_pairs(self):
        """Serialization form: list of [rank, degree] pairs."""
        return [[r, dg] for r, dg in self.vertices]

    def __repr__(self):
        pts = " ".join(f"({r},{dg})" for r, dg in self.vertices)
        return f"LatticePolygon[{pts}]"


def make_polygon(vertices):
    """Validated polygon from a sequence of (rank, degree) pairs."""
    return LatticePolygon(tuple(tuple(v) for v in vertices))


def slopes(P):
    """Exact segment slopes of a polygon."""
    return P.slopes()


def max_slope_gap(P):
    """Largest difference between consecutive segment slopes."""
    ss = P.slopes()
    if len(ss) < 2:
        raise ValueError("polygon has a single segment; no slope gaps")
    return max(a - b for a, b in zip(ss, ss[1:]))


def dominates(P, Q):
    """Compare two polygons with shared endpoints in the dominance order.

    Heights are compared at every integer abscissa; that suffices because
    both graphs are piecewise linear with integer breakpoints.
    """
    if P.endpoint != Q.endpoint:
        raise ValueError(
            f"polygons end at {P.endpoint} and {Q.endpoint}; dominance needs shared endpoints")
    above = below = True
    for x in range(P.endpoint[0] + 1):
        hp, hq = P.height_at(x), Q.height_at(x)
        if hp < hq:
            above = False
        if hp > hq:
            below = False
    if above and below:
        return EQUAL
    if above:
        return GREATER_OR_EQUAL
    if below:
        return LESS_OR_EQUAL
    return INCOMPARABLE


def psi_polygon(index, d):
    """The four destabilized pull-back polygon templates for (p, g, r) = (3, 2, 3)."""
    if index == 1:
        verts = ((0, 0), (1, d + 1), (3, 3 * d))
    elif index == 2:
        verts = ((0, 0), (2, 2 * d + 1), (3, 3 * d))
    elif index == 3:
        verts = ((0, 0), (1, d + 1), (2, 2 * d + 1), (3, 3 * d))
    elif index == 4:
        verts = ((0, 0), (1, d + 2), (2, 2 * d + 2), (3, 3 * d))
    else:
        raise ValueError(f"template index must be 1..4, got {index}")
    return LatticePolygon(verts)


def enumerate_destabilized_polygons(params):
    """All polygons a destabilized pull-back's filtration can trace out.

    Directed search over vertex chains from (0, 0) to (r, p*d) with strictly
    decreasing slopes, every consecutive gap at most 2g - 2, and at least two
    segments.  Every slope is confined to p*d/r +- (r-1)(2g-2): the gap bound
    limits the spread and the endpoint fixes the rank-weighted average.
    Results are sorted lexicographically by vertex list.
    """
    if params.g < 2:
        raise ValueError(f"enumeration needs genus >= 2, got {params.g}")
    p, g, r, d = params.p, params.g, params.r, params.d
    end_y = p * d
    gap = 2 * g - 2
    mean = Fraction(end_y, r)
    lo = mean - (r - 1) * gap
    hi = mean + (r - 1) * gap
    found = []

    def admissible(s, prev):
        if s < lo or s > hi:
            return False
        if prev is not None and (s >= prev or prev - s > gap):
            return False
        return True

    def extend(chain, prev_slope):
        x0, y0 = chain[-1]
        for x1 in range(x0 + 1, r + 1):
            w = x1 - x0
            if x1 == r:
                s = Fraction(end_y - y0, w)
                if len(chain) >= 2 and admissible(s, prev_slope):
                    found.append(LatticePolygon(tuple(chain) + ((r, end_y),)))
                continue
            s_hi = hi if prev_slope is None else min(hi, prev_slope)
            s_lo = lo if prev_slope is None else max(lo, prev_slope - gap)
            for y1 in range(ceil(y0 + w * s_lo), floor(y0 + w * s_hi) + 1):
                s = Fraction(y1 - y0, w)
                if admissible(s, prev_slope):
                    extend(chain + [(x1, y1)], s)

    extend([(0, 0)], None)
    found.sort(key=lambda poly: poly.vertices)
    return found


def bruteforce_destabilized_polygons(params):
    """Box-scan cross-check for :func:`enumerate_destabilized_polygons`.

    Scans every subset of interior abscissae together with every integer
    height vector inside the slope-bound box, keeping the vertex lists that
    validate.  All checks are integer cross-multiplications, so this path
    shares no arithmetic with the directed search.
    """
    if params.g < 2:
        raise ValueError(f"enumeration needs genus >= 2, got {params.g}")
    p, g, r, d = params.p, params.g, params.r, params.d
    end_y = p * d
    gap = 2 * g - 2
    band = (r - 1) * gap
    # slope window [pd/r - band, pd/r + band] cleared of denominators:
    # s = dy/w is admissible iff lo_num * w <= dy * r <= hi_num * w.
    lo_num = p * d - band * r
    hi_num = p * d + band * r

    def height_range(x):
        lo_h = -((-x * lo_num) // r)   # ceil(x * lo_num / r)
        hi_h = (x * hi_num) // r       # floor(x * hi_num / r)
        return range(lo_h, hi_h + 1)

    def valid(verts):
        diffs = [(y1 - y0, x1 - x0)
                 for (x0, y0), (x1, y1) in zip(verts, verts[1:])]
        for dy, w in diffs:
            if dy * r > hi_num * w or dy * r < lo_num * w:
                return False
        for (dy1, w1), (dy2, w2) in zip(diffs, diffs[1:]):
            lhs, rhs = dy1 * w2, dy2 * w1
            if lhs <= rhs:
                return False
            if lhs - rhs > gap * w1 * w2:
                return False
        return True

    found = []
    for k in range(1, r):
        for xs in combinations(range(1, r), k):
            for ys in product(*(height_range(x) for x in xs)):
                verts = ((0, 0),) + tuple(zip(xs, ys)) + ((r, end_y),)
                if valid(verts):
                    found.append(LatticePolygon(verts))
    found.sort(key=lambda poly: poly.vertices)
    return found


def polygon_of_filtration(pieces):
    """Cumulative (rank, degree) polygon of a filtration's graded pieces.

    Pieces are listed top slope first; their slopes must strictly decrease.
    """
    pieces = [tuple(piece) for piece in pieces]
    if not pieces:
        raise ValueError("filtration needs at least one graded piece")
    prev = None
    for rank, degree in pieces:
        if rank < 1:
            raise ValueError(f"graded piece ranks must be positive, got {rank}")
        s = Fraction(degree, rank)
        if prev is not None and s >= prev:
            raise ValueError("graded-piece slopes must strictly decrease")
        prev = s
    verts = [(0, 0)]
    for rank, degree in pieces:
        x, y = verts[-1]
        verts.append((x + rank, y + degree))
    return LatticePolygon(tuple(verts))


def name_polygon(P, params):
    """Match a polygon against the (3, 2, 3) templates at the given degree."""
    if (params.p, params.g, params.r) != (3, 2, 3):
        raise ValueError(
            "unclassified regime: polygon naming is defined for (p, g, r) = (3, 2, 3)")
    d = params.d
    if P.endpoint != (3, 3 * d):
        raise ValueError(f"polygon ends at {P.endpoint}, expected (3, {3 * d})")
    if P.segment_count == 1:
        return SEMISTABLE
    for i in (1, 2, 3, 4):
        if P == psi_polygon(i, d):
            return PSI_LABELS[i - 1]
    return OTHER
