"""Exact slope and degree bookkeeping for Frobenius push-forwards and pull-backs.

Everything is computed in integers and ``Fraction``s; the certificates hinge
on strict inequalities with denominator p, so no floating point appears
anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "BundleData",
    "CertificateReport",
    "SubrankBound",
    "canonical_filtration_degrees",
    "degree_from_colength",
    "embedding_certificate",
    "euler_characteristic",
    "nonsplit_predicate",
    "pullback_degree",
    "pushforward_degree",
    "stability_certificate",
    "sun_upper_bound",
]


@dataclass(frozen=True)
class BundleData:
    """Rank and degree of a bundle; the slope is degree/rank."""

    rank: int
    degree: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be positive, got {self.rank}")

    @property
    def slope(self):
        return Fraction(self.degree, self.rank)


def euler_characteristic(rank, degree, g):
    """Riemann-Roch Euler characteristic: degree + rank(1 - g)."""
    return degree + rank * (1 - g)


def pushforward_degree(b, p, g):
    """Degree of the Frobenius push-forward: deg + rank(p-1)(g-1).

    The rank multiplies by p; the degree shift is exactly what conservation
    of the Euler characteristic under a degree-p finite flat map forces.
    """
    if p < 2:
        raise ValueError(f"characteristic must be at least 2, got {p}")
    if g < 0:
        raise ValueError(f"genus must be non-negative, got {g}")
    return b.degree + b.rank * (p - 1) * (g - 1)


def pullback_degree(b, p):
    """Frobenius pull-back: rank unchanged, degree multiplied by p."""
    return BundleData(b.rank, p * b.degree)


def sun_upper_bound(subrank, p, g, pushforward_slope):
    """Strict upper bound for the slope of a proper subsheaf of a stable
    push-forward of a line bundle: slope(push-forward) - (p - subrank)(g - 1)/p.

    ``subrank = p`` is allowed and returns the push-forward slope itself
    (the gap term vanishes).
    """
    if not 1 <= subrank <= p:
        raise ValueError(f"subrank must lie in 1..{p}, got {subrank}")
    return Fraction(pushforward_slope) - Fraction((p - subrank) * (g - 1), p)


@dataclass(frozen=True)
class SubrankBound:
    """One row of a certificate witness: the slope bound for one subrank."""

    subrank: int
    bound: Fraction
    threshold: Fraction
    ok: bool

    def to_jsonable(self):
        return {
            "subrank": self.subrank,
            "bound": {"num": self.bound.numerator, "den": self.bound.denominator},
            "threshold": {"num": self.threshold.numerator,
                          "den": self.threshold.denominator},
            "verdict": "pass" if self.ok else "fail",
        }


@dataclass(frozen=True)
class CertificateReport:
    """Outcome of a certificate plus the per-subrank inequalities behind it."""

    kind: str
    passed: bool
    bounds: tuple[SubrankBound, ...]

    def to_jsonable(self):
        return {
            "kind": self.kind,
            "passed": self.passed,
            "witness": [b.to_jsonable() for b in self.bounds],
        }


def _subrank_bounds(p, g, r, d, t):
    # r = 1 has no proper subranks, so both certificates hold vacuously
    if g < 2:
        raise ValueError(f"the subsheaf slope bound needs genus >= 2, got {g}")
    if r not in (1, p):
        raise ValueError(
            f"certificates cover the rank-equals-characteristic case; got r={r}, p={p}")
    fl_slope = Fraction(pushforward_degree(BundleData(1, t), p, g), p)
    threshold = Fraction(d, r)
    return tuple(
        SubrankBound(s, sun_upper_bound(s, p, g, fl_slope), threshold,
                     sun_upper_bound(s, p, g, fl_slope) <= threshold)
        for s in range(1, r))


def stability_certificate(p, g, r, d, t):
    """Certify that a full-rank, degree-d subsheaf of the push-forward of a
    degree-t line bundle is stable.

    For every proper subrank s the strict subsheaf bound must not exceed the
    slope d/r; equality is enough because the bound itself is strict.  The
    report records each subrank's inequality.
    """
    fl_degree = pushforward_degree(BundleData(1, t), p, g)
    if fl_degree < d:
        raise ValueError(
            f"push-forward degree {fl_degree} cannot contain a full-rank subsheaf of degree {d}")
    bounds = _subrank_bounds(p, g, r, d, t)
    return CertificateReport("stability", all(b.ok for b in bounds), bounds)


def embedding_certificate(p, g, r, d, t):
    """Certify that the adjoint map from a destabilized stable bundle into the
    push-forward is injective.

    The image would be a subsheaf whose slope exceeds d/r by stability and is
    strictly below the subrank bound; the certificate checks that the open
    interval (d/r, bound) is empty for every proper subrank, so no such image
    of lower rank can exist.  Vacuously true when r = 1.
    """
    bounds = _subrank_bounds(p, g, r, d, t)
    return CertificateReport("embedding", all(b.ok for b in bounds), bounds)


def canonical_filtration_degrees(p, g, t):
    """Degrees of the graded pieces of the canonical filtration of the
    pull-back of a push-forward of a degree-t line bundle, top piece first:
    t + i(2g - 2) for i = p-1 .. 0.  They sum to p*t + p(p-1)(g-1)."""
    if g < 1:
        raise ValueError(f"genus must be at least 1, got {g}")
    return [t + i * (2 * g - 2) for i in range(p - 1, -1, -1)]


def nonsplit_predicate(p, g):
    """Literal divisibility criterion p | (g - 1) for non-splitting of the
    canonical filtration of a pulled-back push-forward.

    Exposed verbatim.  Caveat: at (p, g) = (3, 2) this returns False although
    the non-split behaviour it is meant to capture is known to hold there, so
    the two directions of the criterion are inconsistent on that instance.
    Callers must not read the False branch as a proof of splitting.
    """
    return (g - 1) % p == 0


def degree_from_colength(d, colength):
    """Degree of the intersection of the pulled-back bundle with the rank-1
    canonical subsheaf: (d + 3) - colength, d + 3 being the degree of the top
    canonical graded piece when the auxiliary line bundle has degree d - 1."""
    if colength not in (1, 2, 3):
        raise ValueError(f"colength must be 1, 2 or 3, got {colength}")
    return d + 3 - colength
