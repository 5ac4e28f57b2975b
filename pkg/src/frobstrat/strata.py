"""Dimension ledger of the Frobenius strata for rank 3 in characteristic 3 on
a genus-2 curve: fiber, parameter-space and moduli-space dimensions, the
dual-polygon involution, and the assembled table."""

from __future__ import annotations

from dataclasses import dataclass

from .polygon import PSI1, PSI2, PSI3, PSI4, LatticePolygon, psi_polygon

__all__ = [
    "CURVE_DIM",
    "StrataTable",
    "StratumRecord",
    "dualize_polygon",
    "moduli_dimension",
    "moduli_stratum_dimension",
    "quot_fiber_dimension",
    "quot_stratum_dimension",
    "strata_table",
]

CURVE_DIM = 1  # the base is a curve

_FIBER_DIM = {PSI2: 2, PSI3: 1, PSI4: 0}


def quot_fiber_dimension(label):
    """Dimension of the parameter-space fiber over a (point, line bundle)
    pair: a plane for Psi2, a line for Psi3, a single point for Psi4.
    Psi1 has no such fiber; the parameter construction covers Psi2..Psi4."""
    try:
        return _FIBER_DIM[label]
    except KeyError:
        raise ValueError(f"no parameter-space fiber for label {label!r}") from None


def quot_stratum_dimension(label, g):
    """Total parameter-space dimension: fiber + dim(curve) + dim(Picard)
    = fiber + 1 + g."""
    return quot_fiber_dimension(label) + CURVE_DIM + g


def moduli_stratum_dimension(label, g):
    """Stratum dimension inside the moduli space (genus-2 regime only).

    Psi2 and Psi3 transfer their parameter-space dimensions along an
    injective classifying morphism; the Psi4 stratum is a copy of the
    Jacobian, dimension g; Psi1 transports from Psi2 by the duality swapping
    the two labels.
    """
    if g != 2:
        raise ValueError(
            f"moduli stratum dimensions are established for genus 2 only, got g={g}")
    if label == PSI1:
        return quot_stratum_dimension(PSI2, g)
    if label in (PSI2, PSI3):
        return quot_stratum_dimension(label, g)
    if label == PSI4:
        return g
    raise ValueError(f"unknown stratum label {label!r}")


def moduli_dimension(r, g):
    """Dimension of the moduli space of stable bundles: r^2(g - 1) + 1."""
    if r < 1:
        raise ValueError(f"rank must be positive, got {r}")
    if g < 2:
        raise ValueError(f"the dimension formula needs genus >= 2, got {g}")
    return r * r * (g - 1) + 1


def dualize_polygon(P):
    """Polygon traced out by the dual bundle's pull-back: slopes negated and
    reversed.  Vertices (x, y) map to (r - x, y - D) for endpoint (r, D),
    then re-sort from (0, 0); applying it twice gives back P."""
    r, D = P.endpoint
    verts = sorted((r - x, y - D) for x, y in P.vertices)
    return LatticePolygon(tuple(verts))


@dataclass(frozen=True)
class StratumRecord:
    """One row of the dimension table.

    Open and closed stratum dimensions always agree; Psi1 carries no
    parameter-space data, so its fiber and quot dims are None together.
    """

    label: str
    polygon: LatticePolygon
    stratum_dim: int
    closed_stratum_dim: int
    fiber_dim: int | None = None
    quot_dim: int | None = None

    def __post_init__(self):
        if self.stratum_dim != self.closed_stratum_dim:
            raise ValueError("open and closed stratum dimensions must agree")
        if (self.fiber_dim is None) != (self.quot_dim is None):
            raise ValueError("fiber and parameter-space dimensions come together")
        if self.quot_dim is not None and self.quot_dim != self.fiber_dim + CURVE_DIM + 2:
            raise ValueError("parameter-space dimension must be fiber + 1 + g with g = 2")

    def to_jsonable(self):
        return {
            "label": self.label,
            "vertices": self.polygon.to_pairs(),
            "fiber_dim": self.fiber_dim,
            "quot_dim": self.quot_dim,
            "stratum_dim": self.stratum_dim,
            "closed_equals_open": True,
        }


@dataclass(frozen=True)
class StrataTable:
    """The four stratum records plus the headline numbers of the regime."""

    degree: int
    records: tuple[StratumRecord, ...]
    codimension: int
    top_components: int

    def to_jsonable(self):
        return {
            "strata": [r.to_jsonable() for r in self.records],
            "codimension": self.codimension,
            "top_components": self.top_components,
        }


def strata_table(d):
    """Full dimension table for degree d; the dimensions are d-independent.

    Also reports the codimension of the whole destabilized locus (moduli
    dimension minus the top stratum dimension) and how many strata attain
    the top dimension.
    """
    g = 2
    records = []
    for i, label in enumerate((PSI1, PSI2, PSI3, PSI4), start=1):
        dim = moduli_stratum_dimension(label, g)
        if label == PSI1:
            fiber = quot = None
        else:
            fiber = quot_fiber_dimension(label)
            quot = quot_stratum_dimension(label, g)
        records.append(StratumRecord(label, psi_polygon(i, d), dim, dim, fiber, quot))
    top = max(rec.stratum_dim for rec in records)
    return StrataTable(
        degree=d,
        records=tuple(records),
        codimension=moduli_dimension(3, g) - top,
        top_components=sum(1 for rec in records if rec.stratum_dim == top),
    )
