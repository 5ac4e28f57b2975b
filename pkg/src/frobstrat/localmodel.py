"""Truncated local model of a Frobenius pull-back of a push-forward at a point.

Write S = k[t]/(t^{pM}) for the truncated upstairs stalk and R = k[u]/(u^M)
for its p-th power subring via u -> t^p.  The tensor square S (x)_R S has
k-basis { t^i (x) t^j : 0 <= i < pM, 0 <= j < p }: the rewrite rule
1 (x) t^p = t^p (x) 1 keeps right exponents below p, and left exponents at or
past pM are truncated away.  The module action of the stalk is multiplication
in the right factor.

Colength-1 R-submodules V of S are cut out by a single linear functional on
the coefficients of 1, t, t^2 (everything in t^p S is forced into V), so they
form a projective plane.  Base-changing V along the right factor, taking
powers of tau = t (x) 1 - 1 (x) t, and exact row reduction over the base
field decide which stratum each plane point belongs to.  The truncation level
M >= 3 keeps every exponent the classification touches (at most 5) alive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gfield import FieldElement, FieldSpec, ProjectivePoint, projective_plane
from .polygon import PSI2, PSI3, PSI4

__all__ = [
    "ModelSpec",
    "SubmoduleV",
    "SubspaceBasis",
    "TensorElement",
    "claim_results",
    "classify_stratum",
    "contains_monomial",
    "intersection_colength",
    "membership",
    "pullback_span",
    "stratum_census",
    "submodule_from_point",
    "tau_power",
    "tau_square_span",
    "times_t_left",
    "times_t_right",
]


@dataclass(frozen=True)
class ModelSpec:
    """Field, characteristic and truncation level of one local model."""

    field: FieldSpec
    p: int
    M: int = 3

    def __post_init__(self):
        if self.field.p != self.p:
            raise ValueError(
                f"field characteristic {self.field.p} does not match p = {self.p}")
        if self.M < 3:
            raise ValueError(f"truncation level M must be at least 3, got {self.M}")

    @property
    def left_bound(self):
        """Left exponents run below p*M."""
        return self.p * self.M

    @property
    def dimension(self):
        """k-dimension of the truncated tensor square."""
        return self.p * self.M * self.p


class TensorElement:
    """Element of the truncated tensor square in normal form.

    Stored sparsely as {(i, j): coefficient} with 0 <= i < pM, 0 <= j < p,
    never keeping zero coefficients.
    """

    __slots__ = ("spec", "_c")

    def __init__(self, spec, terms):
        self.spec = spec
        self._c = {k: v for k, v in terms.items() if v}

    @classmethod
    def zero(cls, spec):
        return cls(spec, {})

    @classmethod
    def monomial(cls, spec, i, j, coeff=None):
        if coeff is None:
            coeff = spec.field.one
        elif isinstance(coeff, int):
            coeff = spec.field.element(coeff)
        if i < 0:
            raise ValueError(f"negative left exponent {i}")
        if j < 0:
            raise ValueError(f"negative right exponent {j}")
        # normal form: move whole p-th powers of the right factor to the left
        i += spec.p * (j // spec.p)
        j %= spec.p
        if i >= spec.left_bound or not coeff:
            return cls(spec, {})
        return cls(spec, {(i, j): coeff})

    def terms(self):
        """Nonzero terms sorted in monomial order (left exponent, then right)."""
        return sorted(self._c.items())

    def is_zero(self):
        return not self._c

    def __bool__(self):
        return bool(self._c)

    def _check(self, other):
        if self.spec != other.spec:
            raise ValueError("elements belong to different local models")

    def __add__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        self._check(other)
        out = dict(self._c)
        for k, v in other._c.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TensorElement(self.spec, out)

    def __neg__(self):
        return TensorElement(self.spec, {k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if isinstance(scalar, int):
            scalar = self.spec.field.element(scalar)
        if not isinstance(scalar, FieldElement):
            return NotImplemented
        if scalar.spec != self.spec.field:
            raise ValueError("scalar comes from a different field")
        if not scalar:
            return TensorElement.zero(self.spec)
        return TensorElement(self.spec, {k: v * scalar for k, v in self._c.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.spec == other.spec and self._c == other._c

    def __hash__(self):
        return hash((self.spec, frozenset(self._c.items())))

    def to_triples(self):
        """Sparse serialization: [{'i', 'j', 'coeff'}] sorted by (i, j)."""
        return [{"i": i, "j": j, "coeff": c.to_coeffs()} for (i, j), c in self.terms()]

    def dense(self):
        """Coefficient indices flattened in monomial order (i asc, then j asc)."""
        p = self.spec.p
        v = [0] * self.spec.dimension
        for (i, j), c in self._c.items():
            v[i * p + j] = c.index
        return v

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for (i, j), c in self.terms():
            cs = "" if c == self.spec.field.one else f"[{c!r}]"
            parts.append(f"{cs}t^{i}(x)t^{j}")
        return " + ".join(parts)


def times_t_left(e):
    """Multiply by t in the left factor; exponents past truncation drop."""
    lim = e.spec.left_bound
    out = {}
    for (i, j), c in e._c.items():
        if i + 1 < lim:
            out[(i + 1, j)] = c
    return TensorElement(e.spec, out)


def times_t_right(e):
    """Multiply by t in the right factor, re-normalizing t^p into the left."""
    spec = e.spec
    p, lim = spec.p, spec.left_bound
    out = {}
    for (i, j), c in e._c.items():
        if j + 1 < p:
            out[(i, j + 1)] = c
        elif i + p < lim:
            out[(i + p, 0)] = c
    return TensorElement(spec, out)


def tau_power(spec, n):
    """n-th power of tau = t (x) 1 - 1 (x) t in normal form.

    tau^p = 0: the middle binomial coefficients vanish mod p and the two
    outer terms collapse under the t^p rewrite."""
    if n < 0:
        raise ValueError(f"exponent must be non-negative, got {n}")
    e = TensorElement.monomial(spec, 0, 0)
    for _ in range(n):
        e = times_t_left(e) - times_t_right(e)
    return e


def _rref(field, rows):
    """Reduced row echelon form over the field; rows are element-index vectors.

    Column order is the monomial order baked into the flattening, so the
    result is the canonical reduced basis.  Returns independent rows sorted
    by pivot column; input rows are not mutated.
    """
    add, mul, neg, inv = field._add, field._mul, field._neg, field._inv
    basis = {}
    for row in rows:
        row = list(row)
        n = len(row)
        for pc in sorted(basis):
            c = row[pc]
            if c:
                prow = basis[pc]
                mrow = mul[c]
                for k in range(pc, n):
                    pk = prow[k]
                    if pk:
                        row[k] = add[row[k]][neg[mrow[pk]]]
        pc = next((k for k, v in enumerate(row) if v), None)
        if pc is None:
            continue
        s = inv[row[pc]]
        if s != 1:
            srow = mul[s]
            row = [srow[v] if v else 0 for v in row]
        for qrow in basis.values():
            c = qrow[pc]
            if c:
                mrow = mul[c]
                for k in range(pc, n):
                    rk = row[k]
                    if rk:
                        qrow[k] = add[qrow[k]][neg[mrow[rk]]]
        basis[pc] = row
    return [basis[pc] for pc in sorted(basis)]


def _reduce_against(field, mat, pivots, vec):
    add, mul, neg = field._add, field._mul, field._neg
    v = list(vec)
    n = len(v)
    for prow, pc in zip(mat, pivots):
        c = v[pc]
        if c:
            mrow = mul[c]
            for k in range(pc, n):
                pk = prow[k]
                if pk:
                    v[k] = add[v[k]][neg[mrow[pk]]]
    return v


def _tensor_from_dense(spec, row):
    p = spec.p
    elems = spec.field._elements
    return TensorElement(
        spec, {(k // p, k % p): elems[idx] for k, idx in enumerate(row) if idx})


class SubspaceBasis:
    """Row-reduced k-basis of a subspace of the truncated tensor square."""

    __slots__ = ("spec", "rows", "_mat", "_pivots")

    def __init__(self, spec, mat):
        self.spec = spec
        self._mat = mat
        self._pivots = [next(k for k, v in enumerate(r) if v) for r in mat]
        self.rows = tuple(_tensor_from_dense(spec, r) for r in mat)

    @classmethod
    def from_spanning(cls, spec, elements):
        for e in elements:
            if e.spec != spec:
                raise ValueError("spanning element belongs to a different local model")
        return cls(spec, _rref(spec.field, [e.dense() for e in elements]))

    @property
    def dim(self):
        return len(self._mat)

    def contains(self, e):
        """Exact membership by reduction against the echelon basis."""
        if e.spec != self.spec:
            raise ValueError("element belongs to a different local model")
        return not any(_reduce_against(self.spec.field, self._mat, self._pivots,
                                       e.dense()))


@dataclass(frozen=True)
class SubmoduleV:
    """Colength-1 R-submodule of S, cut out by a hyperplane functional.

    The point [a : b : c] encodes V = { f : a f(0-coeff) + b f(1-coeff)
    + c f(2-coeff) = 0 }; all of t^p S lies in V automatically because the
    maximal ideal kills the one-dimensional quotient.
    """

    spec: ModelSpec
    hyperplane: ProjectivePoint

    def __post_init__(self):
        if self.spec.p != 3:
            raise ValueError(
                "the hyperplane encoding of colength-1 submodules is implemented for p = 3")
        if self.hyperplane.spec != self.spec.field:
            raise ValueError("hyperplane point lives over a different field")

    def functional(self, coeffs):
        """Apply the defining functional to the coefficients of 1, t, t^2."""
        field = self.spec.field
        acc = field.zero
        for h, a in zip(self.hyperplane.coords, coeffs):
            acc = acc + h * field.element(a)
        return acc

    def contains(self, coeffs):
        """Whether sum_i coeffs[i] t^i lies in V; only coefficients of
        1, t, t^2 matter since t^3 S is inside V."""
        return not self.functional(list(coeffs)[:3])


def submodule_from_point(spec, h):
    """Wrap a projective plane point as the colength-1 submodule it cuts out."""
    return SubmoduleV(spec, h)


def contains_monomial(V, j):
    """Whether t^j (j in {0, 1, 2}) lies in V: the j-th functional coordinate
    vanishes.  In particular t is in V iff the middle coordinate is 0 and
    t^2 is in V iff the last coordinate is 0."""
    if j not in (0, 1, 2):
        raise ValueError(f"monomial exponent must be 0, 1 or 2, got {j}")
    return not V.hyperplane.coords[j]


def _kernel_vectors(h):
    """Deterministic basis of the functional's kernel inside span{1, t, t^2}."""
    field = h.spec
    coords = h.coords
    k = next(i for i, c in enumerate(coords) if c)  # normalized: coords[k] == 1
    vecs = []
    for pos in range(3):
        if pos == k:
            continue
        v = [field.zero] * 3
        v[pos] = field.one
        v[k] = -coords[pos]
        vecs.append(tuple(v))
    return vecs


def pullback_span(V):
    """Row-reduced basis of the image of V (x)_R S inside the truncated model.

    The image is spanned by (t^{pa} v) (x) t^j over the R-module generators v
    of V (the two hyperplane-kernel vectors plus t^p, .., t^{2p-1}), shifts
    a < M and right exponents j < p: the left factor carries V, the right
    factor carries the base change.
    """
    spec = V.spec
    p, M, lim = spec.p, spec.M, spec.left_bound
    field = spec.field
    gens = [{e: c for e, c in enumerate(vec) if c}
            for vec in _kernel_vectors(V.hyperplane)]
    gens.extend({e: field.one} for e in range(p, 2 * p))
    spanning = []
    for gen in gens:
        for a in range(M):
            shift = p * a
            for j in range(p):
                terms = {(e + shift, j): c for e, c in gen.items() if e + shift < lim}
                if terms:
                    spanning.append(TensorElement(spec, terms))
    return SubspaceBasis.from_spanning(spec, spanning)


def membership(e, W):
    """Exact membership of an element in a row-reduced subspace."""
    return W.contains(e)


def tau_square_span(spec):
    """Basis of the line generated by tau^2 under the right-factor module
    action, within truncation."""
    rows = []
    e = tau_power(spec, 2)
    for _ in range(spec.dimension):
        if e.is_zero():
            break
        rows.append(e)
        e = times_t_right(e)
    return SubspaceBasis.from_spanning(spec, rows)


def _colength(spec, h):
    span = pullback_span(SubmoduleV(spec, h))
    tau_line = tau_square_span(spec)
    joint = _rref(spec.field, span._mat + tau_line._mat)
    return len(joint) - span.dim


def intersection_colength(V, check_stability=False):
    """Colength of the intersection of the base-changed submodule with the
    tau^2-line: dim E - dim(E ∩ W), computed as dim(E + W) - dim W.

    Always lands in {1, 2, 3}; anything else is an internal invariant break
    and raises hard.  With ``check_stability`` the value is recomputed at
    truncation level M + 1 and any disagreement also raises, certifying the
    answer does not depend on the truncation.
    """
    c = _colength(V.spec, V.hyperplane)
    if not 1 <= c <= 3:
        raise RuntimeError(f"colength {c} outside 1..3: local-model invariant broken")
    if check_stability:
        deeper = ModelSpec(V.spec.field, V.spec.p, V.spec.M + 1)
        c2 = _colength(deeper, V.hyperplane)
        if c2 != c:
            raise RuntimeError(
                f"colength unstable under truncation: {c} at M={V.spec.M}, "
                f"{c2} at M={V.spec.M + 1}")
    return c


def classify_stratum(V):
    """Stratum label of a plane point: both t and t^2 in V gives Psi4, only
    t^2 gives Psi3, t^2 missing gives Psi2.  Matches intersection_colength
    through 1 -> Psi4, 2 -> Psi3, 3 -> Psi2."""
    t2 = contains_monomial(V, 2)
    if t2 and contains_monomial(V, 1):
        return PSI4
    if t2:
        return PSI3
    return PSI2


def claim_results(V):
    """Check the four membership facts driving the classification, for one V.

    a: tau^2 never lies in the base-changed submodule W.
    b: tau^2 t lies in W iff both t and t^2 lie in V.
    c: tau^2 t^2 lies in W iff t^2 lies in V.
    d: tau^2 t^3 always lies in W.

    Returns {"a": .., "b": .., "c": .., "d": ..} with True meaning the fact
    holds for this V.
    """
    W = pullback_span(V)
    e = tau_power(V.spec, 2)
    mem = []
    for _ in range(4):
        mem.append(W.contains(e))
        e = times_t_right(e)
    t1 = contains_monomial(V, 1)
    t2 = contains_monomial(V, 2)
    return {
        "a": not mem[0],
        "b": mem[1] == (t1 and t2),
        "c": mem[2] == t2,
        "d": mem[3],
    }


def stratum_census(spec):
    """Classify every point of the projective plane over the model's field.

    Returns {label: count}; the counts are q^2, q and 1 for Psi2, Psi3 and
    Psi4, partitioning all q^2 + q + 1 points.
    """
    if spec.p != 3:
        raise ValueError("the census is defined for characteristic 3")
    counts = {PSI2: 0, PSI3: 0, PSI4: 0}
    for pt in projective_plane(spec.field):
        counts[classify_stratum(SubmoduleV(spec, pt))] += 1
    return counts
