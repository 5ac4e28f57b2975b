"""Exact arithmetic in small finite fields GF(p^m) and projective planes over them.

Coefficient vectors are little-endian: ``(c0, c1)`` encodes ``c0 + c1*x``.
Every field precomputes its full operation tables at construction; the fields
used downstream are tiny (q <= 81 in practice), so element arithmetic is a
table lookup and all linear algebra built on top stays exact.
"""

from __future__ import annotations

from itertools import product

__all__ = [
    "FieldElement",
    "FieldSpec",
    "ProjectivePoint",
    "field_inverse",
    "field_make",
    "projective_plane",
]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % p
    return out


def _poly_rem(a, mod, p):
    """Remainder of ``a`` modulo a monic polynomial, coefficients mod p."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i] % p
        if c:
            for k in range(dm + 1):
                a[i - dm + k] = (a[i - dm + k] - c * mod[k]) % p
    del a[dm:]
    while len(a) < dm:
        a.append(0)
    return a


def _is_irreducible(coeffs, p):
    """Exhaustive trial division by every monic polynomial of degree 1..deg/2."""
    deg = len(coeffs) - 1
    if deg == 1:
        return True
    for div_deg in range(1, deg // 2 + 1):
        for tail in product(range(p), repeat=div_deg):
            divisor = tail + (1,)
            if not any(_poly_rem(coeffs, divisor, p)):
                return False
    return True


def _default_modulus(p, m):
    """Lexicographically smallest monic irreducible of degree m over GF(p)."""
    for tail in product(range(p), repeat=m):
        cand = tail + (1,)
        if _is_irreducible(cand, p):
            return cand
    raise RuntimeError(f"no irreducible degree-{m} polynomial over GF({p})")


def _poly_str(coeffs):
    terms = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        if k == 0:
            terms.append(str(c))
        else:
            x = "x" if k == 1 else f"x^{k}"
            terms.append(x if c == 1 else f"{c}{x}")
    return " + ".join(terms) if terms else "0"


class FieldSpec:
    """A finite field GF(p^m) with interned elements and full lookup tables.

    Two specs compare equal iff they have the same characteristic, degree and
    modulus; arithmetic between elements of unequal specs is a hard error,
    never a coercion.
    """

    __slots__ = ("p", "m", "q", "modulus", "_elements", "_coeff_index",
                 "_add", "_mul", "_neg", "_inv")

    def __init__(self, p, m=1, modulus=None):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"characteristic must be a prime integer, got {p!r}")
        if not isinstance(m, int) or m < 1:
            raise ValueError(f"extension degree must be a positive integer, got {m!r}")
        self.p = p
        self.m = m
        self.q = p ** m
        if m == 1:
            self.modulus = None  # prime field: modulus is irrelevant
        elif modulus is None:
            self.modulus = _default_modulus(p, m)
        else:
            mod = [int(c) % p for c in modulus]
            if len(mod) != m + 1 or mod[-1] == 0:
                raise ValueError(f"modulus must have degree exactly {m}")
            if mod[-1] != 1:
                lead_inv = pow(mod[-1], -1, p)
                mod = [(c * lead_inv) % p for c in mod]
            mod = tuple(mod)
            if not _is_irreducible(mod, p):
                raise ValueError(f"modulus {list(mod)} is reducible over GF({p})")
            self.modulus = mod
        self._build_tables()

    def _build_tables(self):
        p, m, q = self.p, self.m, self.q
        coeffs_of = []
        for idx in range(q):
            v, digits = idx, []
            for _ in range(m):
                digits.append(v % p)
                v //= p
            coeffs_of.append(tuple(digits))
        self._elements = tuple(FieldElement(self, c, i) for i, c in enumerate(coeffs_of))
        self._coeff_index = {c: i for i, c in enumerate(coeffs_of)}

        def index_of(poly):
            idx = 0
            for k in reversed(range(len(poly))):
                idx = idx * p + poly[k]
            return idx

        add = [[0] * q for _ in range(q)]
        mul = [[0] * q for _ in range(q)]
        neg = [0] * q
        for i, a in enumerate(coeffs_of):
            neg[i] = index_of([(-c) % p for c in a])
            for j in range(i, q):
                b = coeffs_of[j]
                s = index_of([(x + y) % p for x, y in zip(a, b)])
                add[i][j] = add[j][i] = s
                prod = _poly_mul(a, b, p)
                if m > 1:
                    prod = _poly_rem(prod, self.modulus, p)
                t = index_of(prod[:m])
                mul[i][j] = mul[j][i] = t
        inv = [None] * q
        for i in range(1, q):
            if inv[i] is None:
                row = mul[i]
                for j in range(1, q):
                    if row[j] == 1:
                        inv[i] = j
                        inv[j] = i
                        break
        self._add, self._mul, self._neg, self._inv = add, mul, neg, inv

    def element(self, value):
        """Intern an element from an int (constant) or a coefficient sequence."""
        if isinstance(value, FieldElement):
            if value.spec != self:
                raise ValueError("element belongs to a different field")
            return self._elements[value.index]
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.m - 1)
        else:
            vals = [int(c) % self.p for c in value]
            if len(vals) > self.m:
                raise ValueError(f"coefficient vector longer than extension degree {self.m}")
            coeffs = tuple(vals) + (0,) * (self.m - len(vals))
        return self._elements[self._coeff_index[coeffs]]

    @property
    def zero(self):
        return self._elements[0]

    @property
    def one(self):
        return self._elements[1]

    @property
    def elements(self):
        return self._elements

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self):
        return hash((self.p, self.m, self.modulus))

    def __repr__(self):
        if self.m == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.m}; {_poly_str(self.modulus)})"


class FieldElement:
    """Immutable element of a :class:`FieldSpec`; all operations are table lookups."""

    __slots__ = ("spec", "coeffs", "index")

    def __init__(self, spec, coeffs, index):
        self.spec = spec
        self.coeffs = coeffs
        self.index = index

    def is_zero(self):
        return self.index == 0

    def __bool__(self):
        return self.index != 0

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise ValueError(
                    f"mixed-field arithmetic between {self.spec!r} and {other.spec!r}")
            return other
        if isinstance(other, int):
            return self.spec.element(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.spec._elements[self.spec._add[self.index][o.index]]

    __radd__ = __add__

    def __neg__(self):
        return self.spec._elements[self.spec._neg[self.index]]

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.spec._elements[self.spec._mul[self.index][o.index]]

    __rmul__ = __mul__

    def inverse(self):
        if self.index == 0:
            raise ZeroDivisionError(f"inverse of zero in {self.spec!r}")
        return self.spec._elements[self.spec._inv[self.index]]

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.spec.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.spec == other.spec and self.index == other.index

    def __hash__(self):
        return hash((self.spec, self.index))

    def to_coeffs(self):
        """Serialization form: little-endian list of residues."""
        return list(self.coeffs)

    def __repr__(self):
        return f"{_poly_str(self.coeffs)} in {self.spec!r}"


class ProjectivePoint:
    """A point of P^2, normalized so the first nonzero coordinate is 1.

    Normalization is canonical: two equal points carry identical coordinate
    tuples, so points hash and compare by value.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(coords)
        if len(coords) != 3:
            raise ValueError("projective points here live in P^2: need 3 coordinates")
        spec = coords[0].spec if isinstance(coords[0], FieldElement) else None
        for c in coords:
            if not isinstance(c, FieldElement) or c.spec != spec:
                raise ValueError("coordinates must all belong to one field")
        pivot = next((c for c in coords if c), None)
        if pivot is None:
            raise ValueError("projective point needs a nonzero coordinate")
        inv = pivot.inverse()
        self.coords = tuple(c * inv for c in coords)

    @classmethod
    def of(cls, spec, values):
        """Build a point from ints or coefficient lists."""
        return cls(tuple(spec.element(v) for v in values))

    @property
    def spec(self):
        return self.coords[0].spec

    def __eq__(self, other):
        if not isinstance(other, ProjectivePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def to_lists(self):
        """Serialization form: three coefficient lists."""
        return [c.to_coeffs() for c in self.coords]

    def __repr__(self):
        inner = " : ".join(_poly_str(c.coeffs) for c in self.coords)
        return f"[{inner}]"


def field_make(p, m=1, modulus=None):
    """Construct GF(p^m); picks the lexicographically smallest irreducible
    modulus when none is given, so repeated runs agree."""
    return FieldSpec(p, m, modulus)


def field_inverse(a):
    """Multiplicative inverse; raises ZeroDivisionError on zero."""
    return a.inverse()


def projective_plane(spec):
    """All q^2 + q + 1 points of P^2 over the field, in a fixed enumeration
    order: [1 : y : z] by element index, then [0 : 1 : z], then [0 : 0 : 1]."""
    one, zero = spec.one, spec.zero
    points = []
    for y in spec.elements:
        for z in spec.elements:
            points.append(ProjectivePoint((one, y, z)))
    for z in spec.elements:
        points.append(ProjectivePoint((zero, one, z)))
    points.append(ProjectivePoint((zero, zero, one)))
    return points
