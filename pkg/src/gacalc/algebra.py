"""Clifford algebras of signature (p, q) and sparse multivector arithmetic.

An Algebra fixes an orthonormal basis e1..en where the first p vectors square
to +1 and the remaining q square to -1 (diagonal nondegenerate metric only).
Basis blades are encoded as bitmasks: bit i-1 set means e_i is a factor, with
factors kept in ascending index order and reordering signs folded into
coefficients. A Multivector is a sparse map from basis blades to real
coefficients; coefficients at or below the algebra tolerance are dropped after
every operation, so "is zero" means "has no terms".

Multivectors and algebras are immutable values; every operation is a pure
function and results may be shared freely across threads.
"""

from __future__ import annotations

import math
from numbers import Real

MAX_DIMENSION = 12
DEFAULT_TOLERANCE = 1e-10

_EXP_SERIES_TERMS = 24


class GAError(Exception):
    """Base class for geometric-algebra errors."""


class AlgebraMismatch(GAError):
    """Operands belong to different algebras."""


class NotInvertible(GAError):
    """A null versor, null blade, or singular object cannot be inverted."""


class GradeError(GAError):
    """The operand does not have the grade structure the operation needs."""


def _sorted_with_parity(indices):
    """Sort a blade index sequence, returning (tuple, +1.0 or -1.0).

    Raises ValueError on repeated indices.
    """
    items = list(indices)
    sign = 1.0
    for i in range(1, len(items)):
        j = i
        while j > 0 and items[j - 1] > items[j]:
            items[j - 1], items[j] = items[j], items[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(items, items[1:]):
        if a == b:
            raise ValueError(f"repeated basis index {a} in blade")
    return tuple(items), sign


class Algebra:
    """The signature (p, q): p basis vectors square to +1, q square to -1.

    Attributes:
        p: count of +1-squaring basis vectors.
        q: count of -1-squaring basis vectors.
        n: total dimension p + q.
        tolerance: nonnegative zero-test threshold for coefficients.
        metric: tuple of +-1.0 metric entries, length n.
    """

    __slots__ = ("p", "q", "n", "tolerance", "metric", "_minus_mask",
                 "_mul_cache", "_volume", "_volume_inverse")

    def __init__(self, p, q, tolerance=DEFAULT_TOLERANCE, max_dimension=MAX_DIMENSION):
        if p < 0 or q < 0:
            raise ValueError("signature counts must be nonnegative")
        if p + q > max_dimension:
            raise ValueError(
                f"dimension {p + q} exceeds the configured maximum {max_dimension}")
        if tolerance < 0:
            raise ValueError("tolerance must be nonnegative")
        self.p = int(p)
        self.q = int(q)
        self.n = self.p + self.q
        self.tolerance = float(tolerance)
        self.metric = (1.0,) * self.p + (-1.0,) * self.q
        self._minus_mask = ((1 << self.q) - 1) << self.p
        self._mul_cache = {}
        self._volume = None
        self._volume_inverse = None

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return (self.p, self.q, self.tolerance) == (other.p, other.q, other.tolerance)

    def __hash__(self):
        return hash((self.p, self.q, self.tolerance))

    def __repr__(self):
        return f"Algebra({self.p}, {self.q})"

    # -- construction helpers ------------------------------------------------

    def zero(self):
        return Multivector._make(self, {})

    def scalar(self, value):
        return Multivector._make(self, {0: float(value)})

    def basis_vector(self, i):
        """The basis vector e_i, 1-based."""
        if not 1 <= i <= self.n:
            raise ValueError(f"basis index {i} outside 1..{self.n}")
        return Multivector._make(self, {1 << (i - 1): 1.0})

    def vector(self, components):
        """A grade-1 multivector from n components."""
        comps = [float(c) for c in components]
        if len(comps) != self.n:
            raise ValueError(f"expected {self.n} components, got {len(comps)}")
        return Multivector._make(
            self, {1 << i: c for i, c in enumerate(comps)})

    def blade(self, indices, coeff=1.0):
        """The basis blade e_i1 ^ ... ^ e_ir times coeff, indices in any order."""
        return self.multivector({tuple(indices): coeff})

    def multivector(self, terms):
        """Build a multivector from a mapping of index tuples to coefficients."""
        return Multivector(self, terms)

    @property
    def I(self):
        """The volume element e1 e2 ... en."""
        if self.n == 0:
            raise GAError("a scalar-only algebra has no volume element")
        if self._volume is None:
            self._volume = Multivector._make(self, {(1 << self.n) - 1: 1.0})
        return self._volume

    @property
    def I_inverse(self):
        if self._volume_inverse is None:
            self._volume_inverse = self.I.inverse()
        return self._volume_inverse

    def basis_blades(self):
        """All 2^n basis blades as index tuples, ordered by grade then lexicographically."""
        blades = [_bits_to_indices(bits) for bits in range(1 << self.n)]
        blades.sort(key=lambda t: (len(t), t))
        return blades

    # -- blade-level product -------------------------------------------------

    def blade_product(self, x, y):
        """Product of two basis blades given as index tuples.

        Returns (result index tuple, sign), where sign is the reordering
        parity times the metric factors of the shared indices.
        """
        xt, xs = _sorted_with_parity(x)
        yt, ys = _sorted_with_parity(y)
        bits, sign = self._blade_mul(_indices_to_bits(self, xt), _indices_to_bits(self, yt))
        return _bits_to_indices(bits), sign * xs * ys

    def _blade_mul(self, a, b):
        key = (a, b)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        count = 0
        x = a >> 1
        while x:
            count += (x & b).bit_count()
            x >>= 1
        count += (a & b & self._minus_mask).bit_count()
        result = (a ^ b, -1.0 if count & 1 else 1.0)
        self._mul_cache[key] = result
        return result

    def _blade_square_sign(self, a):
        """Sign of the geometric square of basis blade a (always +-1)."""
        return self._blade_mul(a, a)[1]


def _indices_to_bits(algebra, indices):
    bits = 0
    for i in indices:
        if not 1 <= i <= algebra.n:
            raise ValueError(f"basis index {i} outside 1..{algebra.n}")
        bits |= 1 << (i - 1)
    return bits


def _bits_to_indices(bits):
    out = []
    i = 1
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)


def _format_coeff(c):
    if c.is_integer() and abs(c) < 1e16:
        return str(int(c))
    return repr(c)


class Multivector:
    """A sparse multivector: mapping from basis blades to real coefficients.

    Immutable. Build via the Algebra helpers or Multivector(algebra, terms)
    where terms maps index tuples (any order, no repeats) to coefficients.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra, terms):
        raw = {}
        for key, value in terms.items():
            canon, sign = _sorted_with_parity(key)
            bits = _indices_to_bits(algebra, canon)
            raw[bits] = raw.get(bits, 0.0) + sign * float(value)
        self.algebra = algebra
        self._terms = {k: v for k, v in raw.items() if abs(v) > algebra.tolerance}

    @classmethod
    def _make(cls, algebra, raw):
        """Internal constructor from a bitmask-keyed dict; prunes to tolerance."""
        mv = object.__new__(cls)
        mv.algebra = algebra
        tol = algebra.tolerance
        mv._terms = {k: v for k, v in raw.items() if abs(v) > tol}
        return mv

    # -- inspection ----------------------------------------------------------

    @property
    def terms(self):
        """Copy of the term map keyed by index tuples."""
        return {_bits_to_indices(k): v for k, v in self._terms.items()}

    @property
    def grades(self):
        """The set of grades present (empty for zero)."""
        return frozenset(k.bit_count() for k in self._terms)

    @property
    def scalar_part(self):
        return self._terms.get(0, 0.0)

    def coefficient(self, indices):
        """Coefficient of the given basis blade; indices may be in any order."""
        canon, sign = _sorted_with_parity(indices)
        return sign * self._terms.get(_indices_to_bits(self.algebra, canon), 0.0)

    def __getitem__(self, indices):
        return self.coefficient(indices)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.algebra == other.algebra and self._terms == other._terms

    def __hash__(self):
        return hash((self.algebra, frozenset(self._terms.items())))

    def isclose(self, other, tol=None):
        """True when every coefficient of self - other is within tol."""
        other = self._coerce(other)
        if tol is None:
            tol = self.algebra.tolerance
        keys = self._terms.keys() | other._terms.keys()
        return all(abs(self._terms.get(k, 0.0) - other._terms.get(k, 0.0)) <= tol
                   for k in keys)

    def max_coeff_diff(self, other):
        other = self._coerce(other)
        keys = self._terms.keys() | other._terms.keys()
        return max((abs(self._terms.get(k, 0.0) - other._terms.get(k, 0.0))
                    for k in keys), default=0.0)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for bits in sorted(self._terms, key=lambda b: (b.bit_count(), _bits_to_indices(b))):
            c = self._terms[bits]
            if bits == 0:
                body = _format_coeff(abs(c))
            else:
                name = "".join(str(i) for i in _bits_to_indices(bits))
                body = f"{_format_coeff(abs(c))}*e{name}"
            if not parts:
                parts.append(body if c >= 0 else "-" + body)
            else:
                parts.append(("+ " if c >= 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"Multivector(Cl({self.algebra.p},{self.algebra.q}): {self})"

    # -- linear structure ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Multivector):
            if other.algebra != self.algebra:
                raise AlgebraMismatch(
                    f"operands from different algebras: {self.algebra!r} vs {other.algebra!r}")
            return other
        if isinstance(other, Real):
            return self.algebra.scalar(other)
        raise TypeError(f"cannot combine Multivector with {type(other).__name__}")

    def __add__(self, other):
        other = self._coerce(other)
        raw = dict(self._terms)
        for k, v in other._terms.items():
            raw[k] = raw.get(k, 0.0) + v
        return Multivector._make(self.algebra, raw)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        raw = dict(self._terms)
        for k, v in other._terms.items():
            raw[k] = raw.get(k, 0.0) - v
        return Multivector._make(self.algebra, raw)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return Multivector._make(self.algebra, {k: -v for k, v in self._terms.items()})

    def __truediv__(self, scalar):
        if not isinstance(scalar, Real):
            raise TypeError("can only divide a multivector by a real scalar")
        return Multivector._make(
            self.algebra, {k: v / scalar for k, v in self._terms.items()})

    # -- products ------------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, Real):
            return Multivector._make(
                self.algebra, {k: v * other for k, v in self._terms.items()})
        other = self._coerce(other)
        raw = {}
        mul = self.algebra._blade_mul
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                bits, sign = mul(ka, kb)
                raw[bits] = raw.get(bits, 0.0) + sign * va * vb
        return Multivector._make(self.algebra, raw)

    def __rmul__(self, other):
        if isinstance(other, Real):
            return self * other
        return NotImplemented

    def __xor__(self, other):
        """Outer product: the grade r+s parts of the blade products."""
        if isinstance(other, Real):
            return self * other
        other = self._coerce(other)
        raw = {}
        mul = self.algebra._blade_mul
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                if ka & kb:
                    continue
                bits, sign = mul(ka, kb)
                raw[bits] = raw.get(bits, 0.0) + sign * va * vb
        return Multivector._make(self.algebra, raw)

    def __rxor__(self, other):
        if isinstance(other, Real):
            return self * other
        return NotImplemented

    def left_contract(self, other):
        """A .| B: the grade s-r parts of the blade products (zero when r > s)."""
        other = self._coerce(other)
        raw = {}
        mul = self.algebra._blade_mul
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                if ka & ~kb:
                    continue
                bits, sign = mul(ka, kb)
                raw[bits] = raw.get(bits, 0.0) + sign * va * vb
        return Multivector._make(self.algebra, raw)

    def right_contract(self, other):
        """A |. B: the grade r-s parts of the blade products (zero when s > r)."""
        other = self._coerce(other)
        raw = {}
        mul = self.algebra._blade_mul
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                if kb & ~ka:
                    continue
                bits, sign = mul(ka, kb)
                raw[bits] = raw.get(bits, 0.0) + sign * va * vb
        return Multivector._make(self.algebra, raw)

    def scalar_product(self, other):
        """<reverse(A) B>_0, the metric pairing. Symmetric; returns a float."""
        other = self._coerce(other)
        total = 0.0
        for k, v in self._terms.items():
            w = other._terms.get(k)
            if w is None:
                continue
            r = k.bit_count()
            rev = -1.0 if (r * (r - 1) // 2) & 1 else 1.0
            total += rev * self.algebra._blade_square_sign(k) * v * w
        return total

    def commutator(self, other):
        """[A, B] = (AB - BA)/2."""
        other = self._coerce(other)
        return (self * other - other * self) / 2.0

    # -- grade operations ----------------------------------------------------

    def grade(self, r):
        """The grade-r part; zero when r is negative or above the dimension."""
        return Multivector._make(
            self.algebra,
            {k: v for k, v in self._terms.items() if k.bit_count() == r})

    def even_part(self):
        return Multivector._make(
            self.algebra,
            {k: v for k, v in self._terms.items() if not k.bit_count() & 1})

    def odd_part(self):
        return Multivector._make(
            self.algebra,
            {k: v for k, v in self._terms.items() if k.bit_count() & 1})

    def _involute(self, sign_of_grade):
        return Multivector._make(
            self.algebra,
            {k: sign_of_grade(k.bit_count()) * v for k, v in self._terms.items()})

    def grade_involution(self):
        """Negate odd grades: (-1)^r per grade."""
        return self._involute(lambda r: -1.0 if r & 1 else 1.0)

    def reverse(self):
        """Reverse the factors of each blade: (-1)^(r(r-1)/2) per grade."""
        return self._involute(lambda r: -1.0 if (r * (r - 1) // 2) & 1 else 1.0)

    __invert__ = reverse

    def clifford_conjugate(self):
        """Grade involution composed with reversion: (-1)^(r(r+1)/2) per grade."""
        return self._involute(lambda r: -1.0 if (r * (r + 1) // 2) & 1 else 1.0)

    # -- norms, inverses, duality ---------------------------------------------

    def norm_squared(self):
        """|A|^2 = <reverse(A) A>_0; may be negative in mixed signature."""
        return self.scalar_product(self)

    def inverse(self):
        """Versor inverse reverse(A)/|A|^2. The caller asserts A is a versor.

        Raises NotInvertible when |A|^2 is within tolerance of zero.
        """
        n2 = self.norm_squared()
        if abs(n2) <= self.algebra.tolerance:
            raise NotInvertible(f"null versor has no inverse: {self}")
        return self.reverse() / n2

    def dual(self):
        """A I^-1: maps a blade to its orthogonal complement."""
        return self * self.algebra.I_inverse

    def inverse_dual(self):
        """A I: undoes dual()."""
        return self * self.algebra.I

    # -- structure predicates --------------------------------------------------

    def is_homogeneous(self):
        return len(self.grades) <= 1

    def is_blade(self):
        """Practical blade test: homogeneous, A^A = 0, and A reverse(A) scalar.

        In dimensions <= 3 every homogeneous multivector passes, as it should.
        """
        if not self._terms:
            return True
        if len(self.grades) != 1:
            return False
        if self ^ self:
            return False
        return not (self * self.reverse()).grade_nonscalar()

    def grade_nonscalar(self):
        return Multivector._make(
            self.algebra, {k: v for k, v in self._terms.items() if k})

    def is_versor(self):
        """Practical versor test: single grade parity and A reverse(A) scalar."""
        if not self._terms:
            return False
        parities = {k.bit_count() & 1 for k in self._terms}
        if len(parities) != 1:
            return False
        return not (self * self.reverse()).grade_nonscalar()

    # -- exponential ------------------------------------------------------------

    def exp(self):
        """Exponential of a bivector.

        Blades (B^B = 0) get the closed forms driven by the sign of B^2;
        non-blade bivectors fall back to a scaled-and-squared power series.
        Raises GradeError for anything that is not a pure bivector.
        """
        if self._terms and self.grades != frozenset({2}):
            raise GradeError(f"exp is defined here for bivectors only, got grades "
                             f"{sorted(self.grades)}")
        one = self.algebra.scalar(1.0)
        if not (self ^ self):
            beta = (self * self).scalar_part
            tol = self.algebra.tolerance
            if beta > tol:
                w = math.sqrt(beta)
                return one * math.cosh(w) + self * (math.sinh(w) / w)
            if beta < -tol:
                w = math.sqrt(-beta)
                return one * math.cos(w) + self * (math.sin(w) / w)
            return one + self
        return self._exp_series()

    def _exp_series(self):
        biggest = max(abs(v) for v in self._terms.values())
        halvings = 0
        while biggest > 0.5:
            biggest /= 2.0
            halvings += 1
        base = self / float(1 << halvings)
        acc = self.algebra.scalar(1.0)
        term = self.algebra.scalar(1.0)
        for i in range(1, _EXP_SERIES_TERMS + 1):
            term = term * base / float(i)
            acc = acc + term
        for _ in range(halvings):
            acc = acc * acc
        return acc


def exp_bivector(B, theta):
    """The rotor exp(-B theta / 2) for a bivector B.

    2-blades use closed forms: cosine/sine when B^2 < 0, hyperbolic when
    B^2 > 0, and exactly 1 - (theta/2) B when B^2 = 0. Non-blade bivectors
    use the power series. Raises GradeError for non-bivector input.
    """
    if not isinstance(B, Multivector):
        raise TypeError("exp_bivector needs a Multivector")
    if B and B.grades != frozenset({2}):
        raise GradeError(f"exp_bivector needs a bivector, got grades {sorted(B.grades)}")
    return (B * (-theta / 2.0)).exp()
