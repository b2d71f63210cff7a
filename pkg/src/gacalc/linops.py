"""Linear maps on vectors extended to the whole algebra as outermorphisms.

A LinearMap is stored as the images of the orthonormal basis vectors. It
acts on blades by wedging images (the unique outermorphism extension) and
linearly on everything else, so it is grade-preserving by construction.
The adjoint, determinant, adjugate inverse, and the factorization of an
isometry into reflections are all computed through the algebra rather
than through matrix decompositions; the one exception is the eigenframe
of a symmetric map, which delegates to numpy's symmetric eigensolver.
"""

from __future__ import annotations

import math

import numpy as np

from .algebra import GAError, GradeError, Multivector, NotInvertible

_ISOMETRY_SLACK = 1e4


class OperatorError(GAError):
    """A linear map does not satisfy what the operation requires."""


class LinearMap:
    """A linear map on vectors, applied to multivectors as an outermorphism."""

    __slots__ = ("algebra", "images", "_blade_images")

    def __init__(self, algebra, images):
        images = tuple(images)
        if len(images) != algebra.n:
            raise ValueError(f"need {algebra.n} basis images, got {len(images)}")
        for img in images:
            if not isinstance(img, Multivector):
                raise TypeError("basis images must be Multivectors")
            if img.algebra != algebra:
                raise ValueError("basis image from a different algebra")
            if img.grades - {1}:
                raise GradeError(f"basis images must be vectors, got {img}")
        self.algebra = algebra
        self.images = images
        self._blade_images = {0: algebra.scalar(1.0)}

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, [algebra.basis_vector(i) for i in range(1, algebra.n + 1)])

    @classmethod
    def diagonal(cls, algebra, scales):
        scales = [float(s) for s in scales]
        if len(scales) != algebra.n:
            raise ValueError(f"need {algebra.n} scales, got {len(scales)}")
        return cls(algebra, [algebra.basis_vector(i) * s
                             for i, s in enumerate(scales, start=1)])

    @classmethod
    def from_matrix(cls, algebra, matrix):
        """Column convention: F(e_j) = sum_i matrix[i][j] e_i."""
        rows = [list(map(float, row)) for row in matrix]
        if len(rows) != algebra.n or any(len(r) != algebra.n for r in rows):
            raise ValueError(f"matrix must be {algebra.n}x{algebra.n}")
        return cls(algebra, [algebra.vector([rows[i][j] for i in range(algebra.n)])
                             for j in range(algebra.n)])

    def matrix(self):
        """The matrix with F(e_j) in column j."""
        n = self.algebra.n
        return [[self.images[j].coefficient((i + 1,)) for j in range(n)]
                for i in range(n)]

    def _blade_image(self, bits):
        cached = self._blade_images.get(bits)
        if cached is not None:
            return cached
        low = bits & -bits
        rest = bits ^ low
        img = self.images[low.bit_length() - 1] ^ self._blade_image(rest)
        self._blade_images[bits] = img
        return img

    def __call__(self, A):
        """Apply the outermorphism to any multivector of the same algebra."""
        if not isinstance(A, Multivector):
            raise TypeError("LinearMap applies to Multivectors")
        if A.algebra != self.algebra:
            raise ValueError("multivector from a different algebra")
        acc = self.algebra.zero()
        for indices, coeff in A.terms.items():
            bits = 0
            for i in indices:
                bits |= 1 << (i - 1)
            acc = acc + self._blade_image(bits) * coeff
        return acc

    def compose(self, other):
        """self after other: (self.compose(other))(x) = self(other(x))."""
        if other.algebra != self.algebra:
            raise ValueError("cannot compose maps over different algebras")
        return LinearMap(self.algebra, [self(img) for img in other.images])

    __matmul__ = compose

    def __add__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return LinearMap(self.algebra,
                         [a + b for a, b in zip(self.images, other.images)])

    def __sub__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return LinearMap(self.algebra,
                         [a - b for a, b in zip(self.images, other.images)])

    def scale(self, s):
        return LinearMap(self.algebra, [img * float(s) for img in self.images])

    # -- adjoint and splits ----------------------------------------------------

    def adjoint(self):
        """The metric adjoint Fbar with F(a) . b = a . Fbar(b) for all vectors."""
        alg = self.algebra
        metric = alg.metric
        images = []
        for j in range(alg.n):
            comps = [metric[k] * metric[j] * self.images[k].coefficient((j + 1,))
                     for k in range(alg.n)]
            images.append(alg.vector(comps))
        return LinearMap(alg, images)

    def symmetric_part(self):
        return (self + self.adjoint()).scale(0.5)

    def skew_part(self):
        return (self - self.adjoint()).scale(0.5)

    def skew_bivector(self):
        """The bivector A with F(x) = x .| A, for a skew map F.

        A = (1/2) sum_i e^i ^ F(e_i) over the reciprocal basis e^i.
        Raises OperatorError when F is not skew to tolerance.
        """
        alg = self.algebra
        if any(img for img in self.symmetric_part().images):
            raise OperatorError("map is not skew (symmetric part is nonzero)")
        acc = alg.zero()
        for i in range(alg.n):
            recip = alg.basis_vector(i + 1) * alg.metric[i]
            acc = acc + (recip ^ self.images[i])
        return acc * 0.5

    # -- determinant and inverse -------------------------------------------------

    def determinant(self):
        """det F, read off from F(I) = det(F) I."""
        alg = self.algebra
        if alg.n == 0:
            return 1.0
        return self(alg.I).coefficient(tuple(range(1, alg.n + 1)))

    def inverse(self):
        """The inverse map, via the adjugate: F^-1(x) = Fbar(x I) I^-1 / det F.

        Raises OperatorError when det F is within tolerance of zero.
        """
        alg = self.algebra
        det = self.determinant()
        if abs(det) <= alg.tolerance:
            raise OperatorError(f"map is singular (det = {det!r})")
        if alg.n == 0:
            return LinearMap(alg, [])
        adj = self.adjoint()
        images = [adj(alg.basis_vector(i).inverse_dual()).dual() / det
                  for i in range(1, alg.n + 1)]
        return LinearMap(alg, images)

    # -- eigenstructure -----------------------------------------------------------

    def eigenblade_check(self, A):
        """Eigenvalue of the nonzero blade A when F(A) = lambda A, else None.

        lambda may legitimately be 0.0 (singular maps), so compare the
        result against None, not for truthiness. The volume element is an
        eigenblade of every map, with eigenvalue det(F).
        """
        if not A:
            raise ValueError("the zero multivector is not an eigenblade candidate")
        B = self(A)
        if not B:
            return 0.0
        indices = max(A.terms, key=lambda t: abs(A.coefficient(t)))
        lam = B.coefficient(indices) / A.coefficient(indices)
        tol = self.algebra.tolerance * max(1.0, abs(lam))
        if B.isclose(A * lam, tol=tol):
            return lam
        return None

    def symmetric_eigenframe(self):
        """Eigenvalues and an orthonormal eigenvector frame of a symmetric map.

        Euclidean signature only (q = 0); delegates to numpy.linalg.eigh.
        Returns (eigenvalues, eigenvectors) with F(v_k) = lambda_k v_k,
        eigenvalues ascending. Raises OperatorError for non-Euclidean
        algebras or non-symmetric maps.
        """
        alg = self.algebra
        if alg.q != 0:
            raise OperatorError("symmetric eigenframes are computed for Euclidean "
                                "signature only")
        if any(img for img in self.skew_part().images):
            raise OperatorError("map is not symmetric")
        M = np.array(self.matrix(), dtype=float)
        values, vecs = np.linalg.eigh(M)
        eigenvectors = [alg.vector(vecs[:, k]) for k in range(alg.n)]
        return [float(v) for v in values], eigenvectors


def _reflect_vector(c, x):
    """Reflection of the vector x along the non-null vector c: -c x c^-1."""
    return -(c * x * c.inverse())


def factor_isometry(F):
    """Factor an isometry into unit reflection vectors.

    Returns (V, factors) where factors = [v_1, ..., v_m] are unit (v^2 = +-1)
    vectors, V = v_1 v_2 ... v_m (identity gives V = 1, factors = []), and
    F(x) = V ghat^m(x) V^-1. At most 2n factors are needed; in Euclidean
    signature at most n. Raises OperatorError when F is not an isometry.
    """
    alg = F.algebra
    tol = alg.tolerance * _ISOMETRY_SLACK
    for i in range(alg.n):
        for j in range(i, alg.n):
            want = alg.metric[i] if i == j else 0.0
            got = F.images[i].scalar_product(F.images[j])
            if abs(got - want) > tol:
                raise OperatorError(
                    f"map is not an isometry: F(e{i+1}) . F(e{j+1}) = {got!r}")

    current = list(F.images)
    factors = []

    def pull_back(c):
        """Record a reflection along c and compose it onto the working map."""
        unit = c / math.sqrt(abs(c.norm_squared()))
        factors.append(unit)
        for idx in range(alg.n):
            current[idx] = _reflect_vector(unit, current[idx])

    for i in range(alg.n):
        target = alg.basis_vector(i + 1)
        g = current[i]
        if g.isclose(target, tol=tol):
            continue
        c = g - target
        if abs(c.norm_squared()) > tol:
            pull_back(c)
        else:
            c = g + target
            if abs(c.norm_squared()) <= tol:
                raise OperatorError(
                    "cannot factor: both candidate mirrors are null")
            pull_back(c)
            pull_back(target)

    V = alg.scalar(1.0)
    for v in factors:
        V = V * v
    return V, factors
