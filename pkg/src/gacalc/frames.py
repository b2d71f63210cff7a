"""Frames of vectors, reciprocal frames, and coordinates in a blade basis.

A frame is an ordered, linearly independent list of vectors a_1..a_k whose
wedge (the frame volume) is invertible. The reciprocal frame a^1..a^k
satisfies a^i . a_j = delta_ij and is built eagerly at construction:

    a^i = (-1)^(i-1) (a_1 ^ ... ^ a_(i-1) ^ a_(i+1) ^ ... ^ a_k) V^-1

with V the frame volume. Subsets of the frame wedge into a blade basis for
the subalgebra the frame spans; components/expand convert multivectors to
and from coordinates in that basis.
"""

from __future__ import annotations

from itertools import combinations

from .algebra import GradeError, Multivector, NotInvertible


def _wedge_all(algebra, vectors):
    acc = algebra.scalar(1.0)
    for v in vectors:
        acc = acc ^ v
    return acc


class Frame:
    """An ordered independent vector frame with its reciprocal frame."""

    __slots__ = ("algebra", "vectors", "reciprocal", "volume", "_volume_inverse")

    def __init__(self, vectors):
        vectors = tuple(vectors)
        if not vectors:
            raise ValueError("a frame needs at least one vector")
        for v in vectors:
            if not isinstance(v, Multivector):
                raise TypeError("frame entries must be Multivectors")
            if v.grades - {1}:
                raise GradeError(f"frame entries must be vectors, got {v}")
        algebra = vectors[0].algebra
        if len(vectors) > algebra.n:
            raise ValueError(
                f"{len(vectors)} vectors cannot be independent in dimension {algebra.n}")
        self.algebra = algebra
        self.vectors = vectors
        self.volume = _wedge_all(algebra, vectors)
        n2 = self.volume.norm_squared()
        if abs(n2) <= algebra.tolerance:
            raise NotInvertible(
                "frame volume is not invertible (dependent vectors or a null volume)")
        self._volume_inverse = self.volume.inverse()
        recip = []
        for i in range(len(vectors)):
            rest = _wedge_all(algebra, vectors[:i] + vectors[i + 1:])
            sign = -1.0 if i & 1 else 1.0
            recip.append(rest * self._volume_inverse * sign)
        self.reciprocal = tuple(recip)

    def __len__(self):
        return len(self.vectors)

    def __repr__(self):
        return f"Frame({len(self.vectors)} vectors in Cl({self.algebra.p},{self.algebra.q}))"

    def blade(self, subset):
        """Wedge of the frame vectors with the given 1-based positions, in order."""
        return _wedge_all(self.algebra, [self._pick(self.vectors, i) for i in subset])

    def reciprocal_blade(self, subset):
        """Wedge of the reciprocal vectors with the given 1-based positions, in order."""
        return _wedge_all(self.algebra, [self._pick(self.reciprocal, i) for i in subset])

    def _pick(self, seq, i):
        if not 1 <= i <= len(seq):
            raise ValueError(f"frame position {i} outside 1..{len(seq)}")
        return seq[i - 1]

    def blade_table(self):
        """All 2^k frame blades with their reciprocals.

        Returns a list of (subset, blade, reciprocal_blade) with ascending
        subsets ordered by grade then lexicographically. The pairing
        <blade_I * reciprocal_blade_J>_0 = delta_IJ.
        """
        k = len(self.vectors)
        subsets = []
        for r in range(k + 1):
            subsets.extend(combinations(range(1, k + 1), r))
        return [(s, self.blade(s), self.reciprocal_blade(s)) for s in subsets]

    def components(self, A):
        """Coordinates of A in the frame blade basis: subset -> <A * a^I>_0.

        Faithful (expand inverts it) when A lies in the subalgebra the frame
        spans; for a full frame that is every multivector.
        """
        out = {}
        for subset, _, recip in self.blade_table():
            c = A.scalar_product(recip)
            if abs(c) > self.algebra.tolerance:
                out[subset] = c
        return out

    def expand(self, components):
        """Rebuild a multivector from blade-basis coordinates (subset -> coeff)."""
        acc = self.algebra.zero()
        for subset, coeff in components.items():
            acc = acc + self.blade(tuple(subset)) * float(coeff)
        return acc

    def expand_by_vectors(self, A):
        """The sum over i of a^i ^ (a_i .| A) for homogeneous A of grade r.

        Equals r A for A in the frame's span; exposed mainly as a self-test
        of the reciprocal frame. Raises GradeError for mixed-grade input.
        """
        if len(A.grades) > 1:
            raise GradeError(f"expand_by_vectors needs homogeneous input, got {A}")
        acc = self.algebra.zero()
        for a, recip in zip(self.vectors, self.reciprocal):
            acc = acc + (recip ^ a.left_contract(A))
        return acc
