"""Orthogonal transformations built from blades and versors.

Projection and rejection split a multivector against an invertible blade;
reflection and rotation are versor sandwiches. The versor convention
throughout: a versor V of parity m acts on X as

    V(X) = V X V^-1            (m even)
    V(X) = V ghat(X) V^-1      (m odd, ghat = grade involution)

which makes every versor action grade-preserving and outermorphic.
"""

from __future__ import annotations

from .algebra import GradeError, Multivector, NotInvertible


def _require_invertible_blade(B, what):
    if not isinstance(B, Multivector):
        raise TypeError(f"{what} must be a Multivector")
    if not B.is_blade():
        raise GradeError(f"{what} must be a blade, got {B}")
    if abs(B.norm_squared()) <= B.algebra.tolerance:
        raise NotInvertible(f"{what} is null and cannot be inverted: {B}")


def project(A, B):
    """Projection of A onto the subspace of the invertible blade B: (A .| B) B^-1."""
    _require_invertible_blade(B, "projection target")
    return A.left_contract(B) * B.inverse()


def reject(A, B):
    """Rejection of A from the invertible blade B: (A ^ B) B^-1.

    For vectors this is A - project(A, B), the component orthogonal to B.
    """
    _require_invertible_blade(B, "rejection target")
    return (A ^ B) * B.inverse()


def reflect(A, B):
    """Reflection of A in the invertible r-blade B: B ghat^r(A) B^-1.

    For a vector B this is the reflection along B (B flips, its orthogonal
    complement stays); for a hyperplane use the blade of the hyperplane.
    """
    _require_invertible_blade(B, "mirror")
    r = next(iter(B.grades))
    moved = A.grade_involution() if r & 1 else A
    return B * moved * B.inverse()


def apply_versor(A, V):
    """Versor action on A: V A V^-1 (even V) or V ghat(A) V^-1 (odd V).

    Raises GradeError when V mixes parities or V reverse(V) is not scalar,
    NotInvertible when V is null.
    """
    if not isinstance(V, Multivector):
        raise TypeError("versor must be a Multivector")
    if not V:
        raise NotInvertible("the zero multivector is not a versor")
    parities = {g & 1 for g in V.grades}
    if len(parities) != 1:
        raise GradeError(f"versor has mixed parity grades {sorted(V.grades)}: {V}")
    if (V * V.reverse()).grade_nonscalar():
        raise GradeError(f"not a versor (V reverse(V) is not scalar): {V}")
    moved = A.grade_involution() if parities.pop() else A
    return V * moved * V.inverse()


def rotor_from_vectors(m, n):
    """The rotor R = m n from two invertible vectors.

    R X R^-1 rotates by twice the angle from n to m in the m ^ n plane.
    With unit m, n the result is a unit rotor; half-angle bisector inputs
    give the rotation taking n's direction to m's reflection image.
    """
    for v, name in ((m, "m"), (n, "n")):
        if v.grades - {1}:
            raise GradeError(f"rotor factor {name} must be a vector, got {v}")
        if abs(v.norm_squared()) <= v.algebra.tolerance:
            raise NotInvertible(f"rotor factor {name} is null: {v}")
    return m * n


def rotate(A, R):
    """Rotation R A R^-1 by an even versor (rotor) R."""
    if any(g & 1 for g in R.grades):
        raise GradeError(f"rotors must be even, got grades {sorted(R.grades)}")
    return apply_versor(A, R)


def gram_schmidt(vectors):
    """Orthogonalize vectors by successive rejection.

    b_1 = a_1 and b_(j+1) = reject(a_(j+1), b_1 ^ ... ^ b_j); the outputs
    are mutually orthogonal and wedge to the same blade as the inputs.
    Raises NotInvertible when the inputs are dependent or an intermediate
    blade is null (possible in mixed signature).
    """
    vectors = list(vectors)
    if not vectors:
        return []
    out = []
    blade = None
    for a in vectors:
        if a.grades - {1}:
            raise GradeError(f"gram_schmidt needs vectors, got {a}")
        if blade is None:
            b = a
        else:
            b = reject(a, blade)
        if not b:
            raise NotInvertible("vectors are linearly dependent")
        out.append(b)
        blade = b if blade is None else blade ^ b
        if abs(blade.norm_squared()) <= blade.algebra.tolerance:
            raise NotInvertible("intermediate blade is null; cannot continue")
    return out
