"""Property tests for the product and involution identities.

The same laws get a wide seeded sweep in test_acceptance; here hypothesis
hunts for corner cases (zeros, cancellations, tiny coefficients) instead.
"""

import pytest
from hypothesis import given, settings, strategies as st

from gacalc import Algebra

E2 = Algebra(2, 0)
E3 = Algebra(3, 0)
STA = Algebra(1, 3)
SPLIT = Algebra(2, 2)

ALGEBRAS = [E2, E3, STA, SPLIT]

TOL = 1e-9  # ten times the construction tolerance

coeff = st.floats(min_value=-2.0, max_value=2.0,
                  allow_nan=False, allow_infinity=False)


def mv_strategy(alg, grades=None):
    blades = [b for b in alg.basis_blades() if grades is None or len(b) in grades]
    return st.lists(coeff, min_size=len(blades), max_size=len(blades)).map(
        lambda cs: alg.multivector(dict(zip(blades, cs))))


def vec_strategy(alg):
    return mv_strategy(alg, grades={1})


def close(a, b, tol=TOL):
    return a.max_coeff_diff(b) <= tol


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_geometric_product_associative(alg):
    @given(mv_strategy(alg), mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=60, deadline=None)
    def run(a, b, c):
        assert close((a * b) * c, a * (b * c))
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_geometric_product_distributive(alg):
    @given(mv_strategy(alg), mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=60, deadline=None)
    def run(a, b, c):
        assert close(a * (b + c), a * b + a * c)
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_vector_product_splits_into_inner_and_outer(alg):
    @given(vec_strategy(alg), vec_strategy(alg))
    @settings(max_examples=80, deadline=None)
    def run(u, v):
        assert close(u * v, u.left_contract(v) + (u ^ v))
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_outer_product_associative(alg):
    @given(mv_strategy(alg), mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=60, deadline=None)
    def run(a, b, c):
        assert close((a ^ b) ^ c, a ^ (b ^ c))
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_contraction_sandwich_identity(alg):
    # A .| (B |. C) = (A .| B) |. C
    @given(mv_strategy(alg), mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=60, deadline=None)
    def run(a, b, c):
        lhs = a.left_contract(b.right_contract(c))
        rhs = a.left_contract(b).right_contract(c)
        assert close(lhs, rhs)
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_contraction_of_contraction_is_wedge_contraction(alg):
    # A .| (B .| C) = (A ^ B) .| C
    @given(mv_strategy(alg), mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=60, deadline=None)
    def run(a, b, c):
        assert close(a.left_contract(b.left_contract(c)),
                     (a ^ b).left_contract(c))
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_right_contraction_mirror_identity(alg):
    # A |. (B ^ C) = (A |. B) |. C
    @given(mv_strategy(alg), mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=60, deadline=None)
    def run(a, b, c):
        assert close(a.right_contract(b ^ c),
                     a.right_contract(b).right_contract(c))
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_homogeneous_contraction_commutation(alg):
    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def run(data):
        r = data.draw(st.integers(0, alg.n))
        s = data.draw(st.integers(0, alg.n))
        a = data.draw(mv_strategy(alg, grades={r}))
        b = data.draw(mv_strategy(alg, grades={s}))
        sign = (-1.0) ** (r * (s - 1))
        assert close(a.left_contract(b), b.right_contract(a) * sign)
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_homogeneous_outer_commutation(alg):
    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def run(data):
        r = data.draw(st.integers(0, alg.n))
        s = data.draw(st.integers(0, alg.n))
        a = data.draw(mv_strategy(alg, grades={r}))
        b = data.draw(mv_strategy(alg, grades={s}))
        sign = (-1.0) ** (r * s)
        assert close(a ^ b, (b ^ a) * sign)
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_reverse_is_an_anti_automorphism(alg):
    @given(mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=80, deadline=None)
    def run(a, b):
        assert close(~(a * b), (~b) * (~a))
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_grade_involution_is_an_automorphism(alg):
    @given(mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=80, deadline=None)
    def run(a, b):
        assert close((a * b).grade_involution(),
                     a.grade_involution() * b.grade_involution())
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_clifford_conjugation_is_an_anti_automorphism(alg):
    @given(mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=80, deadline=None)
    def run(a, b):
        assert close((a * b).clifford_conjugate(),
                     b.clifford_conjugate() * a.clifford_conjugate())
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_involutions_are_self_inverse(alg):
    @given(mv_strategy(alg))
    @settings(max_examples=80, deadline=None)
    def run(a):
        assert ~(~a) == a
        assert a.grade_involution().grade_involution() == a
        assert a.clifford_conjugate().clifford_conjugate() == a
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_dual_turns_wedge_into_contraction(alg):
    @given(mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=80, deadline=None)
    def run(a, b):
        assert close((a ^ b).dual(), a.left_contract(b.dual()))
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_dual_round_trip(alg):
    @given(mv_strategy(alg))
    @settings(max_examples=80, deadline=None)
    def run(a):
        assert close(a.dual().inverse_dual(), a)
        assert close(a.inverse_dual().dual(), a)
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_volume_element_commutation(alg):
    # A I = I ginv^(n-1)(A)
    @given(mv_strategy(alg))
    @settings(max_examples=80, deadline=None)
    def run(a):
        moved = a
        if (alg.n - 1) % 2:
            moved = a.grade_involution()
        assert close(a * alg.I, alg.I * moved)
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_commutator_jacobi_identity(alg):
    @given(mv_strategy(alg), mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=50, deadline=None)
    def run(a, b, c):
        total = (a.commutator(b.commutator(c))
                 + b.commutator(c.commutator(a))
                 + c.commutator(a.commutator(b)))
        assert total.max_coeff_diff(alg.zero()) <= TOL
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_product_grades_stay_in_band(alg):
    @given(st.data())
    @settings(max_examples=80, deadline=None)
    def run(data):
        r = data.draw(st.integers(0, alg.n))
        s = data.draw(st.integers(0, alg.n))
        a = data.draw(mv_strategy(alg, grades={r}))
        b = data.draw(mv_strategy(alg, grades={s}))
        allowed = set(range(abs(r - s), min(r + s, 2 * alg.n - r - s) + 1, 2))
        assert (a * b).grades <= allowed
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_cyclic_reordering_preserves_scalar_part(alg):
    @given(mv_strategy(alg), mv_strategy(alg), mv_strategy(alg))
    @settings(max_examples=60, deadline=None)
    def run(a, b, c):
        lhs = (a * b * c).scalar_part
        rhs = (c * a * b).scalar_part
        assert abs(lhs - rhs) <= TOL * max(1.0, abs(lhs))
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_scalar_part_is_reverse_invariant(alg):
    @given(mv_strategy(alg))
    @settings(max_examples=80, deadline=None)
    def run(a):
        assert (~a).scalar_part == a.scalar_part
        assert abs(a.norm_squared() - (~a).norm_squared()) <= TOL
    run()


@pytest.mark.parametrize("alg", [E3, STA], ids=str)
def test_vector_contraction_expands_over_wedge_factors(alg):
    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def run(data):
        r = data.draw(st.integers(1, min(alg.n, 4)))
        a = data.draw(vec_strategy(alg))
        vs = [data.draw(vec_strategy(alg)) for _ in range(r)]
        blade = vs[0]
        for v in vs[1:]:
            blade = blade ^ v
        expect = alg.zero()
        for j, vj in enumerate(vs):
            rest = [v for i, v in enumerate(vs) if i != j]
            partial = alg.scalar(a.left_contract(vj).scalar_part)
            for v in rest:
                partial = partial ^ v
            expect = expect + partial * ((-1.0) ** j)
        assert close(a.left_contract(blade), expect)
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_versor_norm_is_product_of_factor_norms(alg):
    @given(st.data())
    @settings(max_examples=60, deadline=None)
    def run(data):
        count = data.draw(st.integers(1, 4))
        vs = [data.draw(vec_strategy(alg)) for _ in range(count)]
        versor = alg.scalar(1.0)
        want = 1.0
        for v in vs:
            versor = versor * v
            want *= v.norm_squared()
        got = versor.norm_squared()
        assert abs(got - want) <= TOL * max(1.0, abs(want))
    run()


@pytest.mark.parametrize("alg", ALGEBRAS, ids=str)
def test_bivector_exponential_inverts_by_negation(alg):
    @given(mv_strategy(alg, grades={2}))
    @settings(max_examples=40, deadline=None)
    def run(b):
        product = b.exp() * (-b).exp()
        assert close(product, alg.scalar(1.0), tol=1e-8)
    run()
