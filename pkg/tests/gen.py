"""Shared random-value generators for the test suite.

All generators take an explicit random.Random so every test run is
reproducible from the seed written at its call site.
"""

from gacalc import Algebra


def rand_coeff(rng):
    """Nonzero coefficient bounded away from the pruning tolerance."""
    c = rng.uniform(0.1, 2.0)
    return c if rng.random() < 0.5 else -c


def rand_mv(alg, rng, grades=None, density=0.5):
    """Random multivector, optionally restricted to a set of grades."""
    terms = {}
    for blade in alg.basis_blades():
        if grades is not None and len(blade) not in grades:
            continue
        if rng.random() < density:
            terms[blade] = rand_coeff(rng)
    if not terms:
        blades = [b for b in alg.basis_blades()
                  if grades is None or len(b) in grades]
        terms[rng.choice(blades)] = rand_coeff(rng)
    return alg.multivector(terms)


def rand_vector(alg, rng):
    return alg.vector([rand_coeff(rng) for _ in range(alg.n)])


def rand_blade(alg, rng, r):
    """Wedge of r random vectors; may be zero if they happen to be dependent."""
    if r == 0:
        return alg.scalar(rand_coeff(rng))
    out = rand_vector(alg, rng)
    for _ in range(r - 1):
        out = out ^ rand_vector(alg, rng)
    return out


def rand_invertible_blade(alg, rng, r):
    """Keep sampling until the blade has nonzero square."""
    while True:
        b = rand_blade(alg, rng, r)
        if abs(b.norm_squared()) > 1e-3:
            return b


def rand_versor(alg, rng, count):
    """Product of count invertible random vectors (count = 0 gives a scalar)."""
    out = alg.scalar(1.0)
    for _ in range(count):
        out = out * rand_invertible_blade(alg, rng, 1)
    return out


def euclidean(n, tolerance=None):
    if tolerance is None:
        return Algebra(n, 0)
    return Algebra(n, 0, tolerance=tolerance)
