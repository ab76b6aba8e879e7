"""Random spaces/elements and hypothesis strategies shared by the test modules."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from vahlen import CliffordElement, CliffordMatrix2, Integers, LaurentPolynomials, PrimeField, QuadraticSpace

GF2 = PrimeField(2)
GF3 = PrimeField(3)
ZZ = Integers()
LAUR2 = LaurentPolynomials(2)

RINGS = {"GF(2)": GF2, "GF(3)": GF3, "Z": ZZ, "GF(2)[t,1/t]": LAUR2}


def random_scalar(R, rng: random.Random, small: bool = True):
    """A raw ring value."""
    if isinstance(R, LaurentPolynomials):
        raw = R.zero
        for _ in range(rng.randint(0, 2)):
            raw = R.add(raw, R.monomial(rng.randrange(1, R.p), rng.randint(-2, 2)))
        return raw
    if R.is_finite():
        return rng.randrange(R.size())
    return rng.randint(-3, 3) if small else rng.randint(-10**6, 10**6)


def random_space(R, rank: int, rng: random.Random, orthogonal: bool = False) -> QuadraticSpace:
    q = [R.wrap(random_scalar(R, rng)) for _ in range(rank)]
    bil = {}
    if not orthogonal:
        for i in range(rank):
            for j in range(i + 1, rank):
                if rng.random() < 0.5:
                    bil[(i, j)] = R.wrap(random_scalar(R, rng))
    return QuadraticSpace(R, q, bil)


def random_element(space, rng: random.Random, density: float = 1.0) -> CliffordElement:
    R = space.ring
    terms = {}
    for b in range(space.dim):
        if rng.random() < density:
            c = random_scalar(R, rng)
            if not R.is_zero(c):
                terms[b] = c
    return CliffordElement._make(space, terms)


def random_vector(space, rng: random.Random) -> CliffordElement:
    return CliffordElement.vector(space, [R_w(space, random_scalar(space.ring, rng)) for _ in range(space.rank)])


def R_w(space, raw):
    return space.ring.wrap(raw)


def random_matrix(space, rng: random.Random, density: float = 1.0) -> CliffordMatrix2:
    return CliffordMatrix2(*(random_element(space, rng, density) for _ in range(4)))


# -- hypothesis ----------------------------------------------------------------------

finite_rings = st.sampled_from([GF2, GF3, PrimeField(5)])
all_rings = st.sampled_from([GF2, GF3, ZZ, LAUR2])


@st.composite
def spaces(draw, rings=all_rings, max_rank: int = 3, orthogonal: bool | None = None):
    R = draw(rings)
    rank = draw(st.integers(0, max_rank))
    seed = draw(st.integers(0, 2**32 - 1))
    ortho = draw(st.booleans()) if orthogonal is None else orthogonal
    return random_space(R, rank, random.Random(seed), ortho)


@st.composite
def elements(draw, space, n: int = 1):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    density = draw(st.sampled_from([0.3, 0.6, 1.0]))
    out = [random_element(space, rng, density) for _ in range(n)]
    return out[0] if n == 1 else out


@st.composite
def space_and_elements(draw, n: int = 1, rings=all_rings, max_rank: int = 3, orthogonal: bool | None = None):
    sp = draw(spaces(rings, max_rank, orthogonal))
    return sp, draw(elements(sp, n))
