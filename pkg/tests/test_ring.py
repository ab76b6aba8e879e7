import itertools

import pytest
from hypothesis import given, strategies as st

from vahlen import DomainError, Integers, IntegersMod, LaurentPolynomials, NotAUnitError, PrimeField, ring_from_config
from vahlen.errors import UnsupportedError

GF2, GF3 = PrimeField(2), PrimeField(3)
L2 = LaurentPolynomials(2)


def test_gf3_addition():
    assert GF3(2) + GF3(2) == GF3(1)


def test_laurent_cross_terms_cancel():
    a = L2("t + 1")
    b = L2("t^-1 + 1")
    assert a * b == L2("t + t^-1")


def test_integer_product():
    assert Integers()(7) * Integers()(-3) == -21


def test_units_and_inverses():
    assert GF3(2).is_unit() and GF3(2).invert() == 2
    assert L2("t^-1").is_unit()
    assert L2("t^-1").invert() == L2("t")
    assert not IntegersMod(6)(3).is_unit()
    with pytest.raises(NotAUnitError):
        IntegersMod(6)(3).invert()
    with pytest.raises(NotAUnitError):
        L2("1 + t").invert()


def test_laurent_units_are_monomials():
    L3 = LaurentPolynomials(3)
    assert L3("2*t^5").is_unit()
    assert L3("2*t^5").invert() == L3("2*t^-5")
    assert not L3("1 + t").is_unit()
    assert not L3(0).is_unit()


def test_enumeration():
    assert [x.value for x in GF3.elements()] == [0, 1, 2]
    assert len(list(GF2.elements())) == 2
    with pytest.raises(UnsupportedError):
        list(Integers().elements())
    with pytest.raises(UnsupportedError):
        list(L2.elements())


def test_descriptor_invariants():
    with pytest.raises(DomainError):
        IntegersMod(1)
    with pytest.raises(DomainError):
        PrimeField(4)
    assert Integers().is_integral_domain()
    assert GF3.is_integral_domain() and L2.is_integral_domain()
    assert not IntegersMod(6).is_integral_domain()


def test_mixed_rings_rejected():
    with pytest.raises(DomainError):
        GF2(1) + GF3(1)


def test_config_round_trip():
    for R in (Integers(), IntegersMod(6), GF3, L2, LaurentPolynomials(3)):
        assert ring_from_config(R.config()) == R
    with pytest.raises(DomainError):
        ring_from_config({"kind": "reals"})


def test_canonical_laurent_representation():
    assert L2("t + t").value == ()
    assert L2(0).value == ()
    assert L2("t^2 + 1 + t^-1").value == ((-1, 1), (0, 1), (2, 1))


def test_literal_round_trip():
    for R in (Integers(), GF3, LaurentPolynomials(3)):
        for text in ("0", "1", "2", "2*t^-3 + 1 + t^4" if R.int_modulus is None else "-5"):
            x = R(text)
            assert R(str(x)) == x


@pytest.mark.parametrize("R", [GF2, GF3, PrimeField(5), IntegersMod(4), IntegersMod(6), IntegersMod(9)])
def test_zero_divisors_exhaustive(R):
    pairs = [(a, b) for a, b in itertools.product(R.elements(), repeat=2) if a * b == 0 and a != 0 and b != 0]
    assert (not pairs) == R.is_integral_domain()


laurent = st.lists(st.tuples(st.integers(-4, 4), st.integers(0, 2)), max_size=4).map(
    lambda ts: LaurentPolynomials(3).wrap(
        LaurentPolynomials(3)._pack({k: c for k, c in ts})
    )
)
residues = st.integers(-50, 50).map(IntegersMod(12))
integers = st.integers(-10**20, 10**20).map(Integers())


@pytest.mark.parametrize("elems", [laurent, residues, integers])
@given(data=st.data())
def test_ring_axioms(elems, data):
    a, b, c = data.draw(elems), data.draw(elems), data.draw(elems)
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a - a == 0


@pytest.mark.parametrize("elems", [laurent, residues, integers])
@given(data=st.data())
def test_unit_product(elems, data):
    a, b = data.draw(elems), data.draw(elems)
    if a.is_unit() and b.is_unit():
        assert (a * b).is_unit()
        assert (a * b).invert() == b.invert() * a.invert()
        assert a * a.invert() == 1


def test_elements_pickle():
    import pickle

    from vahlen import CliffordElement, QuadraticSpace

    for R in (PrimeField(3), LaurentPolynomials(2)):
        x = R.one + R.one
        assert pickle.loads(pickle.dumps(x)) == x
    space = QuadraticSpace(PrimeField(3), [1, 2])
    y = CliffordElement.basis(space, 0) + CliffordElement.basis(space, 1)
    assert pickle.loads(pickle.dumps(y)) == y
