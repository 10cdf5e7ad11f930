import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bwfamily.cyclotomic_field import (
    CharacterTable,
    CycloElement,
    admissible_discriminants,
    element_arith,
    element_inverse,
    gauss_sum,
    legendre,
    primitive_root_image,
    sqrt_minus_D,
    sqrt_minus_D_exists,
)
from bwfamily.polynomial import Polynomial


def test_zeta_powers_reduce():
    z6 = CycloElement.zeta(6)
    # Phi_6 = x^2 - x + 1, so zeta^5 = zeta^{-1} = 1 - zeta
    assert (z6**5).rep == Polynomial([1, -1])
    assert (z6**6) == 1
    # Phi_12 = x^4 - x^2 + 1 gives zeta_12^6 = -1
    assert CycloElement.zeta(12, 6) == -1


def test_mismatched_levels():
    with pytest.raises(ValueError):
        CycloElement.zeta(5) + CycloElement.zeta(7)


@st.composite
def elements(draw, l=15):
    cs = draw(st.lists(st.integers(-5, 5), min_size=1, max_size=8))
    return CycloElement(l, Polynomial(cs))


@settings(max_examples=60, deadline=None)
@given(elements(), elements())
def test_field_operations(u, v):
    assert element_arith(u, v, "add") - v == u
    if not v.is_zero():
        assert element_arith(u, v, "mul") * element_inverse(v) == u


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        element_inverse(CycloElement(7, Polynomial([])))


def test_negative_powers():
    z = CycloElement.zeta(9)
    assert z ** -1 * z == 1
    assert z ** -4 == z**5


def test_legendre_against_sympy():
    for p in sympy.primerange(3, 80):
        for a in range(-3, 2 * p):
            expected = 0 if a % p == 0 else sympy.legendre_symbol(a % p, p)
            assert legendre(a, p) == expected
    with pytest.raises(ValueError):
        legendre(3, 9)
    with pytest.raises(ValueError):
        legendre(3, 2)


def test_character_table():
    table = CharacterTable.build(7)
    assert [table(a) for a in range(7)] == [0, 1, 1, -1, 1, -1, -1]


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_gauss_sum_at_multiples_of_p(p):
    sign = -1 if p % 4 == 3 else 1
    assert gauss_sum(p, 2 * p) ** 2 == sign * p


def test_gauss_sum_requires_divisibility():
    with pytest.raises(ValueError):
        gauss_sum(5, 12)


def test_sqrt_minus_D_criterion():
    assert sqrt_minus_D_exists(3, 3)
    assert sqrt_minus_D_exists(1, 4)
    assert sqrt_minus_D_exists(2, 8)
    assert not sqrt_minus_D_exists(5, 5)  # 5 = 1 mod 4 gives sqrt(+5)
    assert sqrt_minus_D_exists(5, 20)
    assert not sqrt_minus_D_exists(1, 3)
    assert admissible_discriminants(12) == [1, 3]
    assert admissible_discriminants(7) == [7]
    with pytest.raises(ValueError):
        sqrt_minus_D_exists(4, 16)


@pytest.mark.parametrize("D,l", [(1, 4), (3, 3), (3, 12), (7, 7), (2, 8), (15, 15), (5, 20), (11, 44), (6, 24)])
def test_sqrt_minus_D_squares_correctly(D, l):
    s = sqrt_minus_D(D, l)
    assert s * s == -D


def test_sqrt_minus_D_missing():
    with pytest.raises(ValueError):
        sqrt_minus_D(5, 5)


def test_primitive_root_image():
    # zeta_12 inside Q(zeta_24) is zeta_24^2
    assert primitive_root_image(24, 12, 1) == CycloElement.zeta(24, 2)
    with pytest.raises(ValueError):
        primitive_root_image(10, 4, 1)


def test_json_roundtrip():
    u = CycloElement(12, Polynomial([1, "1/2", 3]))
    assert CycloElement.from_json(u.to_json()) == u
