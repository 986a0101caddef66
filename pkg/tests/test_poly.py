import math
from itertools import product

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from oracles import square_root_ansatz
from simroots.arith import DomainError
from simroots.poly import (
    MAX_DEGREE,
    CoefficientOverflow,
    IntPolynomial,
    PolyParseError,
    eval_mod,
    format_poly,
    is_admissible_base,
    is_perfect_square,
    parse_poly,
    poly_content,
    poly_derivative,
    poly_gcd_rational,
    primitive_part,
    squarefree_decomposition,
)

coeff_lists = st.lists(st.integers(-50, 50), min_size=1, max_size=7)
polys = coeff_lists.map(IntPolynomial)
nonzero_polys = polys.filter(lambda f: not f.is_zero())
small_primes = st.sampled_from([2, 3, 5, 7, 97, 101, 127, 65537, 999_983])


@pytest.mark.parametrize(
    "text, coeffs",
    [
        ("t^2+1", (1, 0, 1)),
        ("(t+2)*(t+1)^2", (2, 5, 4, 1)),
        ("0", (0,)),
        ("t^3 + 4*t^2 + 5*t + 2", (2, 5, 4, 1)),
        ("-t", (0, -1)),
        ("-(t - 3)^2", (-9, 6, -1)),
        ("2*3*t^0", (6,)),
        (" t  -  t ", (0,)),
        ("(t)^0", (1,)),
    ],
)
def test_parse_examples(text, coeffs):
    assert parse_poly(text).coeffs == coeffs


@pytest.mark.parametrize(
    "text, pos",
    [("2t", 1), ("t^-1", 2), ("t^(2)", 2), ("t+", 2), ("(t", 2), ("t**2", 2), ("x", 0), ("", 0), ("t)", 1)],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(PolyParseError) as ei:
        parse_poly(text)
    assert ei.value.position == pos


def test_parse_overflow_is_an_error():
    with pytest.raises(CoefficientOverflow):
        parse_poly(f"t^{MAX_DEGREE + 1}")
    with pytest.raises(CoefficientOverflow):
        parse_poly("t^6000 * t^6000")
    with pytest.raises(CoefficientOverflow):
        parse_poly("(10^500)^10")


def test_canonical_form_trims():
    assert IntPolynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert IntPolynomial([0, 0]).coeffs == (0,)
    assert IntPolynomial().degree == -1
    assert IntPolynomial([0, 0]).is_zero()


def test_format_examples():
    assert format_poly(parse_poly("t^2+1")) == "t^2 + 1"
    assert format_poly(parse_poly("-t^2+3*t-1")) == "-t^2 + 3*t - 1"
    assert format_poly(IntPolynomial()) == "0"
    assert str(parse_poly("(t+2)*(t+1)^2")) == "t^3 + 4*t^2 + 5*t + 2"


@settings(max_examples=500)
@given(polys)
def test_format_parse_round_trip(f):
    assert parse_poly(format_poly(f)) == f


@given(polys, polys, st.integers(-(10**6), 10**6))
def test_ring_operations_agree_with_evaluation(f, g, z):
    assert (f * g)(z) == f(z) * g(z)
    assert (f + g)(z) == f(z) + g(z)
    assert (f - g)(z) == f(z) - g(z)


@given(polys, polys, st.integers(0, 10**9), small_primes)
def test_eval_mod_is_ring_homomorphism(f, g, z, p):
    z %= p
    assert eval_mod(f * g, z, p) == eval_mod(f, z, p) * eval_mod(g, z, p) % p
    assert eval_mod(f + g, z, p) == (eval_mod(f, z, p) + eval_mod(g, z, p)) % p
    assert eval_mod(f, z, p) == f(z) % p


def test_eval_mod_examples(quad):
    assert eval_mod(quad, 5, 97) == 26
    assert eval_mod(quad, 38, 97) == 87
    f = parse_poly("-3*t^2 - 7")
    assert eval_mod(f, 0, 11) == (-7) % 11


def test_derivative_content_gcd_examples():
    assert poly_derivative(parse_poly("t^2+1")).coeffs == (0, 2)
    assert poly_content(IntPolynomial([2, 4, 6])) == 2
    assert poly_content(IntPolynomial([-2, -4, -6])) == -2
    assert primitive_part(IntPolynomial([-2, -4, -6])).coeffs == (1, 2, 3)
    g = poly_gcd_rational(parse_poly("(t+1)^2"), parse_poly("(t+1)*(t+2)"))
    assert g == parse_poly("t+1")
    with pytest.raises(DomainError):
        poly_gcd_rational(IntPolynomial(), IntPolynomial())


@settings(max_examples=200, deadline=None)
@given(nonzero_polys, nonzero_polys)
def test_gcd_matches_sympy(f, g):
    t = sympy.Symbol("t")
    ref = sympy.Poly(sympy.gcd(sympy.Poly(list(reversed(f.coeffs)), t), sympy.Poly(list(reversed(g.coeffs)), t)), t)
    ref_coeffs = [int(c) for c in reversed(ref.all_coeffs())]
    ref_poly = primitive_part(IntPolynomial(ref_coeffs))
    if ref_poly.leading < 0:
        ref_poly = -ref_poly
    assert poly_gcd_rational(f, g) == ref_poly


@settings(max_examples=200, deadline=None)
@given(nonzero_polys)
def test_squarefree_decomposition_reassembles(f):
    parts = squarefree_decomposition(f)
    acc = IntPolynomial.constant(1)
    for i, a in enumerate(parts, start=1):
        acc = acc * a**i
    pp = primitive_part(f)
    assert acc == pp or acc == -pp


def test_perfect_square_examples(quad, cubic):
    assert is_perfect_square(IntPolynomial([1, 2, 1]))
    assert not is_perfect_square(quad)
    assert not is_perfect_square(cubic)
    assert is_perfect_square(IntPolynomial([4]))
    assert not is_perfect_square(IntPolynomial([2]))
    assert not is_perfect_square(IntPolynomial([-1, 0, 0]))
    # the scalar factor must itself be a square
    assert is_perfect_square(parse_poly("(t+2)^2"))
    assert not is_perfect_square(parse_poly("2*(t+1)^2"))
    assert is_perfect_square(parse_poly("9*(t+1)^2"))
    assert not is_perfect_square(parse_poly("4*t^2 + 2"))
    with pytest.raises(DomainError):
        is_perfect_square(IntPolynomial())


generators = st.lists(st.integers(-9, 9), min_size=1, max_size=5).map(IntPolynomial).filter(lambda g: not g.is_zero())


@settings(max_examples=1000, deadline=None)
@given(generators, st.integers(-20, 20))
def test_squares_detected_and_twisted_squares_rejected(g, c):
    assert is_perfect_square(g * g)
    assert not is_perfect_square(g * g * parse_poly(f"t + {c}") if c >= 0 else g * g * parse_poly(f"t - {-c}"))


@settings(max_examples=1000, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=1, max_size=7))
def test_perfect_square_matches_ansatz_sampled(coeffs):
    f = IntPolynomial(coeffs)
    assume(not f.is_zero())
    assert is_perfect_square(f) == (square_root_ansatz(list(f.coeffs)) is not None)


def test_perfect_square_matches_ansatz_exhaustive_low_degree():
    # every polynomial of degree <= 3
    for n in range(1, 5):
        for coeffs in product(range(-5, 6), repeat=n):
            f = IntPolynomial(coeffs)
            if f.is_zero():
                continue
            assert is_perfect_square(f) == (square_root_ansatz(list(f.coeffs)) is not None), coeffs


def test_perfect_square_degree_six_squares_from_cubics():
    for a, b, c, d in product(range(-2, 3), repeat=4):
        g = IntPolynomial([a, b, c, d])
        if g.is_zero():
            continue
        f = g * g
        assert is_perfect_square(f)
        assert square_root_ansatz(list(f.coeffs)) is not None
        h = f + IntPolynomial.constant(1)
        if not h.is_zero():
            assert is_perfect_square(h) == (square_root_ansatz(list(h.coeffs)) is not None)


@pytest.mark.parametrize("z, ok", [(2, True), (4, False), (-1, False), (1, False), (0, False), (-4, True), (10, True), (9, False)])
def test_admissible_base(z, ok):
    assert is_admissible_base(z) is ok


@given(st.integers(-(10**12), 10**12))
def test_admissible_base_property(z):
    square = z >= 0 and math.isqrt(z) ** 2 == z
    assert is_admissible_base(z) == (z not in (1, -1) and not square)
