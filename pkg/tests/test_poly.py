import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zonalkit.partitions import multirect
from zonalkit.poly import (
    FormalSeries,
    KerovPolynomial,
    Poly,
    PQPolynomial,
    PSymmetricFunction,
    pfun_coefficient,
    pq_substitute_negate_q,
    series_functional_inverse,
    series_mul,
    series_reciprocal,
)

Z21 = PSymmetricFunction({(1, 1, 1): 1, (2, 1): 1, (3,): -2})


@pytest.mark.parametrize("rho, c", [((1, 1, 1), 1), ((3,), -2), ((2, 2), 0)])
def test_pfun_coefficient(rho, c):
    assert pfun_coefficient(Z21, rho) == c


def test_psymmetric_text_and_json():
    assert str(Z21) == "p[1,1,1] + p[2,1] - 2*p[3]"
    assert str(PSymmetricFunction()) == "0"
    data = Z21.to_dict()
    assert data["basis"] == "p"
    assert {"mu": [3], "coeff": "-2"} in data["terms"]
    again = PSymmetricFunction.from_dict(json.loads(Z21.to_json()))
    assert again == Z21 and again.to_json() == Z21.to_json()


def test_psymmetric_arithmetic():
    assert (Z21 - Z21) == PSymmetricFunction()
    assert Z21.scale(Fraction(1, 2)).coefficient((3,)) == -1
    assert (Z21 + Z21).coefficient((2, 1)) == 2


p1, q1, p2, q2 = PQPolynomial.p(1), PQPolynomial.q(1), PQPolynomial.p(2), PQPolynomial.q(2)


def test_negate_q_examples():
    f = PQPolynomial(1, (p1 * q1 * q1).terms)
    assert pq_substitute_negate_q(f) == f
    g = PQPolynomial(1, (p1 * q1).terms)
    assert pq_substitute_negate_q(g) == PQPolynomial(1, (-(p1 * q1)).terms)
    assert pq_substitute_negate_q(PQPolynomial(1)).is_zero()


def test_pq_variable_validation():
    with pytest.raises(ValueError):
        PQPolynomial(1, (p2 * q1).terms)
    with pytest.raises(ValueError):
        PQPolynomial(2, Poly.var("r", 1).terms)


def test_pq_evaluate_and_truncate():
    f = PQPolynomial(2, (2 * p1 * q1 * q1 - p1 * p2 * q2 + q2).terms)
    assert f.evaluate_at(multirect([1, 1], [2, 1])) == 8 - 1 + 1
    assert f.evaluate_at(multirect([1], [2])) == 8
    assert f.truncate(1) == PQPolynomial(1, (2 * p1 * q1 * q1).terms)


def test_pq_json_round_trip():
    f = PQPolynomial(2, (2 * p1 * q1 * q1 - Fraction(1, 3) * p1 * p2 * q2).terms)
    data = f.to_dict()
    assert data["vars"] == 2
    assert {"exp": {"p1": 1, "q1": 2}, "coeff": "2"} in data["terms"]
    again = PQPolynomial.from_dict(json.loads(f.to_json()))
    assert again == f and again.to_json() == f.to_json()


small_coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=3)
pq_polys = st.dictionaries(
    st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2), st.integers(0, 1)),
    small_coeffs,
    max_size=4,
).map(lambda d: PQPolynomial(2, {
    tuple(sorted(((v, e) for v, e in zip([("p", 1), ("q", 1), ("q", 2), ("p", 2)], exps) if e))): c
    for exps, c in d.items()
}))


@settings(max_examples=100)
@given(pq_polys, pq_polys, pq_polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b - b == a
    assert (a - a).is_zero()
    assert a ** 2 == a * a


def test_poly_evaluate_and_text():
    f = 2 * p1 * q1 ** 2 - q1
    assert f.evaluate({("p", 1): 3, ("q", 1): 2}) == 22
    assert str(f) == "2*p1*q1^2 - q1"
    assert f.degree() == 3


def test_kerov_polynomial_api():
    k = KerovPolynomial({((3, 1),): 4, ((2, 1),): -2})
    assert k.coefficient({3: 1}) == 4 and k.coefficient({2: 2}) == 0
    assert k.evaluate({2: Fraction(3, 2), 3: Fraction(5, 4)}) == 2
    data = k.to_dict()
    assert {"s": {"2": 1}, "coeff": "-2"} in data["terms"]
    assert {"s": {"3": 1}, "coeff": "4"} in data["terms"]
    again = KerovPolynomial.from_dict(json.loads(k.to_json()))
    assert again == k and again.to_json() == k.to_json()
    with pytest.raises(ValueError):
        KerovPolynomial({((1, 1),): 1})


@pytest.mark.parametrize("moments, n_max, expected", [
    ([0, 1, 0, 1], 4, [0, 1, 0, -1]),
    ([0, 1], 2, [0, 1]),
    ([0, 2, 2], 3, [0, 2, 2]),
])
def test_functional_inverse_examples(moments, n_max, expected):
    assert series_functional_inverse(FormalSeries(moments), n_max) == expected


def test_functional_inverse_rejects_bad_series():
    with pytest.raises(ValueError):
        series_functional_inverse(FormalSeries([0, 1], leading=2), 2)
    with pytest.raises(ValueError):
        series_functional_inverse([0], 2)


@settings(max_examples=50)
@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=7), min_size=1, max_size=7))
def test_recomposition_recovers_moments(moments):
    # 1/M(u) + Σ R_n u^n M(u)^{n-1} = 1
    n = len(moments)
    order = n + 1
    r = series_functional_inverse(moments, n)
    m = [Fraction(1)] + list(moments)
    total = series_reciprocal(m, order)
    power = [Fraction(1)] + [0] * n
    for j, rj in enumerate(r, 1):
        term = [0] * j + [rj * x for x in power[: order - j]]
        total = [a + b for a, b in zip(total, term)]
        power = series_mul(power, m, order)
    assert total == [1] + [0] * n


def test_functional_inverse_over_polynomials():
    # moments x, x^2 + y: R1 = x, R2 = y
    x, y = Poly.var("x", 1), Poly.var("y", 1)
    r = series_functional_inverse([x, x * x + y], 2)
    assert r[0] == x and r[1] == y
