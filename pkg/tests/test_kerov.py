from fractions import Fraction

import pytest

from zonalkit.characters import symplectic_character, zonal_character
from zonalkit.cumulants import anisotropic_cumulants
from zonalkit.kerov import (
    _cumulant_monomials,
    _solve_exact,
    kerov_count,
    kerov_integrality_report,
    kerov_oracle,
    kerov_polynomial_combinatorial,
    marriage_condition,
    symplectic_kerov,
)
from zonalkit.pairings import CapacityError
from zonalkit.partitions import partitions_of
from zonalkit.poly import KerovPolynomial, s_weight

MU_4 = [mu for n in range(1, 5) for mu in partitions_of(n)]
LAM_5 = [lam for n in range(0, 6) for lam in partitions_of(n)]
K2 = KerovPolynomial({((3, 1),): 4, ((2, 1),): -2})


def cumulants(lam, alpha, n):
    return dict(enumerate(anisotropic_cumulants(lam, alpha, n), 1))


@pytest.mark.parametrize("s, count", [({2: 1}, 1), ({3: 1}, 1), ({2: 2}, 0), ({4: 1}, 0)])
def test_counts_for_mu_2(s, count):
    assert kerov_count((2,), s) == count


def test_kerov_sigma_2_both_routes():
    assert kerov_polynomial_combinatorial((2,)) == K2
    assert kerov_oracle(2) == K2


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_count_matches_oracle(k):
    assert kerov_polynomial_combinatorial((k,)) == kerov_oracle(k)


def test_kerov_small():
    assert kerov_polynomial_combinatorial((1,)) == KerovPolynomial({((2, 1),): 2})
    assert kerov_oracle(1) == KerovPolynomial({((2, 1),): 2})


@pytest.mark.parametrize("k", [1, 2, 3])
def test_evaluation_identity(k):
    poly = kerov_polynomial_combinatorial((k,))
    for lam in LAM_5:
        assert poly.evaluate(cumulants(lam, 2, k + 1)) == zonal_character((k,), lam)


@pytest.mark.parametrize("mu", [(1, 1), (2, 1), (3, 1), (2, 2)])
def test_two_part_kerov_is_connected_part(mu):
    # K_(a,b) evaluates to Σ_a Σ_b - Σ_(a,b)
    a, b = mu
    poly = kerov_polynomial_combinatorial(mu)
    for lam in LAM_5:
        expected = zonal_character((a,), lam) * zonal_character((b,), lam) - zonal_character(mu, lam)
        assert poly.evaluate(cumulants(lam, 2, 6)) == expected


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_weight_bound(k):
    poly = kerov_polynomial_combinatorial((k,))
    assert all(s_weight(s) <= k + 1 for s in poly.terms)
    top = [(s, c) for s, c in poly.terms.items() if s_weight(s) == k + 1]
    assert top == [(((k + 1, 1),), Fraction(2) ** k)]


@pytest.mark.parametrize("mu", MU_4)
def test_marriage_condition_only_removes(mu):
    for s in _cumulant_monomials(2 * mu.size + 1):
        assert kerov_count(mu, s, marriage=False) >= kerov_count(mu, s)


def test_marriage_condition_examples():
    a, b = frozenset({0}), frozenset({0, 1})
    assert marriage_condition([a, b], [2, 2]) is False  # {a} has one neighbour, needs > 1
    assert marriage_condition([b, b], [2, 2]) is True
    assert marriage_condition([a], [5]) is True  # no nontrivial subsets


@pytest.mark.parametrize("mu", MU_4)
def test_integrality_and_divisibility(mu):
    report = kerov_integrality_report(mu)
    assert report.passed, report.witness
    for s, c in report.polynomial.terms.items():
        assert c.denominator == 1
        assert c.numerator % 2 ** sum((j - 1) * e for j, e in s) == 0


def test_integrality_report_examples():
    assert kerov_integrality_report((2,)).polynomial == K2
    assert kerov_integrality_report((1,)).polynomial.coefficient({2: 1}) == 2
    assert kerov_integrality_report((2, 1)).passed


def test_symplectic_kerov_sigma_2():
    assert symplectic_kerov((2,)) == KerovPolynomial({((2, 1),): Fraction(1, 4), ((3, 1),): Fraction(1, 4)})


@pytest.mark.parametrize("mu", MU_4)
def test_symplectic_kerov_nonnegative(mu):
    assert all(c > 0 for c in symplectic_kerov(mu).terms.values())


@pytest.mark.parametrize("k", [1, 2, 3])
def test_symplectic_evaluation(k):
    poly = symplectic_kerov((k,))
    for lam in LAM_5:
        assert poly.evaluate(cumulants(lam, Fraction(1, 2), k + 1)) == symplectic_character((k,), lam)


def test_capacities():
    with pytest.raises(CapacityError):
        kerov_count((6,), {2: 1})
    with pytest.raises(CapacityError):
        kerov_oracle(5)
    with pytest.raises(ValueError):
        kerov_polynomial_combinatorial(())


def test_solver():
    one = Fraction(1)
    cols = [{"a": one}, {"a": one, "b": one}]
    assert _solve_exact(cols, {"a": Fraction(3), "b": Fraction(2)}) == [1, 2]
    assert _solve_exact([{"a": one}, {"a": Fraction(2)}], {"a": one}) is None
    with pytest.raises(ArithmeticError):
        _solve_exact([{"a": one}], {"b": one})


def test_parallel_counts_identical():
    assert kerov_polynomial_combinatorial((2, 2), workers=2) == kerov_polynomial_combinatorial((2, 2))
