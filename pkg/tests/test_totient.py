from math import gcd, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import consecutive_coprime_count, euler_phi
from trilattice import (
    DomainError,
    epsilon,
    factorize,
    generalized_totient,
    schemmel,
    schemmel_bruteforce,
)


@pytest.mark.parametrize(
    "n, factors",
    [(15, ((3, 1), (5, 1))), (1, ()), (360, ((2, 3), (3, 2), (5, 1))), (97, ((97, 1),)), (1024, ((2, 10),))],
)
def test_factorize(n, factors):
    f = factorize(n)
    assert f.factors == factors
    assert f.value() == n


def test_factorize_zero():
    with pytest.raises(DomainError):
        factorize(0)


def _is_prime(p):
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@given(st.integers(1, 10**7))
def test_factorization_invariants(n):
    f = factorize(n)
    assert prod(p**c for p, c in f.factors) == n
    ps = [p for p, _ in f.factors]
    assert ps == sorted(set(ps))
    assert all(_is_prime(p) and c >= 1 for p, c in f.factors)


@pytest.mark.parametrize("p, m, expected", [(3, 0, 1), (3, 1, 2), (5, 10, 1), (7, 3, 2)])
def test_epsilon(p, m, expected):
    assert epsilon(p, m) == expected


@pytest.mark.parametrize(
    "k, m, expected", [(15, 1, 3), (14, 1, 0), (12, 0, 4), (1, 0, 1), (1, 1, 1), (1, 5, 1)]
)
def test_generalized_totient(k, m, expected):
    assert generalized_totient(k, m) == expected


@pytest.mark.parametrize(
    "k, expected", [(9, 3), (3, 1), (1, 1), (5, 3), (15, 3), (7, 5), (2, 0), (25, 15)]
)
def test_schemmel(k, expected):
    assert schemmel(k) == expected


@pytest.mark.parametrize("n, expected", [(15, 3), (2, 0), (7, 5), (1, 1)])
def test_schemmel_bruteforce(n, expected):
    assert schemmel_bruteforce(n) == expected


def test_schemmel_formula_matches_count():
    for n in range(1, 1200):
        assert schemmel(n) == schemmel_bruteforce(n) == consecutive_coprime_count(n)


def test_euler_specialization():
    for k in range(1, 2001):
        assert generalized_totient(k, 0) == euler_phi(k)


@given(st.integers(1, 1000), st.integers(1, 1000), st.sampled_from([0, 1, 2, 3]))
def test_multiplicativity(a, b, m):
    if gcd(a, b) != 1:
        return
    assert generalized_totient(a, m) * generalized_totient(b, m) == generalized_totient(a * b, m)


def test_multiplicativity_exhaustive_small():
    for a in range(1, 120):
        for b in range(1, 120):
            if gcd(a, b) == 1:
                for m in range(4):
                    assert generalized_totient(a, m) * generalized_totient(b, m) == generalized_totient(a * b, m)


def test_vanishing_iff_even():
    for k in range(1, 5000):
        assert (schemmel(k) == 0) == (k % 2 == 0)


def test_small_schemmel_values():
    small = {k for k in range(1, 100001) if schemmel(k) < 5}
    assert small == {k for k in range(1, 100001) if k % 2 == 0} | {1, 3, 5, 9, 15}


@pytest.mark.parametrize("bad", [(0, 1), (-3, 1), (5, -1)])
def test_totient_domain(bad):
    with pytest.raises(DomainError):
        generalized_totient(*bad)
