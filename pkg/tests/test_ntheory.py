import math
from fractions import Fraction

import pytest

from cyclo.ntheory import binomial, divisors, is_prime, moebius, rat_normalize, totient
from oracles import moebius_brute, pascal_binomial, phi_brute


@pytest.mark.parametrize("n,expected", [(1, 1), (9, 6), (100, 40)])
def test_totient_examples(n, expected):
    assert totient(n) == expected
    assert phi_brute(n) == expected


def test_totient_matches_brute_force():
    for n in range(1, 200):
        assert totient(n) == phi_brute(n)


def test_totient_multiplicative_on_coprime_args():
    for a in range(1, 51):
        for b in range(1, 51):
            if math.gcd(a, b) == 1:
                assert totient(a * b) == totient(a) * totient(b)


def test_totient_divisor_sum():
    for n in range(1, 1001):
        assert sum(totient(d) for d in divisors(n)) == n


def test_totient_rejects_zero():
    with pytest.raises(ValueError):
        totient(0)


@pytest.mark.parametrize("n,expected", [(1, 1), (12, 0), (6, 1)])
def test_moebius_examples(n, expected):
    assert moebius(n) == expected
    assert moebius_brute(n) == expected


def test_moebius_divisor_sum():
    assert sum(moebius(d) for d in divisors(1)) == 1
    for n in range(2, 1001):
        assert sum(moebius(d) for d in divisors(n)) == 0


@pytest.mark.parametrize("n,k,expected", [(7, 0, 1), (5, 2, 10), (4, 5, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected
    assert pascal_binomial(n, k) == expected


def test_binomial_matches_pascal():
    for n in range(12):
        for k in range(15):
            assert binomial(n, k) == pascal_binomial(n, k)


@pytest.mark.parametrize(
    "num,den,expected",
    [(2, 4, Fraction(1, 2)), (3, -6, Fraction(-1, 2)), (0, 5, Fraction(0, 1))],
)
def test_rat_normalize_examples(num, den, expected):
    got = rat_normalize(num, den)
    assert got == expected
    assert got.denominator > 0
    assert math.gcd(abs(got.numerator), got.denominator) == 1


def test_rat_normalize_zero_denominator():
    with pytest.raises(ZeroDivisionError, match="division by zero"):
        rat_normalize(1, 0)


def test_rat_normalize_idempotent():
    import random

    rng = random.Random(11)
    for _ in range(200):
        num = rng.randint(-500, 500)
        den = rng.randint(1, 500) * rng.choice([-1, 1])
        r = rat_normalize(num, den)
        again = rat_normalize(r.numerator, r.denominator)
        assert again == r
        assert r.denominator > 0
        assert math.gcd(abs(r.numerator), r.denominator) == 1
        assert (r.numerator, r.denominator) != (0, -1)


def test_is_prime_small():
    sieve = [True] * 200
    sieve[0] = sieve[1] = False
    for i in range(2, 200):
        if sieve[i]:
            for j in range(i * i, 200, i):
                sieve[j] = False
    for n in range(200):
        assert is_prime(n) == sieve[n]
