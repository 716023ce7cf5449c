"""Independent reference implementations used to derive expected values.

Each oracle takes a different route than the library: brute-force counts,
the Moebius product over sparse binomials, Sylvester determinants via
Bareiss elimination, Galois-conjugate folding, and multiplication-matrix
traces.  They are deliberately slow and simple.
"""

import math
from functools import reduce

from cyclo.ntheory import totient
from cyclo.polys import Poly
from cyclo.ring import CycElt, zeta_pow


def phi_brute(n):
    return sum(1 for k in range(1, n + 1) if math.gcd(k, n) == 1)


def moebius_brute(n):
    mu, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    return -mu if n > 1 else mu


def pascal_binomial(n, k):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row[k] if k < len(row) else 0


# -- cyclotomic polynomial via the Moebius product --------------------------


def _mul_binomial(coeffs, m):
    """coeffs * (X^m - 1), on plain lists."""
    out = [0] * (len(coeffs) + m)
    for i, c in enumerate(coeffs):
        out[i + m] += c
        out[i] -= c
    while out and out[-1] == 0:
        out.pop()
    return out


def _div_binomial(coeffs, m):
    """Exact division of coeffs by (X^m - 1), on plain lists."""
    D = len(coeffs) - 1
    q = [0] * (D - m + 1)
    for i in range(D - m, -1, -1):
        q[i] = coeffs[i + m] + (q[i + m] if i + m <= D - m else 0)
    assert _mul_binomial(q, m) == coeffs, "inexact binomial division"
    return q


def cyclotomic_moebius(n):
    """Phi_n as prod over d | n of (X^(n/d) - 1)^moebius(d), coefficient list."""
    pos = [n // d for d in range(1, n + 1) if n % d == 0 and moebius_brute(d) == 1]
    neg = [n // d for d in range(1, n + 1) if n % d == 0 and moebius_brute(d) == -1]
    coeffs = [1]
    for m in pos:
        coeffs = _mul_binomial(coeffs, m)
    for m in neg:
        coeffs = _div_binomial(coeffs, m)
    return Poly(coeffs)


def cyclotomic_by_definition(n, _memo={}):
    """Phi_n by the literal definition (X^n - 1) / prod of proper-divisor
    cyclotomics, all recursively from this same definition."""
    if n in _memo:
        return _memo[n]
    f = Poly.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            f, r = divmod(f, cyclotomic_by_definition(d))
            assert not r
    _memo[n] = f
    return f


# -- resultant via the Sylvester matrix --------------------------------------


def bareiss_det(M):
    M = [row[:] for row in M]
    n = len(M)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def sylvester_resultant(f, g):
    m, n = f.degree, g.degree
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    size = m + n
    M = [[0] * i + fc + [0] * (size - i - len(fc)) for i in range(n)]
    M += [[0] * i + gc + [0] * (size - i - len(gc)) for i in range(m)]
    return bareiss_det(M)


# -- norm and trace by alternate routes ---------------------------------------


def conjugate_product_norm(a):
    """Product of all Galois conjugates, folded in the ring."""
    conjs = [a.galois(k) for k in range(1, a.n + 1) if math.gcd(k, a.n) == 1]
    return reduce(lambda u, v: u * v, conjs).as_scalar()


def mult_matrix_trace(a):
    """Trace of the phi(n) x phi(n) multiplication-by-a matrix."""
    return sum((a * zeta_pow(a.n, i)).coeffs[i] for i in range(totient(a.n)))


def rand_elt(rng, n, lo=-9, hi=9, max_den=1):
    """Random element with coordinates in [lo, hi] (over max_den > 1,
    random denominators up to max_den)."""
    d = totient(n)
    if max_den > 1:
        from fractions import Fraction

        return CycElt(n, [Fraction(rng.randint(lo, hi), rng.randint(1, max_den)) for _ in range(d)])
    return CycElt(n, [rng.randint(lo, hi) for _ in range(d)])
