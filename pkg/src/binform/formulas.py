"""Closed-form right-hand sides for the determinant families.

Covers: the shifted-power determinant formulas, the parity-class product
formula for determinants of a polynomial at ratios i/j mod p, the
coefficients of (T^2+T+1)^(p-2) as a polynomial over the prime field, the
two rational sums entering the inner power determinant at (c,d) = (1,1),
and the factorial determinant identity for polynomial value grids.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import factorial
from typing import Sequence

from .arith import Residue, is_prime, jacobi, mod_pow, rational_mod_p, residue_value
from .detkit import IntMatrix, det_exact


def shift_closed_form(coeffs: Sequence[int | Residue], x: int, p: int) -> Residue:
    """Predicted determinant mod p of [x + sum_k a_k i^k j^(n-k)] over
    indices 1..p-1, where n = len(coeffs) - 1 and p-2 <= n <= 2p-3.

    For n = p-1 the value is (x + a_0 + a_{p-1}) * prod_{k=1}^{p-2} a_k.
    Otherwise it is (-1)^n times the product over k = 0..p-2 of the sums of
    coefficients whose index is congruent to k mod p-1.
    """
    if not is_prime(p) or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    n = len(coeffs) - 1
    if not p - 2 <= n <= 2 * p - 3:
        raise ValueError(
            f"form degree {n} outside the supported range [{p - 2}, {2 * p - 3}]")
    a = [residue_value(v, p) for v in coeffs]
    if n == p - 1:
        out = (x + a[0] + a[p - 1]) % p
        for k in range(1, p - 1):
            out = out * a[k] % p
        return Residue(out, p)
    out = 1
    for k in range(p - 1):
        out = out * (sum(a[k::p - 1]) % p) % p
    if n % 2:
        out = -out % p
    return Residue(out, p)


def x_independence_applicable(n: int, p: int) -> bool:
    """Whether det[x + (i^2+cij+dj^2)^n] mod p over indices 1..p-1 is
    independent of x, i.e. n lies in [(p+1)/2, p-2]."""
    if not is_prime(p) or p <= 3:
        raise ValueError(f"p must be a prime > 3, got {p}")
    return (p + 1) // 2 <= n <= p - 2


def rational_det_closed_form(coeffs: Sequence[int | Residue], p: int) -> Residue:
    """Predicted determinant mod p of [P(i * j^-1)] over indices 2..p-2.

    With hat(a_k) the product of all same-parity coefficients except a_k,
    the value is 4 * (sum of even-index hats) * (sum of odd-index hats).
    Each hat is formed by direct multiplication, never by dividing the class
    product by a_k, so planted zeros are handled exactly.
    """
    if not is_prime(p) or p < 5:
        raise ValueError(f"p must be a prime >= 5, got {p}")
    if len(coeffs) != p - 1:
        raise ValueError(f"need exactly {p - 1} coefficients, got {len(coeffs)}")
    a = [residue_value(v, p) for v in coeffs]

    def hat_sum(cls: list[int]) -> int:
        total = 0
        for k in range(len(cls)):
            prod = 1
            for j, v in enumerate(cls):
                if j != k:
                    prod = prod * v % p
            total = (total + prod) % p
        return total

    evens = hat_sum(a[0::2])
    odds = hat_sum(a[1::2])
    return Residue(4 * evens * odds, p)


def trinomial_power_coeffs(p: int) -> list[Residue]:
    """Coefficients a_0..a_{p-2} of a polynomial P with
    (T^2+T+1)^(p-2) = P(T) (mod p) for every T in 1..p-1.

    For p = 1 (mod 3): a_k = k + 5/3, -k - 4/3, -1/3 as k = 0, 1, 2 (mod 3).
    For p = 2 (mod 3): a_k = 1/3 for k = 0, 2 (mod 3) and -2/3 for k = 1.
    """
    if not is_prime(p) or p <= 3:
        raise ValueError(f"p must be a prime > 3, got {p}")
    out = []
    if p % 3 == 1:
        for k in range(p - 1):
            if k % 3 == 0:
                out.append(rational_mod_p(3 * k + 5, 3, p))
            elif k % 3 == 1:
                out.append(rational_mod_p(-(3 * k + 4), 3, p))
            else:
                out.append(rational_mod_p(-1, 3, p))
    else:
        third = rational_mod_p(1, 3, p)
        minus_two_thirds = rational_mod_p(-2, 3, p)
        for k in range(p - 1):
            out.append(third if k % 3 in (0, 2) else minus_two_thirds)
    return out


def sigma_sums(p: int) -> tuple[Residue, Residue]:
    """The two rational sums, reduced mod p, for a prime p = 1 (mod 3):

        S1 = sum_{k=1}^{(p-1)/6} (1/(18k-13) - 1/(18k-2)) + 1/6
        S2 = sum_{k=1}^{(p-1)/6} (1/(18k-4) - 1/(18k-11)) + 1/6

    Evaluated termwise; a denominator divisible by p raises
    ZeroDivisionError (this cannot happen when p = 1, 4 mod 9).
    """
    if not is_prime(p) or p % 3 != 1:
        raise ValueError(f"p must be a prime with p = 1 (mod 3), got {p}")
    s1 = rational_mod_p(1, 6, p)
    s2 = rational_mod_p(1, 6, p)
    for k in range(1, (p - 1) // 6 + 1):
        s1 = s1 + rational_mod_p(1, 18 * k - 13, p) - rational_mod_p(1, 18 * k - 2, p)
        s2 = s2 + rational_mod_p(1, 18 * k - 4, p) - rational_mod_p(1, 18 * k - 11, p)
    return s1, s2


class Dp11Case(Enum):
    TWO_MOD_3 = "p = 2 (mod 3)"
    SEVEN_MOD_9 = "p = 7 (mod 9)"
    ONE_FOUR_MOD_9 = "p = 1,4 (mod 9)"
    UNSUPPORTED = "unsupported"


@dataclass(frozen=True)
class Dp11Prediction:
    """Prediction for the inner power determinant at (c, d) = (1, 1) with
    exponent p-2, split by the residue class of p.

    TWO_MOD_3 fixes the residue 2^((p-8)/3) * 3^4 and the Legendre symbol
    (2/p); SEVEN_MOD_9 fixes the residue 0; ONE_FOUR_MOD_9 fixes only the
    Legendre symbol, through the two rational sums.
    """

    case: Dp11Case
    residue: Residue | None = None
    symbol: int | None = None
    sigma1: Residue | None = None
    sigma2: Residue | None = None

    def __post_init__(self) -> None:
        have = (self.residue is not None, self.symbol is not None,
                self.sigma1 is not None, self.sigma2 is not None)
        expected = {
            Dp11Case.TWO_MOD_3: (True, True, False, False),
            Dp11Case.SEVEN_MOD_9: (True, False, False, False),
            Dp11Case.ONE_FOUR_MOD_9: (False, True, True, True),
            Dp11Case.UNSUPPORTED: (False, False, False, False),
        }[self.case]
        if have != expected:
            raise ValueError(f"fields inconsistent with case {self.case}")
        if self.case is Dp11Case.SEVEN_MOD_9 and self.residue.value != 0:
            raise ValueError("the 7 (mod 9) case predicts residue 0")


def predict_dp11(p: int) -> Dp11Prediction:
    """Case-split prediction of the inner power determinant at (1, 1).

    p = 3 yields the unsupported case; even or composite p is an error.
    """
    if p == 3:
        return Dp11Prediction(Dp11Case.UNSUPPORTED)
    if not is_prime(p) or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    if p % 3 == 2:
        # (p-8)/3 is exact and odd here; it is -1 only at p = 5
        residue = mod_pow(Residue(2, p), (p - 8) // 3) * 81
        return Dp11Prediction(Dp11Case.TWO_MOD_3, residue=residue,
                              symbol=jacobi(2, p))
    if p % 9 == 7:
        return Dp11Prediction(Dp11Case.SEVEN_MOD_9, residue=Residue(0, p))
    s1, s2 = sigma_sums(p)
    return Dp11Prediction(Dp11Case.ONE_FOUR_MOD_9, symbol=jacobi(s1.value * s2.value, p),
                          sigma1=s1, sigma2=s2)


def poly_grid_det_identity(coeff_matrix: IntMatrix) -> tuple[int, int]:
    """Both sides of the factorial determinant identity.

    For P(x, j) = sum_k a_{jk} x^(k-1) (k = 1..n, coefficients from row j of
    the given matrix), returns (lhs, rhs) with lhs the exact determinant of
    [P(i, j)] over i, j = 1..n and rhs = 1!2!...(n-1)! times the determinant
    of the coefficient matrix.  The identity asserts lhs = rhs.
    """
    a = coeff_matrix.rows
    n = coeff_matrix.dim
    grid = [[sum(a[j][k] * i ** k for k in range(n)) for j in range(n)]
            for i in range(1, n + 1)]
    lhs = det_exact(IntMatrix(grid))
    superfact = 1
    for m in range(1, n):
        superfact *= factorial(m)
    rhs = superfact * det_exact(coeff_matrix)
    return lhs, rhs
