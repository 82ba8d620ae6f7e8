"""Matrix families generated by the binary form i^2 + c*i*j + d*j^2.

Three Jacobi-symbol families (index ranges 0..n-1, 1..n-1 and 2..n-2 of an
odd modulus n) and three power families over a prime field (the form raised
to an exponent over 0..p-1, 1..p-1 or 2..p-2), plus shifted-power matrices
x + H(i,j) for a bivariate form H and matrices of a polynomial evaluated at
the ratios i/j mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Sequence

from .arith import Residue, is_prime, jacobi, residue_value
from .detkit import IntMatrix, det_exact, det_mod_p


class FamilyKind(Enum):
    SYMBOL_BRACKET = "bracket"    # Jacobi symbols, indices 0..n-1
    SYMBOL_PAREN = "paren"        # Jacobi symbols, indices 1..n-1
    SYMBOL_BRACE = "brace"        # Jacobi symbols, indices 2..n-2
    POWER_FULL = "dp"             # form^e mod p, indices 1..p-1
    POWER_INNER = "dp-inner"      # form^e mod p, indices 2..p-2
    POWER_ZERO_FULL = "dp-zero"   # form^e mod p, indices 0..p-1
    SHIFTED_POWER = "shifted"     # x + H(i,j) mod p, indices 1..p-1

    @property
    def is_symbol(self) -> bool:
        return self in (FamilyKind.SYMBOL_BRACKET, FamilyKind.SYMBOL_PAREN,
                        FamilyKind.SYMBOL_BRACE)

    @property
    def is_power(self) -> bool:
        return self in (FamilyKind.POWER_FULL, FamilyKind.POWER_INNER,
                        FamilyKind.POWER_ZERO_FULL)


@dataclass(frozen=True)
class FormFamily:
    """Selects one matrix family; only the fields meaningful for the kind
    may be set.

    Power kinds require a nonnegative exponent.  The shifted kind carries
    the additive shift x and either an explicit coefficient list for
    H(X,Y) = sum a_k X^k Y^(n-k), or c, d and an exponent meaning
    H = (X^2 + c*X*Y + d*Y^2)^e.
    """

    kind: FamilyKind
    c: int = 0
    d: int = 0
    exponent: int | None = None
    shift: int | None = None
    coeffs: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind.is_symbol:
            if self.exponent is not None or self.shift is not None or self.coeffs is not None:
                raise ValueError(f"{self.kind.value} takes only c and d")
        elif self.kind.is_power:
            if self.exponent is None or self.exponent < 0:
                raise ValueError(f"{self.kind.value} needs a nonnegative exponent")
            if self.shift is not None or self.coeffs is not None:
                raise ValueError(f"{self.kind.value} takes no shift or coefficient list")
        else:  # SHIFTED_POWER
            if self.shift is None:
                raise ValueError("shifted family needs a shift value")
            if (self.coeffs is None) == (self.exponent is None):
                raise ValueError(
                    "shifted family needs exactly one of: a coefficient list, "
                    "or c, d and an exponent")
            if self.exponent is not None and self.exponent < 0:
                raise ValueError("exponent must be nonnegative")
        if self.coeffs is not None:
            object.__setattr__(self, "coeffs", tuple(int(a) for a in self.coeffs))

    @classmethod
    def bracket(cls, c: int, d: int) -> "FormFamily":
        return cls(FamilyKind.SYMBOL_BRACKET, c, d)

    @classmethod
    def paren(cls, c: int, d: int) -> "FormFamily":
        return cls(FamilyKind.SYMBOL_PAREN, c, d)

    @classmethod
    def brace(cls, c: int, d: int) -> "FormFamily":
        return cls(FamilyKind.SYMBOL_BRACE, c, d)

    @classmethod
    def power_full(cls, c: int, d: int, exponent: int) -> "FormFamily":
        return cls(FamilyKind.POWER_FULL, c, d, exponent=exponent)

    @classmethod
    def power_inner(cls, c: int, d: int, exponent: int) -> "FormFamily":
        return cls(FamilyKind.POWER_INNER, c, d, exponent=exponent)

    @classmethod
    def power_zero_full(cls, c: int, d: int, exponent: int) -> "FormFamily":
        return cls(FamilyKind.POWER_ZERO_FULL, c, d, exponent=exponent)

    @classmethod
    def shifted(cls, shift: int, *, coeffs: Sequence[int] | None = None,
                c: int = 0, d: int = 0, exponent: int | None = None) -> "FormFamily":
        return cls(FamilyKind.SHIFTED_POWER, c, d, exponent=exponent,
                   shift=shift, coeffs=tuple(coeffs) if coeffs is not None else None)


# (first index, exclusive-end offset from the modulus, smallest legal modulus)
_SYMBOL_RANGES = {
    FamilyKind.SYMBOL_BRACKET: (0, 0, 3),   # 0..n-1
    FamilyKind.SYMBOL_PAREN: (1, 0, 3),     # 1..n-1
    FamilyKind.SYMBOL_BRACE: (2, 1, 5),     # 2..n-2
}

_POWER_RANGES = {
    FamilyKind.POWER_ZERO_FULL: (0, 0, 3),  # 0..p-1
    FamilyKind.POWER_FULL: (1, 0, 3),       # 1..p-1
    FamilyKind.POWER_INNER: (2, 1, 5),      # 2..p-2
}


@lru_cache(maxsize=256)
def _jacobi_table(n: int) -> tuple[int, ...]:
    return tuple(jacobi(x, n) for x in range(n))


@lru_cache(maxsize=64)
def _inverse_table(p: int) -> tuple[int, ...]:
    # x^(p-2) mod p: 0 at 0, the multiplicative inverse elsewhere
    inv = [0] * p
    if p > 1:
        inv[1 % p] = 1 % p
    for x in range(2, p):
        inv[x] = (p - (p // x) * inv[p % x]) % p
    return tuple(inv)


def symbol_matrix(family: FormFamily, n: int) -> IntMatrix:
    """Matrix of Jacobi symbols ((i^2+cij+dj^2)/n) over the family's index
    range; entries are in {-1, 0, 1}."""
    if not family.kind.is_symbol:
        raise ValueError(f"{family.kind.value} is not a symbol family")
    lo, end_offset, n_min = _SYMBOL_RANGES[family.kind]
    if n % 2 == 0 or n < n_min:
        raise ValueError(
            f"{family.kind.value} needs an odd n >= {n_min}, got {n}")
    hi = n - end_offset
    table = _jacobi_table(n)
    c, d = family.c, family.d
    rows = [[table[(i * i + c * i * j + d * j * j) % n] for j in range(lo, hi)]
            for i in range(lo, hi)]
    return IntMatrix(rows, index_offset=lo)


def bracket_cd(c: int, d: int, n: int) -> int:
    """Exact determinant of the symbol matrix over indices 0..n-1."""
    return det_exact(symbol_matrix(FormFamily.bracket(c, d), n))


def paren_cd(c: int, d: int, n: int) -> int:
    """Exact determinant of the symbol matrix over indices 1..n-1."""
    return det_exact(symbol_matrix(FormFamily.paren(c, d), n))


def brace_cd(c: int, d: int, n: int) -> int:
    """Exact determinant of the symbol matrix over indices 2..n-2 (odd n >= 5)."""
    return det_exact(symbol_matrix(FormFamily.brace(c, d), n))


def power_matrix(family: FormFamily, p: int) -> IntMatrix:
    """Matrix of (i^2+cij+dj^2)^e mod p over the family's index range.

    Bases are reduced mod p before exponentiation and 0^0 = 1, so exponent 0
    yields the all-ones matrix.  Exponent p-2 goes through an inverse table
    (it is the modular reciprocal away from zeros).
    """
    if not family.kind.is_power:
        raise ValueError(f"{family.kind.value} is not a power family")
    lo, end_offset, p_min = _POWER_RANGES[family.kind]
    if not is_prime(p) or p % 2 == 0 or p < p_min:
        raise ValueError(
            f"{family.kind.value} needs an odd prime p >= {p_min}, got {p}")
    hi = p - end_offset
    c, d, e = family.c, family.d, family.exponent
    if e == p - 2:
        table = _inverse_table(p)
        rows = [[table[(i * i + c * i * j + d * j * j) % p] for j in range(lo, hi)]
                for i in range(lo, hi)]
    else:
        rows = [[pow((i * i + c * i * j + d * j * j) % p, e, p) for j in range(lo, hi)]
                for i in range(lo, hi)]
    return IntMatrix(rows, index_offset=lo)


def power_det_mod_p(family: FormFamily, p: int) -> Residue:
    """Determinant mod p of the power matrix for the family."""
    return det_mod_p(power_matrix(family, p), p)


def shifted_power_matrix(family: FormFamily, p: int) -> IntMatrix:
    """Matrix with entries x + H(i,j) mod p over indices 1..p-1."""
    if family.kind is not FamilyKind.SHIFTED_POWER:
        raise ValueError(f"{family.kind.value} is not the shifted family")
    if not is_prime(p) or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    x = family.shift
    if family.coeffs is not None:
        return _shifted_coeff_matrix(family.coeffs, x, p)
    c, d, e = family.c, family.d, family.exponent
    rows = [[(x + pow((i * i + c * i * j + d * j * j) % p, e, p)) % p
             for j in range(1, p)] for i in range(1, p)]
    return IntMatrix(rows, index_offset=1)


def _shifted_coeff_matrix(coeffs: Sequence[int | Residue], x: int, p: int) -> IntMatrix:
    a = [residue_value(v, p) for v in coeffs]
    n = len(a) - 1
    powers = []
    for i in range(p):
        row = [1 % p]
        for _ in range(n):
            row.append(row[-1] * i % p)
        powers.append(row)
    rows = [[(x + sum(a[k] * powers[i][k] * powers[j][n - k] for k in range(n + 1))) % p
             for j in range(1, p)] for i in range(1, p)]
    return IntMatrix(rows, index_offset=1)


def shifted_power_det_mod_p(coeffs: Sequence[int | Residue], x: int, p: int) -> Residue:
    """Determinant mod p of the (p-1)x(p-1) matrix with entries
    x + sum_k a_k i^k j^(n-k), where n = len(coeffs) - 1."""
    if not is_prime(p) or p % 2 == 0:
        raise ValueError(f"p must be an odd prime, got {p}")
    if len(coeffs) == 0:
        raise ValueError("need at least one coefficient")
    return det_mod_p(_shifted_coeff_matrix(coeffs, x, p), p)


def rational_matrix_det_mod_p(coeffs: Sequence[int | Residue], p: int) -> Residue:
    """Determinant mod p of the (p-3)x(p-3) matrix with entries P(i * j^-1)
    for i, j in 2..p-2, where P(T) = sum_k a_k T^k with p-1 coefficients."""
    if not is_prime(p) or p < 5:
        raise ValueError(f"p must be a prime >= 5, got {p}")
    if len(coeffs) != p - 1:
        raise ValueError(f"need exactly {p - 1} coefficients, got {len(coeffs)}")
    a = [residue_value(v, p) for v in coeffs]
    values = [0] * p
    for t in range(1, p):
        acc = 0
        for coeff in reversed(a):
            acc = (acc * t + coeff) % p
        values[t] = acc
    inv = _inverse_table(p)
    rows = [[values[i * inv[j] % p] for j in range(2, p - 1)] for i in range(2, p - 1)]
    return det_mod_p(IntMatrix(rows, index_offset=2), p)
