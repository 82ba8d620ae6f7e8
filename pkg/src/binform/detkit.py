"""Determinant engines.

Exact integer determinants come from fraction-free (Bareiss) elimination for
small matrices and from a multi-modular CRT reconstruction above that; prime
field determinants come from Gaussian elimination, vectorized with numpy for
word-size primes.
"""

from __future__ import annotations

from math import isqrt
from typing import Iterable, Sequence

import numpy as np

from .arith import Residue, is_prime

# Bareiss entries stay small enough to beat CRT below this dimension.
_BAREISS_MAX_DIM = 64

# Largest prime used on the numpy path: pivots and factors live in [0, p),
# so products stay below 2**62 and int64 arithmetic cannot overflow.
_NUMPY_MAX_PRIME = (1 << 31) - 1

# Entries at least this large are reduced in Python before touching int64.
_INT64_SAFE = 1 << 62

_ELIM_PYTHON_MAX_DIM = 10


class IntMatrix:
    """Dense square matrix of arbitrary-precision integers, row-major.

    ``index_offset`` records the label of the first row/column (0, 1 or 2)
    for matrices whose entries are indexed by their construction range; it
    has no effect on any determinant.
    """

    __slots__ = ("dim", "rows", "index_offset")

    def __init__(self, rows: Iterable[Sequence[int]], index_offset: int = 0):
        data = [[x if type(x) is int else int(x) for x in row] for row in rows]
        dim = len(data)
        if dim == 0:
            raise ValueError("matrix must have dimension >= 1")
        if any(len(row) != dim for row in data):
            raise ValueError("matrix must be square")
        if index_offset not in (0, 1, 2):
            raise ValueError(f"index_offset must be 0, 1 or 2, got {index_offset}")
        self.dim = dim
        self.rows = data
        self.index_offset = index_offset

    @classmethod
    def identity(cls, dim: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(dim)] for i in range(dim)])

    @classmethod
    def diagonal(cls, entries: Sequence[int]) -> "IntMatrix":
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def transpose(self) -> "IntMatrix":
        return IntMatrix([list(col) for col in zip(*self.rows)], self.index_offset)

    def __repr__(self) -> str:
        return f"IntMatrix(dim={self.dim}, index_offset={self.index_offset})"


def det_exact(m: IntMatrix) -> int:
    """Exact determinant over the integers.

    Fraction-free elimination up to dimension 64; the CRT engine beyond.
    """
    if m.dim <= _BAREISS_MAX_DIM:
        return _det_bareiss(m.rows)
    return det_exact_crt(m)


def _det_bareiss(rows: list[list[int]]) -> int:
    """Fraction-free elimination; every division is exact by construction.

    Pivot policy: first row below the diagonal with a nonzero leading entry,
    swapped in with a sign flip, so reruns are bit-identical.
    """
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                q, rem = divmod(row_i[j] * pivot - lead * row_k[j], prev)
                assert rem == 0, "fraction-free elimination produced a remainder"
                row_i[j] = q
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


_crt_prime_cache: list[int] = []


def _crt_primes() -> Iterable[int]:
    """Descending primes just below 2**31, extended on demand."""
    i = 0
    while True:
        while len(_crt_prime_cache) <= i:
            candidate = (_crt_prime_cache[-1] - 2) if _crt_prime_cache else _NUMPY_MAX_PRIME
            while not is_prime(candidate):
                candidate -= 2
            _crt_prime_cache.append(candidate)
        yield _crt_prime_cache[i]
        i += 1


def det_exact_crt(m: IntMatrix) -> int:
    """Exact determinant via per-prime residues and CRT reconstruction.

    Uses enough word-size primes for the combined modulus to exceed twice
    the Hadamard bound, then lifts into the symmetric range so the sign
    is recovered.
    """
    rows = m.rows
    h2 = 1
    for row in rows:
        s = sum(e * e for e in row)
        if s == 0:
            return 0
        h2 *= s
    # prod(row norms)^2 = h2 bounds det^2; work with integers throughout
    bound = 2 * (isqrt(h2) + 1)

    primes: list[int] = []
    modulus = 1
    for p in _crt_primes():
        primes.append(p)
        modulus *= p
        if modulus > bound:
            break
    assert modulus > bound, "CRT modulus must exceed twice the Hadamard bound"

    small = max(abs(e) for row in rows for e in row) < _INT64_SAFE
    arr = np.array(rows, dtype=np.int64) if small else None
    residues = []
    for p in primes:
        if arr is not None:
            residues.append(_elim_det_numpy(arr % p, p))
        else:
            reduced = np.array([[e % p for e in row] for row in rows], dtype=np.int64)
            residues.append(_elim_det_numpy(reduced, p))

    x = 0
    for r, p in zip(residues, primes):
        q = modulus // p
        x = (x + r * q * pow(q % p, -1, p)) % modulus
    return x if 2 * x < modulus else x - modulus


def _elim_det_numpy(m: np.ndarray, p: int) -> int:
    """Determinant mod p of an int64 array with entries already in [0, p).

    The array is consumed (mutated in place).
    """
    n = m.shape[0]
    det = 1
    for k in range(n):
        nz = np.nonzero(m[k:, k])[0]
        if nz.size == 0:
            return 0
        r = k + int(nz[0])
        if r != k:
            m[[k, r]] = m[[r, k]]
            det = p - det
        pivot = int(m[k, k])
        det = det * pivot % p
        if k + 1 < n:
            inv = pow(pivot, -1, p)
            factors = m[k + 1:, k] * inv % p
            m[k + 1:, k + 1:] = (m[k + 1:, k + 1:] - factors[:, None] * m[k, k + 1:]) % p
    return det


def _elim_det_python(rows: list[list[int]], p: int) -> int:
    m = [[x % p for x in row] for row in rows]
    n = len(m)
    det = 1
    for k in range(n):
        pivot_row = None
        for r in range(k, n):
            if m[r][k]:
                pivot_row = r
                break
        if pivot_row is None:
            return 0
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = p - det
        pivot = m[k][k]
        det = det * pivot % p
        inv = pow(pivot, -1, p)
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k] * inv % p
            if f:
                for j in range(k, n):
                    row_i[j] = (row_i[j] - f * row_k[j]) % p
    return det


def det_mod_p(m: IntMatrix, p: int) -> Residue:
    """Determinant modulo an odd prime, by Gaussian elimination over the
    field with p elements; singular matrices give the zero residue."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
    if m.dim <= _ELIM_PYTHON_MAX_DIM or p > _NUMPY_MAX_PRIME:
        return Residue(_elim_det_python(m.rows, p), p)
    reduced = np.array([[e % p for e in row] for row in m.rows], dtype=np.int64)
    return Residue(_elim_det_numpy(reduced, p), p)


def det_mod_m(m: IntMatrix, modulus: int) -> Residue:
    """Exact determinant reduced into [0, modulus); the modulus may be
    composite (no elimination over Z/m is attempted)."""
    if modulus < 2:
        raise ValueError(f"modulus must be at least 2, got {modulus}")
    return Residue(det_exact(m), modulus)
