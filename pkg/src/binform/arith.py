"""Exact elementary number theory: Jacobi/Legendre symbols, residues,
rational arithmetic modulo a prime, factorization, totient and Moebius.

Everything here works on plain Python integers and is pure; all functions
are safe to call concurrently.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd, isqrt

# Deterministic Miller-Rabin witnesses; sound for every n < 3.3e24, far past
# the 64-bit magnitudes this library targets.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_BOUND = 1 << 20


@dataclass(frozen=True)
class Residue:
    """An integer reduced into [0, m) paired with its modulus m >= 2.

    Arithmetic between two residues demands equal moduli and raises on a
    mismatch rather than coercing.  Plain ints mix freely (they are reduced
    into the residue's modulus first).
    """

    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be at least 2, got {self.modulus}")
        object.__setattr__(self, "value", int(self.value) % self.modulus)

    def _operand(self, other: object) -> int | None:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return other
        return None

    def __add__(self, other):
        v = self._operand(other)
        if v is None:
            return NotImplemented
        return Residue(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._operand(other)
        if v is None:
            return NotImplemented
        return Residue(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._operand(other)
        if v is None:
            return NotImplemented
        return Residue(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._operand(other)
        if v is None:
            return NotImplemented
        return Residue(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(-self.value, self.modulus)

    def __pow__(self, exponent: int):
        return mod_pow(self, exponent)

    def __int__(self) -> int:
        return self.value

    @property
    def signed(self) -> int:
        """The representative in (-m/2, m/2]."""
        return self.value if 2 * self.value <= self.modulus else self.value - self.modulus

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"


def mod_pow(base: Residue, exponent: int) -> Residue:
    """base**exponent; a negative exponent means powers of the inverse.

    Raises ValueError when a negative exponent is applied to a residue that
    is not invertible modulo its modulus.
    """
    return Residue(pow(base.value, exponent, base.modulus), base.modulus)


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1; (a/1) = 1.

    Computed by the binary reciprocity algorithm; equals the Legendre symbol
    when n is prime, and depends only on a mod n.
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs a positive odd n, got {n}")
    a %= n
    t = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                t = -t
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            t = -t
        a %= n
    return t if n == 1 else 0


def rational_mod_p(num: int, den: int, p: int) -> Residue:
    """The unique r in [0, p) with num = den*r (mod p), for odd prime p.

    Raises ZeroDivisionError when p divides den (a pole: the fraction is not
    a p-integral value, so no residue exists).
    """
    _require_odd_prime(p)
    if den % p == 0:
        raise ZeroDivisionError(f"denominator {den} is divisible by {p}")
    return Residue(num * pow(den, -1, p), p)


def legendre_of_padic(num: int, den: int, p: int) -> int:
    """Legendre symbol of the fraction num/den read modulo the odd prime p.

    Equals jacobi(num*den, p); implemented through the residue of num/den.
    """
    return jacobi(rational_mod_p(num, den, p).value, p)


@dataclass(frozen=True)
class Factorization:
    """Prime factorization of a positive integer as ordered (prime, exponent)
    pairs; value 1 carries the empty factor list."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"factorization needs a positive value, got {self.value}")
        prod = 1
        prev = 1
        for p, e in self.factors:
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if p <= prev:
                raise ValueError("primes must be strictly increasing")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p
            prod *= p ** e
        if prod != self.value:
            raise ValueError(f"factors multiply to {prod}, not {self.value}")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (exact below 3.3e24)."""
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    # n odd composite with no factor below the trial bound
    for c in itertools.count(1):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = gcd(abs(x - y), n)
        if d != n:
            return d


def factorize(n: int) -> Factorization:
    """Factor a positive integer: trial division below 2**20, then
    Miller-Rabin plus Pollard rho for any remaining cofactor."""
    if n < 1:
        raise ValueError(f"cannot factor {n}; need a positive integer")
    value = n
    counts: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            counts[p] = counts.get(p, 0) + 1
            n //= p
    f = 5
    while f * f <= n and f < _TRIAL_BOUND:
        for p in (f, f + 2):
            while n % p == 0:
                counts[p] = counts.get(p, 0) + 1
                n //= p
        f += 6
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            counts[m] = counts.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.append(d)
        stack.append(m // d)
    return Factorization(value, tuple(sorted(counts.items())))


def totient(f: Factorization) -> int:
    """Euler's totient from a factorization."""
    out = 1
    for p, e in f.factors:
        out *= (p - 1) * p ** (e - 1)
    return out


def moebius(f: Factorization) -> int:
    """Moebius function: 0 on a squared factor, else (-1)**(#primes)."""
    if any(e > 1 for _, e in f.factors):
        return 0
    return -1 if len(f.factors) % 2 else 1


def is_squarefree(f: Factorization) -> bool:
    return all(e == 1 for _, e in f.factors)


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, by sieve."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p::p] = b"\x00" * len(sieve[p * p::p])
    return [i for i, flag in enumerate(sieve) if flag]


def residue_value(x: int | Residue, modulus: int) -> int:
    """Reduce a coefficient (int or Residue) into [0, modulus).

    A Residue must already carry the same modulus; anything else is a
    caller error, never coerced.
    """
    if isinstance(x, Residue):
        if x.modulus != modulus:
            raise ValueError(f"modulus mismatch: expected {modulus}, got {x.modulus}")
        return x.value
    return int(x) % modulus


def _require_odd_prime(p: int) -> None:
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")
