"""Arithmetic in Z/kZ: factoring the modulus, unit inverses, CRT."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

MAX_MODULUS = 2**64


class NotAUnit(ArithmeticError):
    """Raised when inverting a residue that shares a factor with the modulus."""

    def __init__(self, value: int, modulus: int, gcd: int):
        self.value = value
        self.modulus = modulus
        self.gcd = gcd
        super().__init__(f"{value} is not a unit mod {modulus} (gcd={gcd})")


@dataclass(frozen=True)
class Modulus:
    """A modulus ``k`` together with its factorization into prime powers.

    ``factors`` lists ``(p, e)`` pairs with ``p`` strictly increasing.
    """

    k: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.k < 2 or self.k >= MAX_MODULUS:
            raise ValueError(f"modulus must satisfy 2 <= k < 2**64, got {self.k}")
        primes = [p for p, _ in self.factors]
        if primes != sorted(set(primes)):
            raise ValueError("factor primes must be strictly increasing")
        if math.prod(p**e for p, e in self.factors) != self.k:
            raise ValueError(f"factors {self.factors} do not multiply to {self.k}")

    @property
    def prime_powers(self) -> tuple[int, ...]:
        """The maximal prime-power divisors ``q_j = p_j ** e_j``."""
        return tuple(p**e for p, e in self.factors)

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1 and self.factors[0][1] == 1

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1

    def __int__(self) -> int:
        return self.k


# Deterministic Miller-Rabin witnesses for all n < 3.3e24.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_probable_prime(n: int) -> bool:
    """Primality test, deterministic for every ``n < 2**64``."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


@lru_cache(maxsize=1024)
def factorize(k: int) -> Modulus:
    """Factor ``k`` by trial division.

    The loop stops early once the remaining cofactor is prime, so prime and
    nearly-prime moduli do not pay for the full ``sqrt(k)`` sweep.

    >>> factorize(360).factors
    ((2, 3), (3, 2), (5, 1))
    """
    k = int(k)
    if k < 2:
        raise ValueError(f"modulus must be at least 2, got {k}")
    if k >= MAX_MODULUS:
        raise ValueError(f"modulus must be below 2**64, got {k}")
    factors = []
    rest = k
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            e = 0
            while rest % d == 0:
                rest //= d
                e += 1
            factors.append((d, e))
        elif is_probable_prime(rest):
            break
        d += 1 if d == 2 else 2
    if rest > 1:
        factors.append((rest, 1))
    return Modulus(k, tuple(factors))


def as_modulus(k: int | Modulus) -> Modulus:
    return k if isinstance(k, Modulus) else factorize(int(k))


def mod_inverse(a: int, k: int | Modulus) -> int:
    """Return ``r`` in ``[0, k)`` with ``a * r == 1 (mod k)``.

    Raises :class:`NotAUnit` (carrying the gcd) when no inverse exists.
    """
    k = int(k)
    g = math.gcd(a, k)
    if g != 1:
        raise NotAUnit(a % k, k, g)
    return pow(a, -1, k)


def is_unit(a: int, k: int | Modulus) -> bool:
    return math.gcd(a, int(k)) == 1


def crt_reconstruct(residues, k: int | Modulus) -> int:
    """Combine ``[(value_j, q_j), ...]`` into the unique residue mod ``k``.

    The ``q_j`` must be exactly the prime-power factors of ``k`` in order.
    """
    modulus = as_modulus(k)
    residues = [(int(v), int(q)) for v, q in residues]
    if tuple(q for _, q in residues) != modulus.prime_powers:
        raise ValueError(
            f"moduli {[q for _, q in residues]} are not the prime-power "
            f"factors {list(modulus.prime_powers)} of {modulus.k}"
        )
    x = 0
    for v, q in residues:
        if not 0 <= v < q:
            raise ValueError(f"residue {v} not canonical mod {q}")
        cofactor = modulus.k // q
        x += v * cofactor * pow(cofactor, -1, q)
    return x % modulus.k
