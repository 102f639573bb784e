import math

import pytest
from hypothesis import given, strategies as st

from modcong.residue import NotAUnit, crt_reconstruct, factorize, is_probable_prime, mod_inverse


@pytest.mark.parametrize(
    "k, factors",
    [(12, ((2, 2), (3, 1))), (7, ((7, 1),)), (360, ((2, 3), (3, 2), (5, 1)))],
)
def test_factorize_examples(k, factors):
    m = factorize(k)
    assert m.factors == factors
    assert math.prod(p**e for p, e in m.factors) == k


def test_factorize_rejects_small():
    with pytest.raises(ValueError):
        factorize(1)
    with pytest.raises(ValueError):
        factorize(2**64)


def _trial_prime(p):
    return p >= 2 and all(p % d for d in range(2, math.isqrt(p) + 1))


def test_factorize_recombines_up_to_1e5():
    for k in range(2, 10**5 + 1):
        m = factorize(k)
        assert math.prod(q for q in m.prime_powers) == k
    # primality of factors checked by trial division on a subrange
    for k in range(2, 3000):
        assert all(_trial_prime(p) for p, _ in factorize(k).factors)


def test_factorize_large_prime_and_semiprime():
    p = 2**61 - 1
    assert factorize(p).factors == ((p, 1),)
    assert factorize(3 * p).factors == ((3, 1), (p, 1))
    assert factorize(2**63).factors == ((2, 63),)


def test_miller_rabin_agrees_with_trial_division():
    assert [n for n in range(2000) if is_probable_prime(n)] == [n for n in range(2000) if _trial_prime(n)]


def test_mod_inverse_examples():
    assert mod_inverse(1, 2) == 1
    assert mod_inverse(1, 97) == 1
    assert mod_inverse(5, 6) == 5
    with pytest.raises(NotAUnit) as info:
        mod_inverse(2, 6)
    assert info.value.gcd == 2


def test_mod_inverse_exhaustive():
    for k in range(2, 65):
        for a in range(k):
            if math.gcd(a, k) == 1:
                assert a * mod_inverse(a, k) % k == 1
            else:
                with pytest.raises(NotAUnit):
                    mod_inverse(a, k)


@pytest.mark.parametrize(
    "residues, k, expected",
    [([(0, 2), (0, 3)], 6, 0), ([(1, 2), (2, 3)], 6, 5), ([(3, 4), (2, 3)], 12, 11)],
)
def test_crt_examples(residues, k, expected):
    # the DERIVED values come from scanning [0, k)
    assert [x for x in range(k) if all(x % q == v for v, q in residues)] == [expected]
    assert crt_reconstruct(residues, k) == expected


def test_crt_rejects_mismatched_factors():
    with pytest.raises(ValueError):
        crt_reconstruct([(1, 2), (1, 3)], 12)
    with pytest.raises(ValueError):
        crt_reconstruct([(1, 3), (1, 2)], 6)
    with pytest.raises(ValueError):
        crt_reconstruct([(2, 2), (1, 3)], 6)


def test_crt_roundtrip_exhaustive():
    for k in range(2, 361):
        qs = factorize(k).prime_powers
        for x in range(k):
            assert crt_reconstruct([(x % q, q) for q in qs], k) == x


@given(st.integers(2, 2**40), st.integers(0, 2**40))
def test_inverse_property(k, a):
    if math.gcd(a, k) == 1:
        assert a * mod_inverse(a, k) % k == 1
