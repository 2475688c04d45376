"""Exact arithmetic in prime fields GF(p).

Elements are plain Python ints in [0, p); a PrimeField instance carries the
modulus and provides the arithmetic.  Keeping elements unboxed matters: field
ops sit in the innermost loops of every reduction.
"""

from __future__ import annotations


class NotPrimeError(ValueError):
    """Raised when a field is constructed with a non-prime modulus."""


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, s, t) with g = gcd(a, b) = s*a + t*b."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    return a, s0, t0


class PrimeField:
    """GF(p) for a prime 2 <= p < 2**31.

    The bound keeps every product within 64 bits, so intermediate results
    stay cheap machine ints in CPython.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not isinstance(p, int) or isinstance(p, bool) or not 2 <= p < 2**31:
            raise NotPrimeError(f"modulus must be an integer in [2, 2^31), got {p!r}")
        if not is_prime(p):
            raise NotPrimeError(f"modulus is not prime: {p}")
        self.p = p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inv(self, a: int) -> int:
        """Multiplicative inverse via extended Euclid."""
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in GF(%d)" % self.p)
        g, s, _ = xgcd(a, self.p)
        assert g == 1
        return s % self.p

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"
