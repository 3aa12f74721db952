"""Arbitrary-precision integer and rational arithmetic plus factorization.

Rationals are ``fractions.Fraction`` throughout the package: construction
normalizes the sign into the numerator and reduces by gcd, so structural
equality coincides with mathematical equality.  This module adds the strict
text format for rationals, a deterministic primality test, integer n-th
roots, and a budgeted integer factorizer (trial division by primes up to
10**6, then Brent's cycle-finding method with a fixed parameter schedule,
so results are deterministic for a given input).
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

from .errors import BudgetExceeded, DomainError

# A factorization is a map prime -> exponent (>= 1); {} represents 1.
PrimeFactorization = dict[int, int]

#: Default operation budget for factorize(), sized so that any radicand
#: below 2**64 factors comfortably (one trial-division pass is ~78,500
#: operations; Brent rho on a 64-bit semiprime needs a few hundred
#: thousand iterations in the worst case).
DEFAULT_FACTOR_BUDGET = 1 << 21

_TRIAL_LIMIT = 10**6

# The 12-prime Miller-Rabin base set below is a proven-deterministic
# primality certificate for all n < this bound (covers 2**64 with room).
MR_PROVEN_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


def parse_rational(text: str) -> Fraction:
    """Parse the strict rational text format: ``n`` or ``n/d``, optional
    leading ``-``.  No whitespace, decimals, or scientific notation.
    """
    m = _RATIONAL_RE.match(text)
    if not m:
        raise DomainError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DomainError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    """Render a rational in the strict text format (lowest terms)."""
    return str(Fraction(q))


@lru_cache(maxsize=None)
def _small_primes() -> tuple[int, ...]:
    """Primes below 10**6 by a sieve of Eratosthenes (cached)."""
    sieve = bytearray([1]) * _TRIAL_LIMIT
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(_TRIAL_LIMIT) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, _TRIAL_LIMIT, p)))
    return tuple(i for i in range(_TRIAL_LIMIT) if sieve[i])


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Deterministic primality for n < MR_PROVEN_BOUND via Miller-Rabin
    with a fixed base set; a ``False`` answer is proven at any size.
    """
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    if n >= MR_PROVEN_BOUND:
        # Passing the bases above is no longer a certificate up here.
        raise BudgetExceeded(f"cannot certify primality of {n} (exceeds proven bound)")
    return True


def iroot(n: int, m: int) -> int:
    """floor(n ** (1/m)) for n >= 0, m >= 1, by integer Newton iteration.

    >>> iroot(1728, 3), iroot(1729, 3)
    (12, 12)
    """
    if n < 0 or m < 1:
        raise DomainError(f"iroot domain: n={n}, m={m}")
    if n < 2 or m == 1:
        return n
    if m == 2:
        return math.isqrt(n)
    if m >= n.bit_length():
        return 1
    x = 1 << -(-n.bit_length() // m)  # 2**ceil(bits/m) >= n**(1/m)
    while True:
        y = ((m - 1) * x + n // x ** (m - 1)) // m
        if y >= x:
            return x
        x = y


def int_nth_root(n: int, k: int) -> int | None:
    """Return r with r**k == n exactly, or None if n is not a perfect
    k-th power.
    """
    if n < 1 or k < 1:
        raise DomainError(f"int_nth_root domain: n={n}, k={k}")
    r = iroot(n, k)
    return r if r**k == n else None


class _Budget:
    __slots__ = ("left",)

    def __init__(self, limit: int):
        self.left = limit

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise BudgetExceeded("factorization budget exhausted")


def _brent_rho(n: int, budget: _Budget) -> int:
    """A nontrivial divisor of odd composite n, by Brent's variant of the
    rho method.  The polynomial offset c walks 1, 2, 3, ... so the search
    is deterministic; each f-evaluation costs one budget unit.
    """
    for c in range(1, 10_000):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            budget.spend(r)
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % n
                    q = q * (x - y) % n
                budget.spend(min(128, r - k))
                g = math.gcd(q, n)
                k += 128
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                budget.spend()
                g = math.gcd(x - ys, n)
        if g != n:
            return g
    raise BudgetExceeded("rho parameter schedule exhausted")  # pragma: no cover


def _split(n: int, out: PrimeFactorization, multiplicity: int, budget: _Budget) -> None:
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + multiplicity
        return
    # Cheap perfect-power reduction before running rho.
    for k in range(2, n.bit_length() + 1):
        r = iroot(n, k)
        if r**k == n:
            _split(r, out, multiplicity * k, budget)
            return
        if r < 2:
            break
    d = _brent_rho(n, budget)
    _split(d, out, multiplicity, budget)
    _split(n // d, out, multiplicity, budget)


def factorize(n: int, budget: int = DEFAULT_FACTOR_BUDGET) -> PrimeFactorization:
    """Full prime factorization of n >= 1 as a prime -> exponent map.

    Deterministic for a given n.  Raises BudgetExceeded when no complete
    factorization is found within ``budget`` operations (input too large,
    never a wrong answer).

    >>> factorize(12)
    {2: 2, 3: 1}
    >>> factorize(1)
    {}
    """
    if n < 1:
        raise DomainError(f"factorize domain: n={n}")
    b = _Budget(budget)
    out: PrimeFactorization = {}
    for p in _small_primes():
        if p * p > n:
            break
        b.spend()
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out[p] = e
    if n > 1:
        if n < _TRIAL_LIMIT * _TRIAL_LIMIT:
            # Trial division ran past sqrt(n), so the cofactor is prime.
            out[n] = out.get(n, 0) + 1
        else:
            _split(n, out, 1, b)
    return dict(sorted(out.items()))


def factorization_value(factors: PrimeFactorization) -> int:
    """Reconstruct the integer a factorization represents."""
    value = 1
    for p, e in factors.items():
        value *= p**e
    return value
