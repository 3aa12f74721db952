"""Certified high-precision evaluation of radicals, sums, and polynomials.

Values are fixed-point intervals: an Approx holds an integer mantissa,
a binary exponent, and an error counter in units in the last place, so
the true value lies within error_ulps * 2**exponent of
mantissa * 2**exponent.  All propagation rules are conservative (they
may overstate the error, never understate it), which makes an Approx a
proof-carrying object: interval separation refutes equalities, interval
agreement confirms them up to the stated width, and irrationality is
never claimed numerically.

Radicals are evaluated through integer n-th roots of scaled integers,
so the error analysis is elementary: the floor root of the floor
quotient is below the true scaled value by less than 2 units.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, PrecisionInsufficient
from .polyq import PolyQ
from .radical import CanonicalRadical, RadicalAtom
from .sumalg import RadicalSum

#: Extra working bits stacked on top of every requested precision.
GUARD_BITS = 8

#: Default oracle precision used by the CLI (overridable per call).
DEFAULT_PRECISION_BITS = 128

MIN_PRECISION_BITS = 16


@dataclass(frozen=True, slots=True)
class Approx:
    """Interval [mantissa - error_ulps, mantissa + error_ulps] * 2**exponent."""

    mantissa: int
    exponent: int
    error_ulps: int

    def __post_init__(self):
        if self.error_ulps < 0:
            raise DomainError("error_ulps must be nonnegative")

    def midpoint(self) -> Fraction:
        return Fraction(self.mantissa) * Fraction(2) ** self.exponent

    def halfwidth(self) -> Fraction:
        return Fraction(self.error_ulps) * Fraction(2) ** self.exponent

    def contains(self, q: Fraction) -> bool:
        return abs(Fraction(q) - self.midpoint()) <= self.halfwidth()

    def is_exact(self) -> bool:
        return self.error_ulps == 0

    def __str__(self) -> str:
        return render_approx(self)


def approx_from_int(n: int) -> Approx:
    return Approx(n, 0, 0)


def approx_from_rational(q: Fraction, exponent: int) -> Approx:
    """Round p/s to the fixed exponent; exact when s divides p * 2**-e."""
    q = Fraction(q)
    num, den = q.numerator, q.denominator
    if exponent <= 0:
        num <<= -exponent
    else:
        den <<= exponent
    mantissa, rem = divmod(num, den)
    if rem == 0:
        return Approx(mantissa, exponent, 0)
    if 2 * rem >= den:
        mantissa += 1
    return Approx(mantissa, exponent, 1)


def approx_add(a: Approx, b: Approx) -> Approx:
    e = min(a.exponent, b.exponent)
    sa, sb = a.exponent - e, b.exponent - e
    return Approx(
        (a.mantissa << sa) + (b.mantissa << sb),
        e,
        (a.error_ulps << sa) + (b.error_ulps << sb),
    )


def approx_neg(a: Approx) -> Approx:
    return Approx(-a.mantissa, a.exponent, a.error_ulps)


def approx_sub(a: Approx, b: Approx) -> Approx:
    return approx_add(a, approx_neg(b))


def approx_mul(a: Approx, b: Approx) -> Approx:
    u = abs(a.mantissa) * b.error_ulps + abs(b.mantissa) * a.error_ulps
    u += a.error_ulps * b.error_ulps
    return Approx(a.mantissa * b.mantissa, a.exponent + b.exponent, u)


def approx_scale(a: Approx, q: Fraction) -> Approx:
    """Multiply by an exact rational, rounding the division by its
    denominator to the same exponent."""
    q = Fraction(q)
    p, d = q.numerator, q.denominator
    num = a.mantissa * p
    err = a.error_ulps * abs(p)
    if d == 1:
        return Approx(num, a.exponent, err)
    mantissa, rem = divmod(num, d)
    if 2 * rem >= d:
        mantissa += 1
    u = -(-err // d) + (0 if rem == 0 else 1)
    return Approx(mantissa, a.exponent, u)


def approx_round_to(a: Approx, exponent: int) -> Approx:
    """Move to a coarser exponent (never a finer one), keeping containment."""
    if exponent <= a.exponent:
        shift = a.exponent - exponent
        return Approx(a.mantissa << shift, exponent, a.error_ulps << shift)
    shift = exponent - a.exponent
    return Approx(a.mantissa >> shift, exponent, (a.error_ulps >> shift) + 2)


def _round_to_precision(a: Approx, bits: int) -> Approx:
    excess = abs(a.mantissa).bit_length() - bits
    if excess <= 0:
        return a
    return approx_round_to(a, a.exponent + excess)


def _check_bits(bits: int) -> None:
    if bits < MIN_PRECISION_BITS:
        raise DomainError(f"precision must be at least {MIN_PRECISION_BITS} bits: {bits}")


from .arith import iroot  # noqa: E402  (only integer helpers, no cycle)


def eval_radical(b: Fraction | int, m: int, bits: int) -> Approx:
    """b**(1/m) with certified relative error at most 2**-(bits-4).

    The mantissa is the floor m-th root of floor(num * 2**(m*s) / den)
    at a scale s chosen so the root carries bits + GUARD_BITS
    significant bits; both floors together lose less than 2 ulps.
    Exact when b is a perfect m-th power of a dyadic-compatible
    rational (the root and the scaling both come out even).
    """
    _check_bits(bits)
    b = Fraction(b)
    if b <= 0:
        raise DomainError(f"radicand must be positive: {b}")
    if m < 1:
        raise DomainError(f"radical index must be >= 1: {m}")
    p, q = b.numerator, b.denominator
    if m == 1:
        return approx_from_rational(b, -(bits + GUARD_BITS))
    est = (p.bit_length() - q.bit_length()) // m
    s = bits + GUARD_BITS - est
    shift = m * s
    if shift >= 0:
        scaled_num, scaled_den = p << shift, q
    else:
        scaled_num, scaled_den = p, q << -shift
    n, rem = divmod(scaled_num, scaled_den)
    r = iroot(n, m)
    exact = rem == 0 and r**m == n
    return Approx(r, -s, 0 if exact else 2)


def eval_atom(atom: RadicalAtom, bits: int) -> Approx:
    """Product of p**(a/d) factors, each via eval_radical, multiplied
    with interval arithmetic at a widened working precision."""
    _check_bits(bits)
    work = bits + 2 * GUARD_BITS + max(4, len(atom.exps).bit_length() * 2)
    acc: Approx | None = None
    for p, e in atom.exps:
        factor = eval_radical(Fraction(p**e.numerator), e.denominator, work)
        acc = factor if acc is None else _round_to_precision(approx_mul(acc, factor), work)
    return acc


def eval_canonical(c: CanonicalRadical, bits: int) -> Approx:
    _check_bits(bits)
    if c.atom is None:
        return approx_from_rational(c.coeff, -(bits + GUARD_BITS))
    return approx_scale(eval_atom(c.atom, bits), c.coeff)


def eval_sum(s: RadicalSum, bits: int) -> Approx:
    """Interval sum of termwise evaluations; the error bound is the sum
    of the termwise bounds plus the rational-part rounding."""
    _check_bits(bits)
    work = bits + GUARD_BITS
    acc = approx_from_rational(s.rational_part, -work)
    for atom, coeff in s.terms:
        acc = approx_add(acc, approx_scale(eval_atom(atom, work), coeff))
    return acc


def eval_poly(f: PolyQ, x: Approx, bits: int) -> Approx:
    """Horner evaluation of f at the interval x."""
    _check_bits(bits)
    work = bits + 4 * GUARD_BITS
    acc = approx_from_int(0)
    for c in reversed(f.coeffs):
        acc = approx_add(
            _round_to_precision(approx_mul(acc, x), work),
            approx_from_rational(c, -work),
        )
    return acc


def best_rational_within(x: Fraction, q_max: int) -> Fraction:
    """The rational with denominator <= q_max closest to x.

    Walks the continued-fraction convergents of x; the minimizer is the
    last convergent with denominator within range or its largest
    semiconvergent, whichever lies closer.
    """
    if q_max < 1:
        raise DomainError(f"q_max must be positive: {q_max}")
    x = Fraction(x)
    if x.denominator <= q_max:
        return x
    num, den = x.numerator, x.denominator
    h2, k2 = 0, 1
    h1, k1 = 1, 0
    while den:
        a = num // den
        h, k = a * h1 + h2, a * k1 + k2
        if k > q_max:
            t = (q_max - k2) // k1
            conv = Fraction(h1, k1)
            semi = Fraction(h2 + t * h1, k2 + t * k1)
            return semi if abs(x - semi) < abs(x - conv) else conv
        h2, k2, h1, k1 = h1, k1, h, k
        num, den = den, num - a * den
    return Fraction(num and h1 or h1, k1)  # pragma: no cover (x.den > q_max)


def separated_from_rational(a: Approx, q_max: int) -> bool:
    """True when the interval of ``a`` provably excludes every rational
    with denominator <= q_max; False is inconclusive, never a proof.

    Requires the interval to be narrower than half the minimal spacing
    1/q_max**2 of such rationals, else PrecisionInsufficient.
    """
    if q_max < 1:
        raise DomainError(f"q_max must be positive: {q_max}")
    h = a.halfwidth()
    if 2 * h * q_max * q_max >= 1:
        raise PrecisionInsufficient(
            f"interval halfwidth {h} cannot separate rationals with denominator <= {q_max}"
        )
    x = a.midpoint()
    best = best_rational_within(x, q_max)
    return abs(x - best) > h


def _ceil_log2(q: Fraction) -> int:
    """Smallest e with 2**e >= q, for q > 0."""
    e = q.numerator.bit_length() - q.denominator.bit_length()
    while Fraction(2) ** e < q:
        e += 1
    while e > q.numerator.bit_length() - q.denominator.bit_length() - 2 and Fraction(2) ** (e - 1) >= q:
        e -= 1
    return e


def _decimal_digits(value: Fraction, digits: int) -> str:
    """Truncate |value| toward zero at ``digits`` fractional places."""
    sign = "-" if value < 0 else ""
    scaled = abs(value) * 10**digits
    n = scaled.numerator // scaled.denominator
    text = str(n).rjust(digits + 1, "0")
    if digits == 0:
        return sign + text
    whole, frac = text[:-digits], text[-digits:]
    frac = frac.rstrip("0")
    return sign + (f"{whole}.{frac}" if frac else whole)


def render_approx(a: Approx) -> str:
    """Decimal rendering with an explicit +/- 2**e error suffix.

    The printed digit resolution never exceeds the certified interval
    width, and the suffix covers both the interval and the decimal
    truncation, so the string itself is a true containment statement.
    """
    mid = a.midpoint()
    if a.error_ulps == 0:
        digits = max(0, -a.exponent) if a.mantissa else 0
        return f"{_decimal_digits(mid, digits)} ± 0"
    h = a.halfwidth()
    digits = 0
    while Fraction(1, 10 ** (digits + 1)) >= 2 * h and digits < 10_000:
        digits += 1
    text = _decimal_digits(mid, digits)
    total = h + Fraction(1, 10**digits)
    return f"{text} ± 2^{_ceil_log2(total)}"
