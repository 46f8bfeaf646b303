"""Arbitrary-precision real arithmetic with proven absolute error bounds.

Every value here is an mpmath float paired with a rigorous bound on its
distance from the mathematically exact quantity.  The zeta and L-function
evaluators reduce to exact-rational Euler-Maclaurin approximations, so their
only error sources are a series remainder bounded in closed form over the
rationals and a single correctly-rounded float conversion at the end.

Conventions used throughout:

* a requested ``precision_bits = p`` means float operations are carried out
  at ``p + GUARD_BITS`` bits of mantissa;
* posted ``abs_error`` values are deliberately canonical (a fixed power of
  two depending only on ``p``), chosen so the true remainder plus rounding
  error provably fits underneath; this makes refinement monotone: asking for
  more bits never yields a looser bound;
* bound arithmetic is done at a fixed low precision with directed rounding
  (always upward for error magnitudes, downward for denominators), never with
  bare operators, which would round at mpmath's global context precision.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import mpmath
from mpmath import mpf
from mpmath.libmp import from_int, mpf_pi, mpf_sqrt, to_rational

from .rational import ExactRational, bernoulli

__all__ = [
    "GUARD_BITS",
    "ApproxReal",
    "to_fraction",
    "pi_approx",
    "sqrt3_approx",
    "zeta_int",
    "hurwitz_zeta",
    "dirichlet_L_chi3",
]

GUARD_BITS = 32

# Precision for error-bound arithmetic.  Bounds carry no more than a couple
# of significant digits of real information, so 64 bits is generous; what
# matters is the rounding direction, not the width.
_ERR_PREC = 64

# Rational constants for closed-form remainder bounds.
_TWO_PI_LO = Fraction(628318530, 10**8)  # < 2*pi
_ZETA_ODD_2X = Fraction(5, 2)  # >= 2*zeta(2M+1) for every M >= 1


def to_fraction(x: mpf) -> Fraction:
    """Exact rational value of a finite mpmath float."""
    p, q = to_rational(x._mpf_)
    # int() normalizes gmpy2.mpz when mpmath runs on that backend.
    return Fraction(int(p), int(q))


def _ulp_bound(v: mpf, wp: int) -> mpf:
    # Correct rounding at wp bits errs by at most half an ulp; |v| * 2^(1-wp)
    # covers that with a factor-of-four margin.
    return mpmath.fmul(abs(v), mpmath.ldexp(1, 1 - wp), prec=_ERR_PREC, rounding="u")


def _err_sum(*parts: mpf) -> mpf:
    acc = mpf(0)
    for p in parts:
        acc = mpmath.fadd(acc, p, prec=_ERR_PREC, rounding="u")
    return acc


@dataclass(frozen=True)
class ApproxReal:
    """A float together with a bound: the true value lies in
    [value - abs_error, value + abs_error]."""

    value: mpf
    abs_error: mpf

    def __post_init__(self) -> None:
        if not isinstance(self.value, mpf) or not isinstance(self.abs_error, mpf):
            raise TypeError("ApproxReal fields must be mpmath floats")
        if not mpmath.isfinite(self.value) or not mpmath.isfinite(self.abs_error):
            raise ValueError("ApproxReal fields must be finite")
        if self.abs_error < 0:
            raise ValueError("abs_error must be nonnegative")

    @staticmethod
    def exact_int(n: int) -> ApproxReal:
        return ApproxReal(mpmath.fadd(n, 0, exact=True), mpf(0))

    @staticmethod
    def from_fraction(q: ExactRational, precision_bits: int) -> ApproxReal:
        """Correctly rounded conversion; the bound covers the one rounding."""
        q = Fraction(q)
        wp = precision_bits + GUARD_BITS
        v = mpmath.fdiv(q.numerator, q.denominator, prec=wp, rounding="n")
        return ApproxReal(v, _ulp_bound(v, wp))

    def add(self, other: ApproxReal, precision_bits: int) -> ApproxReal:
        wp = precision_bits + GUARD_BITS
        v = mpmath.fadd(self.value, other.value, prec=wp, rounding="n")
        e = _err_sum(self.abs_error, other.abs_error, _ulp_bound(v, wp))
        return ApproxReal(v, e)

    def sub(self, other: ApproxReal, precision_bits: int) -> ApproxReal:
        wp = precision_bits + GUARD_BITS
        v = mpmath.fsub(self.value, other.value, prec=wp, rounding="n")
        e = _err_sum(self.abs_error, other.abs_error, _ulp_bound(v, wp))
        return ApproxReal(v, e)

    def mul(self, other: ApproxReal, precision_bits: int) -> ApproxReal:
        wp = precision_bits + GUARD_BITS
        v = mpmath.fmul(self.value, other.value, prec=wp, rounding="n")
        e = _err_sum(
            mpmath.fmul(abs(self.value), other.abs_error, prec=_ERR_PREC, rounding="u"),
            mpmath.fmul(abs(other.value), self.abs_error, prec=_ERR_PREC, rounding="u"),
            mpmath.fmul(self.abs_error, other.abs_error, prec=_ERR_PREC, rounding="u"),
            _ulp_bound(v, wp),
        )
        return ApproxReal(v, e)

    def div(self, other: ApproxReal, precision_bits: int) -> ApproxReal:
        wp = precision_bits + GUARD_BITS
        bv = abs(other.value)
        # Lower bound on |true divisor|; rounding down keeps it valid.
        blo = mpmath.fsub(bv, other.abs_error, prec=_ERR_PREC, rounding="d")
        if blo <= 0:
            raise ZeroDivisionError("divisor interval contains zero")
        v = mpmath.fdiv(self.value, other.value, prec=wp, rounding="n")
        num = _err_sum(
            mpmath.fmul(abs(self.value), other.abs_error, prec=_ERR_PREC, rounding="u"),
            mpmath.fmul(bv, self.abs_error, prec=_ERR_PREC, rounding="u"),
        )
        den = mpmath.fmul(bv, blo, prec=_ERR_PREC, rounding="d")
        e = _err_sum(
            mpmath.fdiv(num, den, prec=_ERR_PREC, rounding="u"),
            _ulp_bound(v, wp),
        )
        return ApproxReal(v, e)

    def pow_int(self, k: int, precision_bits: int) -> ApproxReal:
        """Integer power by binary exponentiation; k may be negative."""
        if k < 0:
            return ApproxReal.exact_int(1).div(self.pow_int(-k, precision_bits), precision_bits)
        result = ApproxReal.exact_int(1)
        base = self
        while k:
            if k & 1:
                result = result.mul(base, precision_bits)
            k >>= 1
            if k:
                base = base.mul(base, precision_bits)
        return result

    def overlaps(self, other: ApproxReal) -> bool:
        """Whether the two enclosures intersect; comparison is exact."""
        diff = abs(mpmath.fsub(self.value, other.value, exact=True))
        return diff <= mpmath.fadd(self.abs_error, other.abs_error, exact=True)

    def contains_fraction(self, q: ExactRational) -> bool:
        """Whether the exact rational q lies inside the enclosure."""
        return abs(to_fraction(self.value) - Fraction(q)) <= to_fraction(self.abs_error)


def pi_approx(precision_bits: int) -> ApproxReal:
    """pi with abs_error 2^-(precision_bits+30)."""
    if precision_bits < 16:
        raise ValueError(f"precision_bits must be >= 16, got {precision_bits}")
    wp = precision_bits + GUARD_BITS
    v = mpmath.mp.make_mpf(mpf_pi(wp, "n"))
    # Half an ulp of a value below 4 at wp bits is under 2^(2-wp) = 2^-(p+30).
    return ApproxReal(v, mpmath.ldexp(1, -(precision_bits + 30)))


def sqrt3_approx(precision_bits: int) -> ApproxReal:
    """sqrt(3) with abs_error 2^-(precision_bits+30)."""
    if precision_bits < 16:
        raise ValueError(f"precision_bits must be >= 16, got {precision_bits}")
    wp = precision_bits + GUARD_BITS
    v = mpmath.mp.make_mpf(mpf_sqrt(from_int(3), wp, "n"))
    return ApproxReal(v, mpmath.ldexp(1, -(precision_bits + 30)))


def _rising(s: int, k: int) -> int:
    out = 1
    for i in range(k):
        out *= s + i
    return out


def _em_remainder_bound(s: int, x: Fraction, m: int) -> Fraction:
    """Upper bound on the Euler-Maclaurin remainder after m correction terms
    for the tail sum of (n + a)^-s cut at x = N + a.

    Uses |R| <= 2 zeta(2m+1) / (2 pi)^(2m+1) * integral of |f^(2m+1)|, with
    the integral evaluated in closed form for f(t) = (t + a)^-s.
    """
    return (
        _ZETA_ODD_2X
        * _rising(s, 2 * m + 1)
        / (_TWO_PI_LO ** (2 * m + 1) * x ** (s + 2 * m) * (s + 2 * m))
    )


def _choose_em_params(s: int, a: Fraction, target: Fraction) -> tuple[int, int]:
    """Smallest workable (N, m): deterministic in (s, a, target)."""
    n = 16
    while n <= 1 << 16:
        x = n + a
        prev = None
        for m in range(1, 6 * n + 1):
            b = _em_remainder_bound(s, x, m)
            if b <= target:
                return n, m
            if prev is not None and b > prev:
                break  # past the optimum for this N; more terms only hurt
            prev = b
        n *= 2
    raise ValueError(f"no Euler-Maclaurin parameters reach target {target}")


def _hurwitz_rational(s: int, a: Fraction, target: Fraction) -> tuple[Fraction, Fraction]:
    """Exact rational Q with |zeta(s, a) - Q| <= bound <= target.

    Partial sum of N terms plus the Euler-Maclaurin tail: integral term,
    half-term, and m Bernoulli corrections, all over the rationals.
    """
    n_terms, m = _choose_em_params(s, a, target)
    p, q = a.numerator, a.denominator
    partial = sum(Fraction(q**s, (n * q + p) ** s) for n in range(n_terms))
    x = n_terms + a
    tail = x ** (1 - s) / (s - 1) + x ** (-s) / 2
    for j in range(1, m + 1):
        tail += (
            bernoulli(2 * j)
            * _rising(s, 2 * j - 1)
            * x ** (-(s + 2 * j - 1))
            / factorial(2 * j)
        )
    return partial + tail, _em_remainder_bound(s, x, m)


def _posted_error(precision_bits: int) -> mpf:
    return mpmath.ldexp(1, -(precision_bits + 1))


def zeta_int(s: int, precision_bits: int) -> ApproxReal:
    """Riemann zeta at an integer s >= 2, abs_error 2^-(precision_bits+1).

    The rational core is driven to 2^-(precision_bits+2); one correctly
    rounded conversion at precision_bits + GUARD_BITS adds at most
    2^-(precision_bits+30) on values below 2, so the posted bound holds.
    """
    if s < 2:
        raise ValueError(f"zeta_int requires s >= 2 (pole or divergence), got {s}")
    if precision_bits < 1:
        raise ValueError(f"precision_bits must be positive, got {precision_bits}")
    target = Fraction(1, 2 ** (precision_bits + 2))
    approx, _ = _hurwitz_rational(s, Fraction(1), target)
    wp = precision_bits + GUARD_BITS
    v = mpmath.fdiv(approx.numerator, approx.denominator, prec=wp, rounding="n")
    return ApproxReal(v, _posted_error(precision_bits))


def hurwitz_zeta(s: int, a: ExactRational, precision_bits: int) -> ApproxReal:
    """Hurwitz zeta(s, a) for integer s >= 2 and rational 0 < a <= 1,
    abs_error 2^-(precision_bits+1)."""
    if s < 2:
        raise ValueError(f"hurwitz_zeta requires s >= 2, got {s}")
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError(f"hurwitz_zeta requires 0 < a <= 1, got {a}")
    if precision_bits < 1:
        raise ValueError(f"precision_bits must be positive, got {precision_bits}")
    target = Fraction(1, 2 ** (precision_bits + 2))
    approx, _ = _hurwitz_rational(s, a, target)
    # The leading term a^-s can be huge for small a; widen the mantissa so
    # the one rounding still lands below the posted bound.
    k = max(0, (a.denominator - 1).bit_length() - a.numerator.bit_length() + 1)
    wp = precision_bits + GUARD_BITS + s * k + 2
    v = mpmath.fdiv(approx.numerator, approx.denominator, prec=wp, rounding="n")
    return ApproxReal(v, _posted_error(precision_bits))


def _l1_em_bound(k_cut: int, m: int) -> Fraction:
    # Remainder after m corrections for f(t) = 1/(3t+1) - 1/(3t+2) cut at
    # k_cut; |f^(2m+1)| integrates to at most 2 * 3^(2m) * (2m)! / (3K+1)^(2m+1).
    return (
        _ZETA_ODD_2X
        * 2
        * 3 ** (2 * m)
        * factorial(2 * m)
        / (_TWO_PI_LO ** (2 * m + 1) * Fraction(3 * k_cut + 1) ** (2 * m + 1))
    )


def _choose_l1_params(target: Fraction) -> tuple[int, int]:
    k_cut = 16
    while k_cut <= 1 << 16:
        prev = None
        for m in range(1, 6 * k_cut + 1):
            b = _l1_em_bound(k_cut, m)
            if b <= target:
                return k_cut, m
            if prev is not None and b > prev:
                break
            prev = b
        k_cut *= 2
    raise ValueError(f"no parameters reach target {target}")


def _l1_rational(target: Fraction) -> tuple[Fraction, Fraction]:
    """Exact rational Q with |L(1) - Q| <= bound <= target, for the
    character of conductor 3.

    Groups the alternating series pairwise into sum_k 1/((3k+1)(3k+2)),
    then accelerates the positive tail by Euler-Maclaurin.  The integral
    term (1/3) log((3K+2)/(3K+1)) is itself a rational log(1+u) series with
    an alternating-tail bound.
    """
    half = target / 2
    k_cut, m = _choose_l1_params(half)
    head = sum(Fraction(1, (3 * k + 1) * (3 * k + 2)) for k in range(k_cut))
    u = Fraction(1, 3 * k_cut + 1)
    log_target = 3 * half  # its contribution enters divided by 3
    logsum = Fraction(0)
    upow = u
    i = 1
    while True:
        logsum += upow / i if i % 2 == 1 else -upow / i
        log_rem = upow * u / (i + 1)
        if log_rem <= log_target:
            break
        upow *= u
        i += 1
    tail = logsum / 3 + Fraction(1, 2 * (3 * k_cut + 1) * (3 * k_cut + 2))
    for j in range(1, m + 1):
        tail += (
            bernoulli(2 * j)
            * 3 ** (2 * j - 1)
            / (2 * j)
            * (Fraction(1, (3 * k_cut + 1) ** (2 * j)) - Fraction(1, (3 * k_cut + 2) ** (2 * j)))
        )
    return head + tail, _l1_em_bound(k_cut, m) + log_rem / 3


def dirichlet_L_chi3(s: int, precision_bits: int) -> ApproxReal:
    """L(s, chi) for the nontrivial character mod 3, integer s >= 1,
    abs_error 2^-(precision_bits+1).

    For s >= 2 this is 3^-s (zeta(s, 1/3) - zeta(s, 2/3)) over exact
    rationals; s = 1 takes the dedicated convergent route.
    """
    if s < 1:
        raise ValueError(f"dirichlet_L_chi3 requires s >= 1, got {s}")
    if precision_bits < 1:
        raise ValueError(f"precision_bits must be positive, got {precision_bits}")
    wp = precision_bits + GUARD_BITS
    if s == 1:
        target = Fraction(1, 2 ** (precision_bits + 2))
        approx, _ = _l1_rational(target)
    else:
        # Each branch gets half the budget; the 3^-s factor only shrinks it.
        branch_target = Fraction(1, 2 ** (precision_bits + 3))
        q1, _ = _hurwitz_rational(s, Fraction(1, 3), branch_target)
        q2, _ = _hurwitz_rational(s, Fraction(2, 3), branch_target)
        approx = (q1 - q2) / 3**s
    v = mpmath.fdiv(approx.numerator, approx.denominator, prec=wp, rounding="n")
    return ApproxReal(v, _posted_error(precision_bits))
