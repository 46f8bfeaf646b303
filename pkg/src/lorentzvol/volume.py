"""Closed-form hyperbolic covolumes as exact symbolic expressions.

A covolume here is a positive rational times an optional sqrt(3), a power of
pi, and products of zeta and L-function values at integer arguments.  Even
zeta arguments are always folded away into the rational part (they are
rational multiples of powers of pi), so the stored form is canonical and
structural equality decides mathematical equality.

All volume normalizations are for constant curvature -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .approx import ApproxReal, dirichlet_L_chi3, pi_approx, sqrt3_approx, zeta_int
from .rational import ExactRational, bernoulli, zeta_even_exact

__all__ = [
    "VolumeExpression",
    "covolume_smallest_orbifold",
    "covolume_PO_even_unimodular",
    "covolume_PSO_odd_unimodular",
    "coxeter_polytope_volume_17",
    "multiply",
    "multiply_scalar",
    "evaluate",
]


@dataclass(frozen=True)
class VolumeExpression:
    """coefficient * sqrt(3)^e * pi^k * prod zeta(s_i) * prod L(t_i).

    L is the Dirichlet L-function for the nontrivial character mod 3.
    Canonical form: coefficient > 0 in lowest terms, e in {0, 1}, zeta
    arguments odd and >= 3 (even ones must be folded), L arguments >= 2,
    both argument tuples sorted ascending.
    """

    coefficient: Fraction
    sqrt3_exponent: int
    pi_exponent: int
    zeta_factors: tuple[int, ...]
    L3_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.coefficient, Fraction):
            raise TypeError("coefficient must be a Fraction")
        if self.coefficient <= 0:
            raise ValueError(f"coefficient must be positive, got {self.coefficient}")
        if self.sqrt3_exponent not in (0, 1):
            raise ValueError(f"sqrt3_exponent must be 0 or 1, got {self.sqrt3_exponent}")
        if not isinstance(self.pi_exponent, int):
            raise TypeError("pi_exponent must be an int")
        for s in self.zeta_factors:
            if not isinstance(s, int) or s < 3 or s % 2 == 0:
                raise ValueError(f"canonical zeta arguments are odd integers >= 3, got {s}")
        for t in self.L3_factors:
            if not isinstance(t, int) or t < 2:
                raise ValueError(f"L arguments must be integers >= 2, got {t}")
        if tuple(sorted(self.zeta_factors)) != self.zeta_factors:
            raise ValueError("zeta_factors must be sorted ascending")
        if tuple(sorted(self.L3_factors)) != self.L3_factors:
            raise ValueError("L3_factors must be sorted ascending")

    @classmethod
    def normalized(
        cls,
        coefficient: ExactRational,
        sqrt3_exponent: int = 0,
        pi_exponent: int = 0,
        zeta_factors: tuple[int, ...] = (),
        L3_factors: tuple[int, ...] = (),
    ) -> VolumeExpression:
        """Build the canonical form: fold even zeta arguments into the
        rational coefficient and the pi power, reduce sqrt(3) pairs to a
        factor of 3, sort the remaining arguments."""
        coeff = Fraction(coefficient)
        if coeff <= 0:
            raise ValueError(f"coefficient must be positive, got {coeff}")
        if sqrt3_exponent < 0:
            raise ValueError(f"sqrt3_exponent must be nonnegative, got {sqrt3_exponent}")
        coeff *= Fraction(3) ** (sqrt3_exponent // 2)
        pi_exp = pi_exponent
        odd_zetas = []
        for s in zeta_factors:
            if not isinstance(s, int) or s < 2:
                raise ValueError(f"zeta arguments must be integers >= 2, got {s}")
            if s % 2 == 0:
                c, k = zeta_even_exact(s // 2)
                coeff *= c
                pi_exp += k
            else:
                odd_zetas.append(s)
        for t in L3_factors:
            if not isinstance(t, int) or t < 2:
                raise ValueError(f"L arguments must be integers >= 2, got {t}")
        return cls(
            coefficient=coeff,
            sqrt3_exponent=sqrt3_exponent % 2,
            pi_exponent=pi_exp,
            zeta_factors=tuple(sorted(odd_zetas)),
            L3_factors=tuple(sorted(L3_factors)),
        )


def _bernoulli_quarter_product(r: int) -> Fraction:
    """prod_{j=1}^{r-1} |B_2j| / (4j), the folded form of the shared factor
    prod (2j-1)! zeta(2j) / (2 pi)^(2j)."""
    out = Fraction(1)
    for j in range(1, r):
        out *= abs(bernoulli(2 * j)) / (4 * j)
    return out


def covolume_smallest_orbifold(n: int) -> VolumeExpression:
    """Covolume of the minimal-covolume arithmetic group acting on
    hyperbolic n-space, for odd n >= 5.  The shape of the closed form
    depends on n mod 8 (residues 1, 5) or n mod 4 (residue 3)."""
    if n < 5 or n % 2 == 0:
        raise ValueError(f"dimension must be odd and >= 5, got {n}")
    r = (n + 1) // 2
    tail = _bernoulli_quarter_product(r)
    if n % 8 == 1:
        return VolumeExpression.normalized(
            Fraction(1, 2 ** (r - 2)) * tail, zeta_factors=(r,)
        )
    if n % 8 == 5:
        head = Fraction((2**r - 1) * (2 ** (r - 1) - 1), 3 * 2 ** (r - 1))
        return VolumeExpression.normalized(head * tail, zeta_factors=(r,))
    # n % 4 == 3: coefficient carries 3^(r-1/2) = 3^(r-1) sqrt(3).
    return VolumeExpression.normalized(
        Fraction(3 ** (r - 1), 2 ** (r - 1)) * tail,
        sqrt3_exponent=1,
        L3_factors=(r,),
    )


def covolume_PO_even_unimodular(n: int) -> VolumeExpression:
    """Covolume of the full isometry group of the even unimodular Lorentzian
    lattice in signature (n, 1); requires n = 1 mod 8, n >= 9.

    Exactly half the minimal orbifold covolume in these dimensions: the
    minimal group contains this one with index two.
    """
    if n < 9 or n % 8 != 1:
        raise ValueError(f"even unimodular Lorentzian lattices need n = 1 mod 8 and n >= 9, got {n}")
    r = (n + 1) // 2
    return VolumeExpression.normalized(
        _bernoulli_quarter_product(r) / 2 ** (r - 1), zeta_factors=(r,)
    )


def covolume_PSO_odd_unimodular(n: int) -> VolumeExpression:
    """Covolume of PSO of the odd unimodular Lorentzian lattice in signature
    (n, 1) for n = 5 mod 8: three times the minimal orbifold covolume."""
    if n < 5 or n % 8 != 5:
        raise ValueError(f"this covolume needs n = 5 mod 8 and n >= 5, got {n}")
    return multiply_scalar(covolume_smallest_orbifold(n), Fraction(3))


def coxeter_polytope_volume_17() -> VolumeExpression:
    """Volume of the 19-facet Coxeter polytope in hyperbolic 17-space whose
    reflection group realizes the even unimodular lattice of signature
    (17, 1): twice the covolume of the lattice's full isometry group."""
    return multiply_scalar(covolume_PO_even_unimodular(17), Fraction(2))


def multiply_scalar(expr: VolumeExpression, q: ExactRational) -> VolumeExpression:
    """Scale by a positive exact rational."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError(f"scalar must be positive, got {q}")
    return VolumeExpression(
        coefficient=expr.coefficient * q,
        sqrt3_exponent=expr.sqrt3_exponent,
        pi_exponent=expr.pi_exponent,
        zeta_factors=expr.zeta_factors,
        L3_factors=expr.L3_factors,
    )


def multiply(a: VolumeExpression, b: VolumeExpression) -> VolumeExpression:
    """Product of two expressions, renormalized."""
    return VolumeExpression.normalized(
        a.coefficient * b.coefficient,
        sqrt3_exponent=a.sqrt3_exponent + b.sqrt3_exponent,
        pi_exponent=a.pi_exponent + b.pi_exponent,
        zeta_factors=a.zeta_factors + b.zeta_factors,
        L3_factors=a.L3_factors + b.L3_factors,
    )


def evaluate(expr: VolumeExpression, precision_bits: int) -> ApproxReal:
    """Numerical enclosure of the expression's value.

    Every factor carries a rigorous bound and the interval product is
    conservative, so the result's abs_error is a proven enclosure radius.
    """
    if precision_bits < 16:
        raise ValueError(f"precision_bits must be >= 16, got {precision_bits}")
    for s in expr.zeta_factors:
        if s < 2:
            raise ValueError(f"zeta argument {s} is outside the convergent range")
    for t in expr.L3_factors:
        if t < 2:
            raise ValueError(f"L argument {t} is outside the supported range")
    acc = ApproxReal.from_fraction(expr.coefficient, precision_bits)
    if expr.sqrt3_exponent:
        acc = acc.mul(sqrt3_approx(precision_bits), precision_bits)
    if expr.pi_exponent:
        pi_pow = pi_approx(precision_bits).pow_int(expr.pi_exponent, precision_bits)
        acc = acc.mul(pi_pow, precision_bits)
    for s in expr.zeta_factors:
        acc = acc.mul(zeta_int(s, precision_bits), precision_bits)
    for t in expr.L3_factors:
        acc = acc.mul(dirichlet_L_chi3(t, precision_bits), precision_bits)
    return acc
