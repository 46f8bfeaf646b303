"""Masses of even unimodular definite lattice genera and covolume ratios."""

from __future__ import annotations

from fractions import Fraction

from .rational import bernoulli
from .volume import VolumeExpression

__all__ = ["mass_even_unimodular", "volume_mass_ratio"]


def mass_even_unimodular(m: int) -> Fraction:
    """Mass of the genus of even unimodular positive definite lattices of
    rank m, for m = 0 mod 8, m >= 8.

    mass = |B_{m/2}| / m * prod_{j=1}^{m/2-1} |B_{2j}| / (4j).
    """
    if m < 8 or m % 8 != 0:
        raise ValueError(f"even unimodular definite lattices need m = 0 mod 8 and m >= 8, got {m}")
    out = abs(bernoulli(m // 2)) / m
    for j in range(1, m // 2):
        out *= abs(bernoulli(2 * j)) / (4 * j)
    return out


def volume_mass_ratio(n: int) -> VolumeExpression:
    """Ratio of the covolume of the full isometry group of the even
    unimodular Lorentzian lattice of signature (n, 1) to the mass of the
    corresponding definite genus of rank n - 1; requires n = 1 mod 8, n >= 9.

    The Bernoulli products in covolume and mass telescope, leaving
    2^-r * |B_{2r-2}| / |B_{r-1}| * zeta(r) with r = (n + 1) / 2.
    """
    if n < 9 or n % 8 != 1:
        raise ValueError(f"the ratio needs n = 1 mod 8 and n >= 9, got {n}")
    r = (n + 1) // 2
    coeff = Fraction(1, 2**r) * abs(bernoulli(2 * r - 2)) / abs(bernoulli(r - 1))
    return VolumeExpression.normalized(coeff, zeta_factors=(r,))
