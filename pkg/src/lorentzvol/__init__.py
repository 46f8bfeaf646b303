"""Exact and arbitrary-precision hyperbolic covolumes of unimodular
Lorentzian lattice automorphism groups, with a lattice and Coxeter-diagram
certification toolkit."""

from .approx import (
    ApproxReal,
    dirichlet_L_chi3,
    hurwitz_zeta,
    pi_approx,
    sqrt3_approx,
    to_fraction,
    zeta_int,
)
from .lattice import (
    CoxeterDiagram,
    GramMatrix,
    Signature,
    coxeter_gram,
    determinant,
    diagram_II17,
    gram_E8,
    gram_form_f,
    gram_hyperbolic_plane,
    gram_identity_lorentzian,
    gram_II,
    is_even,
    signature,
)
from .mass import mass_even_unimodular, volume_mass_ratio
from .rational import ExactRational, bernoulli, binomial, zeta_even_exact
from .volume import (
    VolumeExpression,
    covolume_PO_even_unimodular,
    covolume_PSO_odd_unimodular,
    covolume_smallest_orbifold,
    coxeter_polytope_volume_17,
    evaluate,
    multiply,
    multiply_scalar,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    "ExactRational",
    "bernoulli",
    "binomial",
    "zeta_even_exact",
    "ApproxReal",
    "to_fraction",
    "pi_approx",
    "sqrt3_approx",
    "zeta_int",
    "hurwitz_zeta",
    "dirichlet_L_chi3",
    "VolumeExpression",
    "covolume_smallest_orbifold",
    "covolume_PO_even_unimodular",
    "covolume_PSO_odd_unimodular",
    "coxeter_polytope_volume_17",
    "evaluate",
    "multiply",
    "multiply_scalar",
    "GramMatrix",
    "CoxeterDiagram",
    "Signature",
    "gram_identity_lorentzian",
    "gram_form_f",
    "gram_hyperbolic_plane",
    "gram_E8",
    "gram_II",
    "is_even",
    "determinant",
    "signature",
    "coxeter_gram",
    "diagram_II17",
    "mass_even_unimodular",
    "volume_mass_ratio",
]
