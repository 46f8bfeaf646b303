"""Command-line front end: exact symbolic output, decimal enclosures, JSON.

Exit codes: 0 success, 2 invalid input, 1 self-check failure.  JSON output
is deterministic byte for byte: key order is fixed, decimal strings always
use '.' and an explicit exponent, and nothing time- or locale-dependent is
ever included.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Callable

from mpmath import mpf
from mpmath.libmp import prec_to_dps

from .approx import ApproxReal, pi_approx, to_fraction, zeta_int
from .lattice import (
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
from .rational import _bernoulli_reference, bernoulli, zeta_even_exact
from .volume import (
    VolumeExpression,
    covolume_PO_even_unimodular,
    covolume_PSO_odd_unimodular,
    covolume_smallest_orbifold,
    coxeter_polytope_volume_17,
    evaluate,
    multiply_scalar,
)

__all__ = ["main", "entry", "build_parser"]

DEFAULT_PRECISION = 128
PREC_ENV_VAR = "LORENTZVOL_PREC"


def _resolve_precision(explicit: int | None) -> int:
    """Explicit --prec wins; otherwise the optional environment override of
    the default, otherwise 128."""
    if explicit is not None:
        return explicit
    raw = os.environ.get(PREC_ENV_VAR)
    if raw is None:
        return DEFAULT_PRECISION
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{PREC_ENV_VAR} must be an integer, got {raw!r}")
    if value < 16:
        raise ValueError(f"{PREC_ENV_VAR} must be >= 16, got {value}")
    return value


def _fraction_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _factored_side(n: int) -> str:
    if n == 0:
        return "0"
    if n == 1:
        return "1"
    from sympy import factorint

    parts = []
    for p, e in sorted(factorint(n).items()):
        parts.append(f"{p}^{e}" if e > 1 else str(p))
    return " * ".join(parts)


def _factored_str(q: Fraction) -> str:
    sign = "-" if q < 0 else ""
    num = _factored_side(abs(q.numerator))
    if q.denominator == 1:
        return sign + num
    den = _factored_side(q.denominator)
    if " * " in num:
        num = f"({num})"
    if " * " in den:
        den = f"({den})"
    return f"{sign}{num} / {den}"


def _decimal_sci(x: mpf, digits: int) -> str:
    """Deterministic scientific notation via exact conversion to Decimal."""
    q = to_fraction(x)
    if q == 0:
        return "0"
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(q.numerator) / Decimal(q.denominator)
    return format(d, "e")


def _exact_part(expr: VolumeExpression) -> dict:
    return {
        "coefficient": _fraction_str(expr.coefficient),
        "coefficient_factored": _factored_str(expr.coefficient),
        "sqrt3_exponent": expr.sqrt3_exponent,
        "pi_exponent": expr.pi_exponent,
        "zeta_factors": list(expr.zeta_factors),
        "L3_factors": list(expr.L3_factors),
    }


def _decimal_part(approx: ApproxReal, precision_bits: int) -> dict:
    return {
        "value": _decimal_sci(approx.value, prec_to_dps(precision_bits)),
        "abs_error": _decimal_sci(approx.abs_error, 3),
    }


def _signature_str(g) -> str:
    s = signature(g)
    return f"{s.positives},{s.negatives},{s.zeros}"


def _emit_text(record: dict, prefix: str = "") -> None:
    for key, value in record.items():
        path = f"{prefix}{key}"
        if isinstance(value, dict):
            _emit_text(value, prefix=f"{path}.")
        else:
            print(f"{path}: {value}")


def _emit(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record, indent=2))
    else:
        _emit_text(record)


_GROUP_BUILDERS: dict[str, Callable[[int], VolumeExpression]] = {
    "smallest": covolume_smallest_orbifold,
    "po-even": covolume_PO_even_unimodular,
    "pso-odd": covolume_PSO_odd_unimodular,
}


def _cmd_volume(args: argparse.Namespace) -> int:
    expr = _GROUP_BUILDERS[args.group](args.n)
    record: dict = {
        "input": {"command": "volume", "n": args.n, "group": args.group},
        "exact": _exact_part(expr),
    }
    if args.prec is not None:
        record["input"]["precision_bits"] = args.prec
        record["decimal"] = _decimal_part(evaluate(expr, args.prec), args.prec)
    record["status"] = "ok"
    _emit(record, args.format)
    return 0


def _cmd_coxeter17(args: argparse.Namespace) -> int:
    prec = _resolve_precision(args.prec)
    expr = coxeter_polytope_volume_17()
    diagram = diagram_II17()
    gram = coxeter_gram(diagram)
    record = {
        "input": {"command": "coxeter17", "precision_bits": prec},
        "exact": _exact_part(expr),
        "decimal": _decimal_part(evaluate(expr, prec), prec),
        "diagram": {
            "node_count": diagram.node_count,
            "degree_sequence": sorted(diagram.degrees()),
            "signature": _signature_str(gram),
            "rank": gram.dimension - signature(gram).zeros,
        },
        "status": "ok",
    }
    _emit(record, args.format)
    return 0


def _cmd_mass(args: argparse.Namespace) -> int:
    value = mass_even_unimodular(args.m)
    record = {
        "input": {"command": "mass", "m": args.m},
        "exact": {
            "mass": _fraction_str(value),
            "mass_factored": _factored_str(value),
        },
        "status": "ok",
    }
    _emit(record, args.format)
    return 0


def _cmd_ratio(args: argparse.Namespace) -> int:
    prec = _resolve_precision(args.prec)
    expr = volume_mass_ratio(args.n)
    record = {
        "input": {"command": "ratio", "n": args.n, "precision_bits": prec},
        "exact": _exact_part(expr),
        "decimal": _decimal_part(evaluate(expr, prec), prec),
        "status": "ok",
    }
    _emit(record, args.format)
    return 0


def _cmd_lattice(args: argparse.Namespace) -> int:
    needs_n = args.kind in ("II", "I", "f")
    if needs_n and args.n is None:
        raise ValueError(f"lattice kind {args.kind} requires a dimension n")
    if not needs_n and args.n is not None:
        raise ValueError(f"lattice kind {args.kind} takes no dimension")
    if args.kind == "II":
        gram = gram_II(args.n)
    elif args.kind == "I":
        gram = gram_identity_lorentzian(args.n)
    elif args.kind == "f":
        gram = gram_form_f(args.n)
    elif args.kind == "E8":
        gram = gram_E8()
    else:
        gram = gram_hyperbolic_plane()
    det = determinant(gram)
    record = {
        "input": {"command": "lattice", "kind": args.kind, "n": args.n},
        "exact": {
            "dimension": gram.dimension,
            "determinant": _fraction_str(det),
            "determinant_factored": _factored_str(det),
            "even": is_even(gram),
            "signature": _signature_str(gram),
        },
        "status": "ok",
    }
    _emit(record, args.format)
    return 0


def _check_bernoulli_table() -> bool:
    return all(bernoulli(k) == _bernoulli_reference(k) for k in range(41))


def _check_zeta_even_fold() -> bool:
    for j in range(1, 9):
        c, k = zeta_even_exact(j)
        lhs = zeta_int(2 * j, 128)
        rhs = ApproxReal.from_fraction(c, 128).mul(
            pi_approx(128).pow_int(k, 128), 128
        )
        if not lhs.overlaps(rhs):
            return False
    return True


def _check_index_two() -> bool:
    return all(
        covolume_smallest_orbifold(n) == multiply_scalar(covolume_PO_even_unimodular(n), Fraction(2))
        for n in range(9, 42, 8)
    )


def _check_index_three() -> bool:
    return all(
        covolume_PSO_odd_unimodular(n) == multiply_scalar(covolume_smallest_orbifold(n), Fraction(3))
        for n in (5, 13, 21)
    )


def _check_ratio_identity() -> bool:
    for n in (9, 17, 25, 33):
        lhs = multiply_scalar(
            covolume_PO_even_unimodular(n), 1 / mass_even_unimodular(n - 1)
        )
        if lhs != volume_mass_ratio(n):
            return False
    return True


def _check_mass_anchor() -> bool:
    return mass_even_unimodular(8) == Fraction(1, 696729600)


def _check_coxeter_coefficient() -> bool:
    target = Fraction(691 * 3617, 2**38 * 3**10 * 5**4 * 7**2 * 11 * 13 * 17)
    return coxeter_polytope_volume_17() == VolumeExpression.normalized(
        target, zeta_factors=(9,)
    )


def _check_lattice_signatures() -> bool:
    if signature(gram_II(17)).as_tuple() != (17, 1, 0):
        return False
    if signature(gram_identity_lorentzian(9)).as_tuple() != (9, 1, 0):
        return False
    if signature(coxeter_gram(diagram_II17())).as_tuple() != (17, 1, 1):
        return False
    if determinant(gram_II(9)) != -1 or not is_even(gram_II(9)):
        return False
    if is_even(gram_identity_lorentzian(9)):
        return False
    return True


_SELFCHECKS: tuple[tuple[str, Callable[[], bool]], ...] = (
    ("bernoulli-table", _check_bernoulli_table),
    ("zeta-even-fold", _check_zeta_even_fold),
    ("index-two-identity", _check_index_two),
    ("index-three-identity", _check_index_three),
    ("ratio-identity", _check_ratio_identity),
    ("mass-anchor", _check_mass_anchor),
    ("coxeter-coefficient", _check_coxeter_coefficient),
    ("lattice-signatures", _check_lattice_signatures),
)


def _cmd_selfcheck(args: argparse.Namespace) -> int:
    all_ok = True
    for name, check in _SELFCHECKS:
        try:
            ok = check()
        except Exception:
            ok = False
        print(f"{name}: {'PASS' if ok else 'FAIL'}")
        all_ok = all_ok and ok
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lorentzvol",
        description=(
            "Exact and arbitrary-precision hyperbolic covolumes of unimodular "
            "Lorentzian lattice automorphism groups."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_volume = sub.add_parser("volume", help="covolume formulas by dimension and group")
    p_volume.add_argument("n", type=int, help="hyperbolic dimension")
    p_volume.add_argument("--group", choices=sorted(_GROUP_BUILDERS), default="smallest")
    p_volume.add_argument("--prec", type=int, default=None,
                          help="evaluate numerically at this many bits")
    p_volume.add_argument("--format", choices=["text", "json"], default="text")
    p_volume.set_defaults(handler=_cmd_volume)

    p_cox = sub.add_parser("coxeter17", help="17-dimensional Coxeter polytope volume and diagram certificate")
    p_cox.add_argument("--prec", type=int, default=None)
    p_cox.add_argument("--format", choices=["text", "json"], default="text")
    p_cox.set_defaults(handler=_cmd_coxeter17)

    p_mass = sub.add_parser("mass", help="mass of the even unimodular definite genus of rank m")
    p_mass.add_argument("m", type=int)
    p_mass.add_argument("--format", choices=["text", "json"], default="text")
    p_mass.set_defaults(handler=_cmd_mass)

    p_ratio = sub.add_parser("ratio", help="covolume to mass ratio in dimension n")
    p_ratio.add_argument("n", type=int)
    p_ratio.add_argument("--prec", type=int, default=None)
    p_ratio.add_argument("--format", choices=["text", "json"], default="text")
    p_ratio.set_defaults(handler=_cmd_ratio)

    p_lat = sub.add_parser("lattice", help="Gram matrix certificates: determinant, parity, signature")
    p_lat.add_argument("kind", choices=["II", "I", "f", "E8", "U"])
    p_lat.add_argument("n", type=int, nargs="?", default=None)
    p_lat.add_argument("--format", choices=["text", "json"], default="text")
    p_lat.set_defaults(handler=_cmd_lattice)

    p_check = sub.add_parser("selfcheck", help="run the exact identity suite")
    p_check.set_defaults(handler=_cmd_selfcheck)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main(sys.argv[1:]))
