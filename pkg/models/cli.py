"""
Command line front end

Every command writes records to stdout, one JSON object per line or a TSV
table, ordered by canonical representative. Logging goes to stderr and the
log files only, so identical invocations give identical stdout.
"""
import sys
import logging
import argparse
from typing import Any, Dict, List, Optional, Sequence, TextIO

from models.errors import ParameterError, ResourceBoundError
from models.green import (
    CuspidalToken,
    cuspidal_support_mod_ell,
    enumerate_cuspidal_tokens,
    green_rep,
    green_trace,
    primitive_elements,
    reduce_mod_ell,
)
from models.inertial import (
    EndoClassDescriptor,
    Side,
    SimpleInertialTriple,
    beta_twist_level_zero,
    beta_twist_triple,
    canonical_beta_label,
    canonical_triple,
    change_lift,
    epsilon_gal,
    equivalent_presentations,
    inflate_simple,
    level_zero_twist_triple,
    multiplicity,
    parametric_degree,
    rec_inverse,
    rec_triple,
    reduce_triple_mod_ell,
    residue_context,
    triples_equal,
)
from models.lattice import FieldSpec, OrbitFilter
from models.records import columns_of, triple_from_json, triple_to_record, write_json_lines, write_tsv
from models.verifiers import VERIFIERS
from models.worker import GridRunner, grid_points, prime_powers

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_INCONCLUSIVE = 4

TRIPLE_ACTIONS = ("canonicalize", "equal", "fiber", "rec", "reduce", "inflate", "twist", "level-zero", "describe")
BETA_ACTIONS = ("epsilon-gal", "canonical-label", "twist")


# Output

def emit(records: List[Dict[str, Any]], fmt: str, out: TextIO, columns: Optional[Sequence[str]] = None) -> None:
    if fmt == "tsv":
        write_tsv(records, list(columns) if columns else columns_of(records), out)
    else:
        write_json_lines(records, out)


def orbit_record(field: FieldSpec, orbit) -> Dict[str, Any]:
    d, j = field.regular_descent(orbit.canonical)
    return {
        "canonical": orbit.canonical,
        "members": list(orbit.members),
        "size": orbit.size,
        "regular": orbit.is_regular,
        "d": d,
        "j": j,
    }


def _field(args) -> FieldSpec:
    if args.q is None or args.n is None:
        raise ParameterError("--q and --n are required")
    return FieldSpec.over(args.q, args.n)


def _require(args, *names: str) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name, None) is None]
    if missing:
        raise ParameterError(f"{args.command} needs {', '.join(missing)}")


# Field and cuspidal commands

def cmd_orbits(args, out: TextIO) -> int:
    field = _field(args)
    orbits = field.enumerate_orbits(OrbitFilter(args.filter), args.sweep_bound)
    emit([orbit_record(field, orbit) for orbit in orbits], args.format, out,
         ("canonical", "members", "size", "regular", "d", "j"))
    return EXIT_OK


def cmd_trace(args, out: TextIO) -> int:
    _require(args, "k")
    field = _field(args)
    token = green_rep(field, field.orbit_of(args.k))
    exponents = [args.m] if args.m is not None else primitive_elements(field, args.sweep_bound)
    records = []
    for m in exponents:
        value = green_trace(token, m)
        records.append({"k": token.orbit.canonical, "m": field.residue(m), **value.to_dict()})
    emit(records, args.format, out, ("k", "m", "modulus", "coefficients", "approx_decimal"))
    return EXIT_OK


def cmd_reduce(args, out: TextIO) -> int:
    _require(args, "k", "ell")
    field = _field(args)
    token = green_rep(field, field.orbit_of(args.k))
    reduced = reduce_mod_ell(token, args.ell)
    tokens = enumerate_cuspidal_tokens(field, args.ell, args.sweep_bound)
    record = {
        "q": field.q,
        "n": field.n,
        "ell": args.ell,
        "orbit_canonical": token.orbit.canonical,
        "reduced": reduced.to_dict(),
        "supercuspidal": reduced.is_supercuspidal,
        "support": cuspidal_support_mod_ell(token, args.ell).to_dict(),
        "cuspidal_count": len(tokens),
        "supercuspidal_count": sum(1 for t in tokens if t.is_supercuspidal),
    }
    emit([record], args.format, out)
    return EXIT_OK


def cmd_support(args, out: TextIO) -> int:
    _require(args, "k", "ell")
    field = _field(args)
    orbit = field.orbit_of(args.k)
    char = args.char or 0
    token = CuspidalToken(field, orbit, char)
    support = cuspidal_support_mod_ell(token, args.ell)
    records = [dict(entry.to_dict(), total_degree=support.total_degree) for entry in support.entries]
    emit(records, args.format, out, ("d", "orbit_canonical", "members", "a", "total_degree"))
    return EXIT_OK


def cmd_cuspidals(args, out: TextIO) -> int:
    field = _field(args)
    tokens = enumerate_cuspidal_tokens(field, args.ell or 0, args.sweep_bound)
    emit([token.to_dict() for token in tokens], args.format, out,
         ("q", "n", "char", "orbit_canonical", "members", "supercuspidal"))
    return EXIT_OK


# Triples

def _endo(args) -> EndoClassDescriptor:
    _require(args, "p", "q", "delta", "e", "f")
    return EndoClassDescriptor(args.p, args.q, args.delta, args.e, args.f, args.r)


def _triple(args) -> SimpleInertialTriple:
    if args.record:
        return triple_from_json(args.record)
    _require(args, "n", "k")
    return SimpleInertialTriple.build(args.n, _endo(args), args.lift, args.k, Side(args.side), args.char or 0)


def _other_triple(args, t: SimpleInertialTriple) -> SimpleInertialTriple:
    if args.other_record:
        return triple_from_json(args.other_record)
    _require(args, "other_k")
    return SimpleInertialTriple.build(t.n, t.endo, args.other_lift, args.other_k, t.side, t.char)


def cmd_triple(args, out: TextIO) -> int:
    t = _triple(args)
    action = args.action
    if action == "equal":
        other = _other_triple(args, t)
        emit([{"equal": triples_equal(t, other)}], args.format, out)
        return EXIT_OK

    if action == "canonicalize":
        results = [canonical_triple(t)]
    elif action == "fiber":
        results = equivalent_presentations(t)
    elif action == "rec":
        results = [rec_triple(t) if t.side is Side.GL else rec_inverse(t)]
    elif action == "reduce":
        _require(args, "ell")
        results = [reduce_triple_mod_ell(t, args.ell)]
    elif action == "inflate":
        _require(args, "m")
        results = [inflate_simple(t, args.m)]
    elif action == "twist":
        _require(args, "s")
        results = [beta_twist_triple(t, args.s)]
    elif action == "level-zero":
        results = [level_zero_twist_triple(t, args.inverse)]
    elif action == "describe":
        emit([describe_triple(t)], args.format, out)
        return EXIT_OK
    else:
        raise ParameterError(f"unknown triple action {action!r}")

    if args.shift:
        results = [change_lift(r, args.shift) for r in results]
    emit([triple_to_record(r) for r in results], args.format, out)
    return EXIT_OK


def cmd_beta(args, out: TextIO) -> int:
    action = args.action
    if action == "twist":
        _require(args, "k", "s")
        field = _field(args)
        orbit = field.orbit_of(args.k)
        image = beta_twist_level_zero(orbit, args.s)
        record = {
            "orbit_canonical": orbit.canonical,
            "members": list(orbit.members),
            "s": args.s,
            "image_canonical": image.canonical,
            "image_members": list(image.members),
        }
    elif action == "epsilon-gal":
        endo = _endo(args)
        record = {"epsilon_gal": epsilon_gal(endo), "modulus": endo.residue_q - 1}
    elif action == "canonical-label":
        record = canonical_beta_label(_endo(args), args.eps1).to_dict()
    else:
        raise ParameterError(f"unknown beta action {action!r}")
    emit([record], args.format, out)
    return EXIT_OK


def describe_triple(t: SimpleInertialTriple) -> Dict[str, Any]:
    return dict(triple_to_record(t), parametric_degree=parametric_degree(t), multiplicity=multiplicity(t),
                context_M=residue_context(t.endo, t.n).M)


# Verification

def _axis(single: Optional[int], upto: Optional[int], values, name: str) -> List[int]:
    if single is not None:
        return [single]
    if upto is not None:
        return values(upto)
    raise ParameterError(f"verify needs --{name} or --{name}-max")


def cmd_verify(args, out: TextIO) -> int:
    qs = _axis(args.q, args.q_max, prime_powers, "q")
    ns = _axis(args.n, args.n_max, lambda upto: list(range(1, upto + 1)), "n")
    options = {"a": args.a, "k": args.k, "exact": args.exact}
    points = grid_points(args.claim, qs, ns, args.ell or (), args.sweep_bound, **options)
    if not points:
        logger.warning(f"{args.claim}: no grid points within the sweep bound")

    runner = GridRunner(args.claim, points, args.workers, args.timeout, args.sweep_bound)
    columns = ["claim", "point", "status", "payload"] + (["elapsed"] if args.timings else [])
    if args.format == "tsv":
        write_tsv([], columns, out)
    for report in runner.run():
        record = report.to_dict(args.timings)
        if args.format == "tsv":
            record["point"] = report.point_text()
            write_tsv([record], columns, out, header=False)
        else:
            write_json_lines([record], out)
        out.flush()
    return runner.exit_code()


COMMANDS = {
    "orbits": cmd_orbits,
    "trace": cmd_trace,
    "reduce": cmd_reduce,
    "support": cmd_support,
    "cuspidals": cmd_cuspidals,
    "triple": cmd_triple,
    "beta": cmd_beta,
    "verify": cmd_verify,
}


# Parser

def _positive_int(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text} is not a positive integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv"], default="json", help="Output format")
    common.add_argument("--sweep-bound", type=_positive_int, default=None,
                        help="Largest group to enumerate (default LEVEL_ZERO_SWEEP_BOUND)")
    common.add_argument("-v", "--verbose", action="store_true", help="INFO logging on stderr")

    field = argparse.ArgumentParser(add_help=False)
    field.add_argument("--q", type=int, help="Prime power q")
    field.add_argument("--n", type=int, help="Degree n")
    field.add_argument("--k", type=int, help="Character exponent")
    field.add_argument("--ell", type=int, help="Prime ell != p")

    endo = argparse.ArgumentParser(add_help=False)
    endo.add_argument("--p", type=int, help="Residue characteristic")
    endo.add_argument("--delta", type=int, help="Degree delta = e*f")
    endo.add_argument("--e", type=int, help="Ramification index")
    endo.add_argument("--f", type=int, help="Residue degree")
    endo.add_argument("--r", type=int, default=0, help="Wild exponent")

    parser = argparse.ArgumentParser(
        prog="level-zero",
        description="Character orbits, cuspidal tokens and inertial triples over finite fields",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    orbits = sub.add_parser("orbits", parents=[common, field], help="Frobenius orbits of F_{q^n}^x characters")
    orbits.add_argument("--filter", choices=[f.value for f in OrbitFilter], default="all")

    trace = sub.add_parser("trace", parents=[common, field], help="Exact Green traces on primitive elements")
    trace.add_argument("--m", type=int, help="Single primitive exponent (default: all)")

    sub.add_parser("reduce", parents=[common, field], help="Reduce a supercuspidal token mod ell")

    support = sub.add_parser("support", parents=[common, field], help="Supercuspidal support mod ell")
    support.add_argument("--char", type=int, default=0, help="Token characteristic (0 or ell)")

    sub.add_parser("cuspidals", parents=[common, field], help="Cuspidal tokens in characteristic 0 or ell")

    triple = sub.add_parser("triple", parents=[common, field, endo], help="Operations on inertial triples")
    triple.add_argument("action", choices=TRIPLE_ACTIONS)
    triple.add_argument("--lift", type=int, default=0, help="Lift index gamma mod f")
    triple.add_argument("--side", choices=[s.value for s in Side], default=Side.GL.value)
    triple.add_argument("--char", type=int, default=0, help="Coefficient characteristic (0 or ell)")
    triple.add_argument("--record", help="Triple as a JSON record instead of flags")
    triple.add_argument("--other-record", help="Second triple for 'equal'")
    triple.add_argument("--other-lift", type=int, default=0)
    triple.add_argument("--other-k", type=int)
    triple.add_argument("--m", type=int, help="Multiplicity for 'inflate'")
    triple.add_argument("--s", type=int, help="Base character label for 'twist'")
    triple.add_argument("--inverse", action="store_true", help="Inverse level zero twist")
    triple.add_argument("--shift", type=int, default=0, help="Present the result with lift shifted by this much")

    beta = sub.add_parser("beta", parents=[common, field, endo], help="beta-extension labels and twists")
    beta.add_argument("action", choices=BETA_ACTIONS)
    beta.add_argument("--s", type=int, help="Base character label for 'twist'")
    beta.add_argument("--eps1", action="store_true", help="eps1_theta is nontrivial")

    verify = sub.add_parser("verify", parents=[common], help="Brute-force verification grids")
    verify.add_argument("claim", choices=sorted(VERIFIERS))
    verify.add_argument("--q", type=int)
    verify.add_argument("--n", type=int)
    verify.add_argument("--q-max", type=int)
    verify.add_argument("--n-max", type=int)
    verify.add_argument("--ell", type=int, action="append", help="Prime ell (repeatable)")
    verify.add_argument("--a", type=_positive_int, help="Degree multiplier for regular-cover (default 7)")
    verify.add_argument("--k", type=int, help="Single orbit for regular-cover")
    verify.add_argument("--exact", action="store_true",
                        help="Exact trace vectors for every orbit in trace-separation (meant for small M)")
    verify.add_argument("--workers", type=_positive_int, help="Grid threads (default LEVEL_ZERO_GRID_WORKERS)")
    verify.add_argument("--timeout", type=float, help="Seconds per grid point (default LEVEL_ZERO_POINT_TIMEOUT)")
    verify.add_argument("--timings", action="store_true", help="Include elapsed times in the output")

    return parser


def run(args, out: Optional[TextIO] = None) -> int:
    """Dispatch parsed arguments; library errors become exit codes"""
    out = out or sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except ResourceBoundError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_RESOURCE
    except ParameterError as e:
        logger.error(f"{args.command}: {e}")
        return EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    return run(args, out)
