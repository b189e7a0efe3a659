"""Command-line front end.

Subcommands: relations (random-state sweep of the MP-negativity line),
estimate (monotones from measured matrix files), nonmono (deviation scan),
simulate (triple-slit measurement simulator), mub-check (unbiasedness
verification). Exit codes: 0 success, 2 validation error, 3 parse error.
"""

import argparse
import sys

import numpy as np

from . import bases, errors, estimation, expsim, monotones, nonmono, states

_PARSE_ERRORS = (errors.ParseError, errors.NegativeEntry,
                 errors.DimInconsistent)


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="entmon",
        description="Entanglement monotones from statistical correlators")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("relations",
                       help="random-state (N, MP) sweep in one dimension")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("estimate",
                       help="monotone estimates from matrix files")
    p.add_argument("--plane", choices=("image", "focal"), required=True)
    p.add_argument("--pairing", help="comma permutation of 0..d-1")
    p.add_argument("--values", help="comma outcome values")
    p.add_argument("--model", choices=("pure", "isotropic"), default="pure")
    p.add_argument("--mubs", type=int, help="MUB count m (isotropic model)")
    p.add_argument("--bootstrap", help="<counts>:<resamples>:<seed>")
    p.add_argument("--out")
    p.add_argument("files", nargs="+")

    p = sub.add_parser("nonmono", help="deviation scan over the simplex")
    p.add_argument("--resolution", type=int, required=True)
    p.add_argument("--dim", type=int, choices=(2, 3), default=3)
    p.add_argument("--out", required=True)

    p = sub.add_parser("simulate", help="triple-slit measurement simulator")
    p.add_argument("--lambdas", required=True,
                   help="comma Schmidt coefficients")
    p.add_argument("--plane", choices=("image", "focal"), required=True)
    p.add_argument("--step", type=float, default=30e-6)
    p.add_argument("--range", type=float, default=2e-3, dest="scan_range")
    p.add_argument("--counts", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", required=True)

    p = sub.add_parser("mub-check", help="verify a prime-d MUB family")
    p.add_argument("--dim", type=int, required=True)

    return parser


def _parse_int_list(text, name):
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise errors.OutOfRangeInput(f"bad {name} list: {text}") from exc


def _parse_float_list(text, name):
    try:
        return tuple(float(tok) for tok in text.split(","))
    except ValueError as exc:
        raise errors.OutOfRangeInput(f"bad {name} list: {text}") from exc


def _cmd_relations(args):
    if args.dim < 2 or args.samples < 1:
        raise errors.OutOfRangeInput("need dim >= 2 and samples >= 1")
    sample = states.random_schmidt_stream(args.dim, args.seed, args.samples)
    lines = ["negativity,mp_fourier"]
    for state in sample:
        mp_fourier, _, _ = monotones.mp_relation_forward(state)
        lines.append(
            f"{monotones.negativity_pure(state):.17g},{mp_fourier:.17g}")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {args.samples} (N, MP) pairs to {args.out}")
    return 0


def _cmd_estimate(args):
    pairing = (_parse_int_list(args.pairing, "pairing")
               if args.pairing else None)
    values_a = values_b = None
    if args.values:
        vals = _parse_float_list(args.values, "values")
        values_a = bases.OutcomeValues(dim=len(vals), values=vals)
        values_b = bases.OutcomeValues(dim=len(vals), values=vals)
    mset = estimation.load_matrix_set(
        args.files, plane=args.plane, pairing=pairing,
        values_a=values_a, values_b=values_b)
    if args.bootstrap:
        try:
            parts = tuple(int(tok) for tok in args.bootstrap.split(":"))
        except ValueError as exc:
            raise errors.OutOfRangeInput(
                f"bad bootstrap spec: {args.bootstrap}") from exc
        if len(parts) != 3:
            raise errors.OutOfRangeInput(
                "--bootstrap needs <counts>:<resamples>:<seed>")
        report = estimation.bootstrap_uncertainty(
            mset, parts[0], parts[1], parts[2],
            model=args.model, m=args.mubs)
    else:
        report = estimation.estimate(mset, model=args.model, m=args.mubs)
    text = report.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    for mono in report.monotones:
        sigma = "" if mono.sigma is None else f" +/- {mono.sigma:.4f}"
        print(f"{mono.kind} ({mono.method}) = {mono.value:.4f}{sigma}")
    return 0


def _cmd_nonmono(args):
    result = nonmono.scan_simplex(args.resolution, dim=args.dim)
    nonmono.write_scan_csv(result, args.out)
    print(f"max dQ = {result.max_dq:.4f} at "
          f"c0 = {result.argmax_c0:.4f}, c1 = {result.argmax_c1:.4f}; "
          f"{len(result.nonmonotone_pairs)} non-monotone pairs sampled")
    return 0


def _cmd_simulate(args):
    lams = _parse_float_list(args.lambdas, "lambdas")
    state = states.make_schmidt_state(lams)
    geometry = expsim.reference_geometry()
    config = expsim.ScanConfig(
        plane=args.plane, scan_range=args.scan_range, step=args.step,
        counts_budget=args.counts, seed=args.seed)
    matrix_set = expsim.simulate_correlation_matrix(state, geometry, config)
    expsim.write_matrix_csv(matrix_set, args.out)
    print(f"wrote {args.plane}-plane correlation matrix to {args.out}")
    if args.plane == "focal":
        profile = expsim.coincidence_profile(state, geometry, config)
        profile_path = args.out + ".profile.csv"
        expsim.write_profile_csv(profile, profile_path)
        print(f"wrote coincidence profile to {profile_path}")
    return 0


def _cmd_mub_check(args):
    family = bases.mub_family(args.dim)
    failures = 0
    for i in range(len(family)):
        for j in range(i + 1, len(family)):
            ok = bases.is_mutually_unbiased(family[i], family[j])
            status = "ok" if ok else "FAIL"
            print(f"{family[i].label} vs {family[j].label}: {status}")
            failures += not ok
    print(f"{len(family)} bases, "
          f"{len(family) * (len(family) - 1) // 2} pairs, "
          f"{failures} failures")
    return 0 if failures == 0 else 2


_COMMANDS = {
    "relations": _cmd_relations,
    "estimate": _cmd_estimate,
    "nonmono": _cmd_nonmono,
    "simulate": _cmd_simulate,
    "mub-check": _cmd_mub_check,
}


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.subcommand](args)
    except _PARSE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except errors.EntmonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
