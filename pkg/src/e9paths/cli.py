"""Command-line front end: ``e9paths <command> [options]``.

Exit codes: 0 success, 1 a verification found a counterexample, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import __version__
from .decomposer import (
    backtrack_witness,
    decompose,
    enumerate_level,
    genfun_coefficients,
    verify_addition_lemma,
    verify_subtraction_lemma,
    witness_path,
    witness_prefixes,
)
from .grading import delta_shift, initial_label, is_initial, k_of_label, k_value
from .lattice import LatticeError, RationalVector10, WeightLabel, canonical_key, from_label
from .littelmann import generate_basis_truncated, minimal_stratum, tensor_power_truncated
from .straight import enumerate_straight

FORMAT_VERSION = "e9-cli-v1"
EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _bracket(label: WeightLabel) -> str:
    return f"[{label.pretty()}]"


def _label_arg(text: str) -> WeightLabel:
    try:
        return WeightLabel.parse(text)
    except LatticeError as exc:
        raise UsageError(str(exc)) from None


def _positive(name: str, value: int, minimum: int = 1) -> int:
    if value < minimum:
        raise UsageError(f"--{name} must be >= {minimum}, got {value}")
    return value


def _emit(args, command: str, params: dict, payload, lines) -> None:
    if args.format == "json":
        doc = {
            "command": command,
            "format_version": FORMAT_VERSION,
            "parameters": params,
            "payload": payload,
        }
        sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n")
    else:
        for line in lines:
            sys.stdout.write(line + "\n")


# ------------------------------------------------------------------ commands


def cmd_decompose(args) -> int:
    n = _positive("n", args.n)
    table = decompose(n, cache_dir=args.cache_dir)
    items = table.sorted_items()
    payload = {
        "n": n,
        "entries": [
            {"label": str(lab), "mult": str(c), "pretty": lab.pretty(), "delta_shift": _frac(Fraction(lab.s, 2))}
            for lab, c in items
        ],
        "total": str(sum(table.entries.values())),
    }
    lines = [f"{c} · {_bracket(lab)}" for lab, c in items]
    _emit(args, "decompose", {"n": n}, payload, lines)
    return EXIT_OK


def cmd_straight(args) -> int:
    rows = []
    lines = []
    for idx, w in enumerate(enumerate_straight()):
        rows.append({"index": idx, "type": w.wtype, "k": w.k, "vector": str(w.vector)})
        lines.append(f"{idx:3d}  {w.wtype:<3}  k={w.k:>2}  {w.vector!r}")
    _emit(args, "straight", {}, {"count": len(rows), "weights": rows}, lines)
    return EXIT_OK


def cmd_initial(args) -> int:
    n = _positive("n", args.n, 0)
    labels = enumerate_level(n).labels
    payload = [
        {"label": str(l), "pretty": l.pretty(), "k": k_of_label(l), "delta": _frac(Fraction(l.s, 2))}
        for l in labels
    ]
    lines = [f"{l}  {_bracket(l)}  k={k_of_label(l)}  Δ={_frac(Fraction(l.s, 2))}" for l in labels]
    _emit(args, "initial", {"n": n}, {"count": len(labels), "labels": payload}, lines)
    return EXIT_OK


def cmd_delta(args) -> int:
    label = _label_arg(args.label)
    d = Fraction(delta_shift(label), 2)
    payload = {"label": str(label), "k": k_of_label(label), "delta": _frac(d),
               "initial": str(initial_label(label.M)), "is_initial": is_initial(label)}
    _emit(args, "delta", {"label": str(label)}, payload, [f"Δ = {_frac(d)}"])
    return EXIT_OK


def cmd_k(args) -> int:
    if (args.label is None) == (args.vector is None):
        raise UsageError("give exactly one of --label or --vector")
    if args.label is not None:
        label = _label_arg(args.label)
        v = from_label(label)
        params = {"label": str(label)}
    else:
        try:
            v = RationalVector10.parse(args.vector)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        params = {"vector": str(v)}
    try:
        k = k_value(v)
    except LatticeError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, "k", params, {"k": k, "residue3": k % 3}, [f"k = {k}", f"[k]_3 = {k % 3}"])
    return EXIT_OK


def cmd_genfun(args) -> int:
    max_n = _positive("max-n", args.max_n, 0)
    coeffs = genfun_coefficients(max_n)
    _emit(args, "genfun", {"max_n": max_n}, [str(c) for c in coeffs], [" ".join(map(str, coeffs))])
    return EXIT_OK


def cmd_witness(args) -> int:
    label = _label_arg(args.label)
    if not is_initial(label):
        raise UsageError(f"label {label} is not initial (expected s = {delta_shift(label)})")
    steps = backtrack_witness(label) if args.backtrack else witness_path(label)
    prefixes = witness_prefixes(steps)
    payload = [
        {"omega": str(w.vector), "type": w.wtype, "partial": str(p) if p else None}
        for w, p in zip(steps, prefixes)
    ]
    lines = [f"{w.wtype:<3} {w.vector!r:<48} -> {_bracket(p) if p else 'NOT DOMINANT'}"
             for w, p in zip(steps, prefixes)]
    _emit(args, "witness", {"label": str(label), "backtrack": args.backtrack}, payload, lines)
    return EXIT_OK


def cmd_oracle(args) -> int:
    n = _positive("n", args.n)
    depth = _positive("depth", args.depth, 0)
    started = time.perf_counter()
    basis = generate_basis_truncated(depth)
    table = tensor_power_truncated(n, depth, basis)
    shown = table if args.all_strata else minimal_stratum(table)
    items = sorted(shown.items(), key=lambda kv: (canonical_key(kv[0]), kv[0].s))
    payload = {
        "basis_size": len(basis),
        "entries": [{"label": str(l), "mult": str(c), "pretty": l.pretty()} for l, c in items],
    }
    lines = [f"{c} · {_bracket(l)}" for l, c in items]
    lines.append(f"# basis paths: {len(basis)}, {time.perf_counter() - started:.2f}s")
    _emit(args, "oracle", {"n": n, "depth": depth, "all_strata": args.all_strata}, payload, lines)
    return EXIT_OK


def _witness_sweep(n_max: int) -> list:
    bad = []
    for n in range(1, n_max + 1):
        for lab in enumerate_level(n).labels:
            pre = witness_prefixes(witness_path(lab))
            if len(pre) != n or pre[-1] != lab or not all(p is not None and is_initial(p) for p in pre):
                bad.append(str(lab))
    return bad


def cmd_verify(args) -> int:
    n_max = args.max_level
    results = {}
    if args.lemma in ("subtraction", "all"):
        rep = verify_subtraction_lemma(_positive("max-level", n_max if n_max else 6, 2))
        results["subtraction"] = {
            "cases": rep.cases, "counterexamples": len(rep.counterexamples) + len(rep.t_mismatches),
            "initial": rep.initial, "non_dominant": rep.non_dominant, "above_initial": rep.above_initial,
        }
    if args.lemma in ("addition", "all"):
        rep = verify_addition_lemma(_positive("max-level", n_max if n_max else 4),
                                    _positive("j-max-doubled", args.j_max_doubled, 2))
        results["addition"] = {
            "cases": rep.cases, "type_iv": rep.type_iv_count, "dominant": rep.dominant,
            "counterexamples": len(rep.violations) + len(rep.k_bound_failures) + len(rep.inequality_failures),
        }
    if args.lemma in ("witness", "all"):
        bad = _witness_sweep(_positive("max-level", n_max if n_max else 8))
        results["witness"] = {"counterexamples": len(bad), "failed": bad}
    total = sum(r["counterexamples"] for r in results.values())
    lines = [f"{name}: {r}" for name, r in results.items()] if args.verbose else []
    lines.append(("OK" if total == 0 else "FAIL") + f", {total} counterexamples")
    _emit(args, "verify", {"lemma": args.lemma, "max_level": n_max, "j_max_doubled": args.j_max_doubled},
          results, lines)
    return EXIT_OK if total == 0 else EXIT_COUNTEREXAMPLE


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default=argparse.SUPPRESS)
    common.add_argument("--cache-dir", default=argparse.SUPPRESS, metavar="PATH")

    parser = argparse.ArgumentParser(prog="e9paths", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--format", choices=("table", "json"), default="table")
    parser.add_argument("--cache-dir", default=None, metavar="PATH")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="decompose M_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("straight", parents=[common], help="list the 200 straight weights")
    p.set_defaults(func=cmd_straight)

    p = sub.add_parser("initial", parents=[common], help="list the level-n initial weights")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_initial)

    p = sub.add_parser("delta", parents=[common], help="Delta of a label (its s is ignored)")
    p.add_argument("--label", required=True, help='"M0,...,M8;s"')
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("k", parents=[common], help="k-value of a label or vector")
    p.add_argument("--label")
    p.add_argument("--vector", help='ten rationals "p/q" in basis order')
    p.set_defaults(func=cmd_k)

    p = sub.add_parser("genfun", parents=[common], help="level-count generating function")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_genfun)

    p = sub.add_parser("witness", parents=[common], help="a dominant straight path to an initial weight")
    p.add_argument("--label", required=True)
    p.add_argument("--backtrack", action="store_true", help="recover the path from the tables instead")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("oracle", parents=[common], help="brute-force root-operator decomposition")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--depth", type=int, default=3, help="doubled delta-depth bound")
    p.add_argument("--all-strata", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="exhaustive lemma sweeps")
    p.add_argument("--lemma", choices=("subtraction", "addition", "witness", "all"), default="all")
    p.add_argument("--max-level", type=int, default=None)
    p.add_argument("--j-max-doubled", type=int, default=4)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(f"{args.command}: {exc}")  # exits with status 2


if __name__ == "__main__":
    sys.exit(main())
