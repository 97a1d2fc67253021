"""Command-line entry point.

Exit codes: 0 success / embeddable, 2 conditions fail, 3 undetermined (or
oracle budget exhausted), 4 input error, 5 internal contract violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .conditions import classify_regime, evaluate
from .errors import BudgetExceeded, ContractViolation, HamEmbedError
from .family import GddParams
from .io import parse_instance, parse_result, serialize_instance, serialize_result
from .oracle import EnumerationBudget, brute_force_decompose, generate_valid_input
from .pipeline import EmbedReport, embed, verify_embedding

EXIT_OK, EXIT_NO, EXIT_UNDETERMINED, EXIT_INPUT, EXIT_CONTRACT = 0, 2, 3, 4, 5
_VERDICT_EXIT = {"yes": EXIT_OK, "no": EXIT_NO, "undetermined": EXIT_UNDETERMINED}


def _default_seed() -> int:
    return int(os.environ.get("HAMEMBED_SEED", "0"))


def _read(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _emit(text, out=None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _cmd_check(args):
    params, g = parse_instance(_read(args.file))
    verdict = evaluate(g, params)
    if args.format == "table":
        print(f"K({params.a}^({params.p}); {params.lam}, {params.mu})  r={params.r}  "
              f"k={g.num_colors} (required {params.color_count()})")
        print(f"regime:   {verdict.regime.tag.value}")
        print(f"verdict:  {verdict.embeddable}")
        if verdict.violated:
            print(f"violated: {', '.join(verdict.violated)}")
        if verdict.unmet:
            print(f"unmet:    {', '.join(verdict.unmet)}")
        print(f"{'color':>5} {'omega':>5} {'s':>3} {'mixed':>5}  pure/part")
        for st in verdict.stats:
            print(f"{st.color:>5} {st.omega:>5} {st.s:>3} {st.mixed_edges:>5}  "
                  f"{list(st.pure_edges_per_part)}")
    else:
        doc = {"verdict": verdict.embeddable, "regime": verdict.regime.tag.value,
               "violated": list(verdict.violated), "unmet": list(verdict.unmet),
               "stats": [{"color": st.color, "omega": st.omega, "s": st.s,
                          "mixed": st.mixed_edges, "pure": list(st.pure_edges_per_part)}
                         for st in verdict.stats]}
        print(json.dumps(doc, indent=2, sort_keys=True))
    return _VERDICT_EXIT[verdict.embeddable]


def _cmd_embed(args):
    params, g = parse_instance(_read(args.file))
    report = embed(g, params, seed=args.seed)
    _emit(serialize_result(report), args.out)
    return _VERDICT_EXIT[report.verdict.embeddable]


def _cmd_verify(args):
    params, g = parse_instance(_read(args.instance))
    verdict, rparams, result = parse_result(_read(args.result))
    if result is None:
        print(f"result carries no decomposition (verdict {verdict})")
        return EXIT_NO
    if rparams != params:
        print("result parameters differ from the instance")
        return EXIT_NO
    check = verify_embedding(g, result, params)
    for f in check.failures:
        print(f"FAIL {f}")
    if check.ok:
        print("ok")
    return EXIT_OK if check.ok else EXIT_NO


def _params_from_args(args, with_r=True):
    return GddParams(args.a, args.p, args.lam, args.mu, args.r if with_r else None)


def _budget(args):
    return EnumerationBudget(timeout=args.timeout, max_vertices=64, max_colors=256)


def _cmd_gen(args):
    params = _params_from_args(args)
    g = generate_valid_input(params, seed=args.seed, budget=_budget(args))
    _emit(serialize_instance(params, g), args.out)
    return EXIT_OK


def _cmd_oracle(args):
    params = _params_from_args(args, with_r=False)
    parts = args.parts if args.parts is not None else params.p
    found = brute_force_decompose(params, parts, seed=args.seed, budget=_budget(args))
    if found is None:
        print(json.dumps({"decomposable": False}))
        return EXIT_NO
    shown = GddParams(params.a, parts, params.lam, params.mu, None)
    print(serialize_instance(shown, found), end="")
    return EXIT_OK


def _add_params(sp, with_r=True):
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--lambda", dest="lam", type=int, required=True)
    sp.add_argument("--mu", type=int, required=True)
    if with_r:
        sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--seed", type=int, default=_default_seed())
    sp.add_argument("--timeout", type=float, default=60.0, help="search budget in seconds")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hamembed",
        description="Embed edge-colored K(a^(p); lambda, mu) into Hamiltonian "
                    "decompositions of K(a^(p+r); lambda, mu).")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("check", help="evaluate conditions and regime")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("json", "table"), default="json")
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("embed", help="construct the extended decomposition")
    sp.add_argument("file")
    sp.add_argument("--seed", type=int, default=_default_seed())
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_embed)

    sp = sub.add_parser("verify", help="check a result file against an instance")
    sp.add_argument("instance")
    sp.add_argument("result")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("gen", help="generate a valid instance from a random decomposition")
    _add_params(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=_cmd_gen)

    sp = sub.add_parser("oracle", help="brute-force Hamiltonian decomposition")
    _add_params(sp, with_r=False)
    sp.add_argument("--parts", type=int, help="number of parts to realize (default p)")
    sp.set_defaults(func=_cmd_oracle)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ContractViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_UNDETERMINED
    except (HamEmbedError, OSError) as exc:
        code = getattr(exc, "code", "io")
        print(f"input error [{code}]: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
