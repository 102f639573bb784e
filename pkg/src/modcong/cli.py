"""Command-line front end.

Exit codes: 0 success / feasible, 2 infeasible (or not invertible),
64 usage error, 65 malformed instance, 66 size limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import oracle
from .instance import Instance, InstanceParseError, parse_instance
from .matrix import NotInvertible, determinant_mod_k, inverse_mod_k, reduce_entries
from .residue import MAX_MODULUS
from .solver import nullspace, solve

EX_OK = 0
EX_INFEASIBLE = 2
EX_USAGE = 64
EX_DATAERR = 65
EX_TOOBIG = 66


class UsageError(Exception):
    pass


class SizeError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _modulus_arg(text: str) -> int:
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid modulus {text!r}")
    if k < 2:
        raise argparse.ArgumentTypeError(f"modulus must be at least 2, got {k}")
    return k


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-k", "--modulus", type=_modulus_arg, help="modulus (overrides the file header)")
    common.add_argument("--format", choices=("text", "json"), default="text")

    with_input = argparse.ArgumentParser(add_help=False, parents=[common])
    with_input.add_argument("-i", "--input", default="-", help="instance file ('-' for stdin)")

    parser = _Parser(prog="modcong", description="Linear congruences modulo k.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("feasible", parents=[with_input], help="decide solvability of A x = y")
    sub.add_parser("solve", parents=[with_input], help="find x with A x = y")
    sub.add_parser("nullspace", parents=[with_input], help="generators of {x : A x = 0}")
    sub.add_parser("det", parents=[with_input], help="determinant mod k")
    sub.add_parser("inverse", parents=[with_input], help="matrix inverse mod k")
    st = sub.add_parser("selftest", parents=[common], help="cross-check against brute force")
    st.add_argument("--seed", type=int, default=0)
    st.add_argument("--count", type=int, default=200, help="random instances per check")
    return parser


def _load(args) -> Instance:
    text = sys.stdin.read() if args.input == "-" else _read(args.input)
    inst = parse_instance(text, args.modulus)
    if inst.modulus >= MAX_MODULUS:
        raise SizeError(f"modulus {inst.modulus} is not below 2**64")
    return inst


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}")


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        for line in text_lines:
            print(line)


def _require_rhs(inst: Instance):
    if inst.y is None:
        raise InstanceParseError("this command needs a right-hand side line")
    return inst.y


def cmd_feasible(args) -> int:
    inst = _load(args)
    y = _require_rhs(inst)
    ok = solve(inst.A, y, inst.modulus).feasible
    status = "feasible" if ok else "infeasible"
    _emit(args, {"status": status}, [status])
    return EX_OK if ok else EX_INFEASIBLE


def cmd_solve(args) -> int:
    inst = _load(args)
    y = _require_rhs(inst)
    outcome = solve(inst.A, y, inst.modulus)
    if not outcome.feasible:
        _emit(args, {"status": "infeasible"}, ["infeasible"])
        return EX_INFEASIBLE
    x = outcome.x.tolist()
    _emit(args, {"status": "feasible", "solution": x}, ["feasible", " ".join(map(str, x))])
    return EX_OK


def cmd_nullspace(args) -> int:
    inst = _load(args)
    gens = nullspace(inst.A, inst.modulus).tolist()
    _emit(
        args,
        {"status": "feasible", "generators": gens},
        [" ".join(map(str, g)) for g in gens],
    )
    return EX_OK


def _square(inst: Instance):
    if not inst.A.is_square:
        raise InstanceParseError(f"matrix must be square, got {inst.A.shape}")
    return inst.A


def cmd_det(args) -> int:
    inst = _load(args)
    d = determinant_mod_k(_square(inst))
    _emit(args, {"status": "feasible", "determinant": d}, [str(d)])
    return EX_OK


def cmd_inverse(args) -> int:
    inst = _load(args)
    try:
        inv = inverse_mod_k(_square(inst))
    except NotInvertible as exc:
        _emit(args, {"status": "infeasible", "determinant": exc.det}, [f"not invertible (det={exc.det})"])
        return EX_INFEASIBLE
    rows = inv.tolist()
    _emit(args, {"status": "feasible", "inverse": rows}, [" ".join(map(str, r)) for r in rows])
    return EX_OK


def selftest_checks(seed: int, count: int, k: int | None = None):
    """Yield ``(name, passed, failures)`` for randomized oracle cross-checks."""
    rng = random.Random(seed)
    moduli = [k] if k else list(range(2, 13))
    max_n = 3
    while max_n and moduli[0] ** (max_n + 1) > oracle.ENUMERATION_LIMIT:
        max_n -= 1
    if max_n == 0:
        raise SizeError(f"modulus {k} is too large for brute-force cross-checks")

    def instance():
        q = rng.choice(moduli)
        m, n = rng.randint(1, max_n), rng.randint(1, max_n)
        A = reduce_entries([[rng.randrange(q) for _ in range(n)] for _ in range(m)], q)
        return q, A

    failures = 0
    for _ in range(count):
        q, A = instance()
        y = [rng.randrange(q) for _ in range(A.shape[0])]
        truth = oracle.brute_force_solve(A, y, q)
        outcome = solve(A, y, q)
        if outcome.feasible != bool(truth) or (outcome.feasible and tuple(outcome.x) not in truth):
            failures += 1
    yield "solve", failures == 0, failures

    failures = 0
    for _ in range(count):
        q, A = instance()
        gens = nullspace(A, q)
        if oracle.subgroup_closure(gens, q, A.shape[1]) != oracle.brute_force_nullspace(A, q):
            failures += 1
    yield "nullspace", failures == 0, failures

    failures = 0
    for _ in range(count):
        q = rng.choice(moduli)
        n = rng.randint(1, 4)
        A = reduce_entries([[rng.randrange(q) for _ in range(n)] for _ in range(n)], q)
        if determinant_mod_k(A) != oracle.permutation_determinant(A, q):
            failures += 1
    yield "det", failures == 0, failures


def cmd_selftest(args) -> int:
    if args.count < 1:
        raise UsageError("--count must be positive")
    if args.modulus is not None and args.modulus >= MAX_MODULUS:
        raise SizeError(f"modulus {args.modulus} is not below 2**64")
    results = list(selftest_checks(args.seed, args.count, args.modulus))
    ok = all(passed for _, passed, _ in results)
    payload = {
        "status": "pass" if ok else "fail",
        "seed": args.seed,
        "checks": {name: {"passed": passed, "failures": f} for name, passed, f in results},
    }
    lines = [f"{name}: {'PASS' if passed else 'FAIL'} ({f} failures / {args.count})" for name, passed, f in results]
    _emit(args, payload, lines)
    return EX_OK if ok else 1


COMMANDS = {
    "feasible": cmd_feasible,
    "solve": cmd_solve,
    "nullspace": cmd_nullspace,
    "det": cmd_det,
    "inverse": cmd_inverse,
    "selftest": cmd_selftest,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"modcong: {exc}", file=sys.stderr)
        return EX_USAGE
    except (SizeError, oracle.InstanceTooLarge) as exc:
        print(f"modcong: {exc}", file=sys.stderr)
        return EX_TOOBIG
    except (InstanceParseError, ValueError) as exc:
        print(f"modcong: invalid instance: {exc}", file=sys.stderr)
        return EX_DATAERR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
