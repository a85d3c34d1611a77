"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 validation or verification failure.
Structured output goes to stdout as JSON (or DOT); diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Sequence

from .admissible import admissible_positions
from .chains import LambdaChain, NotSpecialForm, lex_lambda_chain, validate_lambda_chain
from .characters import character, demazure_oracle, demazure_filtered
from .crystal import build_graph, lower, raise_
from .evacuation import evacuation_report
from .rootsys import NonDominant, RootSystem, UnsupportedType, is_dominant
from .serialize import (
    chain_from_json,
    chain_to_json,
    dumps,
    evacuation_to_json,
    parse_subset,
    subset_to_json,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2


class UsageError(Exception):
    pass


class ValidationFailure(Exception):
    def __init__(self, payload: dict):
        super().__init__(payload.get("reason", "validation failed"))
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


@dataclass
class RunConfig:
    command: str
    rs: RootSystem | None
    lam: tuple[int, ...] | None
    chain_file: str | None
    order: tuple[int, ...] | None
    timing: bool
    output: str | None
    extra: dict = field(default_factory=dict)
    phases: list[tuple[str, float]] = field(default_factory=list)

    @contextmanager
    def phase(self, name: str):
        start = time.perf_counter()
        yield
        self.phases.append((name, time.perf_counter() - start))


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="type_", help="root system, e.g. A2, B3, G2")
    p.add_argument("--lambda", dest="lam", help="dominant weight in fundamental coordinates, e.g. 1,0")
    p.add_argument("--chain-file", help="read the lambda-chain from a JSON file instead of building it")
    p.add_argument("--order", help="simple-root order used to build the chain, 1-based, e.g. 2,1")
    p.add_argument("--time", action="store_true", help="print wall-clock time per phase on stderr")
    p.add_argument("--output", "-o", help="write the result to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="alcovepath", description="Alcove path model computations.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    chain = sub.add_parser("chain", help="build or validate a lambda-chain")
    chain.add_argument("action", choices=["build", "validate"])
    _add_common(chain)

    crystal = sub.add_parser("crystal", help="crystal graph on admissible subsets")
    fmt = crystal.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    crystal.add_argument("--subset", help="apply --ops starting from this subset, e.g. head:1+tail:2")
    crystal.add_argument("--ops", help="operators applied left to right, e.g. f1,f2,e1")
    _add_common(crystal)

    char = sub.add_parser("char", help="character of V_lambda")
    _add_common(char)

    dem = sub.add_parser("demazure", help="Demazure character for u in W")
    which = dem.add_mutually_exclusive_group(required=True)
    which.add_argument("--word", help="reduced or unreduced word for u, 1-based letters, e.g. 1,2")
    which.add_argument("--u", dest="word_alias", help="same as --word")
    _add_common(dem)

    ev = sub.add_parser("evacuate", help="evacuation J -> J*")
    ev.add_argument("--subset", required=True, help="e.g. head:1+tail:2,4 (1-based within each segment)")
    _add_common(ev)

    ver = sub.add_parser("verify", help="run a verification suite")
    ver.add_argument("suite", help="one of: " + ", ".join(sorted(SUITES) + ["all"]))
    _add_common(ver)
    return parser


def parse_config(argv: Sequence[str]) -> RunConfig:
    args = build_parser().parse_args(list(argv))
    if args.command is None:
        raise UsageError("missing command")
    rs = None
    if args.type_:
        try:
            rs = RootSystem.from_descriptor(args.type_)
        except (UnsupportedType, ValueError) as exc:
            raise UsageError(str(exc)) from None
    lam = _int_list(args.lam) if args.lam else None
    if args.chain_file is None:
        if rs is None or lam is None:
            raise UsageError("--type and --lambda are required unless --chain-file is given")
        if len(lam) != rs.rank:
            raise UsageError(f"--lambda needs {rs.rank} coordinates for {rs.name}")
        if not is_dominant(lam):
            raise UsageError(f"weight {lam} is not dominant")
    elif args.order:
        raise UsageError("--order only applies when the chain is built, not read from a file")
    order = None
    if args.order:
        order = tuple(i - 1 for i in _int_list(args.order))
        if rs is not None and sorted(order) != list(range(rs.rank)):
            raise UsageError(f"--order must be a permutation of 1..{rs.rank}")
    extra = {k: v for k, v in vars(args).items() if k not in ("type_", "lam", "chain_file", "order", "time", "output")}
    if args.command == "demazure":
        extra["word"] = _int_list(extra.pop("word") or extra.pop("word_alias"))
        extra.pop("word_alias", None)
    if args.command == "verify" and args.suite not in SUITES and args.suite != "all":
        raise UsageError(f"unknown suite {args.suite!r}")
    if args.command == "crystal" and bool(args.subset) != bool(args.ops):
        raise UsageError("--subset and --ops go together")
    return RunConfig(args.command, rs, lam, args.chain_file, order, args.time, args.output, extra)


def load_chain(cfg: RunConfig, validate: bool = True) -> LambdaChain:
    if cfg.chain_file is None:
        return lex_lambda_chain(cfg.rs, cfg.lam, order=cfg.order)
    try:
        with open(cfg.chain_file) as fh:
            data = json.load(fh)
        chain = chain_from_json(data, cfg.rs)
    except (OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot read chain file: {exc}") from None
    if cfg.lam is not None and tuple(cfg.lam) != chain.lam:
        raise UsageError(f"--lambda {cfg.lam} disagrees with the chain file {chain.lam}")
    if validate:
        v = validate_lambda_chain(chain.rs, chain.roots, chain.lam)
        if not v:
            raise ValidationFailure({"ok": False, "reason": v.reason})
    return chain


def _apply_ops(chain: LambdaChain, start, ops: str) -> list[dict]:
    steps = []
    cur = start
    for token in filter(None, ops.split(",")):
        kind, num = token[:1].lower(), token[1:]
        if kind not in ("e", "f") or not num.isdigit() or not 1 <= int(num) <= chain.rs.rank:
            raise UsageError(f"bad operator {token!r}")
        if cur is None:
            steps.append({"op": token, "defined": False, "result": None})
            continue
        op = lower if kind == "f" else raise_
        cur = op(chain, cur, int(num) - 1)
        steps.append({"op": token, "defined": cur is not None,
                      "result": None if cur is None else subset_to_json(chain, cur)})
    return steps


def execute(cfg: RunConfig) -> tuple[str, int]:
    cmd = cfg.command
    if cmd == "chain":
        if cfg.extra["action"] == "validate":
            with cfg.phase("load"):
                chain = load_chain(cfg, validate=False)
            with cfg.phase("validate"):
                v = validate_lambda_chain(chain.rs, chain.roots, chain.lam)
            out = {"ok": v.ok, "reason": v.reason, "chain": chain_to_json(chain)}
            return dumps(out), EXIT_OK if v.ok else EXIT_INVALID
        with cfg.phase("build"):
            chain = load_chain(cfg)
        return dumps(chain_to_json(chain)), EXIT_OK

    with cfg.phase("chain"):
        chain = load_chain(cfg)
    rs = chain.rs

    if cmd == "crystal":
        with cfg.phase("graph"):
            graph = build_graph(chain)
        if cfg.extra.get("ops"):
            start = parse_subset(cfg.extra["subset"], chain)
            if start not in set(graph.nodes):
                raise ValidationFailure({"ok": False, "reason": f"subset {list(start)} is not admissible"})
            return dumps({"start": subset_to_json(chain, start), "steps": _apply_ops(chain, start, cfg.extra["ops"])}), EXIT_OK
        if cfg.extra.get("dot"):
            return graph.to_dot(), EXIT_OK
        return dumps(graph.to_json()), EXIT_OK

    if cmd == "char":
        with cfg.phase("character"):
            ch = character(chain)
        return dumps(ch.to_json()), EXIT_OK

    if cmd == "demazure":
        word = cfg.extra["word"]
        if any(not 1 <= i <= rs.rank for i in word):
            raise UsageError(f"letters must lie in 1..{rs.rank}")
        u = rs.weyl_from_word(i - 1 for i in word)
        with cfg.phase("demazure"):
            ch = demazure_filtered(chain, u)
        out = ch.to_json()
        out["word"] = [i + 1 for i in rs.reduced_word(u)]
        return dumps(out), EXIT_OK

    if cmd == "evacuate":
        try:
            J = parse_subset(cfg.extra["subset"], chain)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        if J not in set(admissible_positions(chain)):
            raise ValidationFailure({"ok": False, "reason": f"subset {list(J)} is not admissible"})
        with cfg.phase("evacuate"):
            report = evacuation_report(chain, J)
        code = EXIT_OK if all(report.checks.values()) else EXIT_INVALID
        return dumps(evacuation_to_json(report)), code

    if cmd == "verify":
        with cfg.phase(f"verify {cfg.extra['suite']}"):
            rep = run_suite(cfg.extra["suite"], chain)
        return dumps(rep.to_json()), EXIT_OK if rep.ok else EXIT_INVALID

    raise UsageError(f"unknown command {cmd!r}")


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
        text, code = execute(cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValidationFailure as exc:
        sys.stdout.write(dumps(exc.payload))
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except (NotSpecialForm, NonDominant) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cfg.timing:
        for name, secs in cfg.phases:
            print(f"time {name}: {secs:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
