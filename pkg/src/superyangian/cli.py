"""Command-line interface: JSON in, JSON (or aligned text) out.

Exit status 0 on success, 1 on domain errors (error JSON on stderr), 2 on
usage errors.  Defaults come from a JSON config file given by ``--config`` or
the ``SUPERYANGIAN_CONFIG`` environment variable; explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, replace
from typing import Any, Callable, Sequence

from .bethe import bae_check, fermionic_reproduce
from .diffop import DEFAULT_ORDER, compare_systems
from .errors import AlgebraError
from .jsonio import (
    dumps,
    factored_to_json,
    lweight_from_json,
    lweight_to_json,
    qchar_from_json,
    qchar_to_json,
    system_from_json,
    system_to_json,
)
from .lweight import LWeight, QChar, finite_dim_witness
from .parity import Node, parse_parity, parse_partition
from .qchar11 import qchar_gl11, qchar_reflect_gl11
from .reflection import reflect, reflect_to
from .tableaux import (
    DEFAULT_TABLEAU_CAP,
    SkewDiagram,
    count_ssyt,
    enumerate_ssyt,
    skew_cells,
    skew_qchar,
)

CONFIG_ENV = "SUPERYANGIAN_CONFIG"


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    truncation_order: int = DEFAULT_ORDER
    tableau_cap: int = DEFAULT_TABLEAU_CAP
    output_format: str = "json"

    def validate(self) -> "Config":
        if not isinstance(self.truncation_order, int) or self.truncation_order < 0:
            raise UsageError(f"truncation_order must be a non-negative integer, got {self.truncation_order!r}")
        if not isinstance(self.tableau_cap, int) or self.tableau_cap < 1:
            raise UsageError(f"tableau_cap must be a positive integer, got {self.tableau_cap!r}")
        if self.output_format not in ("json", "table"):
            raise UsageError(f"output_format must be 'json' or 'table', got {self.output_format!r}")
        return self


def load_config(path: str | None) -> Config:
    path = path or os.environ.get(CONFIG_ENV)
    if not path:
        return Config()
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"--config: cannot read {path}: {exc}") from None
    if not isinstance(raw, dict):
        raise UsageError("--config: expected a JSON object")
    known = {"truncation_order", "tableau_cap", "output_format"}
    unknown = sorted(set(raw) - known)
    if unknown:
        raise UsageError(f"--config: unknown field(s) {', '.join(unknown)}")
    return Config(**raw).validate()


def _read_json(path: str, flag: str) -> Any:
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"{flag}: cannot read {path}: {exc}") from None


def _parse_input(flag: str, parse: Callable[[], Any]) -> Any:
    try:
        return parse()
    except AlgebraError:
        raise
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise UsageError(f"{flag}: malformed input ({type(exc).__name__}: {exc})") from None


def _load_lweight(path: str, parity: str | None = None) -> LWeight:
    raw = _read_json(path, "--lweight")
    return _parse_input("--lweight", lambda: lweight_from_json(raw, parity))


# ---------------------------------------------------------------------------
# text tables
# ---------------------------------------------------------------------------


def format_table(header: Sequence[str], rows: Sequence[Sequence[Any]]) -> str:
    cells = [[str(h) for h in header]] + [["" if c is None else str(c) for c in r] for r in rows]
    widths = [max(len(r[k]) for r in cells) for k in range(len(header))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def _lweight_table(z: LWeight) -> str:
    rows = [(i, z.parity[i], c) for i, c in enumerate(z.components, start=1)]
    return f"parity {z.parity}\n" + format_table(("i", "s_i", "zeta_i"), rows)


def _qchar_table(q: QChar) -> str:
    rows = [(k, ", ".join(str(c) for c in w.components)) for w, k in q.items()]
    out = f"parity {q.parity}\n" + format_table(("mult", "l-weight"), rows)
    for note in q.diagnostics:
        out += f"\nnote: {note}"
    return out


def _kv_table(d: dict) -> str:
    return format_table(("key", "value"), [(k, json.dumps(v) if not isinstance(v, str) else v) for k, v in d.items()])


# ---------------------------------------------------------------------------
# subcommands; each returns (json payload, table text)
# ---------------------------------------------------------------------------


def _check_node(node: int, size: int):
    if not 1 <= node < size:
        raise UsageError(f"--node: {node} out of range 1..{size - 1}")


def cmd_reflect(args, cfg):
    z = _load_lweight(args.lweight, args.parity)
    _check_node(args.node, len(z.parity))
    out = reflect(z, Node(args.node))
    return lweight_to_json(out), _lweight_table(out)


def cmd_reflect_to(args, cfg):
    z = _load_lweight(args.lweight, args.parity)
    target = _parse_input("--target", lambda: parse_parity(args.target))
    out = reflect_to(z, target)
    return lweight_to_json(out), _lweight_table(out)


def cmd_qchar11(args, cfg):
    q = qchar_gl11(_load_lweight(args.lweight, args.parity))
    return qchar_to_json(q), _qchar_table(q)


def cmd_qchar_reflect(args, cfg):
    raw = _read_json(args.qchar, "--qchar")
    q = _parse_input("--qchar", lambda: qchar_from_json(raw, args.parity))
    out = qchar_reflect_gl11(q)
    return qchar_to_json(out), _qchar_table(out)


def cmd_skew_char(args, cfg):
    def parse():
        return SkewDiagram(parse_partition(args.outer), parse_partition(args.inner)), parse_parity(args.parity)

    d, s = _parse_input("--outer/--inner/--parity", parse)
    cap = cfg.tableau_cap
    if args.count:
        n = count_ssyt(s, d, cap)
        return n, str(n)
    if args.list_tableaux:
        tabs = enumerate_ssyt(s, d, cap)
        cells = d.cells()
        payload = {
            "parity": str(s),
            "outer": list(d.outer.parts),
            "inner": list(d.inner.parts),
            "cells": [{"row": i, "col": j, "content": c} for i, j, c in skew_cells(d)],
            "tableaux": [list(t.entries) for t in tabs],
        }
        header = ["#"] + [f"({i},{j})" for i, j in cells]
        text = f"parity {s}, shape {d}\n" + format_table(header, [[k] + list(t.entries) for k, t in enumerate(tabs, 1)])
        return payload, text
    q = skew_qchar(s, d, cap)
    return qchar_to_json(q), _qchar_table(q)


def _load_system(path: str, flag: str):
    raw = _read_json(path, flag)
    return _parse_input(flag, lambda: system_from_json(raw))


def cmd_bae_check(args, cfg):
    sys_ = _load_system(args.system, "--system")
    nodes = None
    if args.node is not None:
        _check_node(args.node, len(sys_.parity))
        nodes = [args.node]
    reports = [r.to_json() for r in bae_check(sys_, nodes)]
    rows = []
    for r in reports:
        res = r["residuals"]
        shown = "n/a" if res is None else ", ".join(f"{e['root']}:{e['residual']}" for e in res) or "-"
        rows.append((r["node"], "odd" if r["odd"] else "even", r["divisible"], shown, r["disagreement"]))
    text = format_table(("node", "type", "divisible", "residuals", "disagreement"), rows)
    return {"parity": str(sys_.parity), "nodes": reports}, text


def cmd_bae_reproduce(args, cfg):
    sys_ = _load_system(args.system, "--system")
    _check_node(args.node, len(sys_.parity))
    out = fermionic_reproduce(sys_, Node(args.node))
    payload = system_to_json(out)
    rows = [(f"y_{k}", p) for k, p in enumerate(out.y, start=1)]
    text = _lweight_table(out.zeta) + "\n" + format_table(("poly", "value"), rows)
    return payload, text


def cmd_diffop_compare(args, cfg):
    before = _load_system(args.before, "--before")
    after = _load_system(args.after, "--after")
    payload = compare_systems(before, after, cfg.truncation_order).to_json()
    return payload, _kv_table(payload)


def cmd_finite_dim(args, cfg):
    z = _load_lweight(args.lweight, args.parity)
    witness = finite_dim_witness(z)
    payload: dict[str, Any] = {"parity": str(z.parity), "finite": witness is not None}
    if witness is not None:
        payload["witness"] = [
            {"node": i, "polys": [factored_to_json(p) for p in polys]} for i, polys in sorted(witness.items())
        ]
    rows = [] if witness is None else [(i, " ; ".join(str(p) for p in polys)) for i, polys in sorted(witness.items())]
    text = f"finite: {payload['finite']}" + ("\n" + format_table(("node", "g"), rows) if rows else "")
    return payload, text


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common() -> argparse.ArgumentParser:
    p = _Parser(add_help=False, argument_default=argparse.SUPPRESS)
    p.add_argument("--config", help="JSON config file (default: $%s)" % CONFIG_ENV)
    p.add_argument("--format", choices=("json", "table"), dest="output_format", help="output format")
    p.add_argument("--order", type=int, dest="truncation_order", help="truncation order R for operator series")
    p.add_argument("--cap", type=int, dest="tableau_cap", help="maximum number of tableaux to enumerate")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="superyangian", description="Odd reflections, q-characters and Bethe equations.",
                     parents=[common])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    def lweight_flags(p):
        p.add_argument("--lweight", required=True, help="l-weight JSON file ('-' for stdin)")
        p.add_argument("--parity", help="parity, needed when the file holds a bare component array")

    p = add("reflect", cmd_reflect, "odd reflection at one node")
    lweight_flags(p)
    p.add_argument("--node", type=int, required=True)

    p = add("reflect-to", cmd_reflect_to, "chain of odd reflections to a target parity")
    lweight_flags(p)
    p.add_argument("--target", required=True, help='target parity, e.g. "+--+"')

    p = add("qchar11", cmd_qchar11, "q-character of a gl(1|1) module")
    lweight_flags(p)

    p = add("qchar-reflect", cmd_qchar_reflect, "re-express a gl(1|1) q-character in the other parity")
    p.add_argument("--qchar", required=True, help="q-character JSON file ('-' for stdin)")
    p.add_argument("--parity", help="parity, needed when the file holds a bare term array")

    p = add("skew-char", cmd_skew_char, "tableaux and character of a skew representation")
    p.add_argument("--outer", required=True, help="outer partition, comma-separated")
    p.add_argument("--inner", default="", help="inner partition, comma-separated (default empty)")
    p.add_argument("--parity", required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--list-tableaux", action="store_true")
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--char", action="store_true", help="q-character (default)")

    bae = sub.add_parser("bae", help="Bethe ansatz equations")
    bae_sub = bae.add_subparsers(dest="bae_command", parser_class=_Parser)
    p = bae_sub.add_parser("check", parents=[common], help="divisibility and residual forms")
    p.set_defaults(func=cmd_bae_check)
    p.add_argument("--system", required=True)
    p.add_argument("--node", type=int)
    p = bae_sub.add_parser("reproduce", parents=[common], help="fermionic reproduction at an odd node")
    p.set_defaults(func=cmd_bae_reproduce)
    p.add_argument("--system", required=True)
    p.add_argument("--node", type=int, required=True)

    dif = sub.add_parser("diffop", help="difference operators")
    dif_sub = dif.add_subparsers(dest="diffop_command", parser_class=_Parser)
    p = dif_sub.add_parser("compare", parents=[common], help="compare operators of two systems")
    p.set_defaults(func=cmd_diffop_compare)
    p.add_argument("--before", required=True)
    p.add_argument("--after", required=True)

    p = add("finite-dim", cmd_finite_dim, "finite-dimensionality test (standard parity)")
    lweight_flags(p)
    return parser


# parity strings such as "-+" look like options to argparse
_PARITY_FLAGS = ("--parity", "--target")


def _attach_parity_values(argv: Sequence[str]) -> list[str]:
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _PARITY_FLAGS:
            nxt = next(it, None)
            if nxt is not None and nxt[:1] in "+-" and set(nxt) <= set("+-01, "):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    argv = _attach_parity_values(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(argv)
        if getattr(args, "func", None) is None:
            raise UsageError("missing subcommand")
        cfg = load_config(getattr(args, "config", None))
        overrides = {k: getattr(args, k) for k in ("truncation_order", "tableau_cap", "output_format")
                     if getattr(args, k, None) is not None}
        cfg = replace(cfg, **overrides).validate()
        payload, text = args.func(args, cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except AlgebraError as exc:
        print(json.dumps(exc.to_json(), ensure_ascii=False), file=stderr)
        return 1
    print(text if cfg.output_format == "table" else dumps(payload), file=stdout)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
