"""Command-line front end.

    vahlen [--config FILE] [--json] COMMAND ...

The config file describes the inner space N (or L).  Element commands
(``mul``, ``invert``, ``enumerate --group nc|nc0|pin|spin``) work in
Cl(config space), or in the split ambient M when the config carries a
``"splitting": {"kind": ...}`` entry.  Matrix literals are always over the
config space.

Exit status: 0 success / member / passed, 1 not a member / not invertible /
failed or refused verification, 2 usage, config or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .cgroups import GroupKind, is_member
from .enumeration import enumerate_clifford, enumerate_matrices
from .errors import DomainError, NotInvertibleByNormError, NotInvertibleError, ParseError, UnsupportedError, VahlenError
from .isomap import PhiIso, ThetaIso
from .literals import format_matrix, is_matrix_literal, parse_element, parse_matrix
from .matrix import CliffordMatrix2
from .ordinary import check_definition, satisfies
from .paravector import check_pv_definition, pv_satisfies
from .qspace import QuadraticSpace, build_split_space, space_from_config
from .ring import Integers
from . import verify as _verify

EXIT_OK, EXIT_FALSE, EXIT_USAGE = 0, 1, 2

GROUPS = ("nc", "nc0", "pin", "spin", "gv", "sv", "gpv", "spv")
MAPS = ("phi", "phi-inv", "theta", "theta-inv", "psi", "psi-inv")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(top: bool) -> argparse.ArgumentParser:
    # options accepted before or after the command; subcommands must not reset them
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", default=None if top else argparse.SUPPRESS, help="JSON configuration of the quadratic space")
    p.add_argument("--json", action="store_true", default=False if top else argparse.SUPPRESS, help="machine-readable output")
    return p


def build_parser() -> argparse.ArgumentParser:
    top = _Parser(prog="vahlen", description="Clifford algebras and Vahlen groups over commutative rings", parents=[_common(True)])
    common = _common(False)
    sub = top.add_subparsers(dest="command", parser_class=_Parser, required=True)

    p = sub.add_parser("mul", parents=[common], help="multiply elements or matrices")
    p.add_argument("operands", nargs="+")

    p = sub.add_parser("invert", parents=[common], help="inverse via the norm / the pseudo-determinant")
    p.add_argument("operand")

    p = sub.add_parser("pseudo-det", parents=[common], help="alpha delta^t - beta gamma^t")
    p.add_argument("matrix")

    p = sub.add_parser("check", parents=[common], help="clause-by-clause Vahlen membership")
    p.add_argument("--definition", type=int, choices=(1, 2, 3), default=3)
    p.add_argument("--kind", choices=("ordinary", "paravector"), default="ordinary")
    p.add_argument("--strict", action="store_true", help="paravector: entries must be Clifford-group members")
    p.add_argument("matrix")

    p = sub.add_parser("map", parents=[common], help="apply phi, theta, psi or an inverse")
    p.add_argument("--which", choices=MAPS, required=True)
    p.add_argument("operand")

    p = sub.add_parser("enumerate", parents=[common], help="count (and list) a finite group")
    p.add_argument("--group", choices=GROUPS, required=True)
    p.add_argument("--list", action="store_true", help="print the members")
    p.add_argument("--strict", action="store_true", help="gpv/spv with strict entries (definitions 1, 2)")

    p = sub.add_parser("verify", parents=[common], help="exhaustive theorem verification")
    p.add_argument("--theorem", choices=tuple(_verify.THEOREMS), required=True)
    p.add_argument("--threads", type=int, default=None, help="worker processes (default $VAHLEN_THREADS, 0 = all CPUs)")
    p.add_argument("--strict", action="store_true", help="para-equiv with strict entries")
    p.add_argument("--samples", type=int, default=100, help="laurent-smoke sample count")
    p.add_argument("--seed", type=int, default=0, help="laurent-smoke seed")
    return top


class _Context:
    def __init__(self, cfg: dict | None):
        self.cfg = cfg
        if cfg is None:
            self.inner = QuadraticSpace(Integers(), [])
            kind = None
        else:
            self.inner = space_from_config(cfg)
            split = cfg.get("splitting")
            kind = split.get("kind") if isinstance(split, dict) else split
            if kind not in (None, "ordinary", "paravector"):
                raise DomainError(f"splitting kind must be 'ordinary' or 'paravector', not {kind!r}")
        self.kind = kind
        self.element_space = build_split_space(kind, self.inner) if kind else self.inner

    def config(self) -> dict:
        out = self.inner.config()
        if self.kind:
            out["splitting"] = {"kind": self.kind}
        return out


def _load_config(path: str | None) -> dict | None:
    if path is None:
        return None
    try:
        with open(path, encoding="utf-8") as fh:
            cfg = json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read config {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise DomainError(f"config {path} is not valid JSON: {exc}") from None
    if not isinstance(cfg, dict):
        raise DomainError("config must be a JSON object")
    return cfg


def _fmt(x) -> str:
    return format_matrix(x) if isinstance(x, CliffordMatrix2) else str(x)


def _operand(ctx: _Context, text: str):
    if is_matrix_literal(text):
        return parse_matrix(ctx.inner, text)
    return parse_element(ctx.element_space, text)


# -- commands: each returns (ok, result-dict, human text) -------------------------


def cmd_mul(ctx, args):
    vals = [_operand(ctx, t) for t in args.operands]
    kinds = {type(v) for v in vals}
    if len(kinds) > 1:
        raise DomainError("cannot multiply elements with matrices")
    acc = vals[0]
    for v in vals[1:]:
        acc = acc * v
    return True, {"value": _fmt(acc)}, _fmt(acc)


def cmd_invert(ctx, args):
    x = _operand(ctx, args.operand)
    try:
        inv = x.inverse() if isinstance(x, CliffordMatrix2) else x.try_invert()
    except (NotInvertibleByNormError, NotInvertibleError) as exc:
        return False, {"value": None, "reason": str(exc)}, f"not invertible: {exc}"
    return True, {"value": _fmt(inv)}, _fmt(inv)


def cmd_pseudo_det(ctx, args):
    g = parse_matrix(ctx.inner, args.matrix)
    pd = g.pseudo_det()
    return True, {"value": str(pd), "unit": pd.is_scalar_unit()}, str(pd)


def cmd_check(ctx, args):
    g = parse_matrix(ctx.inner, args.matrix)
    if args.kind == "ordinary":
        rep = check_definition(g, args.definition)
    else:
        rep = check_pv_definition(g, args.definition, args.strict)
    d = rep.to_dict()
    lines = [
        f"{args.kind} definition {args.definition}: {'member' if rep.member else 'not a member'}"
        + (" (special)" if d["special"] else ""),
        f"pseudo-det: {rep.pseudo_det}",
    ]
    for c in rep.clauses:
        lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}" + (f"  -- {c.witness}" if c.witness else ""))
    return rep.member, d, "\n".join(lines)


def cmd_map(ctx, args):
    w = args.which
    if w in ("phi", "phi-inv"):
        iso = PhiIso.from_inner(ctx.inner)
        if w == "phi":
            out = iso.phi(parse_element(iso.ambient, args.operand))
        else:
            out = iso.phi_inverse(parse_matrix(ctx.inner, args.operand))
    else:
        iso = ThetaIso.from_inner(ctx.inner)
        if w == "theta":
            out = iso.theta(parse_element(iso.ambient, args.operand))
        elif w == "theta-inv":
            out = iso.theta_inverse(parse_matrix(ctx.inner, args.operand))
        elif w == "psi":
            out = iso.psi(parse_element(iso.z_space, args.operand))
        else:
            out = iso.psi_inverse(parse_element(iso.ambient, args.operand))
    return True, {"value": _fmt(out)}, _fmt(out)


def cmd_enumerate(ctx, args):
    grp = args.group
    if grp in ("nc", "nc0", "pin", "spin"):
        space = ctx.element_space
        kind = GroupKind(grp)
        parity = "even" if grp in ("nc0", "spin") else "all"
        members = [u for u in enumerate_clifford(space, parity) if is_member(u, kind)]
    else:
        space = ctx.inner
        if grp in ("gv", "sv"):
            members = [g for g in enumerate_matrices(space) if satisfies(g, 3)]
        else:
            members = [g for g in enumerate_matrices(space) if pv_satisfies(g, 3, args.strict)]
        if grp in ("sv", "spv"):
            members = [g for g in members if g.pseudo_det() == 1]
    result = {"group": grp, "count": len(members)}
    text = f"|{grp}| = {len(members)}"
    if args.list:
        result["members"] = [_fmt(m) for m in members]
        text += "\n" + "\n".join(result["members"])
    return True, result, text


def cmd_verify(ctx, args):
    name = args.theorem
    if name == "laurent-smoke":
        inner = ctx.inner if ctx.cfg is not None else None
        rep = _verify.smoke_laurent(inner, samples=args.samples, seed=args.seed)
    elif name == "para-equiv":
        rep = _verify.verify_paravector_equiv(ctx.inner, args.threads, strict=args.strict)
    else:
        rep = _verify.THEOREMS[name](ctx.inner, workers=args.threads)
    return rep.passed, rep.to_dict(), rep.summary()


COMMANDS = {
    "mul": cmd_mul,
    "invert": cmd_invert,
    "pseudo-det": cmd_pseudo_det,
    "check": cmd_check,
    "map": cmd_map,
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
}


def _emit_error(args_json: bool, command, kind: str, message: str, position=None, out=None):
    out = out or sys.stderr
    if args_json:
        err = {"type": kind, "message": message}
        if position is not None:
            err["position"] = position
        print(json.dumps({"command": command, "ok": False, "error": err}), file=sys.stdout)
    else:
        print(f"vahlen: {kind}: {message}", file=out)


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    want_json = "--json" in argv
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        _emit_error(want_json, None, "usage", str(exc))
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        ctx = _Context(_load_config(args.config))
        ok, result, text = COMMANDS[args.command](ctx, args)
    except ParseError as exc:
        msg = exc.annotated() if not args.json else str(exc)
        _emit_error(args.json, args.command, "parse", msg, exc.position)
        return EXIT_USAGE
    except (DomainError, UnsupportedError, KeyError, TypeError, ValueError) as exc:
        _emit_error(args.json, args.command, "config" if isinstance(exc, (KeyError, TypeError)) else "domain", str(exc))
        return EXIT_USAGE
    except VahlenError as exc:
        _emit_error(args.json, args.command, "error", str(exc))
        return EXIT_USAGE
    if args.json:
        print(json.dumps({"command": args.command, "ok": ok, "config": ctx.config(), "result": result}))
    else:
        print(text)
    return EXIT_OK if ok else EXIT_FALSE


if __name__ == "__main__":
    sys.exit(main())
