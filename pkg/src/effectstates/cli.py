"""Command line front end.

    effectstates validate  FILE
    effectstates rdp       FILE
    effectstates states    FILE
    effectstates classify  FILE
    effectstates decompose FILE --state '{"a1": "1/2", ...}'
    effectstates extend    FILE --sub 0,a1,a4,1 --given '{"a1": "7/10"}'
    effectstates extend    PROBLEM.json
    effectstates report    FILE

FILE is an effect-algebra or po-group JSON file, or the name of a shipped
fixture. Every command accepts ``--format {text,json}``, ``--seed`` and
``--max-size``. Exit status is 0 on success, 1 on domain errors and 2 on
usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io
from .algebra import (EffectAlgebra, EffectAlgebraError, NotMv, SizeBoundExceeded,
                      ValidationError, check_rdp, enumerate_subalgebras, is_lattice,
                      is_subalgebra, to_mv)
from .extension import ExtensionProblem, NotAState, extend_state
from .pogroup import (IntervalInfinite, LexPresentation, PoGroupError,
                      UnitalPoGroupPresentation, coordinate_functional_names,
                      gamma_effect_algebra, group_state_polytope, lex_state_space)
from .polytope import PolytopeError
from .rational import format_fraction, to_fraction
from .representation import unique_decomposition
from .sampling import random_points
from .statespace import (EmptyStateSpace, StateSpaceError, classify_state_space,
                         order_determining, state_polytope)

SCHEMA = "1"
COMMANDS = ("validate", "rdp", "states", "classify", "decompose", "extend", "report")
DOMAIN_ERRORS = (EffectAlgebraError, PoGroupError, StateSpaceError, PolytopeError,
                 NotAState, io.FixtureError)
REPORT_RANDOM_POINTS = 3


class UnknownElement(ValueError):
    code = "unknown-element"


class UsageError(Exception):
    pass


class _Subject:
    """The parsed input: an effect algebra, or a po-group with its interval if finite."""

    def __init__(self, obj):
        self.group = None
        self.table = None
        self.gamma_error = None
        self.problem = None
        if isinstance(obj, io.ExtensionFile):
            self.problem = obj
            obj = obj.algebra
        if isinstance(obj, EffectAlgebra):
            self.table = obj
        else:
            self.group = obj
            try:
                self.table, self.vectors = gamma_effect_algebra(obj)
            except IntervalInfinite as exc:
                self.gamma_error = exc

    def require_table(self) -> EffectAlgebra:
        if self.table is None:
            raise self.gamma_error
        return self.table

    def polytope(self):
        if self.group is None:
            return state_polytope(self.table)
        if isinstance(self.group, LexPresentation):
            return lex_state_space(self.group)
        return group_state_polytope(self.group)

    def vertex_names(self, sp):
        if isinstance(self.group, UnitalPoGroupPresentation):
            names = coordinate_functional_names(self.group, sp.vertices)
            if all(names):
                return names
        return [f"v{i}" for i in range(len(sp.vertices))]

    def summary(self) -> dict:
        if self.group is None:
            t = self.table
            return {"kind": "algebra", "size": t.size, "labels": list(t.labels),
                    "sums": len(t.sum_triples())}
        g = self.group
        head = g.head if isinstance(g, LexPresentation) else g
        out = {"kind": "group", "ambient_rank": head.ambient_rank, "rank": g.rank,
               "unit": list(head.unit),
               "lex_tail_rank": g.tail_rank if isinstance(g, LexPresentation) else None,
               "interval_size": self.table.size if self.table else None}
        return out


def _load(spec: str):
    return _Subject(io.parse_file(io.resolve_input(spec)))


def _fmt_vec(v):
    return [format_fraction(x) for x in v]


def _labels(table, ids):
    return None if ids is None else [table.labels[i] for i in ids]


def _dependency_text(names, dep) -> str:
    terms = sorted(zip(names, dep), key=lambda t: (-(t[1] > 0), t[0]))
    out = ""
    for name, c in terms:
        if c == 0:
            continue
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        if not out:
            out = ("-" if c < 0 else "") + mag + name
        else:
            out += (" - " if c < 0 else " + ") + mag + name
    return out + " = 0"


def _complete_state(table: EffectAlgebra, partial: dict[int, Fraction]) -> tuple[Fraction, ...]:
    """Fill in values forced by normalisation and additivity."""
    values = dict(partial)
    values.setdefault(table.zero, Fraction(0))
    values.setdefault(table.one, Fraction(1))
    triples = table.sum_triples()
    changed = True
    while changed:
        changed = False
        for a, b, c in triples:
            known = [x in values for x in (a, b, c)]
            if known.count(False) != 1:
                continue
            if not known[2]:
                values[c] = values[a] + values[b]
            elif not known[0]:
                values[a] = values[c] - values[b]
            else:
                values[b] = values[c] - values[a]
            changed = True
    missing = [table.labels[i] for i in range(table.size) if i not in values]
    if missing:
        raise NotAState(f"state is underdetermined; give values for {missing}")
    return tuple(values[i] for i in range(table.size))


def _parse_assignment(text: str, parser) -> dict:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        parser.error(f"invalid JSON: {exc.msg}")
    if not isinstance(data, dict):
        parser.error("expected a JSON object mapping element to 'p/q'")
    try:
        return {k: to_fraction(v) for k, v in data.items()}
    except (TypeError, ValueError) as exc:
        parser.error(str(exc))


def _resolve(table: EffectAlgebra, key) -> int:
    try:
        return table.id_of(key)
    except KeyError:
        raise UnknownElement(f"unknown element {key!r}") from None


def _state_vector(subject: _Subject, sp, values: dict) -> tuple[Fraction, ...]:
    if subject.group is None:
        table = subject.table
        return _complete_state(table, {_resolve(table, k): v for k, v in values.items()})
    coords = list(sp.coordinates)
    unknown = [k for k in values if k not in coords]
    if unknown:
        raise UnknownElement(f"unknown coordinate(s) {unknown}; expected {coords}")
    if len(values) != len(coords):
        raise NotAState(f"give a value for every coordinate {coords}")
    return tuple(values[c] for c in coords)


# -- commands -------------------------------------------------------------

def _validate(subject, args) -> dict:
    out = {"valid": True}
    if subject.table is not None:
        t = subject.table
        out["axioms"] = {"(i)": "ok", "(ii)": "ok", "(iii)": "ok", "(iv)": "ok",
                         "nondegenerate": "ok"}
        out["complement"] = {t.labels[a]: t.labels[c] for a, c in enumerate(t.complement)}
    if subject.group is not None:
        out["interval"] = (_labels(subject.table, range(subject.table.size))
                           if subject.table else f"infinite: {subject.gamma_error}")
    return {"validation": out}


def _rdp(subject, args) -> dict:
    t = subject.require_table()
    w = check_rdp(t)
    return {"rdp": {"confirmed": w.confirmed,
                    "splitting_counterexample": _labels(t, w.splitting),
                    "refinement_counterexample": _labels(t, w.refinement)}}


def _states_block(subject, sp) -> dict:
    return {"coordinates": list(sp.coordinates),
            "vertex_count": len(sp.vertices),
            "affine_dim": sp.v.affine_dim,
            "vertex_names": subject.vertex_names(sp),
            "vertices": [_fmt_vec(v) for v in sp.vertices]}


def _states(subject, args) -> dict:
    return {"states": _states_block(subject, subject.polytope())}


def _classification_block(subject, sp) -> dict:
    cls = classify_state_space(sp.v)
    out = cls.to_json()
    out["dependency_text"] = (_dependency_text(subject.vertex_names(sp), cls.dependency)
                              if cls.dependency else None)
    return out


def _classify(subject, args) -> dict:
    return {"classification": _classification_block(subject, subject.polytope())}


def _decomposition_block(subject, sp, s) -> dict:
    res = unique_decomposition(s, sp)
    out = {"state": dict(zip(sp.coordinates, _fmt_vec(s)))}
    out.update(res.to_json())
    return out


def _decompose(subject, args) -> dict:
    sp = subject.polytope()
    s = _state_vector(subject, sp, args.state)
    return {"decomposition": _decomposition_block(subject, sp, s)}


def _extend(subject, args) -> dict:
    t = subject.require_table()
    keys, given = args.sub, args.given
    if subject.problem is not None:
        keys = subject.problem.subalgebra if keys is None else keys
        if given is None:
            try:
                given = {k: to_fraction(v) for k, v in subject.problem.given.items()}
            except (TypeError, ValueError) as exc:
                raise io.ParseError(f"'given': {exc}") from exc
    if keys is None or given is None:
        raise UsageError("extend needs --sub and --given, or an extension problem file")
    ids = [_resolve(t, k) for k in keys]
    sub = is_subalgebra(t, sorted(set(ids) | {t.zero, t.one}))
    partial = {}
    for k, v in given.items():
        i = _resolve(t, k)
        if i not in sub.subset:
            raise NotAState(f"{k!r} is not in the subalgebra")
        partial[sub.local_id(i)] = v
    local = _complete_state(sub.table, partial)
    problem = ExtensionProblem(t, sub, {a: local[j] for j, a in enumerate(sub.subset)})
    res = extend_state(problem)
    return {"extension": {"subalgebra": _labels(t, sub.subset),
                          "given": {t.labels[a]: format_fraction(problem.given[a])
                                    for a in sub.subset},
                          **res.to_json(t.labels)}}


def _report(subject, args) -> dict:
    out = {}
    out.update(_validate(subject, args))
    t = subject.table
    if t is not None:
        out.update(_rdp(subject, args))
        lattice, pair = is_lattice(t.order)
        out["lattice"] = {"lattice": lattice, "witness": _labels(t, pair)}
        try:
            to_mv(t)
            out["mv"] = {"mv": True, "reason": None}
        except NotMv as exc:
            out["mv"] = {"mv": False, "reason": exc.reason}
    sp = subject.polytope()
    out["states"] = _states_block(subject, sp)
    out["classification"] = _classification_block(subject, sp)
    if t is not None:
        tsp = state_polytope(t) if subject.group is not None else sp
        try:
            ok, pair = order_determining(t, tsp)
            out["order_determining"] = {"order_determining": ok, "witness": _labels(t, pair)}
        except EmptyStateSpace:
            out["order_determining"] = {"order_determining": False, "witness": "empty state space"}
    if not sp.empty:
        points = [tuple(sum(c) / len(sp.vertices) for c in zip(*sp.vertices))]
        points += random_points(sp.vertices, REPORT_RANDOM_POINTS, seed=args.seed)
        out["decompositions"] = [_decomposition_block(subject, sp, s) for s in points]
    if t is not None:
        try:
            subs = enumerate_subalgebras(t, max_size=args.max_size)
        except SizeBoundExceeded as exc:
            out["subalgebras"] = {"skipped": str(exc)}
        else:
            rows = []
            for sub in subs:
                sub_sp = state_polytope(sub.table)
                extended = 0
                for v in sub_sp.vertices:
                    given = {a: v[j] for j, a in enumerate(sub.subset)}
                    extended += extend_state(ExtensionProblem(t, sub, given)).extended
                rows.append({"subset": _labels(t, sub.subset),
                             "vertex_states": len(sub_sp.vertices),
                             "extended": extended})
            out["subalgebras"] = rows
    return out


HANDLERS = {"validate": _validate, "rdp": _rdp, "states": _states, "classify": _classify,
            "decompose": _decompose, "extend": _extend, "report": _report}


# -- rendering ------------------------------------------------------------

def _render_text(data, indent=0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    else:
        for item in data:
            if isinstance(item, (dict, list)) and not _flat_list(item):
                lines.append(f"{pad}-")
                lines.extend(_render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    return lines


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, dict):
        return "{}"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def emit(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2)
    return "\n".join(_render_text(report))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="effectstates",
        description="Exact state spaces of finite effect algebras and interval po-groups.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("file", help="fixture JSON file or shipped fixture name")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomly generated test states (default 0)")
    common.add_argument("--max-size", type=int, default=12,
                        help="largest algebra whose subalgebras are enumerated (default 12)")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "decompose":
            p.add_argument("--state", required=True,
                           help="JSON object mapping element labels or ids to 'p/q'")
        if name == "extend":
            p.add_argument("--sub", help="comma separated labels or ids of the subalgebra"
                                         " (optional when FILE is an extension problem)")
            p.add_argument("--given",
                           help="JSON object with the state values on the subalgebra")
    return parser


def run_command(argv) -> tuple[int, str]:
    """Parse ``argv`` and run it; return the exit code and the rendered output."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "decompose":
        args.state = _parse_assignment(args.state, parser)
    if args.command == "extend":
        if args.given is not None:
            args.given = _parse_assignment(args.given, parser)
        if args.sub is not None:
            args.sub = [k.strip() for k in args.sub.split(",") if k.strip()]
    report = {"schema": SCHEMA, "command": args.command}
    try:
        subject = _load(args.file)
        report["input"] = subject.summary()
        report.update(HANDLERS[args.command](subject, args))
        code = 0
    except UsageError as exc:
        parser.error(str(exc))
    except DOMAIN_ERRORS + (UnknownElement,) as exc:
        error = {"code": getattr(exc, "code", "error"), "message": str(exc)}
        if isinstance(exc, ValidationError):
            error["axiom"] = exc.axiom
            error["elements"] = list(exc.elements)
        report["error"] = error
        code = 1
    return code, emit(report, args.format)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        code, text = run_command(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    json_output = text.startswith("{")
    print(text, file=sys.stdout if code == 0 or json_output else sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
