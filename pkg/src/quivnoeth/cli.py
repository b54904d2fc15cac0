"""Command-line front end.

Exit codes: 0 on success, 1 when the command's verdict is negative
(non-noetherian, axiom counterexample, failed check), 2 on input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import algebra as alg_mod
from .groebner import (
    CategoryError,
    GroebnerOrder,
    check_finite_category,
    check_g1,
    check_g2,
    check_refinement,
    load_category,
)
from .linrep import (
    RepresentationError,
    enumerate_subrepresentations,
    free_representation,
    hom_representations,
    ideal_embedding,
    parse_representation,
    random_representation,
    serialize_representation,
)
from .noetherian import (
    NotNoetherianError,
    decompose,
    is_left_finite_at,
    is_left_noetherian_at,
    is_right_finite_at,
    witness_chain,
)
from .poset import PathPoset, PeriodicPathSequence, enumerate_ideals, nu_extract
from .quiver import QuiverError, load_quiver, opposite, parse_path


class InputError(Exception):
    pass


# keys every JSON document carries, then the keys per subcommand (and action)
COMMON_KEYS = frozenset({"command", "input_digest", "exit_code"})
REFUSAL_KEYS = frozenset({"vertex", "verdict", "maximal_paths", "bound", "witness"})
JSON_SCHEMA = {
    "check": frozenset({"side", "reports"}),
    "maximal-paths": REFUSAL_KEYS,
    "decompose": frozenset({"core", "rays", "connectors"}),
    "witness": frozenset({"witness", "chain"}),
    "groebner-check": frozenset({"order", "truncate", "results"}),
    "category-check": frozenset({"g1", "g2", "acc", "lattice_height", "ideal_counts"}),
    "rep free": frozenset({"action", "dims", "basis", "maps"}),
    "rep subreps": frozenset({"action", "count", "subrepresentations"}),
    "rep hom": frozenset({"action", "target", "dim_hom", "expected", "adjunction"}),
    "rep embed": frozenset({"action", "ideals", "injective"}),
    "algebra info": frozenset({"action", "dimension", "truncated", "truncation", "basis", "idempotents", "noetherian"}),
    "algebra truncate": frozenset({"action", "dimension", "truncated", "truncation", "basis", "idempotents", "noetherian"}),
    "algebra noetherian": frozenset({"action", "noetherian"}),
    "nu": frozenset({"nu", "paths"}),
}


def schema_errors(doc: dict) -> list[str]:
    """Problems with a JSON report; empty when it matches :data:`JSON_SCHEMA`."""
    missing = sorted(COMMON_KEYS - set(doc))
    if missing:
        return [f"missing {k}" for k in missing]
    if doc["exit_code"] == 2:
        return [] if "error" in doc else ["input error without message"]
    name = doc["command"] + (f" {doc['action']}" if "action" in doc else "")
    expected = JSON_SCHEMA.get(name)
    if expected is None:
        return [f"unknown command {name}"]
    keys = set(doc) - COMMON_KEYS
    # refusals on non-noetherian vertices carry the report instead
    if doc["exit_code"] == 1 and REFUSAL_KEYS <= keys:
        return []
    return [f"missing {k}" for k in sorted(expected - keys)]


@dataclass
class CommandReport:
    command: str
    digest: str = ""
    data: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    exit_code: int = 0

    def to_json(self) -> dict:
        return {"command": self.command, "input_digest": self.digest, "exit_code": self.exit_code, **self.data}


def _digest(*paths) -> str:
    h = hashlib.sha256()
    for p in paths:
        with open(p, "rb") as fh:
            h.update(fh.read())
    return h.hexdigest()[:16]


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def _vertices(q, vertex: Optional[str]) -> list[str]:
    if vertex is None:
        return sorted(q.vertices)
    if not q.is_core_vertex(vertex):
        raise InputError(f"unknown vertex {vertex}")
    return [vertex]


def _witness_text(w) -> str:
    return f"access {w.access}, cycle {w.cycle}, branch {w.branch}"


def cmd_check(args, rep: CommandReport) -> None:
    q = load_quiver(args.file)
    side = args.side
    if side == "right" and q.has_rays:
        raise InputError("right-sided checks are unsupported for quivers with rays")
    target = opposite(q) if side == "right" else q
    reports = []
    negative = False
    verts = _vertices(q, args.vertex)
    for v in verts:
        r = is_left_noetherian_at(target, v)
        entry = r.to_json()
        text = f"{side} noetherian: {_yes(r.verdict)}"
        text += f"; maximal paths: {len(r.maximal_paths)}" if r.verdict else f"; witness: {_witness_text(r.witness)}"
        negative |= not r.verdict
        if args.finite:
            fin = is_left_finite_at(q, v) if side == "left" else is_right_finite_at(q, v)
            entry["finite"] = fin
            text += f"; {side} finite: {_yes(fin)}"
            negative |= not fin
        reports.append(entry)
        rep.lines.append(text if args.vertex else f"vertex {v}: {text}")
    rep.data = {"side": side, "reports": reports}
    rep.exit_code = 1 if negative else 0


def cmd_maximal_paths(args, rep: CommandReport) -> None:
    q = load_quiver(args.file)
    _vertices(q, args.vertex)
    r = is_left_noetherian_at(q, args.vertex)
    rep.data = r.to_json()
    if not r.verdict:
        rep.lines.append(f"left noetherian: no; refused; witness: {_witness_text(r.witness)}")
        rep.exit_code = 1
        return
    rep.lines.append(f"maximal paths: {len(r.maximal_paths)} (bound d^n = {r.branching_degree}^{r.branching_paths} = {r.bound})")
    rep.lines += [f"  {m}" for m in r.maximal_paths]


def cmd_decompose(args, rep: CommandReport) -> None:
    q = load_quiver(args.file)
    _vertices(q, args.vertex)
    try:
        d = decompose(q, args.vertex)
    except NotNoetherianError as exc:
        rep.data = exc.report.to_json()
        rep.lines.append(f"left noetherian: no; refused; witness: {_witness_text(exc.report.witness)}")
        rep.exit_code = 1
        return
    rep.data = {
        "core": {"vertices": sorted(d.core.vertices), "arrows": sorted(a.id for a in d.core.arrows)},
        "rays": list(d.rays),
        "connectors": list(d.connectors),
    }
    rep.lines.append(f"core vertices: {' '.join(sorted(d.core.vertices))}")
    rep.lines.append(f"core arrows: {' '.join(sorted(a.id for a in d.core.arrows)) or '-'}")
    rep.lines.append(f"rays: {' '.join(d.rays) or '-'}")
    rep.lines.append(f"connectors: {' '.join(d.connectors) or '-'}")


def cmd_witness(args, rep: CommandReport) -> None:
    q = load_quiver(args.file)
    _vertices(q, args.vertex)
    if args.steps < 0:
        raise InputError("--steps must be nonnegative")
    r = is_left_noetherian_at(q, args.vertex)
    if r.verdict:
        rep.lines.append("left noetherian: yes; no witness exists")
        rep.data = {"witness": None, "chain": []}
        rep.exit_code = 1
        return
    chain = witness_chain(r.witness, args.steps)
    rep.data = {"witness": r.witness.to_json(), "chain": [[str(g) for g in c.generators] for c in chain]}
    rep.lines.append(f"witness: {_witness_text(r.witness)}")
    for i, c in enumerate(chain):
        rep.lines.append(f"chain({i}) = {c}")
    rep.lines.append(f"strictly ascending: {len(chain)} ideals")


def cmd_groebner(args, rep: CommandReport) -> None:
    q = load_quiver(args.file)
    if args.order:
        names = [s.strip() for s in args.order.split(",") if s.strip()]
        known = {a.id for a in q.arrows}
        unknown = [n for n in names if n not in known]
        if unknown:
            raise InputError(f"unknown arrows in --order: {unknown}")
        names += [a.id for a in q.arrows if a.id not in names]
        order = GroebnerOrder(names, [r for r, _ in q.rays])
    else:
        order = GroebnerOrder.default(q)
    results = {}
    failed = False
    for v in _vertices(q, args.vertex):
        checks = {
            "g1": check_g1(order, q, v, args.truncate),
            "g2": check_g2(order, q, v, args.truncate),
            "refinement": check_refinement(order, q, v, args.truncate),
        }
        results[v] = {k: ("pass" if c is None else c.to_json()) for k, c in checks.items()}
        parts = [f"{k}: {'pass' if c is None else c}" for k, c in checks.items()]
        failed |= any(c is not None for c in checks.values())
        rep.lines.append(f"vertex {v}: " + "; ".join(parts))
    rep.data = {"order": list(order.arrow_rank), "truncate": args.truncate, "results": results}
    rep.exit_code = 1 if failed else 0


def cmd_category(args, rep: CommandReport) -> None:
    c = load_category(args.file)
    r = check_finite_category(c)
    rep.data = r.to_json()
    rep.lines.append(f"G1: {'pass' if r.g1 is None else 'fail ' + str(r.g1)}")
    rep.lines.append(f"G2: {'pass' if r.g2 is None else 'fail ' + str(r.g2)}")
    heights = ", ".join(f"{x}: {h}" for x, h in r.lattice_height.items())
    rep.lines.append(f"ACC: {'pass' if r.acc else 'fail'} (ideal lattice heights {heights})")
    rep.exit_code = 0 if r.ok else 1


def cmd_rep(args, rep: CommandReport) -> None:
    q = load_quiver(args.file)
    _vertices(q, args.vertex)
    F = free_representation(q, args.vertex, args.field, args.dim)
    R = F.rep
    if args.action == "free":
        rep.data = {
            "dims": R.dims,
            "basis": {y: [str(ph) for ph in F.index[y]] for y in sorted(F.index)},
            "maps": {a: R.maps[a].tolist() for a in sorted(R.maps)},
        }
        rep.lines.append(f"free representation F_{args.field}^{args.dim}[Q({args.vertex},-)]")
        rep.lines += serialize_representation(R).splitlines()
    elif args.action == "subreps":
        subs = enumerate_subrepresentations(R)
        rep.data = {"count": len(subs), "subrepresentations": [{v: str(s) for v, s in u.spaces} for u in subs]}
        rep.lines.append(f"subrepresentations: {len(subs)}")
        rep.lines += [f"  {u}" for u in subs]
    elif args.action == "hom":
        if args.rep:
            M = parse_representation(R.quiver, open(args.rep, encoding="utf-8").read())
        else:
            rng = np.random.default_rng(args.seed)
            dims = {v: int(rng.integers(0, 3)) for v in R.quiver.vertices}
            M = random_representation(R.quiver, args.field, dims, rng)
        if M.p != args.field:
            raise InputError("representation field differs from --field")
        lhs = len(hom_representations(R, M))
        rhs = args.dim * M.dims[args.vertex]
        rep.data = {"target": serialize_representation(M), "dim_hom": lhs, "expected": rhs, "adjunction": lhs == rhs}
        rep.lines += ["target representation:"] + ["  " + s for s in serialize_representation(M).splitlines()]
        rep.lines.append(f"dim Hom(F^{args.dim}[Q({args.vertex},-)], M) = {lhs}")
        rep.lines.append(f"{args.dim} * dim M({args.vertex}) = {rhs}")
        rep.lines.append(f"adjunction identity: {_yes(lhs == rhs)}")
        rep.exit_code = 0 if lhs == rhs else 1
    else:
        ideals = enumerate_ideals(PathPoset(R.quiver, args.vertex))
        images = [ideal_embedding(F, I) for I in ideals]
        injective = len(set(images)) == len(images)
        rep.data = {
            "ideals": [{"generators": [str(g) for g in I.generators], "image_dims": U.dims()} for I, U in zip(ideals, images)],
            "injective": injective,
        }
        for I, U in zip(ideals, images):
            rep.lines.append(f"{I} -> {U}")
        rep.lines.append(f"ideals: {len(ideals)}; distinct images: {len(set(images))}; injective: {_yes(injective)}")
        rep.exit_code = 0 if injective else 1


def cmd_algebra(args, rep: CommandReport) -> None:
    q = load_quiver(args.file)
    if args.action == "noetherian":
        verdict = alg_mod.algebra_noetherian(q, args.field)
        rep.data = {"noetherian": verdict}
        rep.lines.append(f"path algebra left noetherian: {_yes(verdict)}")
        rep.lines.append("criterion: finitely many arrows and precisely one arrow starting at each vertex on an oriented cycle")
        rep.exit_code = 0 if verdict else 1
        return
    L = None
    if args.action == "truncate":
        if args.length is None:
            raise InputError("algebra truncate needs a length")
        L = args.length
    elif args.length is not None:
        raise InputError("a length is only accepted by 'algebra truncate'")
    a = alg_mod.build_algebra(q, args.field, L)
    verdict = alg_mod.algebra_noetherian(q, args.field)
    label = f"truncated dimension (L={a.truncation})" if a.truncated else "dimension"
    rep.data = {
        "dimension": a.dim,
        "truncated": a.truncated,
        "truncation": a.truncation,
        "basis": [str(b) for b in a.basis],
        "idempotents": [f"e_{v}" for v in sorted(q.vertices)],
        "noetherian": verdict,
    }
    rep.lines.append(f"{label}: {a.dim}")
    rep.lines.append("basis: " + ", ".join(b.word() for b in a.basis))
    rep.lines.append("idempotents: " + ", ".join(f"e_{v}" for v in sorted(q.vertices)))
    rep.lines.append(
        f"left noetherian: {_yes(verdict)} (precisely one arrow starts at each vertex on an oriented cycle: {_yes(verdict)})"
    )


def _load_sequence(q, path) -> PeriodicPathSequence:
    pre, period = [], []
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            kw, _, rest = line.partition(" ")
            if kw not in ("pre", "period"):
                raise InputError(f"line {lineno}: expected 'pre <path>' or 'period <path>'")
            (pre if kw == "pre" else period).append(parse_path(q, rest))
    if not period:
        raise InputError("sequence file has no 'period' line")
    return PeriodicPathSequence(tuple(pre), tuple(period))


def cmd_nu(args, rep: CommandReport) -> None:
    q = load_quiver(args.file)
    _vertices(q, args.vertex)
    seq = _load_sequence(q, args.sequence)
    rep.digest = _digest(args.file, args.sequence)
    try:
        out = nu_extract(PathPoset(q, args.vertex), seq, args.count)
    except NotNoetherianError as exc:
        rep.data = exc.report.to_json()
        rep.lines.append(f"left noetherian: no; refused; witness: {_witness_text(exc.report.witness)}")
        rep.exit_code = 1
        return
    rep.data = {"nu": [i for i, _ in out], "paths": [str(p) for _, p in out]}
    rep.lines.append("nu = (" + ", ".join(str(i) for i, _ in out) + ")")
    rep.lines += [f"  x_{i} = {p}" for i, p in out]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled data")

    parser = argparse.ArgumentParser(prog="quivnoeth", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", default=False, help="machine-readable output")
    parser.add_argument("--seed", type=int, default=0, help="seed for sampled data")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="noetherian / finite verdicts per vertex")
    p.add_argument("file")
    p.add_argument("--vertex")
    p.add_argument("--side", choices=("left", "right"), default="left")
    p.add_argument("--finite", action="store_true", help="also report left/right finiteness")
    p.set_defaults(func=cmd_check)

    for name, func, hlp in (
        ("maximal-paths", cmd_maximal_paths, "list the maximal paths from a vertex"),
        ("decompose", cmd_decompose, "core / rays / connectors decomposition"),
    ):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("file")
        p.add_argument("--vertex", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("witness", parents=[common], help="strictly ascending chain of ideals")
    p.add_argument("file")
    p.add_argument("--vertex", required=True)
    p.add_argument("--steps", type=int, default=3)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("groebner-check", parents=[common], help="check G1/G2/refinement for degree-lex")
    p.add_argument("file")
    p.add_argument("--vertex")
    p.add_argument("--truncate", type=int, default=4)
    p.add_argument("--order", help="comma-separated arrow ranking, lowest first")
    p.set_defaults(func=cmd_groebner)

    p = sub.add_parser("category-check", parents=[common], help="check a finite category table")
    p.add_argument("file")
    p.set_defaults(func=cmd_category)

    p = sub.add_parser("rep", parents=[common], help="free representations over F_p")
    p.add_argument("action", choices=("free", "subreps", "hom", "embed"))
    p.add_argument("file")
    p.add_argument("--vertex", required=True)
    p.add_argument("--field", type=int, default=2)
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--rep", help="target representation file for 'hom'")
    p.set_defaults(func=cmd_rep)

    p = sub.add_parser("algebra", parents=[common], help="path algebra information")
    p.add_argument("action", choices=("info", "noetherian", "truncate"))
    p.add_argument("file")
    p.add_argument("length", nargs="?", type=int)
    p.add_argument("--field", type=int, default=2)
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("nu", parents=[common], help="subsequence extraction for a periodic sequence")
    p.add_argument("file")
    p.add_argument("--vertex", required=True)
    p.add_argument("--sequence", required=True)
    p.add_argument("--count", type=int, default=5)
    p.set_defaults(func=cmd_nu)
    return parser


def run(argv=None, out=None, err=None) -> CommandReport:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = 0 if exc.code in (0, None) else 2
        return CommandReport("(usage)", exit_code=code)
    rep = CommandReport(args.command)
    try:
        rep.digest = _digest(args.file)
        args.func(args, rep)
        if getattr(args, "action", None):
            rep.data = {"action": args.action, **rep.data}
    except (OSError, InputError, QuiverError, CategoryError, RepresentationError, ValueError) as exc:
        rep.exit_code = 2
        rep.data = {"error": str(exc)}
        if args.json:
            print(json.dumps(rep.to_json(), indent=2, sort_keys=True), file=out)
        else:
            print(f"error: {exc}", file=err)
        return rep
    if args.json:
        print(json.dumps(rep.to_json(), indent=2, sort_keys=True), file=out)
    else:
        for line in rep.lines:
            print(line, file=out)
    return rep


def main(argv=None) -> int:
    return run(argv).exit_code


if __name__ == "__main__":
    sys.exit(main())
