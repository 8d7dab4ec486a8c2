"""Command-line front end.

Every command prints JSON by default.  Exit status is 0 on success, 2 when
the input is rejected and 1 when an internal check fails (including a
``verify`` run that finds counterexamples).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import kldeg
from .ambc import Triple, forward_step, phi, psi, southwest_numbering
from .errors import InvariantError, ValidationError
from .oracle import THEOREMS, EnumerationSpec, verify
from .perm import AffinePermutation, brute_inversion_count
from .render import parse_viewport, render_ascii, render_svg
from .stream import (
    dominance_constants,
    dominant_representative,
    is_dominant,
    make_stream,
    symmetrized_offsets,
)
from .tabloid import (
    Partition,
    Tabloid,
    charge,
    column_superstandard,
    d_lambda,
    local_charge,
    shape_inversions,
    weight_inversions,
)

__all__ = ["main", "run", "build_parser"]


# -- input parsing -------------------------------------------------------------


def _load_json(text: str, what: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{what} is not valid JSON: {exc.msg}") from exc


def _window(args) -> AffinePermutation:
    if not args.window:
        raise ValidationError("--window is required")
    return AffinePermutation.parse(args.window, args.n)


def _triple(args) -> Triple:
    if args.triple:
        text = args.triple
    elif args.infile:
        text = sys.stdin.read() if args.infile == "-" else open(args.infile).read()
    else:
        raise ValidationError("--triple or --in is required")
    data = _load_json(text, "triple")
    if not isinstance(data, dict):
        raise ValidationError("triple must be a JSON object")
    return Triple.from_json(data)


def _shape(args) -> Partition:
    if not args.shape:
        raise ValidationError("--shape is required")
    text = args.shape.strip().strip("<>[]()")
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError as exc:
        raise ValidationError(f"bad shape {args.shape!r}") from exc
    if not parts:
        raise ValidationError("shape must be nonempty")
    return Partition(parts)


def _tabloid(args) -> Tabloid:
    rows = _load_json(args.tabloid, "tabloid")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValidationError("tabloid must be a JSON list of rows")
    n = args.n if args.n else sum(len(r) for r in rows)
    return Tabloid.from_rows(n, rows)


def _vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.strip().strip("()[]").split(","))
    except ValueError as exc:
        raise ValidationError(f"bad vector {text!r}") from exc


# -- commands ------------------------------------------------------------------


def _rows(t: Tabloid) -> str:
    return "/".join("{" + ",".join(map(str, r)) + "}" for r in t.rows)


def cmd_phi(args):
    t = phi(_window(args))
    if args.format == "table":
        return f"P   {_rows(t.P)}\nQ   {_rows(t.Q)}\nrho {' '.join(map(str, t.rho))}\n"
    return t.to_json()


def cmd_psi(args):
    return str(psi(_triple(args))) + "\n"


def cmd_inverse(args):
    return str(_window(args).inverse()) + "\n"


def cmd_knuth(args):
    w = _window(args)
    if args.position is not None:
        v = w.knuth_move(args.position)
        return {"position": args.position, "window": None if v is None else str(v)}
    return [{"position": i, "window": str(v)} for i, v in w.knuth_neighbors()]


def cmd_sign(args):
    w = _window(args)
    t = phi(w)
    exps = {
        "inv_P": t.P.inversions(),
        "inv_Q": t.Q.inversions(),
        "inv_shape": shape_inversions(t.shape),
        "inv_weight": weight_inversions(t.shape, t.rho),
    }
    inv = w.inversion_count()
    return {
        "window": str(w),
        "sign": w.sign(),
        "inversions": inv,
        "inversions_direct": brute_inversion_count(w),
        "shift_sum": w.shift_sum(),
        "exponents": exps,
        "holds": (inv + w.shift_sum() - sum(exps.values())) % 2 == 0,
    }


def _charge_report(t: Tabloid) -> dict:
    d = d_lambda(t.shape)
    return {
        "rows": [list(r) for r in t.rows],
        "charge": charge(t),
        "local_charges": [local_charge(t, k) for k in range(1, len(t.rows))],
        "d": d,
        "component": charge(t) % d,
    }


def cmd_charge(args):
    if args.tabloid:
        return _charge_report(_tabloid(args))
    if args.window:
        t = phi(_window(args))
        return {"P": _charge_report(t.P), "Q": _charge_report(t.Q)}
    if args.shape:
        start = 1 if args.start is None else args.start
        return _charge_report(column_superstandard(_shape(args), start))
    raise ValidationError("give --tabloid, --window or --shape")


def cmd_dominance(args):
    t = _triple(args)
    return {
        "dominant": is_dominant(t.P, t.Q, t.rho),
        "constants": dominance_constants(t.P, t.Q),
        "offsets": symmetrized_offsets(t.P, t.Q),
        "representative": list(dominant_representative(t.P, t.Q, t.rho)),
    }


def cmd_components(args):
    shape = _shape(args)
    verts = kldeg.all_tabloids(shape)
    records = [
        {"id": k, "rows": [list(r) for r in t.rows], "charge": charge(t), "component": kldeg.component_id(t)}
        for k, t in enumerate(verts)
    ]
    if args.format == "table":
        lines = ["tabloid_id,tabloid,charge,component"]
        lines += [f"{r['id']},{_rows(t)},{r['charge']},{r['component']}" for r, t in zip(records, verts)]
        return "\n".join(lines) + "\n"
    out = {"shape": list(shape.parts), "d": d_lambda(shape), "tabloid_count": len(verts)}
    if shape.size <= kldeg.MAX_GRAPH_N:
        out["bfs_components"] = len(kldeg.DegGraph.build(shape).components())
    out["tabloids"] = records
    return out


def cmd_monodromy(args):
    shape = _shape(args)
    sizes = kldeg.cumulative_multiplicities(shape)
    key = lambda ij: f"{ij[0]},{ij[1]}"  # noqa: E731
    out = {
        "shape": list(shape.parts),
        "column_sizes": list(sizes),
        "diophantine_basis": {key(k): list(v) for k, v in kldeg.diophantine_basis(sizes).items()},
        "generators": {key(k): list(v) for k, v in kldeg.gup_generators(shape).items()},
        "basis": [list(v) for v in kldeg.gup_basis(shape)],
    }
    if args.vector:
        out["contains"] = kldeg.gup_contains(shape, _vector(args.vector))
    if args.lift:
        lifted = {}
        for i, j in kldeg.diophantine_basis(sizes):
            loop, predicted = kldeg.monodromy_generator_loop(shape, i, j)
            lifted[key((i, j))] = {
                "loop_length": len(loop) - 1,
                "predicted": list(predicted),
                "lifted": list(kldeg.lift_loop(loop)),
            }
        out["lifted"] = lifted
    return out


def cmd_render(args):
    vp = parse_viewport(args.viewport) if args.viewport else None
    balls, numbering, stream = (), None, None
    if args.window:
        w = _window(args)
        n = w.n
        balls = w.balls()
        if args.numbering == "sw":
            numbering = southwest_numbering(w)
        if args.show_stream:
            stream, _ = forward_step(w)
    elif args.stream:
        data = _load_json(args.stream, "stream")
        if not args.n:
            raise ValidationError("--n is required with --stream")
        n = args.n
        stream = make_stream(data["rows"], data["cols"], data.get("altitude", 0), n)
    elif args.triple or args.infile:
        t = _triple(args)
        k = 1 if args.position is None else args.position
        if not 1 <= k <= len(t.rho):
            raise ValidationError(f"--position must name a row 1..{len(t.rho)}")
        n = t.n
        stream = make_stream(t.Q.rows[k - 1], t.P.rows[k - 1], t.rho[k - 1], n)
    else:
        raise ValidationError("give --window, --stream or --triple")
    if args.format == "svg":
        return render_svg(n, balls, numbering, stream, vp)
    return render_ascii(n, balls, numbering, stream, vp)


def cmd_verify(args):
    spec = EnumerationSpec(n_max=args.n_max, shift_band=args.band, n_min=args.n_min)
    names = THEOREMS if args.suite == "all" else tuple(args.suite.split(","))
    reports = [verify(name, spec, jobs=args.jobs) for name in names]
    if args.format == "table":
        lines = [f"{r['theorem']:34} checked={r['checked']:6} failures={r['failure_count']}" for r in reports]
        text = "\n".join(lines) + "\n"
    else:
        text = reports[0] if len(reports) == 1 else reports
    failed = any(r["failure_count"] for r in reports)
    return text, (1 if failed else 0)


COMMANDS = {
    "phi": (cmd_phi, "forward map: window to (P, Q, rho)"),
    "psi": (cmd_psi, "backward map: triple to window"),
    "inverse": (cmd_inverse, "inverse permutation"),
    "knuth": (cmd_knuth, "Knuth moves available at each position"),
    "sign": (cmd_sign, "sign and its tabloid exponents"),
    "charge": (cmd_charge, "charge and component of a tabloid"),
    "dominance": (cmd_dominance, "dominance constants and representative"),
    "components": (cmd_components, "tabloids of a shape with their components"),
    "monodromy": (cmd_monodromy, "lattice of weight changes for a shape"),
    "render": (cmd_render, "draw balls, numberings and streams"),
    "verify": (cmd_verify, "run exhaustive checks"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="modulus")
    common.add_argument("--window", help='window such as "[1,2,17,5,14,18,20]"')
    common.add_argument("--triple", help='JSON {"n":..,"P":[[..]],"Q":[[..]],"rho":[..]}')
    common.add_argument("--tabloid", help="JSON list of rows")
    common.add_argument("--shape", help="partition such as 3,3,2")
    common.add_argument("--start", type=int, help="start residue of a superstandard tabloid")
    common.add_argument("--position", type=int, help="1-based position or row")
    common.add_argument("--format", choices=["json", "table", "ascii", "svg"], default="json")
    common.add_argument("--in", dest="infile", help="read the triple from this file ('-' for stdin)")
    common.add_argument("--out", dest="outfile", help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="affknuth", description="Affine matrix-ball construction toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "monodromy":
            p.add_argument("--vector", help="test membership of this weight change")
            p.add_argument("--lift", action="store_true", help="lift each generator loop")
        elif name == "render":
            p.add_argument("--viewport", help="lo,hi or r0,r1,c0,c1 (default 1-n..2n)")
            p.add_argument("--numbering", choices=["sw", "none"], default="sw")
            p.add_argument("--show-stream", action="store_true", help="overlay the first stream")
            p.add_argument("--stream", help='JSON {"rows":[..],"cols":[..],"altitude":r}')
        elif name == "verify":
            p.add_argument("--suite", default="all", help=f"all or a comma list of: {', '.join(THEOREMS)}")
            p.add_argument("--n-max", type=int, default=4)
            p.add_argument("--n-min", type=int, default=1)
            p.add_argument("--band", type=int, default=1)
            p.add_argument("--jobs", type=int, default=1)
    return parser


def _emit(result, outfile: str | None) -> None:
    text = result if isinstance(result, str) else json.dumps(result) + "\n"
    if outfile:
        with open(outfile, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        result = func(args)
        code = 0
        if isinstance(result, tuple):
            result, code = result
        _emit(result, args.outfile)
        return code
    except ValidationError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
