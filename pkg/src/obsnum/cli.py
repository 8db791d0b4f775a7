"""Command-line entry point: ``obsnum <command> ...`` or ``python -m obsnum``.

Every command writes one JSON report (stdout or ``--out``).  Reports are
byte-identical for identical inputs, flags and seed; wall-clock timings are
only included with ``--timings``.

Exit codes: 0 ok, 2 schema error, 3 precondition failed, 4 budget exhausted.
"""
from __future__ import annotations

import argparse
import os
import sys
import time


from . import bounds as bnd
from .arrangement import NotSimpleError
from .experiments import census, ordertype_gap, sot_string
from .io import (
    SchemaError,
    dumps,
    fmt,
    instance_json,
    load_instance,
    point_json,
    render_svg,
    write_atomic,
)
from .minimizer import (
    BudgetExceeded,
    SearchConfig,
    min_obstacles_fixed,
    obstacle_number_search,
    slab_report,
)
from .representation import Embedding, RepresentationError, per_obstacle_decomposition, verify
from .super_order import (
    PerturbationError,
    is_simple,
    pstar_sign,
    super_order_type,
)

EXIT_OK, EXIT_SCHEMA, EXIT_PRECONDITION, EXIT_BUDGET = 0, 2, 3, 4
SEED_ENV = "OBSNUM_SEED"


class PreconditionError(Exception):
    pass


def _need_points(inst, what="this command"):
    if inst.embedding is None:
        raise SchemaError(f"{what} needs an instance with points")
    return inst.embedding


def _certificate(res, emb):
    cert = res.certificate
    return {
        "count": res.count,
        "mode": res.mode,
        "faces": [list(f) if isinstance(f, tuple) else f for f in res.faces],
        "instance": instance_json(cert.graph, emb, cert.obstacles),
        "faces_polygons": {str(f): [point_json(p) for p in res.arrangement.face_polygon(f)]
                           for f in sorted({g for c in res.faces
                                            for g in (c if isinstance(c, tuple) else (c,))})},
        "valid": verify(cert).valid,
        "decomposition_ok": (not cert.obstacles) or _decomp_ok(cert),
    }


def _decomp_ok(rep):
    from .representation import intersect_edges
    return intersect_edges(per_obstacle_decomposition(rep)) == rep.graph.edges


def _maybe_svg(args, graph, emb, obstacles, arr):
    if getattr(args, "svg", None):
        write_atomic(args.svg, render_svg(graph, emb, obstacles, arr))


def cmd_verify(args):
    inst = load_instance(args.instance)
    _need_points(inst)
    rep = inst.representation()
    report = verify(rep)
    return {"h": rep.h, **report.to_dict()}


def cmd_minimize(args):
    inst = load_instance(args.instance)
    emb = _need_points(inst)
    try:
        res = min_obstacles_fixed(inst.graph, emb, args.mode)
    except NotSimpleError as exc:
        raise PreconditionError(str(exc)) from None
    _maybe_svg(args, inst.graph, emb, res.certificate.obstacles, res.arrangement)
    return {"faces_total": len(res.arrangement.faces), "crossings": res.arrangement.crossings,
            **_certificate(res, emb)}


def cmd_search(args):
    inst = load_instance(args.instance)
    try:
        out = obstacle_number_search(inst.graph, SearchConfig(budget=args.budget, seed=args.seed))
    except RuntimeError as exc:
        raise PreconditionError(str(exc)) from None
    _maybe_svg(args, inst.graph, out.embedding, out.best.certificate.obstacles, out.best.arrangement)
    return {"upper_bound": out.best.count, "samples": out.samples, "trace": out.trace,
            "certificate": _certificate(out.best, out.embedding)}


def _sot_summary(emb):
    sot = super_order_type(emb.points)
    return sot, {"n": sot.n, "r": sot.r, "simple": sot.is_simple(), "zeros": sot.zeros(),
                 "pstar_sign": pstar_sign(emb.points), "vector": sot_string(sot.values)}


def cmd_sot(args):
    a = _need_points(load_instance(args.instance))
    sa, out = _sot_summary(a)
    result = {"first": out}
    if args.other:
        b = _need_points(load_instance(args.other))
        sb, out_b = _sot_summary(b)
        result["second"] = out_b
        if sa.n != sb.n:
            result["equal"] = False
            result["first_difference"] = None
        else:
            diff = sa.first_difference(sb)
            result["equal"] = diff is None
            if diff is not None:
                from .super_order import enumerate_admissible
                result["first_difference"] = {"index": diff,
                                              "sextuple": list(enumerate_admissible(sa.n)[diff]),
                                              "values": [sa.values[diff], sb.values[diff]]}
            else:
                result["first_difference"] = None
    return result


def cmd_perturb(args):
    inst = load_instance(args.instance)
    emb = _need_points(inst)
    obstacles = inst.obstacles() if inst.raw_obstacles else None
    from .super_order import perturb_to_simple
    before = super_order_type(emb.points)
    try:
        pts = perturb_to_simple(emb.points, graph=inst.graph, obstacles=obstacles, seed=args.seed)
    except RepresentationError as exc:
        raise PreconditionError(str(exc)) from None
    new = Embedding(tuple(pts))
    after = super_order_type(pts)
    doc = instance_json(inst.graph, new, obstacles)
    if args.write:
        write_atomic(args.write, dumps(doc))
    return {"changed": list(new.points) != list(emb.points),
            "zeros_before": before.zeros(), "zeros_after": after.zeros(),
            "simple": is_simple(pts),
            "nonzero_types_preserved": all(x == 0 or x == y for x, y in zip(before.values, after.values)),
            "instance": doc}


def cmd_slab(args):
    inst = load_instance(args.instance)
    emb = _need_points(inst)
    try:
        rep = slab_report(inst.graph, emb, args.k)
    except NotSimpleError as exc:
        raise PreconditionError(str(exc)) from None
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    return {
        "k": rep.k, "m": rep.m, "order": list(rep.order),
        "whole_minimum": rep.whole_minimum, "whole_faces": list(rep.whole_faces),
        "slabs": [{"index": s.index, "vertices": list(s.vertices),
                   "x_range": [fmt(s.x_range[0]), fmt(s.x_range[1])],
                   "edges": [list(e) for e in s.graph.sorted_edges()],
                   "minimum": s.minimum, "faces": list(s.faces),
                   "certificate_obstacles_inside": s.certificate_obstacles_inside}
                  for s in rep.slabs],
    }


def cmd_census(args):
    c = census(args.n, args.samples, args.seed)
    from .super_order import enumerate_admissible
    r = len(enumerate_admissible(args.n))
    return {"n": args.n, "r": r, "samples": args.samples, "distinct": c.distinct,
            "trace": c.trace, "vectors": sorted(c.vectors)}


def cmd_bounds(args):
    cfg = bnd.BoundConfig(c=args.c, alpha=args.alpha, enc=args.enc)
    return bnd.bounds_report(args.n, cfg)


def cmd_ordertype_gap(args):
    g = ordertype_gap(args.n, args.budget, args.seed)
    return {"n": g.n, "budget": g.budget, "trials": g.trials, "found": [
        {"instance_first": instance_json(p.graph, p.first),
         "instance_second": instance_json(p.graph, p.second),
         "counts": list(p.counts), "order_types_equal": p.order_types_equal,
         "sot_equal": p.sot_equal, "reverified": p.reverified}
        for p in g.found]}


def _default_seed():
    return int(os.environ.get(SEED_ENV, "0"))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="obsnum", description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="write the JSON report here instead of stdout")
    ap.add_argument("--timings", action="store_true", help="include wall-clock timings")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check an obstacle representation")
    p.add_argument("instance")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("minimize", help="minimum obstacles for the given embedding")
    p.add_argument("instance")
    p.add_argument("--mode", choices=["faces", "vertex_clusters"], default="faces")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("search", help="upper-bound obs(G) over random embeddings")
    p.add_argument("instance")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--svg")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("sot", help="super-order type, simplicity and P* sign")
    p.add_argument("instance")
    p.add_argument("other", nargs="?")
    p.set_defaults(func=cmd_sot)

    p = sub.add_parser("perturb", help="perturb points into simple position")
    p.add_argument("instance")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--write", help="also write the perturbed instance here")
    p.set_defaults(func=cmd_perturb)

    p = sub.add_parser("slab", help="vertical-slab report")
    p.add_argument("instance")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_slab)

    p = sub.add_parser("census", help="count distinct super-order types of random simple sequences")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("bounds", help="slab/Chernoff numbers, h-hat and the w(n) lower bound")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--alpha", type=float, default=0.01)
    p.add_argument("--enc", type=float, default=1.0)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("ordertype-gap", help="search for equal order types with different minima")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--budget", type=int, default=200)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_ordertype_gap)
    return ap


def _echo(args) -> dict:
    skip = {"func", "out", "timings"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip}


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if getattr(args, "seed", "absent") is None:
        args.seed = _default_seed()
    start = time.perf_counter()
    code = EXIT_OK
    try:
        results = args.func(args)
    except SchemaError as exc:
        results, code = {"error": "schema", "message": str(exc)}, EXIT_SCHEMA
    except (PreconditionError, NotSimpleError) as exc:
        results, code = {"error": "precondition", "message": str(exc)}, EXIT_PRECONDITION
    except (BudgetExceeded, PerturbationError) as exc:
        results, code = {"error": "budget", "message": str(exc),
                         "upper_bound": getattr(exc, "upper_bound", None),
                         "residual": getattr(exc, "residual", None)}, EXIT_BUDGET
    except FileNotFoundError as exc:
        results, code = {"error": "schema", "message": str(exc)}, EXIT_SCHEMA
    report = {"command": args.command, "args": _echo(args),
              "seed": getattr(args, "seed", None), "exit_code": code, "results": results}
    if args.timings:
        report["timings"] = {"seconds": round(time.perf_counter() - start, 6)}
    text = dumps(report)
    if args.out:
        write_atomic(args.out, text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
