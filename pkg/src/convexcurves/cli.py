"""Command-line front end: ``convexcurves {verify,construct,witness,crofton,maximin,search}``.

Exit status is 0 when every check passes, 1 on a failed check (or a
conjecture candidate), 2 on a configuration error; errors are also written to
stderr as one JSON object.
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass, field
import json
import math
import os
import sys

import numpy as np

from . import constructions, crofton, shapes, verifier, witnesses
from .figures import Figure
from .reports import CheckReport, reports_to_csv, write_atomic

SEED_ENV = "CONVEXCURVES_SEED"
SHAPE_CHECKS = ("T1_four_points", "T2_double_perimeter", "T5_support_selection", "BOLLOBAS", "ZIRAKZADEH")
CURVE_CHECKS = ("T4_extreme_curve", "BARRIER_half")
ALIASES = {
    "T1": "T1_four_points", "T2": "T2_double_perimeter", "T4": "T4_extreme_curve",
    "T5": "T5_support_selection", "BARRIER": "BARRIER_half",
}


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


@dataclass
class RunConfig:
    command: str
    shape_file: str | None = None
    random: dict | None = None
    output: str | None = None
    figure: str | None = None
    options: dict = field(default_factory=dict)


def parse_random(text: str) -> dict:
    """Parse ``n=32,count=100,seed=7``; the seed falls back to $CONVEXCURVES_SEED."""
    out = {}
    for part in filter(None, text.split(",")):
        if "=" not in part:
            raise ConfigError(f"bad --random item {part!r}")
        key, val = part.split("=", 1)
        if key not in ("n", "count", "seed"):
            raise ConfigError(f"unknown --random key {key!r}")
        try:
            out[key] = int(val)
        except ValueError as exc:
            raise ConfigError(f"--random {key} must be an integer") from exc
    if "seed" not in out:
        if SEED_ENV not in os.environ:
            raise ConfigError("randomized runs need seed=... or $" + SEED_ENV)
        out["seed"] = int(os.environ[SEED_ENV])
    out.setdefault("count", 1)
    if out["count"] < 1 or out.get("n", 3) < 3:
        raise ConfigError("--random needs count >= 1 and n >= 3")
    return out


def _entries(cfg: RunConfig, n_vertices: int) -> list:
    if (cfg.shape_file is None) == (cfg.random is None):
        raise ConfigError("give exactly one of --shape or --random")
    if cfg.shape_file is not None:
        shape = shapes.load_shape(cfg.shape_file, n_vertices)
        return [verifier.CorpusEntry(None, len(shape), shape)]
    r = cfg.random
    sizes = [r["n"]] if "n" in r else range(3, 65)
    return verifier.corpus(r["count"], r["seed"], sizes)


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        write_atomic(cfg.output, text)
    else:
        sys.stdout.write(text)


def _emit_json(cfg: RunConfig, doc) -> None:
    _emit(cfg, json.dumps(doc, indent=2, sort_keys=True, default=_json_default) + "\n")


def _json_default(obj):
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, (np.floating, np.integer, np.bool_)):
        return obj.item()
    if isinstance(obj, tuple):
        return list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _figure(cfg: RunConfig, fig: Figure) -> None:
    if cfg.figure:
        write_atomic(cfg.figure, fig.to_svg())


def _report_doc(r: CheckReport) -> dict:
    return {
        "theorem_id": r.theorem_id, "lhs": r.lhs, "rhs": r.rhs, "slack": r.slack, "pass": r.passed,
        "relation": r.relation, "tolerance": r.tolerance_used, "provenance": r.shape_provenance,
        "details": {k: v for k, v in r.details.items() if k != "witness"},
    }


# --------------------------------------------------------------------------- commands


def cmd_verify(cfg: RunConfig) -> int:
    o = cfg.options
    name = ALIASES.get(o["theorem"], o["theorem"])
    theorems = list(SHAPE_CHECKS + CURVE_CHECKS) if name == "all" else [name]
    entries = _entries(cfg, o["vertices"])
    reports = []
    for th in theorems:
        for i, e in enumerate(entries):
            kw = {"seed": e.seed, "rel_tol": o["rel_tol"]}
            if th == "BOLLOBAS":
                ns = [o["arcs"]] if o["arcs"] else range(3, 13)
                for n in ns:
                    for j in range(o["anchors"]):
                        anchor = e.shape.perimeter * j / (o["anchors"] * n)
                        reports.append(verifier.check_theorem(th, e.shape, n=n, anchor=anchor, **kw))
            elif th == "ZIRAKZADEH":
                for j in range(o["anchors"]):
                    anchor = e.shape.perimeter * j / (o["anchors"] * 3)
                    reports.append(verifier.check_theorem(th, e.shape, anchor=anchor, **kw))
            elif th == "T5_support_selection":
                reports.append(verifier.check_theorem(th, e.shape, eps=o["eps"], **kw))
            elif th in CURVE_CHECKS:
                for j in range(o["curves"]):
                    s = verifier.derive_seed(o["curve_seed"], i * o["curves"] + j)
                    gen = verifier.random_vertex_curve if th == "T4_extreme_curve" else verifier.random_covering_curve
                    reports.append(verifier.check_theorem(th, e.shape, gen(e.shape, s), **kw))
            else:
                reports.append(verifier.check_theorem(th, e.shape, **kw))
    _emit(cfg, reports_to_csv(reports))
    if cfg.figure and entries:
        shape = entries[0].shape
        w = constructions.four_point_construction(shape)
        _figure(cfg, Figure().polygon(shape.vertices).points(w.points, labels="abcd"))
    return 0 if all(r.passed for r in reports) else 1


def cmd_construct(cfg: RunConfig) -> int:
    o = cfg.options
    docs = []
    ok = True
    entries = _entries(cfg, o["vertices"])
    for e in entries:
        shape = e.shape
        w = constructions.four_point_construction(shape)
        path = verifier.shortest_path_through(w.points)
        sel = constructions.support_normal_selection(shape, o["normals"])
        arc = constructions.equal_arc_points(shape, o["arcs"])
        t1 = verifier.check_theorem("T1_four_points", shape, seed=e.seed)
        t2 = verifier.check_theorem("T2_double_perimeter", shape, seed=e.seed)
        ok &= t1.passed and t2.passed
        docs.append({
            "seed": e.seed,
            "n": len(shape),
            "perimeter": shape.perimeter,
            "four_points": {
                "a": w.a, "b": w.b, "c": w.c, "d": w.d, "o": w.o, "len_ab": w.len_ab, "len_cd": w.len_cd,
                "shortest_order": "".join("abcd"[i] for i in path.order), "shortest_length": path.length,
                "double_perimeter_bound": constructions.double_perimeter_bound(w),
            },
            "support_selection": {"normals": sel.normals, "points": sel.points, "polygon_perimeter": sel.polygon_perimeter},
            "equal_arc": {"n": o["arcs"], "points": arc, "perimeter": verifier.cyclic_perimeter(arc)},
            "checks": [_report_doc(t1), _report_doc(t2)],
        })
    _emit_json(cfg, docs[0] if cfg.shape_file else docs)
    if entries:
        shape = entries[0].shape
        w = constructions.four_point_construction(shape)
        path = verifier.shortest_path_through(w.points)
        _figure(cfg, Figure().polygon(shape.vertices).path(path.polyline.points).points(w.points, labels="abcd"))
    return 0 if ok else 1


def cmd_witness(cfg: RunConfig) -> int:
    o = cfg.options
    name = o["name"]
    fig = Figure()
    ok = True
    if name == "rectangle":
        w = witnesses.make_rectangle_witness(o["L"], o["n"])
        ok = abs(w.path.length - (o["L"] + o["n"])) <= 1e-12 * o["L"]
        doc = {
            "name": name, "L": o["L"], "n": o["n"], "points": w.points, "path": w.path.points,
            "path_length": w.path.length, "half_perimeter": w.half_perimeter, "ratio": w.ratio,
        }
        fig.polygon(w.shape.vertices).path(w.path.points).points(w.points)
    elif name == "half-ellipse":
        w = witnesses.make_half_ellipse_witness(o["k"], o["n"])
        rep = witnesses.chain_bound_check(w)
        ok = rep.passed
        doc = {
            "name": name, "k": w.k, "n": w.n, "points": w.points, "chain_length": w.chain_length,
            "bound_small2": w.bound_small2, "bound_chain": w.bound_chain,
            "half_perimeter_exact": w.half_perimeter_exact,
            "half_perimeter_asymptotic": shapes.cayley_half_perimeter(w.k) if w.k < 1 else None,
            "slack": rep.slack, "pass": rep.passed, "threshold_n": witnesses.chain_threshold(w.k),
        }
        fig.polygon(shapes.discretize(witnesses.make_half_ellipse(o["k"]), 512).vertices).path(w.points).points(w.points)
    elif name == "lens":
        spec = witnesses.make_lens(o["R"], math.radians(o["apex"]) / 2.0)
        g = witnesses.lens_geometry(spec)
        shape = shapes.discretize(spec, o["vertices"])
        doc = {
            "name": name, "apex_deg": o["apex"], "R": o["R"], "a": g.a, "b": g.b, "m": g.m_upper,
            "perimeter": g.perimeter, "amb_length": g.amb_length, "half_perimeter": 0.5 * g.perimeter,
        }
        ok = g.amb_length < 0.5 * g.perimeter
        if o["maximin"]:
            res = verifier.maximin_point_selection(shape, 3, o["restarts"], o["seed"])
            doc["maximin"] = {"points": res.best_points, "value": res.value, "converged": res.converged}
        fig.polygon(shape.vertices).path([g.a, g.m_upper, g.b]).points([g.a, g.m_upper, g.b], labels="amb")
    elif name == "deltoid":
        p = witnesses.make_deltoid_pair()
        doc = {
            "name": name, "abcd": p.quad_d.vertices, "abcd_prime": p.quad_dprime.vertices,
            "per_minus_diam": p.values, "diameters": p.diameters,
            "expected": [1.0 + 4.0 * math.sin(math.radians(15.0)), 2.0],
        }
        ok = abs(p.values[0] - doc["expected"][0]) <= 1e-12 and abs(p.values[1] - 2.0) <= 1e-12
        fig.polygon(p.quad_dprime.vertices).polygon(p.quad_d.vertices, color="#c0392b")
    else:
        raise ConfigError(f"unknown witness {name!r}")
    doc["pass"] = bool(ok)
    _emit_json(cfg, doc)
    _figure(cfg, fig)
    return 0 if ok else 1


def cmd_crofton(cfg: RunConfig) -> int:
    o = cfg.options
    docs = []
    ok = True
    for e in _entries(cfg, o["vertices"]):
        curve = e.shape.boundary()
        g = crofton.default_grid(curve, n_angles=o["angles"], n_offsets=o["offsets"])
        if o["p_max"]:
            g = crofton.CroftonGrid(o["angles"], o["offsets"], o["p_max"])
        est = crofton.crofton_length(curve, g)
        rel = abs(est - e.shape.perimeter) / e.shape.perimeter
        exact = shapes.exact_perimeter(e.shape.source) if isinstance(e.shape.source, shapes.ShapeSpec) else e.shape.perimeter
        ok &= abs(est - exact) / exact <= o["tolerance"]
        docs.append({
            "seed": e.seed, "estimate": est, "perimeter": e.shape.perimeter, "exact_perimeter": exact,
            "relative_error": rel, "relative_error_exact": abs(est - exact) / exact,
            "grid": {"angles": g.n_angles, "offsets": g.n_offsets, "p_max": g.p_max},
        })
    _emit_json(cfg, docs[0] if cfg.shape_file else docs)
    return 0 if ok else 1


def cmd_maximin(cfg: RunConfig) -> int:
    o = cfg.options
    docs = []
    for e in _entries(cfg, o["vertices"]):
        res = verifier.maximin_point_selection(e.shape, o["k"], o["restarts"], o["seed"])
        docs.append({
            "seed": e.seed, "k": res.k, "points": res.best_points, "value": res.value,
            "half_perimeter": 0.5 * e.shape.perimeter, "iterations": res.iterations,
            "converged": res.converged, "note": "lower bound on the maximin value",
        })
        if len(docs) == 1:
            _figure(cfg, Figure().polygon(e.shape.vertices).points(res.best_points))
    _emit_json(cfg, docs[0] if cfg.shape_file else docs)
    return 0


def cmd_search(cfg: RunConfig) -> int:
    o = cfg.options
    rep = verifier.conjecture_search(o["trials"], o["seed"], o["workers"])
    _emit_json(cfg, rep.as_dict())
    return 0 if not rep.candidates else 1


COMMANDS = {
    "verify": cmd_verify, "construct": cmd_construct, "witness": cmd_witness,
    "crofton": cmd_crofton, "maximin": cmd_maximin, "search": cmd_search,
}


def _default_seed() -> int | None:
    return int(os.environ[SEED_ENV]) if SEED_ENV in os.environ else None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="convexcurves", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def shape_source(sp):
        sp.add_argument("--shape", help="shape JSON file")
        sp.add_argument("--random", help="random corpus, e.g. n=32,count=100,seed=7")
        sp.add_argument("--vertices", type=int, default=shapes.DEFAULT_VERTICES, help="discretization of smooth shapes")

    def outputs(sp):
        sp.add_argument("--output", help="report path (default stdout)")
        sp.add_argument("--figure", help="SVG figure path")

    v = sub.add_parser("verify", help="run inequality checks, CSV report")
    shape_source(v)
    outputs(v)
    v.add_argument("--theorem", default="all", choices=("all",) + SHAPE_CHECKS + CURVE_CHECKS + tuple(ALIASES))
    v.add_argument("--eps", type=float, default=0.1)
    v.add_argument("--arcs", type=int, default=0, help="equal-arc n for BOLLOBAS (default 3..12)")
    v.add_argument("--anchors", type=int, default=16)
    v.add_argument("--curves", type=int, default=1, help="generated curves per shape")
    v.add_argument("--curve-seed", type=int, default=_default_seed() or 0)
    v.add_argument("--rel-tol", type=float, default=verifier.REL_TOL)

    c = sub.add_parser("construct", help="four-point, support and equal-arc constructions")
    shape_source(c)
    outputs(c)
    c.add_argument("--normals", type=int, default=8)
    c.add_argument("--arcs", type=int, default=3)

    w = sub.add_parser("witness", help="closed-form counterexample families")
    outputs(w)
    w.add_argument("--name", required=True, choices=("rectangle", "half-ellipse", "lens", "deltoid"))
    w.add_argument("--L", type=float, default=100.0)
    w.add_argument("--n", type=int, default=4)
    w.add_argument("--k", type=float, default=1e-3)
    w.add_argument("--R", type=float, default=1.0)
    w.add_argument("--apex", type=float, default=40.0, help="lens corner angle in degrees")
    w.add_argument("--vertices", type=int, default=shapes.DEFAULT_VERTICES)
    w.add_argument("--maximin", action="store_true")
    w.add_argument("--restarts", type=int, default=16)
    w.add_argument("--seed", type=int, default=_default_seed() or 0)

    cr = sub.add_parser("crofton", help="Crofton length estimate of a shape boundary")
    shape_source(cr)
    outputs(cr)
    cr.add_argument("--angles", type=int, default=crofton.DEFAULT_ANGLES)
    cr.add_argument("--offsets", type=int, default=crofton.DEFAULT_OFFSETS)
    cr.add_argument("--p-max", type=float, default=0.0)
    cr.add_argument("--tolerance", type=float, default=0.005)

    m = sub.add_parser("maximin", help="heuristic maximin point selection")
    shape_source(m)
    outputs(m)
    m.add_argument("--k", type=int, default=3)
    m.add_argument("--restarts", type=int, default=16)
    m.add_argument("--seed", type=int, default=_default_seed())

    s = sub.add_parser("search", help="counterexample hunt for per - diam")
    outputs(s)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=_default_seed())
    s.add_argument("--workers", type=int, default=1)
    return p


def parse_config(argv) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    cfg = RunConfig(
        ns.pop("command"),
        ns.pop("shape", None),
        None,
        ns.pop("output", None),
        ns.pop("figure", None),
    )
    rnd = ns.pop("random", None)
    if rnd is not None:
        cfg.random = parse_random(rnd)
    if cfg.command == "maximin" and ns.get("seed") is None and cfg.random is not None:
        ns["seed"] = cfg.random["seed"]
    if cfg.command in ("maximin", "search") and ns.get("seed") is None:
        raise ConfigError(f"{cfg.command} needs --seed or ${SEED_ENV}")
    cfg.options = ns
    return cfg


def run(config: RunConfig) -> int:
    return COMMANDS[config.command](config)


def main(argv=None) -> int:
    try:
        cfg = parse_config(sys.argv[1:] if argv is None else argv)
        return run(cfg)
    except (ConfigError, ValueError, FileNotFoundError, KeyError) as exc:
        # GeometryError, NotThin and JSONDecodeError are ValueErrors: bad input, not a failed check
        sys.stderr.write(json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
