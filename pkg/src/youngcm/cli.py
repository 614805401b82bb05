"""Command-line driver.

Global flags may come before or after the subcommand.  Every flag can also be
set through an environment variable ``YOUNGCM_<FLAG>`` (dashes become
underscores, e.g. ``YOUNGCM_PRNG_SEED``); explicit flags win.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import cayley as cy
from . import classes as cl
from . import diagrams as dg
from . import svaction as sv
from .errors import YoungCMError

ENV_PREFIX = "YOUNGCM_"

GLOBAL_DEFAULTS = {
    "n": 2,
    "m": 3,
    "kappa": None,
    "seed": None,
    "caps": f"{cy.DEFAULT_MAX_VERTICES},{cy.DEFAULT_MAX_COORD}",
    "window": "0,6",
    "format": "text",
    "threads": 1,
    "prng_seed": 0,
}


def int_list(text):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def add_globals(parser, suppress):
    default = argparse.SUPPRESS if suppress else None
    g = parser.add_argument_group("global options")
    g.add_argument("--n", type=int, default=default, help="rows of the rectangle (default 2)")
    g.add_argument("--m", type=int, default=default, help="columns of the rectangle (default 3)")
    g.add_argument("--kappa", default=default, help="parameter as a signed fraction, e.g. -3/2 (default -m/n)")
    g.add_argument("--seed", default=default, help="orbit seed, comma-separated")
    g.add_argument("--caps", default=default, help="MAX_VERTICES,MAX_ABS_COORDINATE (default 200000,1000000)")
    g.add_argument("--window", default=default, help="degree window LO,HI (default 0,6)")
    g.add_argument("--format", choices=["json", "dot", "text"], default=default, help="output format")
    g.add_argument("--threads", type=int, default=default, help="worker threads for BFS (default 1)")
    g.add_argument("--prng-seed", dest="prng_seed", type=int, default=default, help="seed for random scan seeds")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="youngcm",
        description="Young diagrams, classes on X x Z and the Sergeev-Veselov orbit of Lambda_0.",
        epilog=f"Environment: every global flag has an override {ENV_PREFIX}<NAME>, e.g. {ENV_PREFIX}N=3.",
    )
    add_globals(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text)
        add_globals(p, suppress=True)
        return p

    p = command("diagram", "borders, corners and flags of a diagram")
    p.add_argument("--lambda", dest="lam", type=int_list, required=True)

    p = command("class", "list the m+n members of [lambda, k]")
    p.add_argument("--lambda", dest="lam", type=int_list, required=True)
    p.add_argument("--k", type=int, default=0)

    p = command("xhat", "x-hat of [lambda, k] with its augmented matrix")
    p.add_argument("--lambda", dest="lam", type=int_list, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--zeros-only", action="store_true", help="show only zero entries of A")

    p = command("recover", "read a diagram off the zeros of A(Lambda) (--seed gives Lambda)")

    p = command("orbit", "BFS orbit of a seed under one of the actions")
    p.add_argument("--functor", choices=["F", "classes", "SV"], default="SV")
    p.add_argument("--base", type=int_list, default=None, help="restrict SV roots to i<=N2, j<=M2")

    p = command("graph", "Cayley graph: whole orbit for F, degree window otherwise")
    p.add_argument("--functor", choices=["F", "classes", "SV"], default="F")

    p = command("verify", "check x-hat is a label-preserving bijection between window graphs")

    p = command("scan", "orbit finiteness scan over parameter cells")
    p.add_argument("--cells", default=None,
                   help="semicolon-separated cells N,M,KAPPA[,N2,M2], e.g. '2,3,+3/2;2,3,-3/2,2,2'")
    p.add_argument("--random", type=int, default=0, help="random seeds per cell drawn from [-20,20]")

    p = command("conjecture", "search an orbit for a translate of Lambda_0")
    return parser


def resolve(args):
    """Fill unset global options from the environment, then from defaults."""
    for name, default in GLOBAL_DEFAULTS.items():
        if getattr(args, name, None) is not None:
            continue
        env = os.environ.get(ENV_PREFIX + name.upper())
        if env is not None:
            value = int(env) if isinstance(default, int) else env
        else:
            value = default
        setattr(args, name, value)
    cfg = dg.RectConfig(args.n, args.m)
    args.max_vertices, args.max_coord = int_list(args.caps)
    args.lo, args.hi = int_list(args.window)
    if args.threads < 1:
        raise ValueError("--threads must be >= 1")
    return cfg


def get_kappa(args, cfg):
    return sv.Kappa.parse(args.kappa) if args.kappa else sv.Kappa.default(cfg)


def emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_diagram(args, cfg):
    lam = cfg.validate(args.lam)
    flags = dg.row_col_predicates(cfg, lam)
    pseudo = dg.pseudo_flags(cfg, lam)
    payload = {
        "lambda": list(lam),
        "dual": list(dg.dual(cfg, lam)),
        "word": dg.to_word(cfg, lam),
        "outer_corners": [a.to_json() for a in dg.corners(cfg, lam, 1)],
        "inner_corners": [a.to_json() for a in dg.corners(cfg, lam, -1)],
        **flags._asdict(),
        **pseudo._asdict(),
    }
    text = "\n".join(f"{k}: {v}" for k, v in payload.items() if "corners" not in k)
    text += "\nouter corners: " + " ".join(a.label() for a in dg.corners(cfg, lam, 1))
    text += "\ninner corners: " + " ".join(a.label() for a in dg.corners(cfg, lam, -1))
    emit(args, payload, text)
    return 0


def cmd_class(args, cfg):
    c = cl.enumerate_class(cfg, args.lam, args.k)
    payload = {"canonical": c.to_json(), "degree": c.degree,
               "members": [dict(s.to_json(), degree=s.degree) for s in c.members]}
    lines = [f"class {c}  degree {c.degree}  ({len(c.members)} members)"]
    for s in c.members:
        lines.append(f"  lambda={','.join(map(str, s.lam))}  k={s.k}  word={dg.to_word(cfg, s.lam)}  degree={s.degree}")
    emit(args, payload, "\n".join(lines))
    return 0


def cmd_xhat(args, cfg):
    lam = cfg.validate(args.lam)
    vec = sv.build_x_hat(cfg, lam, args.k)
    i, j = cl.decompose(cfg, args.k)
    payload = {"lambda": list(lam), "k": args.k, "decomposition": [i, j],
               "vector": vec.to_json(), "matrix": [list(r) for r in sv.matrix(vec)]}
    text = f"x-hat[{','.join(map(str, lam))}, {args.k}] = {vec}   (k = {i}*{cfg.n} + {j}*{cfg.m})\n"
    text += sv.aug_matrix(vec).render(zeros_only=args.zeros_only)
    emit(args, payload, text)
    return 0


def parse_sv_seed(args, cfg):
    if args.seed is None:
        return sv.base_point(cfg)
    values = int_list(args.seed)
    if len(values) != cfg.n + cfg.m:
        raise ValueError(f"SV seed needs {cfg.n + cfg.m} integers, got {len(values)}")
    return sv.SuperVector.from_flat(values, cfg.n)


def cmd_recover(args, cfg):
    vec = parse_sv_seed(args, cfg)
    lam = sv.recover_a(cfg, vec)
    payload = {"vector": vec.to_json(), "lambda": list(lam),
               "zeros": [a.to_json() for a in sorted(sv.zeros(vec))]}
    emit(args, payload, f"a{vec} = ({','.join(map(str, lam))})\n" + sv.aug_matrix(vec).render(zeros_only=True))
    return 0


def functor_and_seed(args, cfg, functor_name):
    if functor_name == "F":
        seed = cfg.validate(int_list(args.seed)) if args.seed else cfg.empty()
        return cy.DiagramFunctor(cfg), seed
    if functor_name == "classes":
        if args.seed:
            values = int_list(args.seed)
            seed = cl.enumerate_class(cfg, values[:-1], values[-1])
        else:
            seed = cl.enumerate_class(cfg, cfg.empty(), 0)
        return cy.ClassFunctor(cfg), seed
    base = tuple(args.base) if getattr(args, "base", None) else None
    return cy.SVFunctor(cfg, get_kappa(args, cfg), base), parse_sv_seed(args, cfg)


def emit_graph(args, graph, extra=None):
    if args.format == "dot":
        sys.stdout.write(cy.to_dot(graph))
    elif args.format == "json":
        print(json.dumps(cy.to_json(graph, extra), indent=2, sort_keys=True))
    else:
        for v in graph.vertices:
            print(v if not isinstance(v, tuple) else "(" + ",".join(map(str, v)) + ")")
        for s, t, a in graph.edges:
            print(f"{s} -> {t} [{a.label()}]")
        if graph.report:
            print(json.dumps(graph.report.to_json(), sort_keys=True))


def cmd_orbit(args, cfg):
    functor, seed = functor_and_seed(args, cfg, args.functor)
    graph, report = cy.orbit_bfs(seed, functor, args.max_vertices, args.max_coord, args.threads)
    if args.format == "text":
        kappa = f" kappa={functor.kappa}" if args.functor == "SV" else ""
        print(f"functor={args.functor}{kappa} seed={seed if not isinstance(seed, tuple) else list(seed)}")
        print(f"status={report.status} vertices={report.vertex_count} edges={report.edge_count} "
              f"max_coordinate={report.max_coordinate}")
    else:
        emit_graph(args, graph)
    return 0


def cmd_graph(args, cfg):
    if args.functor == "F":
        functor, seed = functor_and_seed(args, cfg, "F")
        graph, _ = cy.orbit_bfs(seed, functor, args.max_vertices, args.max_coord, args.threads)
    else:
        graph = cy.window_graph(cfg, args.functor, args.lo, args.hi)
    emit_graph(args, graph)
    return 0


def cmd_verify(args, cfg):
    gc = cy.window_graph(cfg, "classes", args.lo, args.hi)
    gs = cy.window_graph(cfg, "SV", args.lo, args.hi)
    report = cy.check_equivariant_iso(cfg, gc, gs)
    payload = dict(report.to_json(), n=cfg.n, m=cfg.m, window=[args.lo, args.hi])
    text = (f"equivariant bijection on window [{args.lo},{args.hi}] for (n,m)=({cfg.n},{cfg.m}): "
            f"{'PASS' if report.ok else 'FAIL'} ({report.vertex_count} vertices, {report.edge_count} edges)")
    if not report.ok:
        text += f"\n  {report.mismatch}"
    emit(args, payload, text)
    return 0 if report.ok else 1


def parse_cells(text, cfg, kappa):
    if not text:
        return [(cfg.n, cfg.m, kappa.p, kappa.q, kappa.sign)]
    cells = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        kappa = sv.Kappa.parse(parts[2])
        cell = (int(parts[0]), int(parts[1]), kappa.p, kappa.q, kappa.sign)
        cells.append(cell + tuple(int(x) for x in parts[3:5]))
    return cells


def predicted_finite(row):
    cfg = dg.RectConfig(row.n, row.m)
    if row.base and (row.base[0] < row.n or row.base[1] < row.m):
        return True
    return not sv.Kappa.parse(row.kappa).negative_special(cfg)


def cmd_scan(args, cfg):
    cells = parse_cells(args.cells, cfg, get_kappa(args, cfg))
    seeds = None
    if args.seed:
        seeds = [sv.SuperVector.from_flat(int_list(args.seed), cells[0][0])]
    rows = cy.scan_finiteness(cells, args.random, seeds, args.max_vertices, args.max_coord,
                              args.prng_seed, args.threads)
    contradictions = [r for r in rows if predicted_finite(r) and r.status != cy.CLOSED]
    payload = {"prng_seed": args.prng_seed, "rows": [r.to_json() for r in rows],
               "contradictions": len(contradictions)}
    lines = [f"prng_seed={args.prng_seed}"]
    for r in rows:
        base = f" base={r.base[0]}x{r.base[1]}" if r.base else ""
        lines.append(f"({r.n},{r.m}) kappa={r.kappa}{base} seed={r.seed} -> {r.status} ({r.vertex_count} vertices)")
    lines.append(f"finite-orbit predictions contradicted: {len(contradictions)}")
    emit(args, payload, "\n".join(lines))
    return 0 if not contradictions else 1


def cmd_conjecture(args, cfg):
    functor = cy.SVFunctor(cfg, sv.Kappa.default(cfg))
    seed = parse_sv_seed(args, cfg)
    graph, report = cy.orbit_bfs(seed, functor, args.max_vertices, args.max_coord, args.threads)
    found = cy.conjecture_scan(cfg, graph, seed)
    payload = dict(found, status=report.status, vertex_count=report.vertex_count, seed=seed.to_json())
    if found["witness"]:
        w = found["witness"]
        text = f"witness: {sv.SuperVector.from_json(w['vector'])} = Lambda_0 + {w['translation']}"
    else:
        text = "no translate of Lambda_0 within the cap (inconclusive)"
    text = f"orbit of {seed}: {report.status}, {report.vertex_count} vertices\n{text}"
    text += f"\nnear misses (permuted translates): {found['near_miss_count']}"
    emit(args, payload, text)
    return 0


COMMANDS = {
    "diagram": cmd_diagram, "class": cmd_class, "xhat": cmd_xhat, "recover": cmd_recover,
    "orbit": cmd_orbit, "graph": cmd_graph, "verify": cmd_verify, "scan": cmd_scan,
    "conjecture": cmd_conjecture,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve(args)
        return COMMANDS[args.command](args, cfg)
    except (YoungCMError, ValueError) as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
