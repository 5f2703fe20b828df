"""ramac: ramification data and normal basis checks for Artin-Schreier towers.

Exit status is 0 when every check passes, 1 when a mathematical check fails,
and 2 for bad input (config, schema, parse or construction errors).
"""

from __future__ import annotations

import argparse
import json
import sys
from importlib import resources
from pathlib import Path

import jsonschema

from .catalog import CATALOG
from .errors import CheckFailure, RamacError
from .expr import parse_element
from .nbasis import (
    criterion_residue,
    is_normal_generator,
    tame_counterexample,
    unramified_counterexample,
    verify_criterion,
    verify_euler_traces,
)
from .ramify import analyze, proposition_check, trace_ideal_check
from .tower import Tower, TowerSpec, format_element, trace, valuation_L

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2


class ConfigError(Exception):
    pass


def load_schema(name):
    return json.loads(resources.files("ramac").joinpath("schemas", f"{name}.json").read_text())


def validate(instance, name):
    try:
        jsonschema.validate(instance, load_schema(name))
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise ConfigError(f"{name}: {exc.message} at {where}") from None


def load_spec(path):
    """Read a tower spec; a missing file whose stem names a catalog tower falls back to the catalog."""
    p = Path(path)
    if p.exists():
        try:
            data = json.loads(p.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read {path}: {exc}") from None
    elif p.stem in CATALOG:
        data = dict(CATALOG[p.stem])
    else:
        raise ConfigError(f"no such spec file: {path}")
    validate(data, "tower_spec")
    data.setdefault("f", 1)
    data.setdefault("name", p.stem)
    return data


def build_parser():
    ap = argparse.ArgumentParser(prog="ramac", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, spec=True):
        if spec:
            sp.add_argument("--spec", required=True, metavar="PATH", help="tower spec JSON")
        sp.add_argument("--json", metavar="PATH", help="also write the JSON report here")
        sp.add_argument("--format", choices=("table", "json"), default="table")

    common(sub.add_parser("ramify", help="breaks, different, Herbrand function and the break identity"))
    common(sub.add_parser("euler", help="traces of the Euler dual basis"))
    sp = sub.add_parser("check", help="valuation, class and generator verdict for one element")
    sp.add_argument("expr")
    common(sp)
    sp = sub.add_parser("verify", help="sample the criterion class and build sharpness witnesses")
    sp.add_argument("--trials", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    common(sp)
    sp = sub.add_parser("trace-ideal", help="trace of fractional ideals over a window of k")
    sp.add_argument("--k-min", type=int, default=-2)
    sp.add_argument("--k-max", type=int, default=3)
    common(sp)
    sp = sub.add_parser("counterexample", help="valuation-i non-generators in tame or unramified extensions")
    sp.add_argument("kind", choices=("tame", "unramified"))
    sp.add_argument("--q", type=int, help="base field size (default 4 tame, 2 unramified)")
    sp.add_argument("--e", type=int, default=3, help="ramification index (tame)")
    sp.add_argument("--f", type=int, default=2, help="residue degree (unramified)")
    sp.add_argument("--i-min", type=int, default=-3)
    sp.add_argument("--i-max", type=int, default=5)
    common(sp, spec=False)
    return ap


def make_config(args):
    cfg = {"command": args.command, "format": args.format, "json": args.json}
    if getattr(args, "spec", None) is not None:
        cfg["tower"] = load_spec(args.spec)
    for key in ("expr", "kind", "trials", "seed", "k_min", "k_max", "e", "f", "i_min", "i_max"):
        if hasattr(args, key):
            cfg[key] = getattr(args, key)
    if args.command == "counterexample":
        cfg["q"] = args.q if args.q is not None else (4 if args.kind == "tame" else 2)
    validate(cfg, "run_config")
    if cfg.get("k_min", 0) > cfg.get("k_max", 0) or cfg.get("i_min", 0) > cfg.get("i_max", 0):
        raise ConfigError("empty window")
    return cfg


def _tower(cfg):
    spec = TowerSpec.from_dict(cfg["tower"], cfg["tower"].get("name", ""))
    return Tower.from_spec(spec)


def _spec_out(tower):
    return tower.spec.to_dict()


# -- subcommands: each returns (payload, table lines)


def cmd_ramify(cfg):
    tower = _tower(cfg)
    rd = analyze(tower)
    prop = proposition_check(rd)
    herbrand = [
        {"lower": b, "order": g, "upper": rd.to_dict()["upper_breaks"][i]}
        for i, (b, g) in enumerate(zip(rd.lower_breaks, rd.orders))
    ]
    payload = {
        "command": "ramify",
        "tower": _spec_out(tower),
        "ramification": rd.to_dict(),
        "herbrand": herbrand,
        "proposition": prop,
        "ok": True,
    }
    lines = [
        f"tower {tower.name}: p={tower.p} f={tower.field.f} [L:K]={tower.degree}",
        f"lower breaks b = {rd.lower_breaks}",
        f"orders |G_b| = {rd.orders}",
        f"upper breaks u = {[h['upper'] for h in herbrand]}",
        f"different d = {rd.d} (derivative {rd.d_derivative}, breaks {rd.d_breaks}, filtration {rd.d_filtration})",
        f"criterion residue r* = {rd.criterion_residue}",
        "",
        f"{'b_i':>6} {'|G_b_i|':>8} {'phi(b_i)':>9}",
    ]
    lines += [f"{h['lower']:>6} {h['order']:>8} {str(h['upper']):>9}" for h in herbrand]
    lines += [
        "",
        f"d+1 = {prop['d_plus_1']} = g_1 - b_m + p^n u_m: {_yn(prop['identity'])}",
        f"d+1 = p^n u_m - b_m mod p^n: {_yn(prop['congruence'])}",
        f"upper breaks integral: {_yn(prop['hasse_arf'])}",
        f"r* = b_m mod p^n: {_yn(prop['residue_matches_b_m'])}",
    ]
    return payload, lines


def cmd_euler(cfg):
    tower = _tower(cfg)
    res = verify_euler_traces(tower)
    d = analyze(tower).d
    payload = {"command": "euler", "tower": _spec_out(tower), "d": d, **res, "ok": True}
    lines = [
        f"tower {tower.name}: [L:K]={tower.degree} d={d}",
        f"dual basis integral: {_yn(res['integral'])}",
        "",
        f"{'i':>4} {'v_L':>6}  Tr(pi^i/p'(pi))",
    ]
    lines += [f"{r['i']:>4} {r['v_L']:>6}  {r['trace']}" for r in res["traces"]]
    return payload, lines


def cmd_check(cfg):
    tower = _tower(cfg)
    rho = parse_element(cfg["expr"], tower)
    rho = tower.element(rho)
    rstar = criterion_residue(tower)
    pn = tower.degree
    if rho:
        v = valuation_L(rho)
        cls = v % pn
    else:
        v = cls = None
    gen = is_normal_generator(tower, rho)
    payload = {
        "command": "check",
        "tower": _spec_out(tower),
        "element": format_element(rho),
        "v_L": v,
        "class": cls,
        "criterion_residue": rstar,
        "in_criterion_class": cls == rstar,
        "trace": str(trace(rho)),
        "generator": gen,
        "ok": gen or cls != rstar,
    }
    if v is None:
        line = f"v_L=inf, zero element, generator: {_yn(gen)}"
    elif cls == rstar:
        line = f"v_L={v}, class {cls} = r*, generator: {_yn(gen)}"
    else:
        line = f"v_L={v}, class {cls} != r* = {rstar}, generator: {_yn(gen)}"
    return payload, [line]


def cmd_verify(cfg):
    tower = _tower(cfg)
    report = verify_criterion(tower, cfg["trials"], cfg["seed"])
    rep = report.to_dict()
    payload = {"command": "verify", "tower": _spec_out(tower), "report": rep, "ok": report.ok}
    lines = [
        f"tower {tower.name}: [L:K]={tower.degree} d={report.d} r*={report.criterion_residue}",
        f"seed {report.seed}: {report.generators_found}/{report.trials} samples in class r* generate a normal basis",
        f"sampled valuations: {rep['valuations']}",
        f"sharpness witnesses ({report.witness_family}):",
        f"{'class':>6} {'v_L':>6} {'trace':>6} {'generator':>10}",
    ]
    for c, w in rep["witnesses"].items():
        lines.append(f"{c:>6} {w['v_L']:>6} {w['trace']:>6} {_yn(w['generator']):>10}")
    lines.append(f"result: {'PASS' if report.ok else 'FAIL'}")
    return payload, lines


def cmd_trace_ideal(cfg):
    tower = _tower(cfg)
    rd = analyze(tower)
    window = [trace_ideal_check(tower, k, rd) for k in range(cfg["k_min"], cfg["k_max"] + 1)]
    payload = {"command": "trace-ideal", "tower": _spec_out(tower), "d": rd.d, "window": window, "ok": True}
    lines = [
        f"tower {tower.name}: [L:K]={tower.degree} d={rd.d}",
        "",
        f"{'k':>4} {'k p^n - d':>10} {'min v_K(Tr)':>12} {'witness v_L':>12} {'witness v_K':>12}",
    ]
    lines += [
        f"{w['k']:>4} {w['bound']:>10} {w['min_v_K']:>12} {w['witness_v_L']:>12} {w['witness_v_K']:>12}"
        for w in window
    ]
    return payload, lines


def cmd_counterexample(cfg):
    kind = cfg["kind"]
    demos = []
    for i in range(cfg["i_min"], cfg["i_max"] + 1):
        if kind == "tame":
            demos.append(tame_counterexample(cfg["q"], cfg["e"], i))
        else:
            demos.append(unramified_counterexample(cfg["q"], cfg["f"], i))
    params = demos[0].params
    payload = {
        "command": "counterexample",
        "kind": kind,
        "params": params,
        "demonstrations": [d.to_dict() for d in demos],
        "ok": not any(d.is_generator for d in demos),
    }
    lines = [
        f"{kind} extension {', '.join(f'{k}={v}' for k, v in params.items())}; degree {demos[0].degree}",
        "",
        f"{'i':>4} {'v':>4} {'rank':>5} {'generator':>10}  element",
    ]
    lines += [f"{d.i:>4} {d.valuation:>4} {d.span_dimension:>5} {_yn(d.is_generator):>10}  {d.element}" for d in demos]
    return payload, lines


COMMANDS = {
    "ramify": cmd_ramify,
    "euler": cmd_euler,
    "check": cmd_check,
    "verify": cmd_verify,
    "trace-ideal": cmd_trace_ideal,
    "counterexample": cmd_counterexample,
}


def _yn(flag):
    return "yes" if flag else "no"


def dumps(payload):
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def run(cfg, out=None):
    """Execute a validated config; returns the exit status."""
    out = out or sys.stdout
    payload, lines = COMMANDS[cfg["command"]](cfg)
    validate(payload, "output")
    text = dumps(payload)
    if cfg.get("json"):
        Path(cfg["json"]).write_text(text)
    if cfg["format"] == "json":
        out.write(text)
    else:
        out.write("\n".join(lines) + "\n")
    return EXIT_OK if payload["ok"] else EXIT_CHECK


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
        return run(cfg)
    except (CheckFailure, AssertionError) as exc:
        print(f"ramac: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except (ConfigError, RamacError, ValueError, OSError) as exc:
        print(f"ramac: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
