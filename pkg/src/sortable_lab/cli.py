"""``sortable-lab``: run computations and theorem suites from the shell.

Exit codes: 2 for usage or configuration errors, 1 when any check fails,
0 otherwise.  JSON reports carry ``timing_ms: null`` so that repeated runs
are byte-identical; CSV and text output include measured timings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Sequence

from . import __version__
from .cartan import CartanError, GroupConfig, coxeter_word
from .cones import fiber_verify
from .configs import default_length, resolve
from .group import DEFAULT_CAP, BallTooLarge, CoxeterGroup, Element
from .scenarios import SCENARIOS, run_scenario
from .sortable import (
    TooManyTerms,
    aligned_triples,
    alignment_inversion_condition,
    alignment_word_condition,
    enumerate_L,
    factorization_polynomial,
    is_omega_sortable,
    max_sortable_below,
    omega_sorting_word,
    pi_down_omega,
    support_J,
    verify_antimatroid,
)
from .theorems import CheckResult, Harness, resolve_suite

COMMANDS = (
    "validate", "ball", "sorting-word", "sortables", "pi-down", "antimatroid",
    "fibers", "alignment", "scenario", "theorems", "factorizations",
)


class UsageError(Exception):
    pass


def _csv_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sortable-lab", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", help="config file or bundled name (a2, a3, b3, ...)")
    ap.add_argument("--length-bound", type=int, dest="length_bound")
    ap.add_argument("--cap", type=int, default=DEFAULT_CAP)
    ap.add_argument("--word", help="comma-separated generator names")
    ap.add_argument("--suite", default="all")
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--format", choices=("json", "csv", "text"), default="json")
    ap.add_argument("--out")
    ap.add_argument("--name", choices=SCENARIOS)
    ap.add_argument("--d", type=int, default=1)
    ap.add_argument("--xyz", type=_csv_ints)
    return ap


# --------------------------------------------------------------------------
# helpers


def _jsonable(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (frozenset, set)):
        return sorted(_jsonable(v) for v in x)
    return x


def _word(cfg: GroupConfig, text: str | None) -> tuple[int, ...]:
    if text is None:
        raise UsageError("this command needs --word")
    letters = [s.strip() for s in text.split(",") if s.strip()]
    return cfg.data.word(letters)


def _element(W: CoxeterGroup, cfg: GroupConfig, text: str | None) -> Element:
    word = _word(cfg, text)
    w = W.from_word(word)
    if w.length != len(word):
        raise UsageError(f"word {text!r} is not reduced")
    return w


def _timed(name: str, fn) -> CheckResult:
    t0 = time.perf_counter()
    ok, witness, values = fn()
    return CheckResult(name, ok, None if ok else witness, (time.perf_counter() - t0) * 1000, values or {})


# --------------------------------------------------------------------------
# commands returning (checks, values)


def cmd_validate(cfg, W, args, L):
    data = cfg.data
    ori = cfg.orientation
    values = {
        "generators": list(data.generators),
        "cartan": [list(r) for r in data.matrix],
        "delta": list(data.delta),
        "bond_orders": {
            f"{data.generators[i]},{data.generators[j]}": _bond(data.m(i, j))
            for i in range(data.rank) for j in range(i + 1, data.rank)
        },
        "arrows": [list(a) for a in ori.pairs()],
        "acyclic": ori.is_acyclic(),
    }
    if ori.is_acyclic():
        values["coxeter_word"] = data.names(coxeter_word(ori))
    check = CheckResult("config-valid", True)
    return [check], values


def _bond(m: float):
    return "inf" if m == float("inf") else int(m)


def cmd_ball(cfg, W, args, L):
    ball = W.ball(L, args.cap)
    by_length: dict[int, int] = {}
    for w in ball:
        by_length[w.length] = by_length.get(w.length, 0) + 1
    values = {
        "size": len(ball),
        "by_length": by_length,
        "elements": [W.word_names(w) for w in ball],
    }
    return [], values


def cmd_sorting_word(cfg, W, args, L):
    w = _element(W, cfg, args.word)
    sw = omega_sorting_word(W, w, cfg.orientation)
    values = {
        "word": cfg.data.names(sw.word),
        "layers": [cfg.data.subset_names(J) for J in sw.layers],
        "J": cfg.data.subset_names(support_J(W, w, cfg.orientation)),
        "sortable": sw.nested,
    }
    return [], values


def cmd_sortables(cfg, W, args, L):
    ori = cfg.orientation
    ball = W.ball(L, args.cap)
    direct = [w for w in ball if is_omega_sortable(W, w, ori)]

    def crosscheck():
        brute = sum(max_sortable_below(W, w, ori) == w for w in ball)
        return brute == len(direct), {"direct": len(direct), "brute_force": brute}, None

    values = {
        "ball_size": len(ball),
        "count": len(direct),
        "sortables": [W.word_names(w) for w in direct],
    }
    return [_timed("sortable-count-crosscheck", crosscheck)], values


def cmd_pi_down(cfg, W, args, L):
    w = _element(W, cfg, args.word)
    ori = cfg.orientation
    p = pi_down_omega(W, w, ori)

    def crosscheck():
        brute = max_sortable_below(W, w, ori)
        return brute == p, {"brute_force": W.word_names(brute)}, None

    values = {"w": W.word_names(w), "pi_down": W.word_names(p), "sortable": p == w}
    return [_timed("pi-down-equals-max-sortable", crosscheck)], values


def cmd_antimatroid(cfg, W, args, L):
    w = _element(W, cfg, args.word)
    fam = enumerate_L(W, w, cfg.orientation)
    rep = verify_antimatroid(fam, range(W.rank))
    names = cfg.data.subset_names
    checks = [
        CheckResult("axioms-1-2", rep.ok, None if rep.ok else rep.witness),
        CheckResult("chains-and-closure", rep.graded_chains and rep.closure,
                    None if rep.graded_chains and rep.closure else rep.witness),
        CheckResult("unique-maximum", rep.maximum is not None,
                    None if rep.maximum is not None else rep.witness),
    ]
    values = {
        "family": [names(X) for X in rep.family],
        "maximum": None if rep.maximum is None else names(rep.maximum),
        "J": names(support_J(W, w, cfg.orientation)),
    }
    return checks, values


def cmd_fibers(cfg, W, args, L):
    rep = fiber_verify(W, cfg.orientation, L, args.cap)
    values = {"ball_size": rep.ball_size, "sortable_count": rep.sortable_count,
              "pairs_checked": rep.pairs_checked, "violations": len(rep.violations)}
    witness = rep.violations[0] if rep.violations else None
    check = CheckResult("fiber-partition", rep.ok, witness)
    return [check], values


def cmd_alignment(cfg, W, args, L):
    w = _element(W, cfg, args.word)
    word = _word(cfg, args.word)
    ori = cfg.orientation
    universe = {x for u in W.ball(L, args.cap) for x in W.inversions(u)}
    wc = alignment_word_condition(W, word, ori)
    ic = alignment_inversion_condition(W, w, ori, triples=aligned_triples(ori, universe | W.inversions(w)))
    values = {
        "word_condition": {"holds": wc.holds, "witness": wc.witness},
        "inversion_condition": {"holds": ic.holds, "witness": ic.witness},
        "universe_size": len(universe),
        "sortable": is_omega_sortable(W, w, ori),
    }
    return [], values


def cmd_factorizations(cfg, W, args, L):
    w = _element(W, cfg, args.word)
    ori = cfg.orientation
    try:
        poly = factorization_polynomial(W, w, ori)
    except TooManyTerms as exc:
        raise UsageError(f"too many factorizations (over {exc.args[0]})") from None
    comp = tuple(len(J) for J in omega_sorting_word(W, w, ori).layers)
    ok = w.length == 0 or (poly.dominant() == comp and poly.terms[comp] == 1)
    values = {
        "terms": {",".join(map(str, k)) or "": v for k, v in sorted(poly.terms.items(), reverse=True)},
        "monomials": poly.monomials(),
        "sorting_composition": list(comp),
    }
    check = CheckResult("dominant-is-sorting-word", ok, None if ok else {"dominant": list(poly.dominant())})
    return [check], values


def cmd_theorems(cfg, W, args, L):
    try:
        names = resolve_suite(args.suite)
    except KeyError as exc:
        raise UsageError(str(exc.args[0])) from None
    h = Harness(cfg, L, args.cap, args.seed, args.trials)
    results = h.run(names)
    values = {"ball_size": len(h.ball), "orientations": len(h.orientations)}
    return results, values


HANDLERS = {
    "validate": cmd_validate,
    "ball": cmd_ball,
    "sorting-word": cmd_sorting_word,
    "sortables": cmd_sortables,
    "pi-down": cmd_pi_down,
    "antimatroid": cmd_antimatroid,
    "fibers": cmd_fibers,
    "alignment": cmd_alignment,
    "factorizations": cmd_factorizations,
    "theorems": cmd_theorems,
}


# --------------------------------------------------------------------------
# output


def _render(report: dict, rows: list[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(report), indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "pass", "witness", "timing_ms"])
        for r in rows:
            witness = "" if r["witness"] is None else json.dumps(_jsonable(r["witness"]))
            timing = "" if r.get("timing_ms") is None else f"{r['timing_ms']:.3f}"
            writer.writerow([r["name"], str(r["pass"]).lower(), witness, timing])
        return buf.getvalue()
    lines = []
    for r in rows:
        line = f"{'PASS' if r['pass'] else 'FAIL'}  {r['name']}"
        if r.get("timing_ms") is not None:
            line += f"  ({r['timing_ms']:.0f} ms)"
        if r["witness"] is not None:
            line += f"  witness={json.dumps(_jsonable(r['witness']))}"
        lines.append(line)
    for key, val in report.get("values", {}).items():
        lines.append(f"{key}: {json.dumps(_jsonable(val))}")
    verdict = report.get("verdict")
    if verdict is not None:
        lines.append(f"verdict: {'pass' if verdict else 'fail'}")
    return "\n".join(lines) + "\n"


def _execute(args) -> tuple[dict, list[dict]]:
    if args.command == "scenario":
        if args.name is None:
            raise UsageError("scenario needs --name")
        xyz = args.xyz
        if xyz is not None and len(xyz) != 3:
            raise UsageError("--xyz takes three integers")
        body = run_scenario(args.name, args.d, xyz)
        report = {
            "tool_version": __version__,
            "scenario": body["scenario"],
            "parameters": {"d": args.d, "xyz": list(xyz) if xyz else None},
            "verdicts": body["verdicts"],
            "values": body["values"],
            "seed": args.seed,
            "verdict": all(v["pass"] for v in body["verdicts"]),
        }
        return report, body["verdicts"]

    if args.config is None:
        raise UsageError(f"{args.command} needs --config")
    cfg = resolve(args.config, args.d)
    W = CoxeterGroup(cfg.data)
    L = args.length_bound if args.length_bound is not None else default_length(cfg)
    if L < 0:
        raise UsageError("--length-bound must be nonnegative")
    checks, values = HANDLERS[args.command](cfg, W, args, L)
    rows = [
        {"name": c.name, "pass": c.passed, "witness": c.witness, "timing_ms": c.timing_ms}
        for c in checks
    ]
    report = {
        "tool_version": __version__,
        "config": cfg.name,
        "config_digest": cfg.digest,
        "command": args.command,
        "parameters": {
            "length_bound": L, "cap": args.cap, "seed": args.seed, "trials": args.trials,
            "suite": args.suite if args.command == "theorems" else None,
            "word": args.word,
        },
        "checks": [c.to_json(timing=False) for c in checks],
        "values": values,
        "verdict": all(c.passed for c in checks),
    }
    return report, rows


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        report, rows = _execute(args)
    except (UsageError, CartanError, BallTooLarge, ValueError) as exc:
        print(f"sortable-lab: error: {exc}", file=sys.stderr)
        return 2
    text = _render(report, rows, args.format)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if report["verdict"] else 1


if __name__ == "__main__":
    sys.exit(main())
