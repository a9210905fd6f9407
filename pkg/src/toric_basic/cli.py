"""Command-line front end: ``toric-basic {validate,betti,iso,realize,koszul}``.

Exit codes: 0 success, 1 mathematical failure (with witness), 2 input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .equivalence import (GHOST_NOTE, invariant_fingerprint, marked_fan_isomorphic,
                          verify_isomorphism)
from .exactfield import format_scalar
from .facering import (LsopError, SocleDegreeError, basic_betti, cup_product_table,
                       format_monomial, graded_quotient, koszul_report,
                       linear_ideal, lsop_witness, ring_presentation)
from .fan import MarkedFan, validate_marked_fan
from .fanfile import FanFileError, load
from .realize import RealizationError, real_quotient_data, realize_moment_angle
from .simplicial import h_vector

SCHEMA = "report/1"
OK, MATH_FAIL, INPUT_ERROR = 0, 1, 2


@dataclass
class Outcome:
    code: int
    data: dict
    lines: list[str] = field(default_factory=list)


def _input_error(path: str, e: Exception) -> Outcome:
    return Outcome(INPUT_ERROR, {"file": path, "error": str(e)}, [f"{path}: input error: {e}"])


def _load_valid(path: str, seed: int) -> tuple[MarkedFan | None, Outcome | None]:
    """Parse and validate; on failure return the outcome to report instead."""
    try:
        F = load(path)
    except FanFileError as e:
        return None, _input_error(path, e)
    rep = validate_marked_fan(F, seed=seed)
    if not rep.ok:
        data = {"file": path, "valid": False, "validation": rep.to_dict()}
        return None, Outcome(MATH_FAIL, data, [f"{path}: invalid marked fan, failed {', '.join(rep.failed())}"])
    return F, None


def _validate_one(path: str, opts: dict) -> Outcome:
    try:
        F = load(path)
    except FanFileError as e:
        return _input_error(path, e)
    rep = validate_marked_fan(F, mode=opts["mode"], seed=opts["seed"])
    lines = [f"{path}: {'valid' if rep.ok else 'INVALID'} ({opts['mode']} mode, seed {opts['seed']})"]
    width = max(len(k) for k in rep.checks)
    for name, c in rep.checks.items():
        d = c.to_dict()
        extra = "".join(f"  {k}={json.dumps(d[k])}" for k in ("witness", "note") if k in d)
        lines.append(f"  {name:<{width}}  {d['status']}{extra}")
    data = {"file": path, "valid": rep.ok, "mode": opts["mode"], "seed": opts["seed"],
            "checks": rep.to_dict()}
    return Outcome(OK if rep.ok else MATH_FAIL, data, lines)


def _betti_one(path: str, opts: dict) -> Outcome:
    F, bad = _load_valid(path, opts["seed"])
    if bad:
        return bad
    try:
        b = basic_betti(F, validate=False)
        Q = graded_quotient(F)
    except LsopError as e:
        w = [v + 1 for v in e.facet] if e.facet else None
        return Outcome(MATH_FAIL, {"file": path, "error": str(e), "facet": w},
                       [f"{path}: lsop failure: {e}"])
    except SocleDegreeError as e:
        return Outcome(MATH_FAIL, {"file": path, "error": str(e)}, [f"{path}: {e}"])
    data = {"file": path, "betti": list(b),
            "degrees": [2 * k for k in range(len(b))]}
    lines = [f"{path}: " + " ".join(f"b^{2 * k}={x}" for k, x in enumerate(b))]
    if opts.get("debug_hvector"):
        h = h_vector(F.K, F.n)
        data["h_vector"] = list(h)
        lines.append("  h-vector: " + " ".join(map(str, h)))
    if opts.get("ring"):
        pres = ring_presentation(F, Q)
        data["ring"] = pres
        lines.append(f"  generators: {' '.join(pres['generators'])} (all of degree 2)")
        lines.append(f"  monomial relations: {', '.join(pres['monomial_relations']) or '(none)'}")
        lines.append(f"  linear relations:   {', '.join(pres['linear_relations']) or '(none)'}")
        lines.append(f"  groebner basis:     {', '.join(pres['groebner_basis']) or '(none)'}")
        for deg, monos in pres["standard_monomials"].items():
            lines.append(f"  basis H^{deg}: {', '.join(monos)}")
    if opts.get("cup"):
        names = [f"v{i + 1}" for i in range(F.m)]
        fm = lambda e: format_monomial(e, names)
        table = []
        for (a, c), prod in cup_product_table(Q).items():
            terms = sorted(prod.items(), key=lambda t: fm(t[0]))
            table.append({"left": fm(a), "right": fm(c),
                          "product": {fm(e): format_scalar(x) for e, x in terms}})
        data["cup"] = table
        lines.append("  cup products:")
        for row in table:
            rhs = " + ".join(_term(x, e) for e, x in row["product"].items()) or "0"
            lines.append(f"    {row['left']} . {row['right']} = {rhs}")
    return Outcome(OK, data, lines)


def _term(coeff: str, mono: str) -> str:
    if mono == "1":
        return coeff
    return mono if coeff == "1" else f"({coeff})*{mono}"


def _iso(pa: str, pb: str, opts: dict) -> Outcome:
    F1, bad = _load_valid(pa, opts["seed"])
    if bad:
        return bad
    F2, bad = _load_valid(pb, opts["seed"])
    if bad:
        return bad
    try:
        iso = marked_fan_isomorphic(F1, F2)
    except ValueError as e:
        return _input_error(f"{pa} vs {pb}", e)
    data = {"files": [pa, pb], "isomorphic": iso is not None, "note": GHOST_NOTE,
            "fingerprints": [invariant_fingerprint(F1).to_dict(), invariant_fingerprint(F2).to_dict()]}
    lines = [f"{pa} vs {pb}: {'isomorphic' if iso else 'not isomorphic'}"]
    if iso is not None:
        w = iso.to_dict(F1.m)
        data["witness"] = w
        data["verified"] = verify_isomorphism(F1, F2, iso)
        data["implies"] = ["p-equivalent", "canonical foliations transversely equivalent"]
        sigma = " ".join(f"{i + 1}->{j}" for i, j in enumerate(w["sigma"]) if j is not None)
        lines += [f"  sigma: {sigma}", f"  phi:   {w['phi']}",
                  "  p-equivalent", "  canonical foliations transversely equivalent"]
    lines.append(f"  ({GHOST_NOTE})")
    return Outcome(OK, data, lines)


def _realize_one(path: str, opts: dict) -> Outcome:
    F, bad = _load_valid(path, opts["seed"])
    if bad:
        return bad
    try:
        R = realize_moment_angle(F, seed=opts["seed"], check_input=False)
    except RealizationError as e:
        return Outcome(MATH_FAIL, {"file": path, "stage": e.stage, "witness": str(e.witness)},
                       [f"{path}: realization failed at {e.stage}: {e.witness}"])
    qd = real_quotient_data(R.padded)
    data = {"file": path, "realization": R.to_dict(), "checks": R.report.to_dict(),
            "round_trip": R.round_trip is not None, "quotient": qd.to_dict()}
    lines = [f"{path}: m={R.m} n={F.n} padding={len(R.padding)} kernel dim={len(R.kernel)}",
             f"  pairing: {[[a + 1, b + 1] for a, b in R.pairing]}",
             "  C2 checks: " + ", ".join(f"{k} {c.to_dict()['status']}" for k, c in R.report.checks.items()),
             "  round trip: induced fan isomorphic to input",
             f"  {qd.note}"]
    out = opts.get("output")
    if out:
        target = Path(out)
        if opts["many"]:
            target.mkdir(parents=True, exist_ok=True)
            target = target / (Path(path).stem + ".realization.json")
        target.write_text(json.dumps(R.to_dict(), indent=2) + "\n")
        lines.append(f"  wrote {target}")
    return Outcome(OK, data, lines)


def _koszul_one(path: str, opts: dict) -> Outcome:
    F, bad = _load_valid(path, opts["seed"])
    if bad:
        return bad
    w = lsop_witness(F)
    if w is not None:
        return Outcome(MATH_FAIL, {"file": path, "facet": [v + 1 for v in w]},
                       [f"{path}: lsop failure on facet {[v + 1 for v in w]}"])
    rep = koszul_report(F.K, linear_ideal(F), opts.get("max_degree"))
    bad_entries = rep.failures()
    data = {"file": path, "n": rep.n, "max_degree": rep.max_degree,
            "table": [rep.row(i) for i in range(rep.n + 1)],
            "consistency_failures": [list(t) for t in bad_entries]}
    head = "  i\\k " + " ".join(f"{k:>4}" for k in range(rep.max_degree + 1))
    lines = [f"{path}: Koszul homology dims, n={rep.n}", head]
    for i in range(rep.n + 1):
        lines.append(f"  {i:>3} " + " ".join(f"{x:>4}" for x in rep.row(i)))
    for i, k, v in bad_entries:
        lines.append(f"  CONSISTENCY FAILURE: H_{i} in degree {k} has dimension {v}")
    if not bad_entries:
        lines.append("  higher homology vanishes")
    return Outcome(MATH_FAIL if bad_entries else OK, data, lines)


WORKERS = {"validate": _validate_one, "betti": _betti_one,
           "realize": _realize_one, "koszul": _koszul_one}


def _run(job: tuple[str, str, dict]) -> Outcome:
    cmd, path, opts = job
    return WORKERS[cmd](path, opts)


def _default_seed() -> int:
    env = os.environ.get("TORIC_BASIC_SEED")
    try:
        return int(env) if env else 0
    except ValueError:
        return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a report/1 JSON document")
    common.add_argument("--seed", type=int, default=_default_seed(),
                        help="random seed (default: $TORIC_BASIC_SEED or 0)")
    common.add_argument("--jobs", type=int, default=1, help="files processed in parallel")

    p = argparse.ArgumentParser(prog="toric-basic",
                                description="Marked fans, basic cohomology and moment-angle data.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="validate marked fan files")
    v.add_argument("files", nargs="+")
    v.add_argument("--mode", choices=["fast", "exact"], default="fast")

    b = sub.add_parser("betti", parents=[common], help="basic Betti numbers")
    b.add_argument("files", nargs="+")
    b.add_argument("--ring", action="store_true", help="print the ring presentation")
    b.add_argument("--cup", action="store_true", help="print the cup product table")
    b.add_argument("--debug-hvector", action="store_true", help=argparse.SUPPRESS)

    i = sub.add_parser("iso", parents=[common], help="decide marked-fan isomorphism")
    i.add_argument("file_a")
    i.add_argument("file_b")

    r = sub.add_parser("realize", parents=[common], help="moment-angle realization")
    r.add_argument("files", nargs="+")
    r.add_argument("-o", "--output", help="realization JSON file (a directory for several inputs)")

    k = sub.add_parser("koszul", parents=[common], help="Koszul homology table")
    k.add_argument("files", nargs="+")
    k.add_argument("--max-degree", type=int, default=None)
    return p


def _emit(cmd: str, outcomes: list[Outcome], as_json: bool) -> None:
    if as_json:
        doc = {"schema": SCHEMA, "command": cmd, "results": [o.data for o in outcomes]}
        print(json.dumps(doc, indent=2))
    else:
        for o in outcomes:
            print("\n".join(o.lines))


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    opts = {"seed": args.seed}
    if args.command == "iso":
        outcomes = [_iso(args.file_a, args.file_b, opts)]
    else:
        opts.update(mode=getattr(args, "mode", "fast"), ring=getattr(args, "ring", False),
                    cup=getattr(args, "cup", False),
                    debug_hvector=getattr(args, "debug_hvector", False),
                    max_degree=getattr(args, "max_degree", None),
                    output=getattr(args, "output", None), many=len(args.files) > 1)
        jobs = [(args.command, f, opts) for f in args.files]
        if args.jobs > 1 and len(jobs) > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as ex:
                outcomes = list(ex.map(_run, jobs))
        else:
            outcomes = [_run(j) for j in jobs]
    _emit(args.command, outcomes, args.json)
    return max(o.code for o in outcomes)


if __name__ == "__main__":
    sys.exit(main())
