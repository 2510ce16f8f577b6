"""Command line front end: ``gcilab <command> ...``.

Exit status: 0 when the verdict matches the expected outcome, 2 on a
mismatch, 1 on an operational error (unknown group, missing extended flag,
bad input).
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time

from . import catalog
from .autgroup import (Automorphism, fusion_class_count, from_generator_images, identity_automorphism,
                       inner, signed_fix_data)
from .gcgraph import SubsetError, census
from .gci import (gci_equivalence_witness, involution_reps, verify_local_mgci, _subset_orbits,
                  FULL_CENSUS_LIMIT)
from .jobs import LOCAL_2_GCI, NOT_LOCAL_1_GCI, REGISTRY, JobNotApplicable, run_job
from .permgroup import CapExceeded, NotInGroup, conjugacy_classes

log = logging.getLogger("gcilab")

OK, OPERATIONAL, MISMATCH = 0, 1, 2


class UsageError(ValueError):
    pass


def _entry(args):
    return catalog.load(args.group, extended=args.extended)


def _emit(args, doc: dict, text: str):
    out = json.dumps(doc, indent=2, sort_keys=False) + "\n" if args.format == "json" else text.rstrip() + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _select_reps(reps, selector: str):
    if selector == "all":
        return reps
    if selector in ("inner", "outer"):
        return [r for r in reps if r.kind == selector]
    try:
        k = int(selector)
    except ValueError:
        raise UsageError(f"--aut must be inner, outer, all or a class index, not {selector!r}") from None
    if not 0 <= k < len(reps):
        raise UsageError(f"class index {k} out of range 0..{len(reps) - 1}")
    return [reps[k]]


# -- commands -----------------------------------------------------------------


def cmd_info(args) -> int:
    entry = _entry(args)
    g, aut = entry.group, entry.aut
    table = conjugacy_classes(g)
    orders = sorted({c.element_order for c in table.classes})
    rows = [{"n": n, "C": table.count(n), "F": fusion_class_count(aut, n)} for n in orders]
    reps = []
    for h, t, size in aut.involution_classes():
        a = aut.automorphism(h, t)
        d = signed_fix_data(a)
        reps.append({"kind": "inner" if t == 0 else "outer",
                     "automorphism": f"sigma_{g.cycles(h)}" if t == 0 else a.describe(),
                     "class_size": size, "fixed": int(d.fixed.size), "inverted": int(d.inverted.size),
                     "omega": int(d.omega.size)})
    doc = {"group": g.name, "degree": g.degree, "order": g.order, "classes": len(table),
           "c2": table.count(2), "out": aut.out_order, "aut_order": aut.order,
           "class_counts": rows, "involutory_automorphisms": reps}
    lines = [f"{g.name}: degree {g.degree}, order {g.order}, {len(table)} conjugacy classes",
             f"C_G(2) = {doc['c2']}, |Out| = {aut.out_order}, |Aut| = {aut.order}",
             "   n   C_G(n)  F_G(n)"]
    lines += [f"{r['n']:>4} {r['C']:>8} {r['F']:>7}" for r in rows]
    lines.append("involutory automorphisms up to conjugacy:")
    lines += [f"  [{i}] {r['kind']:5} {r['automorphism']}  class {r['class_size']}, "
              f"|G_a| {r['fixed']}, |G_-a| {r['inverted']}, |omega| {r['omega']}"
              for i, r in enumerate(reps)]
    _emit(args, doc, "\n".join(lines))
    return OK


def cmd_enumerate_gc(args) -> int:
    entry = _entry(args)
    g, aut = entry.group, entry.aut
    reps = _select_reps(involution_reps(aut), args.aut)
    full = g.order <= FULL_CENSUS_LIMIT
    docs, lines = [], []
    for rep in reps:
        orbs = _subset_orbits(aut, rep, args.m, full)
        buckets: dict = {}
        for o in orbs:
            buckets.setdefault(o.census, []).append(len(o.members))
        keys = sorted(buckets, key=lambda c: (c.valency, c.counts))
        total = sum(sum(v) for v in buckets.values())
        docs.append({"alpha": rep.index, "kind": rep.kind, "automorphism": rep.describe(),
                     "subsets": total,
                     "buckets": [{"census": k.to_json(), "graphs": sum(buckets[k]), "orbits": buckets[k]}
                                 for k in keys]})
        lines.append(f"[{rep.index}] {rep.kind} {rep.describe()}: {total} subsets")
        lines += [f"    {str(k):>24}  x{sum(buckets[k])}" for k in keys]
    doc = {"group": g.name, "m": args.m, "aut": args.aut, "automorphisms": docs}
    _emit(args, doc, "\n".join(lines))
    return OK


def _expected_local(name: str, m: int):
    if m == 2:
        return name in LOCAL_2_GCI
    if name in NOT_LOCAL_1_GCI:
        return False
    return True if name in LOCAL_2_GCI else None


def cmd_classify(args) -> int:
    entry = _entry(args)
    report = verify_local_mgci(entry, args.m, args.jobs)
    doc = report.to_json(timing=args.timing)
    expected = _expected_local(entry.name, args.m)
    doc["expected"] = None if expected is None else ("local-m-GCI" if expected else "not-local-m-GCI")
    lines = [f"{entry.name}, m = {args.m}: {doc['verdict']}"]
    for b in doc["buckets"]:
        orbs = ", ".join(f"alpha[{o['alpha']}] {o['kind']} x{o['size']}" for o in b["orbits"])
        lines.append(f"  {json.dumps(b['census'])}: {b['graphs']} graphs; {orbs}")
    if report.counterexample:
        ce = report.counterexample
        lines.append(f"counterexample: alpha[{ce['lhs']['alpha']}] S = {ce['lhs']['S']}  vs  "
                     f"alpha[{ce['rhs']['alpha']}] S = {ce['rhs']['S']}")
    lines.append(f"witnesses verified: {report.witnesses_checked}")
    if expected is not None:
        lines.append("matches expectation" if expected == report.verdict else "DOES NOT match expectation")
    _emit(args, doc, "\n".join(lines))
    if expected is not None and expected != report.verdict:
        return MISMATCH
    return OK


def cmd_verify(args) -> int:
    entry = _entry(args)
    res = run_job(args.job, entry, args.jobs)
    doc = res.to_json(timing=args.timing)
    text = f"{res.job} on {res.group}: {'PASS' if res.passed else 'FAIL'} ({res.expected})\n"
    text += json.dumps(res.evidence, indent=2)
    _emit(args, doc, text)
    return OK if res.passed else MISMATCH


def _parse_alpha(entry, spec: str) -> Automorphism:
    g = entry.group
    if spec in ("1", "id", "identity"):
        return identity_automorphism(g)
    kind, _, rest = spec.partition(":")
    if kind == "inner":
        return inner(g, g.index(rest))
    if kind == "gens":
        return from_generator_images(g, [s.strip() for s in rest.split(";")])
    if kind == "class":
        reps = entry.aut.involution_classes()
        h, t, _ = reps[int(rest)]
        return entry.aut.automorphism(h, t)
    raise UsageError("automorphism spec must be 1, inner:<cycles>, gens:<img;img> or class:<k>")


def cmd_witness(args) -> int:
    from .gcgraph import validate_subset
    entry = _entry(args)
    g = entry.group
    a1, a2 = _parse_alpha(entry, args.alpha1), _parse_alpha(entry, args.alpha2)
    s1 = validate_subset(a1, [g.index(c.strip()) for c in args.S1.split(";")])
    s2 = validate_subset(a2, [g.index(c.strip()) for c in args.S2.split(";")])
    c1, c2 = census(s1), census(s2)
    w = gci_equivalence_witness(entry.aut, s1, s2)
    doc = {"group": g.name, "census_lhs": c1.to_json(), "census_rhs": c2.to_json(),
           "isomorphic": c1 == c2, "witness": None if w is None else w.to_json()}
    text = f"GC(S1) = {c1}, GC(S2) = {c2}\n"
    text += "no witness" if w is None else f"witness: x = {doc['witness']['x']}, gamma = {doc['witness']['gamma']}"
    _emit(args, doc, text)
    return OK


def cmd_catalog(args) -> int:
    if args.table1:
        rows = catalog.verify_table1(extended=args.extended)
        text = "\n".join(f"{r['group']:6} {r['status']:9} expected {r['expected']}"
                         + (f" computed {r['computed']}" if "computed" in r else "")
                         for r in rows)
        for r in rows:
            if not args.timing:
                r.pop("seconds", None)
        _emit(args, {"table1": rows}, text)
        return MISMATCH if any(r["status"] == "mismatch" for r in rows) else OK
    rows = []
    for name, e in catalog.entries().items():
        row = {"group": name, "degree": e.degree, "order": e.order, "c2": e.c2, "out": e.out, "mode": e.mode}
        if args.verify:
            if e.extended and not args.extended:
                row["verified"] = "skipped"
            else:
                t0 = time.perf_counter()
                catalog.verify_entry(e)
                row["verified"] = True
                if args.timing:
                    row["seconds"] = round(time.perf_counter() - t0, 3)
        rows.append(row)
    text = "\n".join(f"{r['group']:6} degree {r['degree']:>3} order {r['order']:>9} c2 {r['c2']} "
                     f"out {r['out']:>2} {r['mode']}" + (f"  verified={r['verified']}" if "verified" in r else "")
                     for r in rows)
    _emit(args, {"catalog": str(catalog.catalog_path()), "groups": rows}, text)
    return OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--extended", action="store_true", help="allow extended-mode groups such as M23")
    common.add_argument("--jobs", type=int, default=1, help="worker threads")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true", help="include wall-clock fields in reports")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="gcilab", description="generalized Cayley graph toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("info", parents=[common], help="group summary")
    s.add_argument("group")
    s.set_defaults(func=cmd_info)

    s = sub.add_parser("enumerate-gc", parents=[common], help="valid subsets and census buckets")
    s.add_argument("group")
    s.add_argument("-m", type=int, choices=(1, 2), default=2)
    s.add_argument("--aut", default="all", help="inner, outer, all or a class index")
    s.set_defaults(func=cmd_enumerate_gc)

    s = sub.add_parser("classify", parents=[common], help="decide local m-GCI")
    s.add_argument("group")
    s.add_argument("-m", type=int, choices=(1, 2), default=2)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("verify", parents=[common], help="run a named reproduction job")
    s.add_argument("group")
    s.add_argument("job", help=", ".join(REGISTRY))
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("witness", parents=[common], help="search for a GCI witness between two graphs")
    s.add_argument("group")
    s.add_argument("alpha1", help="1, inner:<cycles>, gens:<img;img> or class:<k>")
    s.add_argument("S1", help="subset, elements separated by ';'")
    s.add_argument("alpha2")
    s.add_argument("S2")
    s.set_defaults(func=cmd_witness)

    s = sub.add_parser("catalog", parents=[common], help="list or verify catalog entries")
    s.add_argument("--verify", action="store_true")
    s.add_argument("--table1", action="store_true")
    s.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.jobs < 1:
        parser.error("--jobs must be at least 1")
    try:
        return args.func(args)
    except (catalog.CatalogError, JobNotApplicable, UsageError, SubsetError, NotInGroup,
            CapExceeded, KeyError, ValueError) as exc:
        print(f"gcilab: error: {exc}", file=sys.stderr)
        return OPERATIONAL


if __name__ == "__main__":
    sys.exit(main())
