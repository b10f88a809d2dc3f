"""Command-line front end.

Each subcommand reads one JSON input document, delegates to the core
operations, and emits a canonically ordered JSON report.  Reports embed a
"verdict" block; the process exits 0 only when the input validated and no
theorem-violation finding was recorded.  Outputs are byte-stable across
runs, and a content-hash cache makes repeat invocations cheap without
changing a single byte of output.
"""

import argparse
import glob
import json
import os
import sys

from .cache import CacheStore, cache_key
from .complexes import (check_snake_hypotheses, long_exact_sequence,
                        radical_homology, radical_homotopy_transport)
from .errors import (PreconditionError, SearchBoundExceeded,
                     TheoremViolationError, ValidationError)
from .modules import enumerate_submodules, prime_submodules
from .radical import radical_semimodule
from .resolutions import (homotopy_between_lifts, lift_map,
                          verify_radical_resolution)
from .rings import (build_radical_semiring, enumerate_ideals, prime_ideals)
from .semimodules import BourneQuotient, SubSemimodule
from .specio import (canonical_json, load_document, parse_complex,
                     parse_hom, parse_homotopy_job, parse_module,
                     parse_resolution, parse_ring, parse_ses,
                     parse_subset_list, quotient_doc, subset_array)

DEFAULT_MAX_BASIS = 3
DEFAULT_HOM_BOUND = 10 ** 6


def _semiring_doc(s):
    return {"size": s.size, "zero": s.zero, "one": s.one,
            "add": [list(row) for row in s.add_table],
            "mul": [list(row) for row in s.mul_table]}


def _semimodule_doc(m):
    return {"size": m.size, "zero": m.zero,
            "add": [list(row) for row in m.add_table],
            "action": [list(row) for row in m.action_table]}


def cmd_ring_info(doc, opts):
    ring = parse_ring(doc)
    rs = build_radical_semiring(ring)
    return {
        "ring": {"name": ring.name, "size": ring.size},
        "ideals": [subset_array(i.elements) for i in enumerate_ideals(ring)],
        "primes": [subset_array(i.elements) for i in prime_ideals(ring)],
        "radical_ideals": [subset_array(i.elements) for i in rs.ideals],
        "semiring": _semiring_doc(rs.semiring),
        "verdict": {"violations": False},
    }


def cmd_module_radicals(doc, opts):
    m = parse_module(doc)
    rm = radical_semimodule(m)
    return {
        "module": {"name": m.name, "size": m.size,
                   "ring": {"name": m.ring.name, "size": m.ring.size}},
        "submodules": [subset_array(s.elements)
                       for s in enumerate_submodules(m)],
        "primes": [subset_array(s.elements) for s in prime_submodules(m)],
        "radical_submodules": [subset_array(s.elements)
                               for s in rm.submodules],
        "semiring_carrier": [subset_array(i.elements)
                             for i in rm.radsemiring.ideals],
        "semimodule": _semimodule_doc(rm.semimodule),
        "verdict": {"violations": False},
    }


def cmd_semimodule_quotient(doc, opts):
    m = parse_module(doc.get("module"), "module")
    rm = radical_semimodule(m)
    parts = parse_subset_list(doc.get("sub"), m.size, "sub")
    indices = []
    for k, part in enumerate(parts):
        key = tuple(sorted(part))
        if key not in rm.index:
            raise ValidationError(
                "at sub[%d]: %r is not a radical submodule" % (k, list(key)))
        indices.append(rm.index[key])
    sub = SubSemimodule(rm.semimodule, indices)
    bq = BourneQuotient(sub)
    return {
        "module": {"name": m.name, "size": m.size},
        "carrier": [subset_array(s.elements) for s in rm.submodules],
        "sub": sorted(indices),
        "quotient": quotient_doc(bq),
        "class_count": len(bq.classes),
        "verdict": {"violations": False},
    }


def cmd_complex_homology(doc, opts):
    c = parse_complex(doc)
    table = []
    for h in radical_homology(c):
        table.append({
            "degree": h.degree,
            "class_count": h.class_count,
            "classes": [list(cls) for cls in h.classes_ambient()],
            "cycles": subset_array(h.cycles.elements),
            "boundaries": subset_array(h.boundaries.elements),
        })
    return {
        "top": c.top,
        "carriers": [[subset_array(s.elements) for s in
                      radical_semimodule(m).submodules]
                     for m in c.modules],
        "homology": table,
        "class_counts": [row["class_count"] for row in table],
        "verdict": {"violations": False},
    }


def cmd_snake(doc, opts):
    ses = parse_ses(doc)
    hyp = check_snake_hypotheses(ses)
    report = {
        "hypotheses": {"ok": hyp.ok, "degrees": hyp.degrees},
        "long_exact_sequence": None,
        "verdict": {"violations": False},
    }
    if not hyp.ok:
        return report
    try:
        les = long_exact_sequence(ses, hyp)
    except TheoremViolationError as exc:
        report["connecting_violation"] = {"message": str(exc),
                                          "witness": repr(exc.witness)}
        report["verdict"]["violations"] = True
        return report
    junctions = [{"after": j["after"], "before": j["before"], "ok": j["ok"],
                  "witness": j["witness"]} for j in les.junctions]
    flags = list(les.acyclic.values())
    two_of_three_broken = sum(flags) >= 2 and not all(flags)
    report["long_exact_sequence"] = {
        "maps": [{"label": label, "map": list(h.map)}
                 for label, h in les.maps],
        "junctions": junctions,
        "exact": les.ok,
        "acyclic": les.acyclic,
        "two_of_three": les.two_of_three,
    }
    report["verdict"]["violations"] = (not les.ok) or two_of_three_broken
    return report


def cmd_homotopy(doc, opts):
    phi, psi, s = parse_homotopy_job(doc)
    rep = radical_homotopy_transport(phi, psi, s)
    return {
        "pair": {"s": [list(h.map) for h in rep.pair.s],
                 "t": [list(h.map) for h in rep.pair.t]},
        "pair_identity_failures": [list(w) for w in rep.identity_failures],
        "induced_mismatches": [[n, list(a), list(b)]
                               for n, a, b in rep.induced_mismatches],
        "ok": rep.ok,
        "verdict": {"violations": not rep.ok},
    }


def _resolution_report(rep):
    return {
        "ok": rep.ok,
        "aug_surjective": rep.aug_surjective,
        "exact_spots": [{"degree": s["degree"], "ok": s["ok"],
                         "image": list(s["image"]),
                         "kernel": list(s["kernel"])} for s in rep.spots],
        "homology_class_counts": list(rep.homology_counts),
        "projectivity": [{"degree": p["degree"], "status": p["status"],
                          "source": p["source"]} for p in rep.projectivity],
        "defects": list(rep.defects),
    }


def cmd_resolve_lift(doc, opts):
    r = parse_resolution(doc.get("source"), "source")
    rp = parse_resolution(doc.get("target"), "target")
    g = parse_hom(doc.get("g"), r.target, rp.target, "g")
    max_basis = opts.get("max_basis", DEFAULT_MAX_BASIS)
    hom_bound = opts.get("hom_bound", DEFAULT_HOM_BOUND)
    rep_r = verify_radical_resolution(r, max_basis=max_basis,
                                      hom_bound=hom_bound)
    rep_rp = verify_radical_resolution(rp, max_basis=max_basis,
                                       hom_bound=hom_bound)
    report = {
        "source_verification": _resolution_report(rep_r),
        "target_verification": _resolution_report(rep_rp),
        "lift": None,
        "reversed_lift": None,
        "homotopy": None,
        "verdict": {"violations": False},
    }
    try:
        lift = lift_map(g, r, rp, hom_bound=hom_bound)
        lift2 = lift_map(g, r, rp, order="reversed", hom_bound=hom_bound)
    except TheoremViolationError as exc:
        report["lift_violation"] = {"message": str(exc),
                                    "witness": repr(exc.witness)}
        report["verdict"]["violations"] = True
        return report
    report["lift"] = [list(h.map) for h in lift.components]
    report["reversed_lift"] = [list(h.map) for h in lift2.components]
    try:
        pair = homotopy_between_lifts(lift, lift2, r, rp,
                                      hom_bound=hom_bound)
    except TheoremViolationError as exc:
        report["homotopy_violation"] = {"message": str(exc),
                                        "witness": repr(exc.witness)}
        report["verdict"]["violations"] = True
        return report
    report["homotopy"] = {"s": [list(h.map) for h in pair.s],
                          "t": [list(h.map) for h in pair.t],
                          "valid": pair.valid}
    if not pair.valid:
        report["verdict"]["violations"] = True
    return report


HANDLERS = {
    "ring-info": cmd_ring_info,
    "module-radicals": cmd_module_radicals,
    "semimodule-quotient": cmd_semimodule_quotient,
    "complex-homology": cmd_complex_homology,
    "snake": cmd_snake,
    "homotopy": cmd_homotopy,
    "resolve-lift": cmd_resolve_lift,
}


def _error_report(kind, exc):
    doc = {"error": {"kind": kind, "message": str(exc)}}
    witness = getattr(exc, "witness", None)
    if witness is not None:
        doc["error"]["witness"] = repr(witness)
    return doc


def run_command(command, doc, opts):
    """Dispatch one job; returns (report dict, exit code)."""
    handler = HANDLERS[command]
    try:
        report = handler(doc, opts)
    except (ValidationError, PreconditionError) as exc:
        return _error_report("validation", exc), 1
    except SearchBoundExceeded as exc:
        return _error_report("search-bound", exc), 1
    except TheoremViolationError as exc:
        return _error_report("theorem-violation", exc), 2
    code = 2 if report["verdict"]["violations"] else 0
    return report, code


def cmd_verify_paper(corpus_dir, opts):
    """Per-file theorem checks over a corpus directory of job documents."""
    checks = []
    violations = False
    invalid = False
    for path in sorted(glob.glob(os.path.join(corpus_dir, "*.json"))):
        name = os.path.basename(path)
        try:
            job = load_document(path)
            if not isinstance(job, dict) or "command" not in job:
                raise ValidationError("job file lacks a command field")
            command = job["command"]
            if command not in HANDLERS:
                raise ValidationError("unknown command %r" % (command,))
            job_opts = dict(opts)
            extra = job.get("options")
            if isinstance(extra, dict):
                for key in ("max_basis", "hom_bound"):
                    if key in extra and key not in job_opts:
                        job_opts[key] = extra[key]
            report, code = run_command(command, job.get("input"), job_opts)
        except ValidationError as exc:
            checks.append({"file": name, "ok": False, "kind": "validation",
                           "witness": str(exc)})
            invalid = True
            continue
        if code == 0:
            checks.append({"file": name, "command": command, "ok": True})
        elif code == 1:
            checks.append({"file": name, "command": command, "ok": False,
                           "kind": "validation", "witness": report["error"]})
            invalid = True
        else:
            witness = {k: v for k, v in report.items() if k != "verdict"}
            checks.append({"file": name, "command": command, "ok": False,
                           "kind": "theorem-violation", "witness": witness})
            violations = True
    report = {
        "checks": checks,
        "summary": {"total": len(checks),
                    "failed": sum(1 for c in checks if not c["ok"])},
        "verdict": {"violations": violations},
    }
    code = 2 if violations else (1 if invalid else 0)
    return report, code


def build_parser():
    parser = argparse.ArgumentParser(
        prog="radhom",
        description="Radical-submodule homology over finite rings: reports, "
                    "homology tables, snake sequences, and resolution lifts "
                    "from JSON job documents.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in list(HANDLERS) + ["verify-paper"]:
        p = sub.add_parser(name)
        p.add_argument("--input", required=True,
                       help="input JSON document (directory for "
                            "verify-paper)")
        p.add_argument("--out", help="write the report here instead of "
                                     "stdout")
        p.add_argument("--no-cache", action="store_true",
                       help="recompute even on a cache hit")
        p.add_argument("--max-basis", type=int, dest="max_basis",
                       help="bound for projectivity certificate search")
        p.add_argument("--hom-bound", type=int, dest="hom_bound",
                       help="bound for hom enumerations")
        p.add_argument("--seed", type=int, help="accepted for interface "
                                                "stability; commands are "
                                                "deterministic")
    return parser


def _gather_opts(args):
    opts = {}
    if args.max_basis is not None:
        opts["max_basis"] = args.max_basis
    if args.hom_bound is not None:
        opts["hom_bound"] = args.hom_bound
    return opts


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None):
    args = build_parser().parse_args(argv)
    opts = _gather_opts(args)
    if args.command == "verify-paper":
        if not os.path.isdir(args.input):
            _emit(canonical_json(_error_report(
                "validation", ValidationError("corpus path is not a "
                                              "directory"))), args.out)
            return 1
        corpus = {}
        for path in sorted(glob.glob(os.path.join(args.input, "*.json"))):
            try:
                corpus[os.path.basename(path)] = load_document(path)
            except ValidationError:
                corpus[os.path.basename(path)] = None
        key = cache_key("verify-paper", corpus, opts)
        report_code = None
        if not args.no_cache:
            cached = CacheStore().get(key)
            if cached is not None:
                entry = json.loads(cached)
                report_code = (entry["report"], entry["code"])
        if report_code is None:
            report_code = cmd_verify_paper(args.input, opts)
            CacheStore().put(key, json.dumps(
                {"report": report_code[0], "code": report_code[1]},
                sort_keys=True))
        report, code = report_code
        _emit(canonical_json(report), args.out)
        return code
    try:
        doc = load_document(args.input)
        if isinstance(doc, dict) and "command" in doc:
            if doc["command"] != args.command:
                raise ValidationError(
                    "job file is for command %r" % (doc["command"],))
            extra = doc.get("options")
            if isinstance(extra, dict):
                for k in ("max_basis", "hom_bound"):
                    if k in extra and k not in opts:
                        opts[k] = extra[k]
            doc = doc.get("input")
    except ValidationError as exc:
        _emit(canonical_json(_error_report("validation", exc)), args.out)
        return 1
    key = cache_key(args.command, doc, opts)
    report_code = None
    if not args.no_cache:
        cached = CacheStore().get(key)
        if cached is not None:
            entry = json.loads(cached)
            report_code = (entry["report"], entry["code"])
    if report_code is None:
        report, code = run_command(args.command, doc, opts)
        report_code = (report, code)
        if "error" not in report:
            CacheStore().put(key, json.dumps({"report": report, "code": code},
                                             sort_keys=True))
    report, code = report_code
    _emit(canonical_json(report), args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())
