"""Acceptance battery: the ten desk-scale theorem checks.

Each criterion function runs one self-contained verification over the
bundled corpus and returns a result carrying a verdict, a human-readable
detail string, and the elapsed time.  The functions never raise on a
mathematical finding; a claim that fails on an instance produces ok=False
with witness data in the detail, so the battery distinguishes "the theorem
held on every instance" from "the code crashed".
"""

import glob
import json
import os
import subprocess
import sys
import tempfile
import time

from .complexes import (check_snake_hypotheses, identity_chain_map,
                        induced_homology_map, is_radical_acyclic,
                        long_exact_sequence, naturality_check,
                        radical_homology, radical_homotopy_transport)
from .corpus import (chain_map_pairs, doubling_complex, example_resolutions,
                     functor_pairs, homotopy_instances, lemma_pro_instances,
                     lift_jobs, module_corpus, naturality_instances,
                     resolution_as_complex, semiring_family, snake_instances)
from .errors import RadhomError, TheoremViolationError
from .modules import enumerate_submodules, radical_of_submodule
from .radical import check_functor_laws, radical_hom, radical_semimodule
from .resolutions import (homotopy_between_lifts, lemma_pro_witnesses,
                          lift_map, verify_radical_resolution)
from .rings import build_radical_semiring, ideal_generated, make_cyclic_ring
from .semimodules import (compose, exactness_failure,
                          verify_semimodule_axioms, verify_semiring_axioms)


class CriterionResult:
    """Verdict for one acceptance criterion."""

    def __init__(self, number, title, ok, detail, elapsed):
        self.number = number
        self.title = title
        self.ok = ok
        self.detail = detail
        self.elapsed = elapsed

    @property
    def line(self):
        word = "PASS" if self.ok else "FAIL"
        return "%s criterion %2d (%s): %s  [%.2fs]" % (
            word, self.number, self.title, self.detail, self.elapsed)

    def __repr__(self):
        return self.line


def criterion_1():
    """Radical-ideal semirings of Z_1..Z_30: axioms, and the Z12 carrier."""
    t0 = time.perf_counter()
    axiom_failures = []
    for ring in semiring_family(30):
        rs = build_radical_semiring(ring)
        bad = verify_semiring_axioms(rs.semiring)
        if bad:
            axiom_failures.append((ring.name, bad[0]))
    z12 = make_cyclic_ring(12)
    rs12 = build_radical_semiring(z12)
    expected = sorted(
        tuple(sorted(set(d * k % 12 for k in range(12))))
        for d in (1, 2, 3, 6))
    carrier = sorted(i.elements for i in rs12.ideals)
    carrier_ok = carrier == expected
    zero_ok = (rs12.ideals[rs12.semiring.zero].elements
               == ideal_generated(z12, [6]).elements)
    elapsed = time.perf_counter() - t0
    ok = (not axiom_failures and carrier_ok and zero_ok and elapsed < 5.0)
    detail = ("30 semirings, %d axiom failures; Z12 carrier %s, zero=(6) %s;"
              " within 5s %s"
              % (len(axiom_failures), "ok" if carrier_ok else "WRONG",
                 "ok" if zero_ok else "WRONG", elapsed < 5.0))
    return CriterionResult(1, "radical ideal semiring", ok, detail, elapsed)


def _primes_by_definition(m):
    """Proper submodules with r*x inside and x outside forcing r*M inside,
    scanned straight from the definition."""
    primes = []
    for sub in enumerate_submodules(m):
        s = set(sub.elements)
        if len(s) == m.size:
            continue
        good = True
        for r in range(m.ring.size):
            if all(m.act(r, x) in s for x in range(m.size)):
                continue
            for x in range(m.size):
                if m.act(r, x) in s and x not in s:
                    good = False
                    break
            if not good:
                break
        if good:
            primes.append(frozenset(s))
    return primes


def minimal_radical_oracle(m):
    """Radical of every submodule, the slow way: build the family of all
    intersections of prime submodules (plus the whole module), then take the
    least member containing each given submodule.  Returns a dict keyed by
    the submodule element tuple."""
    full = frozenset(range(m.size))
    family = set(_primes_by_definition(m))
    family.add(full)
    grown = True
    while grown:
        grown = False
        for a in list(family):
            for b in list(family):
                c = a & b
                if c not in family:
                    family.add(c)
                    grown = True
    out = {}
    for sub in enumerate_submodules(m):
        s = frozenset(sub.elements)
        hits = [f for f in family if s <= f]
        least = min(hits, key=len)
        if any(not least <= f for f in hits):
            raise TheoremViolationError(
                "radical family of %s has no least member over %r"
                % (m.name, sorted(s)))
        out[sub.elements] = tuple(sorted(least))
    return out


def criterion_2():
    """Radical semimodules over the module corpus: axioms, plus the
    independent minimal-radical oracle on the small members."""
    t0 = time.perf_counter()
    mods = module_corpus()
    axiom_failures = []
    oracle_failures = []
    oracle_checked = 0
    for m in mods:
        rm = radical_semimodule(m)
        bad = verify_semimodule_axioms(rm.semimodule)
        if bad:
            axiom_failures.append((m.name, bad[0]))
        if m.size <= 16:
            want = minimal_radical_oracle(m)
            for sub in enumerate_submodules(m):
                got = radical_of_submodule(m, sub).elements
                oracle_checked += 1
                if got != want[sub.elements]:
                    oracle_failures.append((m.name, sub.elements, got,
                                            want[sub.elements]))
    elapsed = time.perf_counter() - t0
    ok = (len(mods) >= 20 and not axiom_failures and not oracle_failures
          and elapsed < 30.0)
    detail = ("%d modules, %d axiom failures; radical oracle agreed on "
              "%d submodules with %d mismatches; within 30s %s"
              % (len(mods), len(axiom_failures), oracle_checked,
                 len(oracle_failures), elapsed < 30.0))
    return CriterionResult(2, "radical semimodule + oracle", ok, detail,
                           elapsed)


def criterion_3():
    """Functor laws at both levels: identities and composition on module
    homs, then on induced homology maps over composable chain-map pairs."""
    t0 = time.perf_counter()
    pairs = functor_pairs()
    rep = check_functor_laws(pairs)
    failures = list(rep.violations)
    cpairs = chain_map_pairs()
    complexes = []
    for f, g in cpairs:
        for c in (f.source, f.target, g.target):
            if all(c is not seen for seen in complexes):
                complexes.append(c)
    for c in complexes:
        ident = identity_chain_map(c)
        for n in range(c.top + 1):
            h = induced_homology_map(ident, n)
            if h.map != tuple(range(h.source.size)):
                failures.append(("homology-identity", c.ring.name, n))
    for k, (f, g) in enumerate(cpairs):
        comp = f.then(g)
        for n in range(f.source.top + 1):
            lhs = induced_homology_map(comp, n)
            rhs = induced_homology_map(f, n).then(induced_homology_map(g, n))
            if lhs.map != rhs.map:
                failures.append(("homology-composition", k, n))
    elapsed = time.perf_counter() - t0
    ok = (len(pairs) >= 100 and len(cpairs) >= 100 and not failures)
    detail = ("%d module-hom pairs, %d chain-map pairs over %d complexes, "
              "%d failures"
              % (len(pairs), len(cpairs), len(complexes), len(failures)))
    return CriterionResult(3, "functor laws", ok, detail, elapsed)


def criterion_4():
    """Homotopy transport: on randomized classical homotopies, the
    transported witness (R(s), 0) must validate as a homotopy pair and the
    induced homology maps must agree."""
    t0 = time.perf_counter()
    instances = homotopy_instances()
    pair_failures = 0
    induced_failures = 0
    first = None
    for phi, psi, s in instances:
        rep = radical_homotopy_transport(phi, psi, s)
        if rep.identity_failures:
            pair_failures += 1
            if first is None:
                first = rep.identity_failures[0]
        if rep.induced_mismatches:
            induced_failures += 1
    elapsed = time.perf_counter() - t0
    ok = (len(instances) >= 50 and pair_failures == 0
          and induced_failures == 0)
    wit = ""
    if first is not None:
        wit = ("; first witness degree %d element %d: lhs %d vs rhs %d"
               % first)
    detail = ("%d homotopies; transported pair identity failed on %d%s; "
              "induced homology maps differed on %d"
              % (len(instances), pair_failures, wit, induced_failures))
    return CriterionResult(4, "homotopy transport", ok, detail, elapsed)


def criterion_5():
    """Snake lemma and two-of-three over the hypothesis-satisfying SESs."""
    t0 = time.perf_counter()
    qualifying = 0
    failures = []
    for inst in snake_instances():
        hyp = check_snake_hypotheses(inst.ses)
        if not hyp.ok:
            continue
        qualifying += 1
        try:
            les = long_exact_sequence(inst.ses, hyp)
        except TheoremViolationError as exc:
            failures.append((inst.label, "connecting map", str(exc)))
            continue
        bad = [j for j in les.junctions if not j["ok"]]
        if bad:
            failures.append((inst.label, "junction",
                             [(j["after"], j["before"]) for j in bad]))
        flags = list(les.acyclic.values())
        if sum(flags) >= 2 and not all(flags):
            failures.append((inst.label, "two-of-three", les.acyclic))
    elapsed = time.perf_counter() - t0
    ok = qualifying >= 5 and not failures
    detail = ("%d hypothesis-satisfying sequences, %d failures"
              % (qualifying, len(failures)))
    return CriterionResult(5, "snake + two-of-three", ok, detail, elapsed)


def criterion_6():
    """Ladder naturality: every induced square commutes, connecting squares
    included."""
    t0 = time.perf_counter()
    count = 0
    failures = []
    for top, bot, v_sub, v_mid, v_quot in naturality_instances():
        count += 1
        rep = naturality_check(top.ses, bot.ses, v_sub, v_mid, v_quot)
        bad = [sq for sq in rep.squares if not sq["ok"]]
        if bad:
            failures.append((top.label, bot.label,
                             [(sq["kind"], sq["degree"]) for sq in bad]))
    elapsed = time.perf_counter() - t0
    ok = count >= 3 and not failures
    detail = "%d ladders, %d with a broken square" % (count, len(failures))
    return CriterionResult(6, "naturality", ok, detail, elapsed)


def criterion_7():
    """Line resolutions over F2 and F3: the radical image is a short exact
    sequence and the resolution verifier accepts each instance."""
    t0 = time.perf_counter()
    failures = []
    count = 0
    for label, r in example_resolutions():
        count += 1
        ri = radical_hom(r.diffs[0])
        rq = radical_hom(r.aug)
        if not ri.is_injective():
            failures.append((label, "left map not injective"))
        wit = exactness_failure(ri, rq)
        if wit is not None:
            failures.append((label, "middle not exact", wit))
        if not rq.is_surjective():
            failures.append((label, "right map not surjective"))
        rep = verify_radical_resolution(r)
        if not rep.ok:
            failures.append((label, "resolution defects", rep.defects))
    elapsed = time.perf_counter() - t0
    ok = count == 7 and not failures
    detail = "%d line resolutions, %d failures" % (count, len(failures))
    return CriterionResult(7, "line resolutions", ok, detail, elapsed)


def criterion_8():
    """Lifting along resolutions, uniqueness up to a homotopy pair, and the
    kernel-witness construction."""
    t0 = time.perf_counter()
    failures = []
    jobs = lift_jobs()
    for label, g, r, rp in jobs:
        verify_radical_resolution(r)
        verify_radical_resolution(rp)
        try:
            lift = lift_map(g, r, rp)
            lift2 = lift_map(g, r, rp, order="reversed")
        except RadhomError as exc:
            failures.append((label, "lift", str(exc)))
            continue
        rg = radical_hom(g)
        if r.radical_aug().then(rg) != lift.components[0].then(
                rp.radical_aug()):
            failures.append((label, "augmentation square"))
        try:
            pair = homotopy_between_lifts(lift, lift2, r, rp)
        except RadhomError as exc:
            failures.append((label, "homotopy", str(exc)))
            continue
        if not pair.valid:
            failures.append((label, "pair invalid"))
    witness_count = 0
    for label, f, cert, alpha, alpha_prime in lemma_pro_instances():
        try:
            wits = lemma_pro_witnesses(f, cert, alpha, alpha_prime)
        except RadhomError as exc:
            failures.append((label, "witness", str(exc)))
            continue
        rf = radical_hom(f)
        if alpha.pointwise_add(wits.beta) != alpha_prime.pointwise_add(
                wits.beta_prime):
            failures.append((label, "sum identity"))
        if not compose(rf, wits.beta).is_zero():
            failures.append((label, "beta composite nonzero"))
        if not compose(rf, wits.beta_prime).is_zero():
            failures.append((label, "beta' composite nonzero"))
        witness_count += 1
    elapsed = time.perf_counter() - t0
    ok = len(jobs) >= 5 and witness_count >= 10 and not failures
    detail = ("%d lift jobs, %d witness instances, %d failures"
              % (len(jobs), witness_count, len(failures)))
    return CriterionResult(8, "lifting + kernel witnesses", ok, detail,
                           elapsed)


def bundled_jobs_dir():
    """The job corpus shipped at the repository root."""
    here = os.path.dirname(os.path.abspath(__file__))
    return os.path.normpath(os.path.join(here, "..", "..", "jobs"))


def _run_cli(args, cache_dir, extra=()):
    env = dict(os.environ)
    env["RADHOM_CACHE_DIR"] = cache_dir
    proc = subprocess.run(
        [sys.executable, "-m", "radhom.cli"] + list(args) + list(extra),
        capture_output=True, env=env)
    return proc.returncode, proc.stdout


def criterion_9(jobs_dir=None):
    """CLI determinism: byte-identical output across repeat runs and across
    cache modes for every bundled job."""
    t0 = time.perf_counter()
    jobs_dir = jobs_dir or bundled_jobs_dir()
    files = sorted(glob.glob(os.path.join(jobs_dir, "*.json")))
    mismatches = []
    runs = 0
    with tempfile.TemporaryDirectory() as tmp:
        cache = os.path.join(tmp, "cache")
        plans = []
        for path in files:
            with open(path, "r", encoding="utf-8") as fh:
                command = json.load(fh).get("command")
            if isinstance(command, str):
                plans.append((os.path.basename(path),
                              [command, "--input", path]))
        plans.append(("verify-paper", ["verify-paper", "--input", jobs_dir]))
        for name, args in plans:
            cold = _run_cli(args, cache)
            warm = _run_cli(args, cache)
            nocache = _run_cli(args, cache, extra=["--no-cache"])
            runs += 3
            if not (cold == warm == nocache):
                mismatches.append(name)
    elapsed = time.perf_counter() - t0
    ok = len(files) >= 7 and not mismatches
    detail = ("%d bundled jobs, %d runs, %d determinism mismatches"
              % (len(files), runs, len(mismatches)))
    return CriterionResult(9, "CLI determinism", ok, detail, elapsed)


def criterion_10():
    """Frozen homology desk values and acyclicity of the exact examples."""
    t0 = time.perf_counter()
    counts = [h.class_count for h in radical_homology(doubling_complex())]
    counts_ok = counts == [2, 2]
    not_acyclic = []
    for label, r in example_resolutions():
        if not is_radical_acyclic(resolution_as_complex(r)):
            not_acyclic.append(label)
    elapsed = time.perf_counter() - t0
    ok = counts_ok and not not_acyclic
    detail = ("doubling H_0,H_1 class counts %s; non-acyclic exact examples "
              "%d" % (counts, len(not_acyclic)))
    return CriterionResult(10, "homology desk values", ok, detail, elapsed)


ALL_CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4,
                criterion_5, criterion_6, criterion_7, criterion_8,
                criterion_9, criterion_10)


def run_all(jobs_dir=None):
    """Run the full battery in order, returning all ten results."""
    results = []
    for fn in ALL_CRITERIA:
        if fn is criterion_9:
            results.append(fn(jobs_dir))
        else:
            results.append(fn())
    return results
