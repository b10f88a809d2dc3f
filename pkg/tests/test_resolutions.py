"""Radical projectivity, resolution verification, comparison lifts and the
two-witness kernel construction."""

import pytest

from radhom.corpus import (example_resolutions, lemma_pro_instances,
                           lift_jobs, line_resolution)
from radhom.errors import (PreconditionError, ValidationError)
from radhom.modules import (identity_module_hom, ring_as_module,
                            zero_module_hom)
from radhom.radical import radical_hom
from radhom.resolutions import (RadicalResolution, homotopy_between_lifts,
                                is_radical_projective, lemma_pro_witnesses,
                                lift_map, resolution_h0_check,
                                verify_radical_resolution)
from radhom.rings import make_cyclic_ring
from radhom.semimodules import compose, enumerate_homs


def test_line0_resolution_verifies():
    r = dict(example_resolutions())["F2-line0"]
    rep = verify_radical_resolution(r)
    assert rep.ok
    assert rep.aug_surjective
    assert all(s["ok"] for s in rep.spots)
    assert rep.homology_counts == [2, 1]
    # R(P_0) is the subspace diamond, too big for a rank-bounded retract
    # search; R(P_1) is the two-element chain, a retract of the free of
    # arity one
    assert [p["status"] for p in rep.projectivity] == ["inconclusive",
                                                       "projective"]


def test_all_example_resolutions_verify():
    for label, r in example_resolutions():
        rep = verify_radical_resolution(r)
        assert rep.ok, (label, rep.defects)


def test_tampered_resolution_reports_defects():
    v_line = line_resolution(2, (0, 1))
    broken = RadicalResolution(
        v_line.target, v_line.modules,
        [zero_module_hom(v_line.modules[1], v_line.modules[0])],
        v_line.aug)
    rep = verify_radical_resolution(broken)
    assert not rep.ok
    assert "not exact at degree 0" in rep.defects
    assert "homology not trivial at degree 1" in rep.defects
    with pytest.raises(PreconditionError):
        lift_map(identity_module_hom(broken.target), broken, broken)


def test_ring_as_module_trivially_projective():
    m = ring_as_module(make_cyclic_ring(2))
    triv = RadicalResolution(m, [m], [], identity_module_hom(m))
    rep = verify_radical_resolution(triv, max_basis=1)
    assert rep.ok
    entry = rep.projectivity[0]
    assert (entry["degree"], entry["status"], entry["source"]) == \
        (0, "projective", "search")
    assert triv.certificates[0].arity == 1


def test_projectivity_search_bounds_validated():
    m = ring_as_module(make_cyclic_ring(2))
    with pytest.raises(ValidationError):
        is_radical_projective(m, max_basis=0)


def test_identity_lift_is_canonical_not_identity():
    """lift_map takes the first commuting component in enumeration order, so
    even the identity map acquires a non-identity lift; the reversed order
    gives a different one, and the two are connected by a homotopy pair."""
    r = dict(example_resolutions())["F2-line0"]
    ident = identity_module_hom(r.target)
    lift = lift_map(ident, r, r)
    assert [h.map for h in lift.components] == [(0, 0, 2, 2, 2), (0, 0)]
    rev = lift_map(ident, r, r, order="reversed")
    assert [h.map for h in rev.components] == [(0, 1, 4, 4, 4), (0, 1)]
    pair = homotopy_between_lifts(lift, rev, r, r)
    assert pair.valid
    assert [h.map for h in pair.s] == [(0, 1, 1, 1, 1)]
    assert [h.map for h in pair.t] == [(0, 0, 0, 0, 0)]


def test_zero_lifts_to_zero():
    r = dict(example_resolutions())["F2-line0"]
    lift = lift_map(zero_module_hom(r.target, r.target), r, r)
    for h in lift.components:
        assert h.map == tuple([h.target.zero] * h.source.size)


def test_lift_jobs_all_verify():
    for label, g, r, rp in lift_jobs():
        lift = lift_map(g, r, rp)
        rg = radical_hom(g)
        lhs = compose(rg, r.radical_aug())
        rhs = compose(rp.radical_aug(), lift.components[0])
        assert lhs.map == rhs.map, label
        rev = lift_map(g, r, rp, order="reversed")
        pair = homotopy_between_lifts(lift, rev, r, rp)
        assert pair.valid, label


def test_lift_rejects_unequal_lengths():
    r = dict(example_resolutions())["F2-line0"]
    m = r.target
    triv = RadicalResolution(m, [m], [], identity_module_hom(m))
    with pytest.raises(ValidationError):
        lift_map(identity_module_hom(m), r, triv)


def test_lemma_pro_witnesses_identities():
    for label, f, cert, alpha, alpha_prime in lemma_pro_instances():
        w = lemma_pro_witnesses(f, cert, alpha, alpha_prime)
        rf = radical_hom(f)
        assert alpha.pointwise_add(w.beta).map == \
            alpha_prime.pointwise_add(w.beta_prime).map, label
        assert compose(rf, w.beta).is_zero(), label
        assert compose(rf, w.beta_prime).is_zero(), label


def test_lemma_pro_rejects_unequal_composites():
    label, f, cert, alpha, _ = lemma_pro_instances()[0]
    rf = radical_hom(f)
    want = compose(rf, alpha).map
    other = next(h for h in enumerate_homs(cert.semimodule, rf.source)
                 if compose(rf, h).map != want)
    with pytest.raises(PreconditionError):
        lemma_pro_witnesses(f, cert, alpha, other)


def test_h0_comparison_finds_isomorphisms():
    for label, r in example_resolutions():
        rep = resolution_h0_check(r)
        assert all(rep.verdicts().values()), label
