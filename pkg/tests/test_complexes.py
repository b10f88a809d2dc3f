"""Chain layer: homology desk values, induced maps, homotopy pairs, the
transport finding, snake sequences and naturality ladders."""

import pytest

from radhom.complexes import (ChainComplex, ChainMap, RadicalSES,
                              check_snake_hypotheses,
                              connecting_homomorphism, find_homotopy_pair,
                              homology, identity_chain_map,
                              induced_homology_map, is_homotopy_pair,
                              is_radical_acyclic, long_exact_sequence,
                              naturality_check, radical_chain_map,
                              radical_homology, radical_homotopy_transport,
                              zero_chain_map, zero_walk)
from radhom.corpus import (doubling_complex, naturality_instances,
                           snake_instances, vector_space_module)
from radhom.errors import (PreconditionError, ValidationError)
from radhom.modules import (ModuleHom, identity_module_hom, ring_as_module,
                            zero_module_hom)
from radhom.rings import make_cyclic_ring


def test_complex_requires_composite_zero():
    z4 = ring_as_module(make_cyclic_ring(4))
    ident = identity_module_hom(z4)
    with pytest.raises(ValidationError):
        ChainComplex([z4, z4, z4], [ident, ident])


def test_doubling_complex_frozen_homology():
    c = doubling_complex()
    hs = radical_homology(c)
    assert [h.class_count for h in hs] == [2, 2]
    assert not is_radical_acyclic(c)
    # the radical differential is the zero map, so everything is a cycle
    # and only the zero class is a boundary
    h1 = hs[1]
    assert len(h1.cycles) == 2
    assert h1.boundaries.elements == (h1.object.zero,)


def test_identity_and_zero_induced_maps():
    c = doubling_complex()
    for n in (0, 1):
        ident = induced_homology_map(identity_chain_map(c), n)
        assert ident.map == tuple(range(ident.source.size))
        z = induced_homology_map(zero_chain_map(c, c), n)
        assert all(v == z.target.zero for v in z.map)


def _embedding_homotopy():
    """A classical homotopy with additive cancellation: phi embeds F2 on a
    line of the plane, s is the same embedding, and psi collapses to zero
    because 2 + 2 = 0 in the plane."""
    f2 = vector_space_module(2, 1, name="F2")
    v = vector_space_module(2, 2)
    c1 = ChainComplex([f2, f2], [identity_module_hom(f2)])
    c2 = ChainComplex([v, v], [identity_module_hom(v)])
    emb = ModuleHom(f2, v, [0, 2])
    phi = ChainMap(c1, c2, [emb, emb])
    psi = ChainMap(c1, c2, [zero_module_hom(f2, v),
                            zero_module_hom(f2, v)])
    return phi, psi, [emb]


def test_homotopy_pair_identity_checks():
    phi, psi, s = _embedding_homotopy()
    t0 = zero_walk(phi.source, phi.target)
    assert is_homotopy_pair(phi, phi, t0, t0)
    assert is_homotopy_pair(phi, psi, s, t0)
    assert not is_homotopy_pair(phi, psi, t0, t0)


def test_transport_counterexample_pair_fails_homology_agrees():
    """The transported witness (R(s), 0) is not a homotopy pair when the
    module identity relies on cancellation, yet the induced homology maps
    still agree; both facts are findings carried by the report."""
    phi, psi, s = _embedding_homotopy()
    rep = radical_homotopy_transport(phi, psi, s)
    assert rep.identity_failures
    assert rep.induced_mismatches == []
    assert not rep.ok
    degree, element, lhs, rhs = rep.identity_failures[0]
    assert (degree, element) == (0, 1)
    assert lhs != rhs


def test_two_sided_pair_exists_where_transport_fails():
    """A genuine (s, t) pair with nonzero t connects the radical images of
    the counterexample maps: the two-sided definition is strictly more
    flexible than transported classical homotopy."""
    phi, psi, s = _embedding_homotopy()
    res = find_homotopy_pair(radical_chain_map(phi), radical_chain_map(psi))
    assert res.found
    assert res.pair.valid
    assert any(h.map != tuple([h.target.zero] * h.source.size)
               for h in res.pair.t)


def test_transport_requires_classical_homotopy():
    phi, psi, s = _embedding_homotopy()
    with pytest.raises(PreconditionError):
        radical_homotopy_transport(phi, psi, [zero_module_hom(
            phi.source.modules[0], phi.target.modules[1])])


def test_find_homotopy_pair_trivial_first():
    c = doubling_complex()
    ident = identity_chain_map(c)
    res = find_homotopy_pair(ident, ident)
    assert res.found
    for h in list(res.pair.s) + list(res.pair.t):
        assert h.map == tuple([h.target.zero] * h.source.size)


def test_snake_frozen_desk_values():
    inst = snake_instances()[0]
    ses = inst.ses
    hyp = check_snake_hypotheses(ses)
    assert hyp.ok
    assert all(d["boundary_cover"] and d["subtractive"] and d["steady"]
               for d in hyp.degrees)
    alpha = connecting_homomorphism(ses, 1, hyp)
    assert alpha.map == (0, 1)
    assert [homology(ses.rsub, n).class_count for n in (0, 1)] == [2, 1]
    assert [homology(ses.rmid, n).class_count for n in (0, 1)] == [1, 1]
    assert [homology(ses.rquot, n).class_count for n in (0, 1)] == [1, 2]


def test_long_exact_sequence_on_snake_corpus():
    for inst in snake_instances():
        hyp = check_snake_hypotheses(inst.ses)
        if not hyp.ok:
            continue
        les = long_exact_sequence(inst.ses, hyp)
        assert les.ok, inst.label
        flags = list(les.acyclic.values())
        if sum(flags) >= 2:
            assert les.two_of_three is True


def test_two_of_three_fires_on_acyclic_rows():
    fired = 0
    for inst in snake_instances():
        hyp = check_snake_hypotheses(inst.ses)
        if not hyp.ok:
            continue
        les = long_exact_sequence(inst.ses, hyp)
        if les.two_of_three is not None:
            fired += 1
            assert les.two_of_three
    assert fired >= 2


def test_ses_validation_rejects_broken_rows():
    v = vector_space_module(2, 2)
    c = ChainComplex([v, v], [identity_module_hom(v)])
    zero_map = ChainMap(c, c, [zero_module_hom(v, v), zero_module_hom(v, v)])
    ident = identity_chain_map(c)
    with pytest.raises(ValidationError):
        RadicalSES(c, c, c, ident, ident)
    with pytest.raises(ValidationError):
        RadicalSES(c, c, c, zero_map, zero_map)


def test_naturality_ladders_commute():
    for top, bot, v_sub, v_mid, v_quot in naturality_instances():
        rep = naturality_check(top.ses, bot.ses, v_sub, v_mid, v_quot)
        assert rep.ok
        kinds = {sq["kind"] for sq in rep.squares}
        assert kinds == {"phi", "psi", "alpha"}


def test_naturality_rejects_noncommuting_verticals():
    insts = snake_instances()
    top = insts[0]
    with pytest.raises(PreconditionError):
        naturality_check(top.ses, top.ses,
                         identity_chain_map(top.sub),
                         zero_chain_map(top.mid, top.mid),
                         identity_chain_map(top.quot))
