"""Semimodule core: Bourne quotients, subtractive and steady checks, hom
enumeration completeness, free semimodules and retract search."""

import itertools

import pytest

from radhom.corpus import vector_space_module
from radhom.errors import ValidationError
from radhom.modules import ring_as_module
from radhom.radical import radical_semimodule
from radhom.rings import build_radical_semiring, ideal_generated, make_cyclic_ring
from radhom.semimodules import (BourneQuotient, FiniteSemiring, SemiHom,
                                SubSemimodule, bourne_quotient, enumerate_homs,
                                free_semimodule, hom_from_basis, identity_hom,
                                is_exact_at, is_retract_of_free, is_steady,
                                is_subtractive, kernel, verify_semimodule_axioms,
                                verify_semiring_axioms, zero_hom)


def boolean_semiring():
    return FiniteSemiring([[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1,
                          name="bool")


def test_broken_semiring_axiom_is_named():
    bad = FiniteSemiring([[0, 0], [1, 1]], [[0, 0], [0, 1]], 0, 1)
    violations = verify_semiring_axioms(bad)
    assert violations
    assert all(isinstance(v, str) and v for v in violations)


def test_bourne_quotient_frozen_z12_classes():
    z12 = ring_as_module(make_cyclic_ring(12))
    rm = radical_semimodule(z12)
    i6 = rm.index[tuple(sorted({0, 6}))]
    i2 = rm.index[tuple(sorted({0, 2, 4, 6, 8, 10}))]
    i3 = rm.index[tuple(sorted({0, 3, 6, 9}))]
    i1 = rm.index[tuple(range(12))]
    sub = SubSemimodule(rm.semimodule, [i6, i2])
    bq = bourne_quotient(rm.semimodule, sub)
    assert len(bq.classes) == 2
    classes = {frozenset(c) for c in bq.classes}
    assert classes == {frozenset({i6, i2}), frozenset({i3, i1})}


def test_bourne_quotient_by_whole_and_by_zero():
    v = vector_space_module(2, 2)
    rm = radical_semimodule(v).semimodule
    whole = SubSemimodule(rm, range(rm.size))
    assert len(BourneQuotient(whole).classes) == 1
    trivial = SubSemimodule(rm, [rm.zero])
    bq = BourneQuotient(trivial)
    assert len(bq.classes) == rm.size


def test_subtractive_desk_witness_on_subspace_lattice():
    v = vector_space_module(2, 2)
    rm = radical_semimodule(v)
    sm = rm.semimodule
    zero = sm.zero
    top = rm.index[tuple(range(4))]
    sub = SubSemimodule(sm, [zero, top])
    assert not is_subtractive(sub)
    assert is_subtractive(SubSemimodule(sm, [zero]))
    assert is_subtractive(SubSemimodule(sm, range(sm.size)))


def steady_oracle(h):
    """Definition replay: equal values must be Bourne-linked over the
    kernel."""
    ker = kernel(h).elements
    src = h.source
    for a in range(src.size):
        for b in range(src.size):
            if h.map[a] != h.map[b]:
                continue
            if not any(src.add(a, k1) == src.add(b, k2)
                       for k1 in ker for k2 in ker):
                return False
    return True


def test_is_steady_matches_definition_replay():
    v = vector_space_module(2, 2)
    sm = radical_semimodule(v).semimodule
    homs = enumerate_homs(sm, sm)
    assert homs
    for h in homs:
        assert is_steady(h) == steady_oracle(h)
    assert is_steady(identity_hom(sm))
    assert is_steady(zero_hom(sm, sm))


def test_exactness_witnesses():
    z4 = ring_as_module(make_cyclic_ring(4))
    sm = radical_semimodule(z4).semimodule
    assert sm.size == 2
    ident = identity_hom(sm)
    zero = zero_hom(sm, sm)
    assert is_exact_at(ident, zero)
    assert not is_exact_at(zero, zero)
    assert not is_exact_at(ident, ident)


def test_enumerate_homs_complete_against_raw_scan():
    z4 = ring_as_module(make_cyclic_ring(4))
    sm = radical_semimodule(z4).semimodule
    got = {h.map for h in enumerate_homs(sm, sm)}
    want = set()
    for m in itertools.product(range(sm.size), repeat=sm.size):
        try:
            want.add(SemiHom(sm, sm, m).map)
        except ValidationError:
            pass
    assert got == want
    maps = [h.map for h in enumerate_homs(sm, sm)]
    assert maps == sorted(maps)


def test_free_semimodule_and_basis_homs():
    b = boolean_semiring()
    free = free_semimodule(b, 2)
    assert free.size == 4
    assert verify_semimodule_axioms(free.semimodule) == []
    target = free.semimodule
    h = hom_from_basis(free, [free.basis[1], free.basis[0]], target,
                       check_unique=True)
    assert h.map[free.basis[0]] == free.basis[1]
    assert h.map[free.basis[1]] == free.basis[0]


def test_radical_carrier_of_field_is_retract_of_free():
    f2 = ring_as_module(make_cyclic_ring(2))
    sm = radical_semimodule(f2).semimodule
    assert sm.size == 2
    res = is_retract_of_free(sm, max_basis=2)
    assert res.found
    w = res.witness
    composite = [w.phi.map[w.psi.map[x]] for x in range(sm.size)]
    assert composite == list(range(sm.size))


def test_radical_ideal_action_matches_semiring_on_ring_as_module():
    for n in (2, 3, 4, 6, 8, 9, 12):
        ring = make_cyclic_ring(n)
        rs = build_radical_semiring(ring)
        rm = radical_semimodule(ring_as_module(ring))
        assert {i.elements for i in rs.ideals} == {
            s.elements for s in rm.submodules}
        assert rm.semimodule.size == rs.semiring.size
