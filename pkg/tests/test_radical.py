"""The radical functor on modules and homs: frozen desk values, functor
laws, and well-definedness properties."""

import pytest

from radhom.corpus import functor_pairs, module_corpus, vector_space_module
from radhom.errors import ValidationError
from radhom.modules import (ModuleHom, SubmoduleSet, enumerate_module_homs,
                            enumerate_submodules, identity_module_hom,
                            radical_of_submodule, ring_as_module,
                            submodule_generated)
from radhom.radical import (check_functor_laws, radical_hom,
                            radical_semimodule)
from radhom.rings import make_cyclic_ring
from radhom.semimodules import identity_hom, verify_semimodule_axioms


def test_z4_radical_carrier_and_doubling_hom():
    z4 = ring_as_module(make_cyclic_ring(4))
    rm = radical_semimodule(z4)
    assert {s.elements for s in rm.submodules} == {(0, 2), (0, 1, 2, 3)}
    doubling = ModuleHom(z4, z4, [0, 2, 0, 2])
    rd = radical_hom(doubling)
    assert rd.is_zero()


def test_radical_semimodule_axioms_over_corpus():
    for m in module_corpus():
        rm = radical_semimodule(m)
        assert verify_semimodule_axioms(rm.semimodule) == []


def test_functor_identity_law():
    v = vector_space_module(2, 2)
    rm = radical_semimodule(v).semimodule
    assert radical_hom(identity_module_hom(v)) == identity_hom(rm)


def test_functor_laws_on_seeded_pairs():
    rep = check_functor_laws(functor_pairs(count=40))
    assert rep.violations == []


def test_radical_hom_respects_radical_closure():
    """rad(f(N)) = rad(f(rad N)) for every hom and submodule in a small
    sweep; this is the equality making the induced hom well defined."""
    z4 = ring_as_module(make_cyclic_ring(4))
    z6 = ring_as_module(make_cyclic_ring(6))
    for m in (z4, z6):
        for f in enumerate_module_homs(m, m):
            for sub in enumerate_submodules(m):
                lhs = radical_of_submodule(
                    m, submodule_generated(m, [f.map[x]
                                               for x in sub.elements]))
                rad = radical_of_submodule(m, sub)
                rhs = radical_of_submodule(
                    m, submodule_generated(m, [f.map[x]
                                               for x in rad.elements]))
                assert lhs.elements == rhs.elements


def test_radical_hom_zero_preservation_and_monotone():
    v = vector_space_module(3, 2)
    rm = radical_semimodule(v)
    for f in enumerate_module_homs(v, v)[:30]:
        rf = radical_hom(f)
        assert rf.map[rm.semimodule.zero] == rm.semimodule.zero
        for i, a in enumerate(rm.submodules):
            for j, b in enumerate(rm.submodules):
                if set(a.elements) <= set(b.elements):
                    img_a = rm.submodules[rf.map[i]]
                    img_b = rm.submodules[rf.map[j]]
                    assert set(img_a.elements) <= set(img_b.elements)


def test_subspace_lattice_of_f2_plane_is_diamond():
    v = vector_space_module(2, 2)
    rm = radical_semimodule(v)
    assert rm.semimodule.size == 5
    zero = rm.semimodule.zero
    top = rm.index[tuple(range(4))]
    lines = [i for i in range(5) if i not in (zero, top)]
    assert len(lines) == 3
    for a in lines:
        for b in lines:
            if a != b:
                assert rm.semimodule.add(a, b) == top


def test_radical_hom_rejects_mismatched_input():
    z4 = ring_as_module(make_cyclic_ring(4))
    with pytest.raises(ValidationError):
        SubmoduleSet(z4, (0, 1))
