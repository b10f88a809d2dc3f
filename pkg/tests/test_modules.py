"""Module layer: submodule lattices, prime and radical submodules, quotients
and homs, with subset-scan oracles on the small instances."""

import pytest

from radhom.corpus import direct_sum_module, vector_space_module
from radhom.errors import ValidationError
from radhom.modules import (ModuleHom, SubmoduleSet, enumerate_module_homs,
                            enumerate_submodules, identity_module_hom,
                            is_prime_submodule, make_module, prime_submodules,
                            quotient_module, radical_of_submodule,
                            ring_as_module)
from radhom.rings import make_cyclic_ring


def subset_submodule_oracle(m):
    """All submodules by raw subset scan."""
    found = []
    for bits in range(1 << m.size):
        s = frozenset(i for i in range(m.size) if bits >> i & 1)
        if m.zero not in s:
            continue
        if any(m.add(a, b) not in s for a in s for b in s):
            continue
        if any(m.act(r, a) not in s for r in range(m.ring.size) for a in s):
            continue
        found.append(tuple(sorted(s)))
    return sorted(found)


def small_module_instances():
    z12 = ring_as_module(make_cyclic_ring(12))
    z8 = ring_as_module(make_cyclic_ring(8))
    q = quotient_module(z8, SubmoduleSet(z8, (0, 4)))[0]
    z4 = ring_as_module(make_cyclic_ring(4))
    z2q = quotient_module(z4, SubmoduleSet(z4, (0, 2)))[0]
    return [z12, z8, q, vector_space_module(2, 2), vector_space_module(3, 2),
            direct_sum_module(z4, z2q)]


@pytest.mark.parametrize("m", small_module_instances(),
                         ids=lambda m: m.name)
def test_submodule_enumeration_matches_subset_oracle(m):
    got = sorted(s.elements for s in enumerate_submodules(m))
    assert got == subset_submodule_oracle(m)


def test_z4_prime_and_radical_desk_values():
    z4 = ring_as_module(make_cyclic_ring(4))
    primes = {s.elements for s in prime_submodules(z4)}
    assert primes == {(0, 2)}
    assert radical_of_submodule(z4, SubmoduleSet(z4, (0,))).elements == (0, 2)
    assert radical_of_submodule(z4, SubmoduleSet(z4, (0, 2))).elements == (0, 2)


def test_vector_space_all_proper_subspaces_prime():
    v = vector_space_module(2, 2)
    subs = list(enumerate_submodules(v))
    assert len(subs) == 5
    for s in subs:
        proper = len(s.elements) < v.size
        assert is_prime_submodule(v, s) == proper
        # over a field every subspace equals its own radical
        assert radical_of_submodule(v, s).elements == s.elements


def test_quotient_module_cosets_by_least_member():
    z12 = ring_as_module(make_cyclic_ring(12))
    q, proj = quotient_module(z12, SubmoduleSet(z12, (0, 4, 8)))
    assert q.size == 4
    assert [proj.map[x] for x in range(4)] == [0, 1, 2, 3]
    assert proj.map[5] == proj.map[9] == proj.map[1]
    assert proj.is_surjective()


def test_module_hom_validation_and_enumeration():
    z4 = ring_as_module(make_cyclic_ring(4))
    with pytest.raises(ValidationError):
        ModuleHom(z4, z4, [1, 2, 3, 0])
    homs = enumerate_module_homs(z4, z4)
    assert len(homs) == 4
    assert identity_module_hom(z4) in homs
    doubling = ModuleHom(z4, z4, [0, 2, 0, 2])
    assert doubling in homs
    assert doubling.then(doubling).map == (0, 0, 0, 0)


def test_make_module_rejects_broken_action():
    z2 = make_cyclic_ring(2)
    with pytest.raises(ValidationError):
        make_module(z2, [[0, 1], [1, 0]], [[0, 0], [0, 0]], 0)


def test_radical_of_submodule_idempotent_everywhere():
    for m in small_module_instances():
        for s in enumerate_submodules(m):
            rad = radical_of_submodule(m, s)
            assert set(s.elements) <= set(rad.elements)
            assert radical_of_submodule(m, rad).elements == rad.elements
