"""Ring layer: ideal lattices, primes, radicals, and the radical-ideal
semiring, pinned against independent brute-force oracles."""

import itertools

import pytest

from radhom.errors import ValidationError
from radhom.rings import (FiniteRing, build_radical_semiring, enumerate_ideals,
                          ideal_generated, make_cyclic_ring,
                          make_product_ring, prime_ideals, radical_of_ideal)
from radhom.semimodules import verify_semiring_axioms


def subset_ideal_oracle(ring):
    """Every ideal by raw subset scan: contains 0, closed under + and under
    multiplication by arbitrary ring elements."""
    found = []
    elems = list(range(ring.size))
    for bits in range(1 << ring.size):
        s = frozenset(i for i in elems if bits >> i & 1)
        if ring.zero not in s:
            continue
        if any(ring.add(a, b) not in s for a in s for b in s):
            continue
        if any(ring.mul(r, a) not in s for r in elems for a in s):
            continue
        found.append(tuple(sorted(s)))
    return sorted(found)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 6, 8, 9, 12])
def test_ideal_enumeration_matches_subset_oracle(n):
    ring = make_cyclic_ring(n)
    got = sorted(i.elements for i in enumerate_ideals(ring))
    assert got == subset_ideal_oracle(ring)


def test_z12_ideal_lattice_desk_values():
    z12 = make_cyclic_ring(12)
    ideals = {i.elements for i in enumerate_ideals(z12)}
    assert len(ideals) == 6
    def gen(d):
        return tuple(sorted(set(d * k % 12 for k in range(12))))
    assert ideals == {gen(0), gen(6), gen(4), gen(3), gen(2), gen(1)}
    primes = {i.elements for i in prime_ideals(z12)}
    assert primes == {gen(2), gen(3)}
    assert radical_of_ideal(z12, ideal_generated(z12, [4])).elements == gen(2)
    assert radical_of_ideal(z12, ideal_generated(z12, [])).elements == gen(6)


def test_z12_radical_semiring_operations():
    z12 = make_cyclic_ring(12)
    rs = build_radical_semiring(z12)
    assert len(rs.ideals) == 4
    i1 = rs.index_of(ideal_generated(z12, [1]))
    i2 = rs.index_of(ideal_generated(z12, [2]))
    i3 = rs.index_of(ideal_generated(z12, [3]))
    i6 = rs.index_of(ideal_generated(z12, [6]))
    assert rs.semiring.zero == i6
    assert rs.semiring.one == i1
    assert rs.semiring.add(i2, i3) == i1
    assert rs.semiring.mul(i2, i3) == i6
    assert verify_semiring_axioms(rs.semiring) == []


def test_degenerate_one_element_ring():
    z1 = make_cyclic_ring(1)
    assert [i.elements for i in enumerate_ideals(z1)] == [(0,)]
    assert list(prime_ideals(z1)) == []
    rs = build_radical_semiring(z1)
    assert len(rs.ideals) == 1
    assert rs.semiring.zero == rs.semiring.one


def test_product_ring_z2_z3_isomorphic_to_z6():
    prod = make_product_ring(make_cyclic_ring(2), make_cyclic_ring(3))
    z6 = make_cyclic_ring(6)
    assert prod.size == 6
    found = None
    for perm in itertools.permutations(range(6)):
        if perm[prod.zero] != z6.zero or perm[prod.one] != z6.one:
            continue
        if all(perm[prod.add(a, b)] == z6.add(perm[a], perm[b])
               and perm[prod.mul(a, b)] == z6.mul(perm[a], perm[b])
               for a in range(6) for b in range(6)):
            found = perm
            break
    assert found is not None
    assert len(enumerate_ideals(prod)) == len(enumerate_ideals(z6)) == 4
    assert (len(build_radical_semiring(prod).ideals)
            == len(build_radical_semiring(z6).ideals))


def test_invalid_ring_table_rejected():
    with pytest.raises(ValidationError):
        FiniteRing([[0, 1], [1, 1]], [[0, 0], [0, 1]], 0, 1)


def test_radical_is_idempotent_and_monotone():
    for n in (4, 8, 9, 12, 16, 18):
        ring = make_cyclic_ring(n)
        for ideal in enumerate_ideals(ring):
            rad = radical_of_ideal(ring, ideal)
            assert set(ideal.elements) <= set(rad.elements)
            assert radical_of_ideal(ring, rad).elements == rad.elements
