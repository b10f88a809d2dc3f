"""Finite commutative rings with identity, their ideals, and the semiring of
radical ideals.

A ring is a pair of operation tables over indices ``0..size-1``.  Ideals are
plain element subsets; primality and radicals are decided by exhaustive scan,
and the radical ideals form a semiring under

    I (+) J = rad(I + J)        I (*) J = rad(I J)

whose zero is rad(0) and whose one is the whole ring.

>>> z12 = make_cyclic_ring(12)
>>> sorted(radical_of_ideal(z12, ideal_generated(z12, [0])).elements)
[0, 6]
>>> len(enumerate_ideals(z12))
6
"""

from .errors import InternalConsistencyError, ValidationError
from .semimodules import FiniteSemiring, verify_semiring_axioms
from . import tables


class FiniteRing:
    """Commutative ring with identity, by explicit add and mul tables.

    Construction validates every ring axiom exhaustively and raises
    ValidationError naming the first violated law.  The one-element ring
    (zero == one) is allowed.
    """

    def __init__(self, add, mul, zero, one, name=None):
        size = len(add)
        add = tuple(tuple(row) for row in add)
        mul = tuple(tuple(row) for row in mul)
        for v in tables.check_table_shape(size, add, "add"):
            raise ValidationError(v)
        for v in tables.check_table_shape(size, mul, "mul"):
            raise ValidationError(v)
        if not (0 <= zero < size and 0 <= one < size):
            raise ValidationError("zero/one out of range")
        violations = (tables.check_comm_monoid(size, add, zero, "add")
                      or tables.check_inverses(size, add, zero)
                      or tables.check_comm_monoid(size, mul, one, "mul")
                      or tables.check_distributive(size, add, mul)
                      or tables.check_absorbing(size, mul, zero))
        if violations:
            raise ValidationError(violations[0])
        self.size = size
        self.add_table = add
        self.mul_table = mul
        self.zero = zero
        self.one = one
        self.name = name or "ring%d" % size

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def __eq__(self, other):
        return (isinstance(other, FiniteRing)
                and self.add_table == other.add_table
                and self.mul_table == other.mul_table
                and self.zero == other.zero and self.one == other.one)

    def __hash__(self):
        return hash((self.add_table, self.mul_table, self.zero, self.one))

    def __repr__(self):
        return "FiniteRing(%s, size=%d)" % (self.name, self.size)


class IdealSet:
    """An ideal as a closed element subset of a ring."""

    def __init__(self, ring, elements):
        elements = tuple(sorted(set(elements)))
        reason = tables.subset_closed(elements, ring.add_table,
                                      ring.mul_table, ring.zero)
        if reason is not None:
            raise ValidationError("not an ideal: " + reason)
        self.ring = ring
        self.elements = elements
        self.members = frozenset(elements)

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, IdealSet) and self.ring == other.ring
                and self.elements == other.elements)

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other):
        return self.members <= other.members

    def __repr__(self):
        return "IdealSet(%r)" % (self.elements,)


def make_cyclic_ring(n):
    """Z_n.  n == 1 gives the zero ring (zero == one)."""
    if n < 1:
        raise ValidationError("cyclic ring needs n >= 1")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteRing(add, mul, 0, 1 % n, name="Z%d" % n)


def make_product_ring(a, b):
    """Componentwise product; pair (i, j) is encoded as i * b.size + j."""
    n = a.size * b.size

    def enc(i, j):
        return i * b.size + j

    add = [[0] * n for _ in range(n)]
    mul = [[0] * n for _ in range(n)]
    for i in range(a.size):
        for j in range(b.size):
            for k in range(a.size):
                for l in range(b.size):
                    add[enc(i, j)][enc(k, l)] = enc(a.add(i, k), b.add(j, l))
                    mul[enc(i, j)][enc(k, l)] = enc(a.mul(i, k), b.mul(j, l))
    return FiniteRing(add, mul, enc(a.zero, b.zero), enc(a.one, b.one),
                      name="%sx%s" % (a.name, b.name))


def make_table_ring(add, mul, zero, one, name=None):
    return FiniteRing(add, mul, zero, one, name=name)


def ideal_generated(ring, gens):
    """Smallest ideal containing ``gens``: closure under sums and ring
    multiples.

    >>> z12 = make_cyclic_ring(12)
    >>> ideal_generated(z12, [4]).elements
    (0, 4, 8)
    >>> len(ideal_generated(z12, [5]))
    12
    """
    closed = tables.close_under(gens, ring.add_table, ring.mul_table, ring.zero)
    return IdealSet(ring, closed)


def ideal_sum(i, j):
    return ideal_generated(i.ring, i.elements + j.elements)


def ideal_product(i, j):
    ring = i.ring
    prods = [ring.mul(a, b) for a in i.elements for b in j.elements]
    return ideal_generated(ring, prods)


def enumerate_ideals(ring):
    """All ideals, in canonical order (cardinality, then sorted elements).

    Saturates the set of cyclic ideals under pairwise ideal sums; every ideal
    of a finite ring is a finite sum of cyclic ones, so this is exhaustive.
    """
    cached = getattr(ring, "_ideals_cache", None)
    if cached is not None:
        return cached
    seen = {ideal_generated(ring, [x]).elements for x in range(ring.size)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for e1 in frontier:
            for e2 in list(seen):
                s = ideal_generated(ring, e1 + e2).elements
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    out = tuple(IdealSet(ring, e)
                for e in sorted(seen, key=tables.canon_key))
    ring._ideals_cache = out
    return out


def is_prime_ideal(ring, ideal):
    """Proper, and ab in I forces a in I or b in I."""
    if len(ideal) == ring.size:
        return False
    for a in range(ring.size):
        if a in ideal:
            continue
        for b in range(ring.size):
            if b in ideal:
                continue
            if ring.mul(a, b) in ideal:
                return False
    return True


def prime_ideals(ring):
    cached = getattr(ring, "_primes_cache", None)
    if cached is None:
        cached = tuple(i for i in enumerate_ideals(ring) if is_prime_ideal(ring, i))
        ring._primes_cache = cached
    return cached


def radical_of_ideal(ring, ideal):
    """Intersection of the primes containing the ideal; the whole ring when
    no prime contains it.

    >>> z12 = make_cyclic_ring(12)
    >>> radical_of_ideal(z12, ideal_generated(z12, [4])).elements
    (0, 2, 4, 6, 8, 10)
    """
    members = None
    for p in prime_ideals(ring):
        if ideal.members <= p.members:
            members = p.members if members is None else members & p.members
    if members is None:
        members = frozenset(range(ring.size))
    return IdealSet(ring, members)


class RadicalIdealSemiring:
    """The semiring of radical ideals of a ring.

    ``ideals`` lists the carrier in canonical order; ``semiring`` holds the
    verified operation tables.  Addition and multiplication are the radicals
    of ideal sum and ideal product; zero is rad(0) and one is the whole ring.
    """

    def __init__(self, ring):
        rad_ideals = tuple(i for i in enumerate_ideals(ring)
                           if radical_of_ideal(ring, i) == i)
        index = {i.elements: k for k, i in enumerate(rad_ideals)}
        n = len(rad_ideals)
        add = [[0] * n for _ in range(n)]
        mul = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                s = radical_of_ideal(ring, ideal_sum(rad_ideals[a], rad_ideals[b]))
                p = radical_of_ideal(ring, ideal_product(rad_ideals[a], rad_ideals[b]))
                if s.elements not in index or p.elements not in index:
                    raise InternalConsistencyError(
                        "radical ideal ops left the carrier at (%d,%d)" % (a, b))
                add[a][b] = index[s.elements]
                mul[a][b] = index[p.elements]
        zero_i = index[radical_of_ideal(ring, ideal_generated(ring, [])).elements]
        one_i = index[tuple(range(ring.size))]
        semiring = FiniteSemiring(add, mul, zero_i, one_i,
                                  name="Rad(%s)" % ring.name)
        violations = verify_semiring_axioms(semiring)
        if violations:
            raise InternalConsistencyError(
                "radical ideal semiring of %s breaks axioms: %s"
                % (ring.name, violations[0]))
        self.ring = ring
        self.ideals = rad_ideals
        self.index = index
        self.semiring = semiring

    def index_of(self, ideal):
        return self.index[ideal.elements]

    def __repr__(self):
        return "RadicalIdealSemiring(%s, size=%d)" % (self.ring.name,
                                                      len(self.ideals))


def build_radical_semiring(ring):
    """Radical-ideal semiring of a ring, memoized on the ring object."""
    cached = getattr(ring, "_radsemiring_cache", None)
    if cached is None:
        cached = RadicalIdealSemiring(ring)
        ring._radsemiring_cache = cached
    return cached
