"""Finite modules over finite commutative rings, by tables.

Submodules are closed element subsets.  A proper submodule N is prime when
r.m in N forces m in N or r.M <= N; the radical of N is the intersection of
the primes containing it, and the whole module when no prime does.  That
convention makes rad(N) the smallest radical submodule containing N, which
the test oracle re-derives independently.

>>> z4 = ring_as_module(make_cyclic_ring(4))
>>> [s.elements for s in enumerate_submodules(z4)]
[(0,), (0, 2), (0, 1, 2, 3)]
>>> radical_of_submodule(z4, submodule_generated(z4, [])).elements
(0, 2)
"""

from .errors import ValidationError
from .rings import make_cyclic_ring  # noqa: F401  (doctest convenience)
from . import tables


class ModuleTable:
    """Module over a FiniteRing; fully validated at construction."""

    def __init__(self, ring, add, action, zero, name=None):
        size = len(add)
        add = tuple(tuple(row) for row in add)
        action = tuple(tuple(row) for row in action)
        for v in tables.check_table_shape(size, add, "add"):
            raise ValidationError(v)
        if len(action) != ring.size:
            raise ValidationError("action table has %d rows, expected %d"
                                  % (len(action), ring.size))
        for r, row in enumerate(action):
            if len(row) != size:
                raise ValidationError("action row %d has length %d, expected %d"
                                      % (r, len(row), size))
            for m, v in enumerate(row):
                if not (isinstance(v, int) and 0 <= v < size):
                    raise ValidationError("action entry (%d,%d)=%r out of range"
                                          % (r, m, v))
        if not 0 <= zero < size:
            raise ValidationError("zero out of range")
        violations = (tables.check_comm_monoid(size, add, zero, "add")
                      or tables.check_inverses(size, add, zero)
                      or tables.check_action_laws(
                          ring.size, ring.add_table, ring.mul_table, ring.one,
                          ring.zero, size, add, action, zero))
        if violations:
            raise ValidationError(violations[0])
        self.ring = ring
        self.size = size
        self.add_table = add
        self.action_table = action
        self.zero = zero
        self.name = name or "module%d" % size

    def add(self, a, b):
        return self.add_table[a][b]

    def act(self, r, m):
        return self.action_table[r][m]

    def __eq__(self, other):
        return (isinstance(other, ModuleTable) and self.ring == other.ring
                and self.add_table == other.add_table
                and self.action_table == other.action_table
                and self.zero == other.zero)

    def __hash__(self):
        return hash((self.add_table, self.action_table, self.zero))

    def __repr__(self):
        return "ModuleTable(%s, size=%d)" % (self.name, self.size)


def make_module(ring, add, action, zero, name=None):
    return ModuleTable(ring, add, action, zero, name=name)


def ring_as_module(ring):
    """The ring acting on itself; submodules are then exactly the ideals."""
    return ModuleTable(ring, ring.add_table, ring.mul_table, ring.zero,
                       name=ring.name)


class SubmoduleSet:
    def __init__(self, module, elements):
        elements = tuple(sorted(set(elements)))
        reason = tables.subset_closed(elements, module.add_table,
                                      module.action_table, module.zero)
        if reason is not None:
            raise ValidationError("not a submodule: " + reason)
        self.module = module
        self.elements = elements
        self.members = frozenset(elements)

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, SubmoduleSet) and self.module == other.module
                and self.elements == other.elements)

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other):
        return self.members <= other.members

    def __repr__(self):
        return "SubmoduleSet(%r)" % (self.elements,)


def submodule_generated(m, gens):
    closed = tables.close_under(gens, m.add_table, m.action_table, m.zero)
    return SubmoduleSet(m, closed)


def submodule_sum(a, b):
    return submodule_generated(a.module, a.elements + b.elements)


def enumerate_submodules(m):
    """All submodules in canonical order (cardinality, then sorted elements),
    by saturating the cyclic submodules under pairwise sums."""
    cached = getattr(m, "_subs_cache", None)
    if cached is not None:
        return cached
    seen = {submodule_generated(m, [x]).elements for x in range(m.size)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for e1 in frontier:
            for e2 in list(seen):
                s = submodule_generated(m, e1 + e2).elements
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    out = tuple(SubmoduleSet(m, e) for e in sorted(seen, key=tables.canon_key))
    m._subs_cache = out
    return out


def is_prime_submodule(m, n):
    """Proper, and r.x in N forces x in N or r.M <= N."""
    if len(n) == m.size:
        return False
    swallows = [all(m.act(r, y) in n for y in range(m.size))
                for r in range(m.ring.size)]
    for r in range(m.ring.size):
        if swallows[r]:
            continue
        for x in range(m.size):
            if x not in n and m.act(r, x) in n:
                return False
    return True


def prime_submodules(m):
    cached = getattr(m, "_primes_cache", None)
    if cached is None:
        cached = tuple(n for n in enumerate_submodules(m)
                       if is_prime_submodule(m, n))
        m._primes_cache = cached
    return cached


def radical_of_submodule(m, n):
    """Intersection of the primes containing N; the whole module when none
    does (in particular the zero module is its own radical)."""
    members = None
    for p in prime_submodules(m):
        if n.members <= p.members:
            members = p.members if members is None else members & p.members
    if members is None:
        members = frozenset(range(m.size))
    return SubmoduleSet(m, members)


def is_radical_module(m):
    z = submodule_generated(m, [])
    return radical_of_submodule(m, z) == z


class ModuleHom:
    """Module homomorphism over a common ring, validated exhaustively."""

    def __init__(self, source, target, mapping):
        mapping = tuple(mapping)
        if source.ring != target.ring:
            raise ValidationError("hom endpoints lie over different rings")
        if len(mapping) != source.size:
            raise ValidationError("hom map has length %d, expected %d"
                                  % (len(mapping), source.size))
        for i, v in enumerate(mapping):
            if not (isinstance(v, int) and 0 <= v < target.size):
                raise ValidationError("hom value at %d out of range: %r" % (i, v))
        if mapping[source.zero] != target.zero:
            raise ValidationError("does not preserve zero")
        for a in range(source.size):
            for b in range(source.size):
                if mapping[source.add(a, b)] != target.add(mapping[a], mapping[b]):
                    raise ValidationError("does not preserve sum at (%d,%d)"
                                          % (a, b))
        for r in range(source.ring.size):
            for a in range(source.size):
                if mapping[source.act(r, a)] != target.act(r, mapping[a]):
                    raise ValidationError("does not preserve action at (%d,%d)"
                                          % (r, a))
        self.source = source
        self.target = target
        self.map = mapping

    def __call__(self, x):
        return self.map[x]

    def __eq__(self, other):
        return (isinstance(other, ModuleHom) and self.source == other.source
                and self.target == other.target and self.map == other.map)

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return "ModuleHom(%r)" % (self.map,)

    def then(self, other):
        if self.target != other.source:
            raise ValidationError("composition endpoints do not match")
        return ModuleHom(self.source, other.target,
                         tables.compose_maps(other.map, self.map))

    def pointwise_add(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValidationError("pointwise sum endpoints do not match")
        return ModuleHom(self.source, self.target,
                         tables.pointwise_sum(self.map, other.map,
                                              self.target.add_table))

    def is_injective(self):
        return len(set(self.map)) == len(self.map)

    def is_surjective(self):
        return len(set(self.map)) == self.target.size


def check_module_hom(source, target, mapping):
    return ModuleHom(source, target, mapping)


def identity_module_hom(m):
    return ModuleHom(m, m, tables.identity_map(m.size))


def zero_module_hom(source, target):
    return ModuleHom(source, target,
                     tables.constant_map(source.size, target.zero))


def hom_image(f):
    return SubmoduleSet(f.target, set(f.map))


def hom_compose(g, f):
    """g after f."""
    return f.then(g)


def enumerate_module_homs(source, target, bound=10 ** 6):
    if source.ring != target.ring:
        raise ValidationError("hom endpoints lie over different rings")
    maps = tables.enumerate_table_homs(
        source.size, source.add_table, source.action_table, source.zero,
        target.size, target.add_table, target.action_table, target.zero,
        bound=bound)
    return [ModuleHom(source, target, m) for m in maps]


def quotient_module(m, sub):
    """Quotient by a submodule, with the projection hom.  Coset classes are
    ordered by smallest member; the class of zero is the new zero."""
    cosets = {}
    for a in range(m.size):
        key = frozenset(m.add(a, n) for n in sub.elements)
        cosets.setdefault(key, []).append(a)
    classes = sorted((tuple(v) for v in cosets.values()), key=lambda c: c[0])
    class_of = [0] * m.size
    for i, cls in enumerate(classes):
        for a in cls:
            class_of[a] = i
    n = len(classes)
    reps = [cls[0] for cls in classes]
    add = [[class_of[m.add(reps[i], reps[j])] for j in range(n)]
           for i in range(n)]
    action = [[class_of[m.act(r, reps[i])] for i in range(n)]
              for r in range(m.ring.size)]
    q = ModuleTable(m.ring, add, action, class_of[m.zero],
                    name="%s/%d" % (m.name, len(sub.elements)))
    proj = ModuleHom(m, q, class_of)
    return q, proj
