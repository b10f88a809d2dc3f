"""Finite commutative semirings and semimodules, given by tables.

Everything a module has except subtraction.  The missing subtraction is why
quotients use the Bourne relation (m ~ m' iff m + n = m' + n' for some n, n'
in the subsemimodule), why kernels carry less information than in module
land, and why the subtractive / steady side conditions exist at all.  All of
those notions live here; the radical constructions that produce interesting
instances live elsewhere.
"""

import dataclasses
import itertools

from .errors import (InternalConsistencyError, SearchBoundExceeded,
                     ValidationError)
from . import tables


class FiniteSemiring:
    """Commutative semiring by tables.  Construction checks only shape, so
    that a tampered structure can still be handed to the axiom scanner and
    reported on."""

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
        self.size = size
        self.add_table = add
        self.mul_table = mul
        self.zero = zero
        self.one = one
        self.name = name or "semiring%d" % size

    def add(self, a, b):
        return self.add_table[a][b]

    def mul(self, a, b):
        return self.mul_table[a][b]

    def __eq__(self, other):
        return (isinstance(other, FiniteSemiring)
                and self.add_table == other.add_table
                and self.mul_table == other.mul_table
                and self.zero == other.zero and self.one == other.one)

    def __hash__(self):
        return hash((self.add_table, self.mul_table, self.zero, self.one))

    def __repr__(self):
        return "FiniteSemiring(%s, size=%d)" % (self.name, self.size)


def verify_semiring_axioms(s):
    """All commutative-semiring laws by scan; empty list iff they all hold.
    Each violation names the law and a witness."""
    out = []
    out += tables.check_comm_monoid(s.size, s.add_table, s.zero, "add")
    out += tables.check_comm_monoid(s.size, s.mul_table, s.one, "mul")
    out += tables.check_distributive(s.size, s.add_table, s.mul_table)
    out += tables.check_absorbing(s.size, s.mul_table, s.zero)
    return out


class FiniteSemimodule:
    """Semimodule over a FiniteSemiring.  ``action[r][m]`` is the scalar
    action.  Shape-checked only; laws via verify_semimodule_axioms."""

    def __init__(self, semiring, add, action, zero, name=None):
        size = len(add)
        add = tuple(tuple(row) for row in add)
        action = tuple(tuple(row) for row in action)
        for v in tables.check_table_shape(size, add, "add"):
            raise ValidationError(v)
        if len(action) != semiring.size:
            raise ValidationError("action table has %d rows, expected %d"
                                  % (len(action), semiring.size))
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
        self.semiring = semiring
        self.size = size
        self.add_table = add
        self.action_table = action
        self.zero = zero
        self.name = name or "semimodule%d" % size

    def add(self, a, b):
        return self.add_table[a][b]

    def act(self, r, m):
        return self.action_table[r][m]

    def __eq__(self, other):
        return (isinstance(other, FiniteSemimodule)
                and self.semiring == other.semiring
                and self.add_table == other.add_table
                and self.action_table == other.action_table
                and self.zero == other.zero)

    def __hash__(self):
        return hash((self.add_table, self.action_table, self.zero))

    def __repr__(self):
        return "FiniteSemimodule(%s, size=%d)" % (self.name, self.size)


def verify_semimodule_axioms(m):
    out = []
    out += tables.check_comm_monoid(m.size, m.add_table, m.zero, "add")
    s = m.semiring
    out += tables.check_action_laws(s.size, s.add_table, s.mul_table, s.one,
                                    s.zero, m.size, m.add_table,
                                    m.action_table, m.zero)
    return out


class SubSemimodule:
    """A closed subset of a semimodule: contains zero, closed under sum and
    scalar action."""

    def __init__(self, parent, elements):
        elements = tuple(sorted(set(elements)))
        reason = tables.subset_closed(elements, parent.add_table,
                                      parent.action_table, parent.zero)
        if reason is not None:
            raise ValidationError("not a subsemimodule: " + reason)
        self.parent = parent
        self.elements = elements
        self.members = frozenset(elements)

    def __contains__(self, x):
        return x in self.members

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return (isinstance(other, SubSemimodule) and self.parent == other.parent
                and self.elements == other.elements)

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "SubSemimodule(%r)" % (self.elements,)

    def as_semimodule(self):
        """Restriction to a standalone semimodule.  Returns (semimodule,
        elements); position i of the new carrier is parent element
        ``elements[i]``."""
        cached = getattr(self, "_restrict_cache", None)
        if cached is not None:
            return cached
        pos = {e: i for i, e in enumerate(self.elements)}
        p = self.parent
        add = [[pos[p.add(a, b)] for b in self.elements] for a in self.elements]
        action = [[pos[p.act(r, a)] for a in self.elements]
                  for r in range(p.semiring.size)]
        sm = FiniteSemimodule(p.semiring, add, action, pos[p.zero],
                              name="%s|%d" % (p.name, len(self.elements)))
        self._restrict_cache = (sm, self.elements)
        return self._restrict_cache


def subsemimodule_generated(m, gens):
    closed = tables.close_under(gens, m.add_table, m.action_table, m.zero)
    return SubSemimodule(m, closed)


class SemiHom:
    """Semimodule homomorphism:  preserves zero, sums and the action.  In the
    absence of subtraction zero-preservation is an independent condition, so
    it is checked explicitly."""

    def __init__(self, source, target, mapping):
        mapping = tuple(mapping)
        if source.semiring != target.semiring:
            raise ValidationError("hom endpoints lie over different semirings")
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
                    raise ValidationError("does not preserve sum at (%d,%d)" % (a, b))
        for r in range(source.semiring.size):
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
        return (isinstance(other, SemiHom) and self.source == other.source
                and self.target == other.target and self.map == other.map)

    def __hash__(self):
        return hash(self.map)

    def __repr__(self):
        return "SemiHom(%r)" % (self.map,)

    def then(self, other):
        """self followed by other."""
        if self.target != other.source:
            raise ValidationError("composition endpoints do not match")
        return SemiHom(self.source, other.target,
                       tables.compose_maps(other.map, self.map))

    def pointwise_add(self, other):
        if self.source != other.source or self.target != other.target:
            raise ValidationError("pointwise sum endpoints do not match")
        return SemiHom(self.source, self.target,
                       tables.pointwise_sum(self.map, other.map,
                                            self.target.add_table))

    def is_injective(self):
        return len(set(self.map)) == len(self.map)

    def is_surjective(self):
        return len(set(self.map)) == self.target.size

    def is_zero(self):
        return all(v == self.target.zero for v in self.map)


def identity_hom(m):
    return SemiHom(m, m, tables.identity_map(m.size))


def zero_hom(source, target):
    return SemiHom(source, target, tables.constant_map(source.size, target.zero))


def compose(g, f):
    """g after f."""
    return f.then(g)


def kernel(h):
    elems = [x for x in range(h.source.size) if h.map[x] == h.target.zero]
    return SubSemimodule(h.source, elems)


def image(h):
    return SubSemimodule(h.target, set(h.map))


def is_subtractive(sub):
    """x + k in N with k in N forces x in N."""
    p = sub.parent
    for x in range(p.size):
        if x in sub:
            continue
        for k in sub.elements:
            if p.add(x, k) in sub:
                return False
    return True


def is_steady(h):
    """Whenever h(a) = h(b) there are kernel elements k1, k2 with
    a + k1 = b + k2."""
    ker = kernel(h).elements
    src = h.source
    reach = [frozenset(src.add(a, k) for k in ker) for a in range(src.size)]
    for a in range(src.size):
        for b in range(a + 1, src.size):
            if h.map[a] == h.map[b] and not (reach[a] & reach[b]):
                return False
    return True


def exactness_failure(f, g):
    """Witness that image(f) != kernel(g) at the shared object, or None."""
    if f.target != g.source:
        raise ValidationError("exactness endpoints do not match")
    im = image(f).members
    ker = kernel(g).members
    for x in sorted(im - ker):
        return ("in image, not in kernel", x)
    for x in sorted(ker - im):
        return ("in kernel, not in image", x)
    return None


def is_exact_at(f, g):
    """Exactness as set equality image(f) == kernel(g)."""
    return exactness_failure(f, g) is None


class BourneQuotient:
    """Quotient of a semimodule by a subsemimodule under the Bourne relation
    m ~ m'  iff  m + n = m' + n' for some n, n' in the subsemimodule.

    The relation is verified transitive at build time, the induced class
    operations are verified independent of representatives by full scan, and
    the quotient is re-verified against the semimodule axioms; any failure is
    an internal-consistency error because each is a theorem.
    """

    def __init__(self, sub):
        m = sub.parent
        reach = [frozenset(m.add(a, n) for n in sub.elements)
                 for a in range(m.size)]
        rel = [[bool(reach[a] & reach[b]) for b in range(m.size)]
               for a in range(m.size)]
        for a in range(m.size):
            for b in range(m.size):
                if not rel[a][b]:
                    continue
                for c in range(m.size):
                    if rel[b][c] and not rel[a][c]:
                        raise InternalConsistencyError(
                            "Bourne relation not transitive at (%d,%d,%d)"
                            % (a, b, c))
        seen = set()
        classes = []
        for a in range(m.size):
            if a in seen:
                continue
            cls = tuple(b for b in range(m.size) if rel[a][b])
            seen.update(cls)
            classes.append(cls)
        classes.sort(key=lambda c: c[0])
        class_of = [0] * m.size
        for i, cls in enumerate(classes):
            for b in cls:
                class_of[b] = i
        n = len(classes)
        reps = tuple(cls[0] for cls in classes)
        add = [[class_of[m.add(reps[i], reps[j])] for j in range(n)]
               for i in range(n)]
        action = [[class_of[m.act(r, reps[i])] for i in range(n)]
                  for r in range(m.semiring.size)]
        # representative independence, scanned over every member pair
        for i, ci in enumerate(classes):
            for j, cj in enumerate(classes):
                for a in ci:
                    for b in cj:
                        if class_of[m.add(a, b)] != add[i][j]:
                            raise InternalConsistencyError(
                                "class sum depends on representatives at (%d,%d)"
                                % (a, b))
            for r in range(m.semiring.size):
                for a in ci:
                    if class_of[m.act(r, a)] != action[r][i]:
                        raise InternalConsistencyError(
                            "class action depends on representatives at (%d,%d)"
                            % (r, a))
        q = FiniteSemimodule(m.semiring, add, action, class_of[m.zero],
                             name="%s/%d" % (m.name, len(sub.elements)))
        violations = verify_semimodule_axioms(q)
        if violations:
            raise InternalConsistencyError("Bourne quotient breaks axioms: "
                                           + violations[0])
        self.parent = m
        self.sub = sub
        self.classes = tuple(classes)
        self.class_of = tuple(class_of)
        self.reps = reps
        self.quotient = q

    def __repr__(self):
        return "BourneQuotient(%d classes)" % len(self.classes)


def bourne_quotient(m, sub):
    if sub.parent != m:
        raise ValidationError("subsemimodule does not live in the quotiented object")
    return BourneQuotient(sub)


def enumerate_homs(source, target, bound=10 ** 6):
    """All homs source -> target in canonical order (lexicographic on the
    map tuple)."""
    if source.semiring != target.semiring:
        raise ValidationError("hom endpoints lie over different semirings")
    maps = tables.enumerate_table_homs(
        source.size, source.add_table, source.action_table, source.zero,
        target.size, target.add_table, target.action_table, target.zero,
        bound=bound)
    return [SemiHom(source, target, m) for m in maps]


class FreeSemimodule:
    """S^(A): tuples of semiring elements with componentwise operations.
    Basis element k is the characteristic tuple with one at position k.
    Element encoding is big-endian in the component digits."""

    def __init__(self, semiring, arity, cap=20000):
        if arity < 0:
            raise ValidationError("arity must be >= 0")
        size = semiring.size ** arity
        if size > cap:
            raise ValidationError("free semimodule would have %d elements, cap is %d"
                                  % (size, cap))
        self.semiring = semiring
        self.arity = arity
        self.size = size

        def enc(digits):
            i = 0
            for d in digits:
                i = i * semiring.size + d
            return i

        def dec(i):
            digits = []
            for _ in range(arity):
                digits.append(i % semiring.size)
                i //= semiring.size
            return tuple(reversed(digits))

        self.encode = enc
        self.decode = dec
        add = [[enc([semiring.add(a, b) for a, b in zip(dec(i), dec(j))])
                for j in range(size)] for i in range(size)]
        action = [[enc([semiring.mul(r, a) for a in dec(i)])
                   for i in range(size)] for r in range(semiring.size)]
        zero = enc([semiring.zero] * arity)
        self.semimodule = FiniteSemimodule(semiring, add, action, zero,
                                           name="free(%s,%d)" % (semiring.name,
                                                                 arity))
        basis = []
        for k in range(arity):
            digits = [semiring.zero] * arity
            digits[k] = semiring.one
            basis.append(enc(digits))
        self.basis = tuple(basis)


def free_semimodule(semiring, arity, cap=20000):
    return FreeSemimodule(semiring, arity, cap=cap)


def hom_from_basis(free, images, target, check_unique=False, bound=10 ** 6):
    """The unique hom out of a free semimodule sending basis element k to
    images[k]: a digit tuple goes to the action-weighted sum of the images.

    With check_unique the full hom enumeration is scanned to confirm no other
    hom agrees on the basis (a freeness theorem, so disagreement is an
    internal-consistency error)."""
    if len(images) != free.arity:
        raise ValidationError("expected %d basis images, got %d"
                              % (free.arity, len(images)))
    mapping = []
    for i in range(free.size):
        acc = target.zero
        for digit, g in zip(free.decode(i), images):
            acc = target.add(acc, target.act(digit, g))
        mapping.append(acc)
    h = SemiHom(free.semimodule, target, mapping)
    if check_unique:
        agreeing = [k for k in enumerate_homs(free.semimodule, target, bound=bound)
                    if all(k.map[b] == h.map[b] for b in free.basis)]
        if agreeing != [h]:
            raise InternalConsistencyError(
                "%d homs agree on the basis, expected exactly one" % len(agreeing))
    return h


@dataclasses.dataclass
class RetractWitness:
    """phi: free -> m surjective, psi: m -> free injective, phi after psi is
    the identity."""
    arity: int
    free: FreeSemimodule
    phi: SemiHom
    psi: SemiHom


@dataclasses.dataclass
class RetractSearchResult:
    """Result of the retract-of-free search.  ``searched`` lists arities
    fully searched without a witness; ``skipped`` lists (arity, reason) pairs
    where a bound cut the search off.  A lack of witness with nonempty
    ``skipped`` is inconclusive, not a negative verdict."""
    witness: object
    searched: tuple
    skipped: tuple

    @property
    def found(self):
        return self.witness is not None

    @property
    def conclusive(self):
        return self.found or not self.skipped


def is_retract_of_free(m, max_basis=3, hom_bound=10 ** 6, cap=20000):
    """Search arities 1..max_basis, in order, for a retract witness.

    At each arity every surjective hom out of the free object is paired with
    every injective hom into it, in canonical enumeration order; the first
    pair composing to the identity wins."""
    searched = []
    skipped = []
    ident = tables.identity_map(m.size)
    for arity in range(1, max_basis + 1):
        try:
            free = FreeSemimodule(m.semiring, arity, cap=cap)
            down = [h for h in enumerate_homs(free.semimodule, m, bound=hom_bound)
                    if h.is_surjective()]
            up = [h for h in enumerate_homs(m, free.semimodule, bound=hom_bound)
                  if h.is_injective()]
        except (ValidationError, SearchBoundExceeded) as e:
            skipped.append((arity, str(e)))
            continue
        for phi, psi in itertools.product(down, up):
            if tables.compose_maps(phi.map, psi.map) == ident:
                return RetractSearchResult(
                    RetractWitness(arity, free, phi, psi),
                    tuple(searched), tuple(skipped))
        searched.append(arity)
    return RetractSearchResult(None, tuple(searched), tuple(skipped))
