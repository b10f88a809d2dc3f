"""Chain complexes, radical homology, homotopy pairs, and the snake maps.

Complexes are bounded: objects M_0 .. M_top with differentials
f_n: M_n -> M_{n-1} for 1 <= n <= top and implicit zeros outside that range.
Homology is taken degreewise on the radical image of a module complex:

    Z_n = ker R(f_n)   (all of R(M_0) at the bottom)
    B_n = im R(f_{n+1})   ({zero} at the top)
    H_n = Z_n / B_n  as a Bourne quotient.

Homotopy uses *pairs* (s, t): the two-sided identity
phi_n + s_{n-1} f_n + f'_{n+1} s_n = psi_n + t_{n-1} f_n + f'_{n+1} t_n,
with classical one-sided homotopy the t = 0 case.  All transported claims
(pair validity after applying the radical functor, equality of induced maps,
choice-independence of connecting maps, exactness of the long sequence) are
checked exhaustively and failures surface as reports or theorem-violation
errors, never as silent passes.
"""

import dataclasses
import itertools

from .errors import (InternalConsistencyError, PreconditionError,
                     TheoremViolationError, ValidationError)
from .modules import ModuleHom, enumerate_module_homs, zero_module_hom
from .radical import radical_hom, radical_semimodule
from .semimodules import (FiniteSemimodule, SemiHom, SubSemimodule,
                          BourneQuotient, enumerate_homs, image,
                          exactness_failure, is_steady,
                          is_subtractive, kernel, zero_hom)
from . import tables


def _check_complex(objects, diffs, kind):
    if not objects:
        raise ValidationError("complex needs at least one object")
    if len(diffs) != len(objects) - 1:
        raise ValidationError("expected %d differentials, got %d"
                              % (len(objects) - 1, len(diffs)))
    for n, d in enumerate(diffs, start=1):
        if d.source != objects[n] or d.target != objects[n - 1]:
            raise ValidationError("differential %d endpoints do not match" % n)
    for n in range(1, len(objects) - 1):
        comp = tables.compose_maps(diffs[n - 1].map, diffs[n].map)
        z = objects[n - 1].zero
        if any(v != z for v in comp):
            raise ValidationError(
                "%s differentials do not compose to zero at degrees (%d,%d)"
                % (kind, n + 1, n))


class ChainComplex:
    """Bounded complex of modules."""

    def __init__(self, modules, diffs):
        modules = tuple(modules)
        diffs = tuple(diffs)
        ring = modules[0].ring
        for m in modules:
            if m.ring != ring:
                raise ValidationError("complex mixes modules over different rings")
        _check_complex(modules, diffs, "module")
        self.modules = modules
        self.diffs = diffs
        self.ring = ring

    @property
    def top(self):
        return len(self.modules) - 1

    def d(self, n):
        """f_n for 1 <= n <= top."""
        return self.diffs[n - 1]

    def __eq__(self, other):
        return (isinstance(other, ChainComplex) and self.modules == other.modules
                and tuple(d.map for d in self.diffs) ==
                tuple(d.map for d in other.diffs))

    def __hash__(self):
        return hash(tuple(d.map for d in self.diffs))

    def __repr__(self):
        return "ChainComplex(top=%d)" % self.top


class SemiComplex:
    """Bounded complex of semimodules."""

    def __init__(self, semimodules, diffs):
        semimodules = tuple(semimodules)
        diffs = tuple(diffs)
        sr = semimodules[0].semiring
        for m in semimodules:
            if m.semiring != sr:
                raise ValidationError(
                    "complex mixes semimodules over different semirings")
        _check_complex(semimodules, diffs, "semimodule")
        self.semimodules = semimodules
        self.diffs = diffs
        self.semiring = sr
        self._hcache = {}

    @property
    def top(self):
        return len(self.semimodules) - 1

    def d(self, n):
        return self.diffs[n - 1]

    def __eq__(self, other):
        return (isinstance(other, SemiComplex)
                and self.semimodules == other.semimodules
                and tuple(d.map for d in self.diffs) ==
                tuple(d.map for d in other.diffs))

    def __hash__(self):
        return hash(tuple(d.map for d in self.diffs))

    def __repr__(self):
        return "SemiComplex(top=%d)" % self.top


def _objects(c):
    return c.modules if isinstance(c, ChainComplex) else c.semimodules


class ChainMap:
    """Degreewise map of complexes with verified commuting squares.  Works at
    both the module and the semimodule level; components must match the level
    of the endpoints."""

    def __init__(self, source, target, components):
        components = tuple(components)
        if type(source) is not type(target):
            raise ValidationError("chain map endpoints are different kinds")
        if source.top != target.top:
            raise ValidationError("chain map endpoints have different lengths")
        if len(components) != source.top + 1:
            raise ValidationError("expected %d components, got %d"
                                  % (source.top + 1, len(components)))
        src_obj, tgt_obj = _objects(source), _objects(target)
        for n, h in enumerate(components):
            if h.source != src_obj[n] or h.target != tgt_obj[n]:
                raise ValidationError("component %d endpoints do not match" % n)
        for n in range(1, source.top + 1):
            left = tables.compose_maps(target.d(n).map, components[n].map)
            right = tables.compose_maps(components[n - 1].map, source.d(n).map)
            if left != right:
                raise ValidationError("squares do not commute at degree %d" % n)
        self.source = source
        self.target = target
        self.components = components

    def then(self, other):
        if self.target != other.source:
            raise ValidationError("chain map composition endpoints do not match")
        return ChainMap(self.source, other.target,
                        [a.then(b) for a, b in zip(self.components,
                                                   other.components)])

    def __eq__(self, other):
        return (isinstance(other, ChainMap) and self.source == other.source
                and self.target == other.target
                and tuple(h.map for h in self.components) ==
                tuple(h.map for h in other.components))

    def __hash__(self):
        return hash(tuple(h.map for h in self.components))

    def __repr__(self):
        return "ChainMap(top=%d)" % self.source.top


ComplexMap = ChainMap


def make_complex(modules, diffs):
    return ChainComplex(modules, diffs)


def make_complex_map(source, target, components):
    return ChainMap(source, target, components)


def identity_chain_map(c):
    objs = _objects(c)
    if isinstance(c, ChainComplex):
        comps = [ModuleHom(m, m, tables.identity_map(m.size)) for m in objs]
    else:
        comps = [SemiHom(m, m, tables.identity_map(m.size)) for m in objs]
    return ChainMap(c, c, comps)


def zero_chain_map(source, target):
    s_obj, t_obj = _objects(source), _objects(target)
    if isinstance(source, ChainComplex):
        comps = [zero_module_hom(a, b) for a, b in zip(s_obj, t_obj)]
    else:
        comps = [zero_hom(a, b) for a, b in zip(s_obj, t_obj)]
    return ChainMap(source, target, comps)


def apply_radical(c):
    """Radical image of a module complex, memoized on the complex object.
    Composite-zero of the image differentials is a functoriality consequence,
    so its failure is flagged as an internal inconsistency."""
    cached = getattr(c, "_radical_cache", None)
    if cached is None:
        sms = [radical_semimodule(m).semimodule for m in c.modules]
        rdiffs = [radical_hom(d) for d in c.diffs]
        try:
            cached = SemiComplex(sms, rdiffs)
        except ValidationError as e:
            raise InternalConsistencyError(
                "radical image of a complex is not a complex: %s" % e) from e
        c._radical_cache = cached
    return cached


def radical_chain_map(phi):
    """R applied degreewise to a module-level chain map."""
    return ChainMap(apply_radical(phi.source), apply_radical(phi.target),
                    [radical_hom(h) for h in phi.components])


class HomologyData:
    """H_n of a semimodule complex: cycles, boundaries, and the Bourne
    quotient of the cycle subsemimodule by the boundaries."""

    def __init__(self, sc, n):
        obj = sc.semimodules[n]
        if n == 0:
            cycles = SubSemimodule(obj, range(obj.size))
        else:
            cycles = kernel(sc.d(n))
        if n == sc.top:
            boundaries = SubSemimodule(obj, [obj.zero])
        else:
            boundaries = image(sc.d(n + 1))
        if not boundaries.members <= cycles.members:
            raise InternalConsistencyError(
                "boundaries escape cycles at degree %d" % n)
        cyc_sm, embed = cycles.as_semimodule()
        pos = {e: i for i, e in enumerate(embed)}
        inner = SubSemimodule(cyc_sm, [pos[e] for e in boundaries.elements])
        self.complex = sc
        self.degree = n
        self.object = obj
        self.cycles = cycles
        self.boundaries = boundaries
        self.cycles_sm = cyc_sm
        self.embed = embed
        self._pos = pos
        self.quotient = BourneQuotient(inner)

    @property
    def class_count(self):
        return len(self.quotient.classes)

    def is_cycle(self, ambient):
        return ambient in self._pos

    def class_of(self, ambient):
        """Homology class of a cycle, by ambient carrier index."""
        return self.quotient.class_of[self._pos[ambient]]

    def classes_ambient(self):
        return tuple(tuple(self.embed[i] for i in cls)
                     for cls in self.quotient.classes)

    def __repr__(self):
        return "HomologyData(degree=%d, classes=%d)" % (self.degree,
                                                        self.class_count)


def homology(sc, n):
    """H_n of a semimodule complex, cached per complex."""
    if not 0 <= n <= sc.top:
        raise ValidationError("degree %d outside 0..%d" % (n, sc.top))
    if n not in sc._hcache:
        sc._hcache[n] = HomologyData(sc, n)
    return sc._hcache[n]


def radical_homology(c):
    """All H_n of the radical image of a module complex, bottom degree
    first."""
    rc = apply_radical(c)
    return [homology(rc, n) for n in range(rc.top + 1)]


def is_radical_acyclic(c):
    """Every radical homology degree has exactly one class."""
    return all(h.class_count == 1 for h in radical_homology(c))


def induced_map_on_homology(rphi, n):
    """H_n of a semimodule-level chain map: [N] |-> [phi_n(N)].

    Cycles must map to cycles and the class must not depend on the chosen
    representative; both are theorems, so failures raise
    InternalConsistencyError with a witness."""
    hs = homology(rphi.source, n)
    ht = homology(rphi.target, n)
    comp = rphi.components[n].map
    mapping = []
    for cls in hs.quotient.classes:
        values = set()
        for pos in cls:
            ambient = hs.embed[pos]
            img = comp[ambient]
            if not ht.is_cycle(img):
                raise InternalConsistencyError(
                    "image of cycle %d at degree %d is not a cycle" % (ambient, n))
            values.add(ht.class_of(img))
        if len(values) != 1:
            raise InternalConsistencyError(
                "induced homology map depends on representatives at degree %d: %r"
                % (n, sorted(values)))
        mapping.append(values.pop())
    try:
        return SemiHom(hs.quotient.quotient, ht.quotient.quotient, mapping)
    except ValidationError as e:
        raise InternalConsistencyError(
            "induced homology map fails hom validation: %s" % e) from e


def induced_homology_map(phi, n):
    """H_n(R(phi)) for a module-level chain map."""
    return induced_map_on_homology(radical_chain_map(phi), n)


def _component_arrays(phi, psi, s, t):
    """Both sides of the homotopy-pair identity as raw arrays per degree.
    Out-of-range homotopy components contribute nothing (the implicit zero
    padding of bounded complexes)."""
    src, tgt = phi.source, phi.target
    top = src.top
    t_obj = _objects(tgt)
    sides = []
    for comps, walk in ((phi.components, s), (psi.components, t)):
        arrays = []
        for n in range(top + 1):
            acc = comps[n].map
            addt = t_obj[n].add_table
            if n >= 1:
                acc = tables.pointwise_sum(
                    acc, tables.compose_maps(walk[n - 1].map, src.d(n).map),
                    addt)
            if n <= top - 1:
                acc = tables.pointwise_sum(
                    acc, tables.compose_maps(tgt.d(n + 1).map, walk[n].map),
                    addt)
            arrays.append(acc)
        sides.append(arrays)
    return sides


def _check_homotopy_shapes(phi, psi, s, t):
    if phi.source != psi.source or phi.target != psi.target:
        raise ValidationError("homotopy endpoints do not match")
    top = phi.source.top
    for name, walk in (("s", s), ("t", t)):
        if len(walk) != top:
            raise ValidationError("%s has %d components, expected %d"
                                  % (name, len(walk), top))
        s_obj, t_obj = _objects(phi.source), _objects(phi.target)
        for n, h in enumerate(walk):
            if h.source != s_obj[n] or h.target != t_obj[n + 1]:
                raise ValidationError("%s component %d endpoints do not match"
                                      % (name, n))


def homotopy_identity_failures(phi, psi, s, t):
    """Degrees and witness elements where the two-sided identity fails."""
    _check_homotopy_shapes(phi, psi, s, t)
    lhs, rhs = _component_arrays(phi, psi, s, t)
    failures = []
    for n, (a, b) in enumerate(zip(lhs, rhs)):
        for x, (u, v) in enumerate(zip(a, b)):
            if u != v:
                failures.append((n, x, u, v))
    return failures


def is_homotopy_pair(phi, psi, s, t):
    return not homotopy_identity_failures(phi, psi, s, t)


class HomotopyPair:
    """A homotopy pair with its verification result attached."""

    def __init__(self, phi, psi, s, t):
        _check_homotopy_shapes(phi, psi, s, t)
        self.phi = phi
        self.psi = psi
        self.s = tuple(s)
        self.t = tuple(t)
        self.failures = homotopy_identity_failures(phi, psi, s, t)

    @property
    def valid(self):
        return not self.failures

    def __repr__(self):
        return "HomotopyPair(valid=%s)" % self.valid


def zero_walk(source, target):
    """The all-zero homotopy component list between two complexes."""
    s_obj, t_obj = _objects(source), _objects(target)
    if isinstance(source, ChainComplex):
        return [zero_module_hom(s_obj[n], t_obj[n + 1])
                for n in range(source.top)]
    return [zero_hom(s_obj[n], t_obj[n + 1]) for n in range(source.top)]


@dataclasses.dataclass
class TransportReport:
    """Outcome of pushing a classical homotopy through the radical functor.
    ``identity_failures`` and ``induced_mismatches`` are theorem-violation
    witnesses; both empty means the transported claims held."""
    pair: HomotopyPair
    identity_failures: list
    induced_mismatches: list

    @property
    def ok(self):
        return not self.identity_failures and not self.induced_mismatches


def radical_homotopy_transport(phi, psi, s):
    """Given a classical module homotopy phi ~ psi via s (the t = 0 case),
    build the radical pair (R(s), 0), verify the pair identity, and verify
    the induced maps on homology agree in every degree."""
    t0 = zero_walk(phi.source, phi.target)
    classical = homotopy_identity_failures(phi, psi, s, t0)
    if classical:
        raise PreconditionError(
            "not a classical homotopy; first failure at degree %d, element %d"
            % classical[0][:2])
    rphi = radical_chain_map(phi)
    rpsi = radical_chain_map(psi)
    rs = [radical_hom(h) for h in s]
    rt = zero_walk(rphi.source, rphi.target)
    pair = HomotopyPair(rphi, rpsi, rs, rt)
    mismatches = []
    for n in range(rphi.source.top + 1):
        a = induced_map_on_homology(rphi, n)
        b = induced_map_on_homology(rpsi, n)
        if a.map != b.map:
            mismatches.append((n, a.map, b.map))
    return TransportReport(pair, list(pair.failures), mismatches)


@dataclasses.dataclass
class HomotopySearchResult:
    pair: object
    exhausted: bool
    candidates: int

    @property
    def found(self):
        return self.pair is not None


def find_homotopy_pair(phi, psi, bound=200000, hom_bound=10 ** 6):
    """Brute-force search for a homotopy pair between two parallel chain
    maps, trying per-degree component pairs in canonical enumeration order.
    Exhausting ``bound`` candidates without a verdict is reported as such and
    is not evidence that no pair exists."""
    if phi.source != psi.source or phi.target != psi.target:
        raise ValidationError("homotopy endpoints do not match")
    src, tgt = phi.source, phi.target
    s_obj, t_obj = _objects(src), _objects(tgt)
    module_level = isinstance(src, ChainComplex)
    per_degree = []
    for n in range(src.top):
        if module_level:
            homs = enumerate_module_homs(s_obj[n], t_obj[n + 1], bound=hom_bound)
        else:
            homs = enumerate_homs(s_obj[n], t_obj[n + 1], bound=hom_bound)
        per_degree.append(list(itertools.product(homs, homs)))
    count = 0
    for choice in itertools.product(*per_degree):
        count += 1
        if count > bound:
            return HomotopySearchResult(None, True, count - 1)
        s = [c[0] for c in choice]
        t = [c[1] for c in choice]
        if is_homotopy_pair(phi, psi, s, t):
            return HomotopySearchResult(HomotopyPair(phi, psi, s, t), False,
                                        count)
    return HomotopySearchResult(None, False, count)


def _trivial_semimodule(semiring):
    return FiniteSemimodule(semiring, ((0,),),
                            tuple((0,) for _ in range(semiring.size)), 0,
                            name="0")


class RadicalSES:
    """Degreewise short exact sequence of module complexes, certified on the
    radical image: each row 0 -> R(M'_n) -> R(M_n) -> R(M''_n) -> 0 must have
    R(phi_n) injective, im R(phi_n) = ker R(psi_n), and R(psi_n) surjective."""

    def __init__(self, sub, mid, quot, phi, psi):
        if phi.source != sub or phi.target != mid:
            raise ValidationError("phi endpoints do not match the complexes")
        if psi.source != mid or psi.target != quot:
            raise ValidationError("psi endpoints do not match the complexes")
        self.sub = sub
        self.mid = mid
        self.quot = quot
        self.phi = phi
        self.psi = psi
        self.rsub = apply_radical(sub)
        self.rmid = apply_radical(mid)
        self.rquot = apply_radical(quot)
        self.rphi = radical_chain_map(phi)
        self.rpsi = radical_chain_map(psi)
        for n in range(sub.top + 1):
            f, g = self.rphi.components[n], self.rpsi.components[n]
            if not f.is_injective():
                raise ValidationError(
                    "row %d: radical image of phi is not injective" % n)
            if not g.is_surjective():
                raise ValidationError(
                    "row %d: radical image of psi is not surjective" % n)
            wit = exactness_failure(f, g)
            if wit is not None:
                raise ValidationError(
                    "row %d not exact at the middle: %s (element %d)"
                    % (n, wit[0], wit[1]))

    @property
    def top(self):
        return self.sub.top

    def __repr__(self):
        return "RadicalSES(top=%d)" % self.top


@dataclasses.dataclass
class SnakeHypotheses:
    """Per-degree verdicts for the three snake hypotheses:
    boundary_cover: im R(phi_n) <= im R(f_{n+1}) on the middle complex,
    subtractive:    im R(f''_n) subtractive (checked as B_n(quot) for each n),
    steady:         R(psi_n) steady."""
    degrees: list

    @property
    def ok(self):
        return all(d["boundary_cover"] and d["subtractive"] and d["steady"]
                   for d in self.degrees)

    def ok_at(self, n):
        d = self.degrees[n]
        return d["boundary_cover"] and d["subtractive"] and d["steady"]


def check_snake_hypotheses(ses):
    degrees = []
    for n in range(ses.top + 1):
        hn_mid = homology(ses.rmid, n)
        hn_quot = homology(ses.rquot, n)
        cover = image(ses.rphi.components[n]).members <= hn_mid.boundaries.members
        subtr = is_subtractive(hn_quot.boundaries)
        steady = is_steady(ses.rpsi.components[n])
        degrees.append({"degree": n, "boundary_cover": cover,
                        "subtractive": subtr, "steady": steady})
    return SnakeHypotheses(degrees)


def connecting_homomorphism(ses, n, hypotheses=None):
    """alpha_n: H_n(R(quot)) -> H_{n-1}(R(sub)) by the usual chase: lift a
    cycle through R(psi_n), push down the differential, pull back through
    R(phi_{n-1}).

    Every member of every class, every lift, and every pullback is tried;
    if the resulting class ever differs the choice-dependence is raised as a
    theorem violation with the offending choices attached."""
    if not 1 <= n <= ses.top:
        raise ValidationError("connecting map needs 1 <= n <= top")
    if hypotheses is None:
        hypotheses = check_snake_hypotheses(ses)
    bad = [k for k in (n, n - 1) if not hypotheses.ok_at(k)]
    if bad:
        raise PreconditionError(
            "snake hypotheses fail at degrees %r" % bad)
    h_quot = homology(ses.rquot, n)
    h_sub = homology(ses.rsub, n - 1)
    psi_n = ses.rpsi.components[n].map
    phi_dn = ses.rphi.components[n - 1].map
    f_n = ses.rmid.d(n).map
    mapping = []
    for cls in h_quot.quotient.classes:
        results = set()
        witness = []
        for pos in cls:
            cyc = h_quot.embed[pos]
            lifts = [x for x in range(len(psi_n)) if psi_n[x] == cyc]
            for lift in lifts:
                pushed = f_n[lift]
                pulls = [y for y in range(len(phi_dn)) if phi_dn[y] == pushed]
                if not pulls:
                    raise ValidationError(
                        "SES defect: no pullback through the sub row at degree %d "
                        "for class member %d, lift %d" % (n, cyc, lift))
                for pull in pulls:
                    if not h_sub.is_cycle(pull):
                        raise TheoremViolationError(
                            "connecting chase left the cycles at degree %d" % (n - 1),
                            witness=(cyc, lift, pull))
                    results.add(h_sub.class_of(pull))
                    witness.append((cyc, lift, pull))
        if len(results) != 1:
            raise TheoremViolationError(
                "connecting map depends on choices at degree %d" % n,
                witness={"classes": sorted(results), "chases": witness})
        mapping.append(results.pop())
    try:
        return SemiHom(h_quot.quotient.quotient, h_sub.quotient.quotient,
                       mapping)
    except ValidationError as e:
        raise TheoremViolationError(
            "connecting map fails hom validation at degree %d: %s" % (n, e),
            witness=mapping) from e


@dataclasses.dataclass
class LongExactSequence:
    """The assembled sequence, top degree first.  ``maps`` is a list of
    (label, SemiHom); ``junctions`` records exactness at every interior
    object, including the padded ends.  ``two_of_three`` is the acyclicity
    corollary verdict: None when fewer than two of the complexes are acyclic,
    else a bool."""
    maps: list
    junctions: list
    acyclic: dict
    two_of_three: object

    @property
    def ok(self):
        return all(j["ok"] for j in self.junctions)


def long_exact_sequence(ses, hypotheses=None):
    if hypotheses is None:
        hypotheses = check_snake_hypotheses(ses)
    if not hypotheses.ok:
        raise PreconditionError("snake hypotheses fail: %r"
                                % [d for d in hypotheses.degrees
                                   if not hypotheses.ok_at(d["degree"])])
    top = ses.top
    maps = []
    for n in range(top, -1, -1):
        maps.append(("H_%d(phi)" % n, induced_map_on_homology(ses.rphi, n)))
        maps.append(("H_%d(psi)" % n, induced_map_on_homology(ses.rpsi, n)))
        if n >= 1:
            maps.append(("alpha_%d" % n,
                         connecting_homomorphism(ses, n, hypotheses)))
    trivial = _trivial_semimodule(ses.rsub.semiring)
    first = maps[0][1]
    pad_in = ("0 -> H_%d(sub)" % top, zero_hom(trivial, first.source))
    last = maps[-1][1]
    pad_out = ("H_0(quot) -> 0", zero_hom(last.target, trivial))
    chain = [pad_in] + maps + [pad_out]
    junctions = []
    for (la, f), (lb, g) in zip(chain, chain[1:]):
        wit = exactness_failure(f, g)
        junctions.append({"after": la, "before": lb, "ok": wit is None,
                          "witness": wit})
    acyclic = {
        "sub": all(homology(ses.rsub, n).class_count == 1
                   for n in range(top + 1)),
        "mid": all(homology(ses.rmid, n).class_count == 1
                   for n in range(top + 1)),
        "quot": all(homology(ses.rquot, n).class_count == 1
                    for n in range(top + 1)),
    }
    flags = list(acyclic.values())
    two_of_three = None
    if sum(flags) >= 2:
        two_of_three = all(flags)
    return LongExactSequence(maps, junctions, acyclic, two_of_three)


@dataclasses.dataclass
class NaturalityReport:
    """Ladder verdicts between two snake sequences connected by vertical
    maps.  ``squares`` lists every functorial square and every connecting
    square with its verdict."""
    squares: list

    @property
    def ok(self):
        return all(sq["ok"] for sq in self.squares)


def naturality_check(ses_top, ses_bot, v_sub, v_mid, v_quot):
    """Vertical chain maps (sub, mid, quot rows) between two certified SESs.
    The module-level 3x2 diagram must commute and both SESs must satisfy the
    snake hypotheses; those are preconditions, not findings.  The finding is
    whether the induced ladder commutes, square by square."""
    if v_sub.then(ses_bot.phi) != ses_top.phi.then(v_mid):
        raise PreconditionError("left vertical square does not commute")
    if v_mid.then(ses_bot.psi) != ses_top.psi.then(v_quot):
        raise PreconditionError("right vertical square does not commute")
    hyp_top = check_snake_hypotheses(ses_top)
    hyp_bot = check_snake_hypotheses(ses_bot)
    if not hyp_top.ok or not hyp_bot.ok:
        raise PreconditionError("snake hypotheses fail on a row")
    r_sub = radical_chain_map(v_sub)
    r_mid = radical_chain_map(v_mid)
    r_quot = radical_chain_map(v_quot)
    squares = []
    for n in range(ses_top.top + 1):
        lhs = induced_map_on_homology(ses_top.rphi, n).then(
            induced_map_on_homology(r_mid, n))
        rhs = induced_map_on_homology(r_sub, n).then(
            induced_map_on_homology(ses_bot.rphi, n))
        squares.append({"kind": "phi", "degree": n, "ok": lhs.map == rhs.map,
                        "lhs": lhs.map, "rhs": rhs.map})
        lhs = induced_map_on_homology(ses_top.rpsi, n).then(
            induced_map_on_homology(r_quot, n))
        rhs = induced_map_on_homology(r_mid, n).then(
            induced_map_on_homology(ses_bot.rpsi, n))
        squares.append({"kind": "psi", "degree": n, "ok": lhs.map == rhs.map,
                        "lhs": lhs.map, "rhs": rhs.map})
    for n in range(1, ses_top.top + 1):
        lhs = connecting_homomorphism(ses_top, n, hyp_top).then(
            induced_map_on_homology(r_sub, n - 1))
        rhs = induced_map_on_homology(r_quot, n).then(
            connecting_homomorphism(ses_bot, n, hyp_bot))
        squares.append({"kind": "alpha", "degree": n, "ok": lhs.map == rhs.map,
                        "lhs": lhs.map, "rhs": rhs.map})
    return NaturalityReport(squares)
