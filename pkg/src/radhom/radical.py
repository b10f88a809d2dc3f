"""The radical functor: from finite modules to semimodules over the
radical-ideal semiring.

For a module M the carrier of R(M) is the set of radical submodules with

    N (+) L = rad(N + L)        I (.) N = rad(I N)

over the semiring of radical ideals; the zero is rad(0).  A module hom f
induces N |-> rad(f(N)).  Both constructions are verified against the full
axiom scans on every instance; a failure would be a bug (or a counterexample
to the theorems this package exercises), so it raises
InternalConsistencyError rather than passing silently.
"""

import dataclasses

from .errors import InternalConsistencyError, ValidationError
from .modules import (SubmoduleSet, enumerate_submodules, hom_image,
                      identity_module_hom, radical_of_submodule,
                      submodule_generated)
from .rings import build_radical_semiring
from .semimodules import (FiniteSemimodule, SemiHom, identity_hom,
                          verify_semimodule_axioms)


class RadicalSemimodule:
    """R(M): the radical submodules of a module as a verified semimodule
    over the radical-ideal semiring of its ring."""

    def __init__(self, module):
        rs = build_radical_semiring(module.ring)
        subs = tuple(n for n in enumerate_submodules(module)
                     if radical_of_submodule(module, n) == n)
        index = {n.elements: i for i, n in enumerate(subs)}
        k = len(subs)
        add = [[0] * k for _ in range(k)]
        for i in range(k):
            for j in range(k):
                s = radical_of_submodule(
                    module, submodule_generated(
                        module, subs[i].elements + subs[j].elements))
                add[i][j] = index[s.elements]
        action = []
        for ideal in rs.ideals:
            row = []
            for n in subs:
                prods = [module.act(r, x) for r in ideal.elements
                         for x in n.elements]
                s = radical_of_submodule(module,
                                         submodule_generated(module, prods))
                row.append(index[s.elements])
            action.append(row)
        zero = index[radical_of_submodule(
            module, submodule_generated(module, [])).elements]
        sm = FiniteSemimodule(rs.semiring, add, action, zero,
                              name="Rad(%s)" % module.name)
        violations = verify_semimodule_axioms(sm)
        if violations:
            raise InternalConsistencyError(
                "radical semimodule of %s breaks axioms: %s"
                % (module.name, violations[0]))
        self.module = module
        self.radsemiring = rs
        self.submodules = subs
        self.index = index
        self.semimodule = sm

    def index_of(self, sub):
        return self.index[sub.elements]

    def submodule_at(self, i):
        return self.submodules[i]

    def __repr__(self):
        return "RadicalSemimodule(%s, size=%d)" % (self.module.name,
                                                   len(self.submodules))


def radical_semimodule(module):
    """R(M), memoized on the module object so repeated functor applications
    share one carrier."""
    cached = getattr(module, "_radsm_cache", None)
    if cached is None:
        cached = RadicalSemimodule(module)
        module._radsm_cache = cached
    return cached


def radical_hom(f):
    """R(f): N |-> rad(f(N)) on radical submodules, as a verified SemiHom."""
    rsrc = radical_semimodule(f.source)
    rtgt = radical_semimodule(f.target)
    mapping = []
    for n in rsrc.submodules:
        img = SubmoduleSet(f.target, {f.map[x] for x in n.elements})
        mapping.append(rtgt.index_of(radical_of_submodule(f.target, img)))
    try:
        return SemiHom(rsrc.semimodule, rtgt.semimodule, mapping)
    except ValidationError as e:
        raise InternalConsistencyError(
            "radical image map fails hom validation: %s" % e) from e


@dataclasses.dataclass
class FunctorLawReport:
    identity_checked: int
    composition_checked: int
    violations: list

    @property
    def ok(self):
        return not self.violations


def check_functor_laws(pairs):
    """Functor laws on composable module-hom pairs (f, g) with
    g.source == f.target:  R(id) == id on every module involved, and
    R(g after f) == R(g) after R(f)."""
    violations = []
    modules = []
    for f, g in pairs:
        if g.source != f.target:
            raise ValidationError("pair is not composable")
        for m in (f.source, f.target, g.target):
            if all(m is not seen for seen in modules):
                modules.append(m)
    for m in modules:
        if radical_hom(identity_module_hom(m)) != identity_hom(
                radical_semimodule(m).semimodule):
            violations.append(("identity", m.name))
    for k, (f, g) in enumerate(pairs):
        lhs = radical_hom(f.then(g))
        rhs = radical_hom(f).then(radical_hom(g))
        if lhs != rhs:
            violations.append(("composition", k, lhs.map, rhs.map))
    return FunctorLawReport(len(modules), len(pairs), violations)


def radical_image_of_submodule(f, n):
    """rad(f(N)) as a submodule of the target, for tests and diagnostics."""
    img = SubmoduleSet(f.target, {f.map[x] for x in n.elements})
    return radical_of_submodule(f.target, img)


def hom_image_is_submodule(f):
    """The image of a module hom, validated as a submodule (always true for
    modules; exercised as a sanity check)."""
    return hom_image(f)
