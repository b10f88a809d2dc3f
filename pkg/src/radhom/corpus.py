"""Deterministic instance corpus for the verification suite and the CLI.

Everything here is reproducible: randomized families take an explicit seed
and use their own random.Random, and all pools iterate in fixed order.  The
builders cover the families the verification suite needs: the cyclic-ring
semiring family, a module corpus for the radical oracle, composable hom and
chain-map pairs for the functor laws, classical homotopies built by the
phi + s f + f' s recipe, vector-space SESs of complexes satisfying the snake
hypotheses, naturality ladders, the line resolutions of F_p^2 / W for
p = 2, 3, lift jobs over them, and certified instances for the (beta, beta')
witness construction.
"""

import itertools
import random

from .errors import ValidationError
from .complexes import ChainComplex, ChainMap, RadicalSES
from .modules import (ModuleHom, SubmoduleSet, enumerate_module_homs,
                      identity_module_hom, make_module, quotient_module,
                      ring_as_module, zero_module_hom)
from .resolutions import RadicalResolution, is_radical_projective
from .rings import make_cyclic_ring
from .radical import radical_hom
from .semimodules import compose, enumerate_homs, is_steady


def vector_space_module(p, dim, name=None):
    """F_p^dim with base-p big-endian element encoding."""
    ring = make_cyclic_ring(p)
    size = p ** dim

    def dec(i):
        digits = []
        for _ in range(dim):
            digits.append(i % p)
            i //= p
        return tuple(reversed(digits))

    def enc(digits):
        i = 0
        for d in digits:
            i = i * p + d
        return i

    add = [[enc([(a + b) % p for a, b in zip(dec(i), dec(j))])
            for j in range(size)] for i in range(size)]
    act = [[enc([(r * a) % p for a in dec(i)]) for i in range(size)]
           for r in range(p)]
    return make_module(ring, add, act, 0, name=name or "F%d^%d" % (p, dim))


def line_subspaces(p):
    """Element tuples of the 1-dimensional subspaces of F_p^2, in a fixed
    order."""
    v = vector_space_module(p, 2)
    lines = []
    for e in range(1, v.size):
        span = sorted({v.act(r, e) for r in range(p)})
        if len(span) == p and tuple(span) not in lines:
            lines.append(tuple(span))
    return lines


def direct_sum_module(a, b, name=None):
    if a.ring != b.ring:
        raise ValidationError("direct sum needs a common ring")
    size = a.size * b.size

    def enc(i, j):
        return i * b.size + j

    add = [[0] * size for _ in range(size)]
    act = [[0] * size for _ in range(a.ring.size)]
    for i1 in range(a.size):
        for j1 in range(b.size):
            e = enc(i1, j1)
            for i2 in range(a.size):
                for j2 in range(b.size):
                    add[e][enc(i2, j2)] = enc(a.add(i1, i2), b.add(j1, j2))
            for r in range(a.ring.size):
                act[r][e] = enc(a.act(r, i1), b.act(r, j1))
    return make_module(a.ring, add, act, 0,
                       name=name or "%s+%s" % (a.name, b.name))


def zero_module(ring):
    return make_module(ring, [[0]], [[0] for _ in range(ring.size)], 0,
                       name="0")


def restrict_complex(c, subsets):
    """Degreewise submodule complex with its inclusion components.  Each
    subset must be a submodule and must absorb the differential."""
    mods, incls = [], []
    for n, els in enumerate(subsets):
        m = c.modules[n]
        sub = SubmoduleSet(m, els)
        els = sub.elements
        idx = {e: i for i, e in enumerate(els)}
        sadd = [[idx[m.add(a, b)] for b in els] for a in els]
        sact = [[idx[m.act(r, a)] for a in els] for r in range(m.ring.size)]
        sm = make_module(m.ring, sadd, sact, idx[m.zero],
                         name="%s|%d" % (m.name, len(els)))
        mods.append(sm)
        incls.append(ModuleHom(sm, m, list(els)))
    diffs = []
    for n in range(1, len(subsets)):
        pos = {e: i for i, e in enumerate(incls[n - 1].map)}
        arr = []
        for e in incls[n].map:
            img = c.d(n).map[e]
            if img not in pos:
                raise ValidationError(
                    "differential leaves the subset at degree %d" % n)
            arr.append(pos[img])
        diffs.append(ModuleHom(mods[n], mods[n - 1], arr))
    sub_c = ChainComplex(mods, diffs)
    return sub_c, ChainMap(sub_c, c, incls)


def quotient_complex(c, subsets):
    """Degreewise quotient complex with its projection components."""
    mods, projs = [], []
    for n, els in enumerate(subsets):
        q, p = quotient_module(c.modules[n], SubmoduleSet(c.modules[n], els))
        mods.append(q)
        projs.append(p)
    diffs = []
    for n in range(1, len(subsets)):
        rep = [projs[n].map.index(i) for i in range(mods[n].size)]
        diffs.append(ModuleHom(mods[n], mods[n - 1],
                               [projs[n - 1].map[c.d(n).map[r]] for r in rep]))
    quot_c = ChainComplex(mods, diffs)
    return quot_c, ChainMap(c, quot_c, projs)


class SESInstance:
    """A certified SES of complexes plus the construction data needed for
    building ladders on top of it."""

    def __init__(self, label, mid, subsets):
        self.label = label
        self.mid = mid
        self.subsets = [SubmoduleSet(mid.modules[n], els).elements
                        for n, els in enumerate(subsets)]
        self.sub, self.phi = restrict_complex(mid, subsets)
        self.quot, self.psi = quotient_complex(mid, subsets)
        self.ses = RadicalSES(self.sub, mid, self.quot, self.phi, self.psi)

    def __repr__(self):
        return "SESInstance(%r)" % self.label


def induced_vertical_maps(top, bot, mid_arrays):
    """Vertical chain maps (sub, mid, quot) induced by degreewise maps of the
    middle complexes that respect the chosen subsets.  Representative
    independence of the quotient components is scanned explicitly."""
    comps = [ModuleHom(top.mid.modules[n], bot.mid.modules[n], arr)
             for n, arr in enumerate(mid_arrays)]
    v_mid = ChainMap(top.mid, bot.mid, comps)
    sub_comps = []
    for n in range(top.mid.top + 1):
        pos = {e: i for i, e in enumerate(bot.phi.components[n].map)}
        arr = []
        for e in top.phi.components[n].map:
            img = comps[n].map[e]
            if img not in pos:
                raise ValidationError(
                    "vertical map does not respect the subsets at degree %d" % n)
            arr.append(pos[img])
        sub_comps.append(ModuleHom(top.sub.modules[n], bot.sub.modules[n], arr))
    v_sub = ChainMap(top.sub, bot.sub, sub_comps)
    quot_comps = []
    for n in range(top.mid.top + 1):
        p_top = top.psi.components[n].map
        p_bot = bot.psi.components[n].map
        arr = [None] * top.quot.modules[n].size
        for x in range(top.mid.modules[n].size):
            c = p_top[x]
            val = p_bot[comps[n].map[x]]
            if arr[c] is None:
                arr[c] = val
            elif arr[c] != val:
                raise ValidationError(
                    "vertical map is not constant on cosets at degree %d" % n)
        quot_comps.append(ModuleHom(top.quot.modules[n], bot.quot.modules[n],
                                    arr))
    v_quot = ChainMap(top.quot, bot.quot, quot_comps)
    return v_sub, v_mid, v_quot


def semiring_family(n_max=30):
    """Z_n for n = 1..n_max."""
    return [make_cyclic_ring(n) for n in range(1, n_max + 1)]


def module_corpus():
    """Modules for the axiom and radical-oracle sweeps: the cyclic family,
    vector spaces, quotients, and direct sums, all within desk bounds."""
    mods = []
    for n in range(2, 17):
        mods.append(ring_as_module(make_cyclic_ring(n)))
    mods.append(vector_space_module(2, 2))
    mods.append(vector_space_module(2, 3))
    mods.append(vector_space_module(3, 2))
    z12 = ring_as_module(make_cyclic_ring(12))
    mods.append(quotient_module(z12, SubmoduleSet(z12, (0, 4, 8)))[0])
    z8 = ring_as_module(make_cyclic_ring(8))
    mods.append(quotient_module(z8, SubmoduleSet(z8, (0, 4)))[0])
    z4 = ring_as_module(make_cyclic_ring(4))
    z2_over_z4 = quotient_module(z4, SubmoduleSet(z4, (0, 2)))[0]
    mods.append(direct_sum_module(z4, z2_over_z4))
    mods.append(direct_sum_module(z4, z4))
    return mods


def _hom_pool_modules():
    """Per-ring pools of small modules with cheap hom enumeration."""
    pools = []
    z2 = make_cyclic_ring(2)
    pools.append([ring_as_module(z2), vector_space_module(2, 2),
                  zero_module(z2)])
    z4 = make_cyclic_ring(4)
    m4 = ring_as_module(z4)
    pools.append([m4, quotient_module(m4, SubmoduleSet(m4, (0, 2)))[0],
                  zero_module(z4)])
    z6 = make_cyclic_ring(6)
    m6 = ring_as_module(z6)
    pools.append([m6, quotient_module(m6, SubmoduleSet(m6, (0, 2, 4)))[0],
                  quotient_module(m6, SubmoduleSet(m6, (0, 3)))[0]])
    z3 = make_cyclic_ring(3)
    pools.append([ring_as_module(z3), vector_space_module(3, 2)])
    return pools


def functor_pairs(seed=20260823, count=120):
    """Composable module-hom pairs (f: A -> B, g: B -> C), seeded."""
    rng = random.Random(seed)
    pools = _hom_pool_modules()
    homs = {}

    def homs_between(a, b):
        key = (id(a), id(b))
        if key not in homs:
            homs[key] = enumerate_module_homs(a, b)
        return homs[key]

    pairs = []
    while len(pairs) < count:
        pool = rng.choice(pools)
        a, b, c = (rng.choice(pool) for _ in range(3))
        fs, gs = homs_between(a, b), homs_between(b, c)
        if not fs or not gs:
            continue
        pairs.append((rng.choice(fs), rng.choice(gs)))
    return pairs


def _complex_pool():
    """Small module complexes per ring, lengths 1..4."""
    out = []
    z2 = make_cyclic_ring(2)
    f2 = ring_as_module(z2)
    v2 = vector_space_module(2, 2)
    out.append(ChainComplex([f2, f2], [identity_module_hom(f2)]))
    out.append(ChainComplex([f2] * 5,
                            [identity_module_hom(f2),
                             ModuleHom(f2, f2, [0, 0]),
                             identity_module_hom(f2),
                             ModuleHom(f2, f2, [0, 0])]))
    out.append(ChainComplex([v2, v2], [identity_module_hom(v2)]))
    out.append(ChainComplex([f2, v2], [ModuleHom(v2, f2, [0, 1, 0, 1])]))
    out.append(ChainComplex([f2, v2, v2],
                            [ModuleHom(v2, f2, [0, 1, 0, 1]),
                             ModuleHom(v2, v2, [0, 0, 2, 2])]))
    z4 = make_cyclic_ring(4)
    m4 = ring_as_module(z4)
    out.append(ChainComplex([m4, m4], [ModuleHom(m4, m4, [0, 2, 0, 2])]))
    out.append(ChainComplex([m4, m4, m4],
                            [ModuleHom(m4, m4, [0, 2, 0, 2]),
                             ModuleHom(m4, m4, [0, 2, 0, 2])]))
    out.append(ChainComplex([m4, m4, m4, m4],
                            [ModuleHom(m4, m4, [0, 2, 0, 2]),
                             ModuleHom(m4, m4, [0, 2, 0, 2]),
                             ModuleHom(m4, m4, [0, 2, 0, 2])]))
    return out


def _chain_maps_between(c1, c2, cache={}):
    key = (id(c1), id(c2))
    if key not in cache:
        per_degree = [enumerate_module_homs(c1.modules[n], c2.modules[n])
                      for n in range(c1.top + 1)]
        maps = []
        for combo in itertools.product(*per_degree):
            try:
                maps.append(ChainMap(c1, c2, combo))
            except ValidationError:
                pass
        cache[key] = maps
    return cache[key]


def chain_map_pairs(seed=20260824, count=100):
    """Composable chain-map pairs over the complex pool, seeded."""
    rng = random.Random(seed)
    pool = _complex_pool()
    by_ring = {}
    for c in pool:
        by_ring.setdefault(c.ring.name, []).append(c)
    pairs = []
    keys = sorted(by_ring)
    while len(pairs) < count:
        ring = rng.choice(keys)
        group = by_ring[ring]
        a, b, c = (rng.choice(group) for _ in range(3))
        if not (a.top == b.top == c.top):
            continue
        fs = _chain_maps_between(a, b)
        gs = _chain_maps_between(b, c)
        if not fs or not gs:
            continue
        pairs.append((rng.choice(fs), rng.choice(gs)))
    return pairs


def homotopy_instances(seed=20260825, count=60):
    """(phi, psi, s) with psi_n = phi_n + s_{n-1} f_n + f'_{n+1} s_n, so each
    is a classical homotopy by construction; psi is rebuilt as a validated
    chain map."""
    rng = random.Random(seed)
    pool = _complex_pool()
    by_ring = {}
    for c in pool:
        by_ring.setdefault(c.ring.name, []).append(c)
    keys = sorted(by_ring)
    out = []
    while len(out) < count:
        ring = rng.choice(keys)
        group = by_ring[ring]
        c1, c2 = rng.choice(group), rng.choice(group)
        if c1.top != c2.top:
            continue
        maps = _chain_maps_between(c1, c2)
        if not maps:
            continue
        phi = rng.choice(maps)
        s = [rng.choice(enumerate_module_homs(c1.modules[n],
                                              c2.modules[n + 1]))
             for n in range(c1.top)]
        comps = []
        for n in range(c1.top + 1):
            h = phi.components[n]
            if n >= 1:
                h = h.pointwise_add(c1.d(n).then(s[n - 1]))
            if n <= c1.top - 1:
                h = h.pointwise_add(s[n].then(c2.d(n + 1)))
            comps.append(h)
        psi = ChainMap(c1, c2, comps)
        out.append((phi, psi, s))
    return out


def snake_instances():
    """F2 SESs of complexes whose radical rows are exact and whose snake
    hypotheses hold in every degree; the last two have all three complexes
    acyclic, feeding the two-of-three check."""
    v = vector_space_module(2, 2)
    f2 = vector_space_module(2, 1, name="F2")
    id_v = ChainComplex([v, v], [identity_module_hom(v)])
    id_f2 = ChainComplex([f2, f2], [identity_module_hom(f2)])
    three = ChainComplex([v, v, v],
                         [identity_module_hom(v), zero_module_hom(v, v)])
    out = [
        SESInstance("line-02", id_v, [(0, 2), (0,)]),
        SESInstance("line-01", id_v, [(0, 1), (0,)]),
        SESInstance("line-03", id_v, [(0, 3), (0,)]),
        SESInstance("full-f2", id_f2, [(0, 1), (0,)]),
        SESInstance("three-term", three, [(0, 2), (0,), (0,)]),
        SESInstance("acyclic-v", id_v, [(0,), (0,)]),
        SESInstance("acyclic-f2", id_f2, [(0,), (0,)]),
    ]
    return out


def naturality_instances():
    """(top, bot, v_sub, v_mid, v_quot) ladders over the snake corpus."""
    insts = snake_instances()
    line02, line01 = insts[0], insts[1]
    acyclic_v = insts[5]
    ladders = []
    ident = [list(range(m.size)) for m in line02.mid.modules]
    ladders.append((line02, line02) + induced_vertical_maps(line02, line02,
                                                            ident))
    proj_w = [0, 0, 2, 2]
    ladders.append((line02, line02) +
                   induced_vertical_maps(line02, line02, [proj_w, proj_w]))
    zeros = [[0] * m.size for m in line01.mid.modules]
    ladders.append((line01, line01) + induced_vertical_maps(line01, line01,
                                                            zeros))
    ladders.append((acyclic_v, line02) +
                   induced_vertical_maps(acyclic_v, line02, ident))
    return ladders


def line_resolution(p, line):
    """The resolution of M = F_p^2 / W off P_0 = F_p^2 and P_1 = W: the
    radical image is 0 -> R(W) -> R(V) -> R(M) -> 0."""
    v = vector_space_module(p, 2)
    line = tuple(sorted(line))
    idx = {e: i for i, e in enumerate(line)}
    w = make_module(v.ring, [[idx[v.add(a, b)] for b in line] for a in line],
                    [[idx[v.act(r, a)] for a in line] for r in range(p)],
                    0, name="W%s" % (line,))
    incl = ModuleHom(w, v, list(line))
    m, proj = quotient_module(v, SubmoduleSet(v, line))
    return RadicalResolution(m, [v, w], [incl], proj)


def example_resolutions():
    """All line resolutions for p = 2 and p = 3, labeled."""
    out = []
    for p in (2, 3):
        for i, line in enumerate(line_subspaces(p)):
            out.append(("F%d-line%d" % (p, i), line_resolution(p, line)))
    return out


def lift_jobs():
    """(label, g, source resolution, target resolution) jobs covering
    identity, zero, scalar, and cross-line maps."""
    res = dict(example_resolutions())
    jobs = []
    for key in ("F2-line0", "F2-line1", "F2-line2"):
        r = res[key]
        jobs.append(("id-%s" % key, identity_module_hom(r.target), r, r))
    r0 = res["F2-line0"]
    jobs.append(("zero-F2-line0", zero_module_hom(r0.target, r0.target),
                 r0, r0))
    r1 = res["F2-line1"]
    cross = next(h for h in enumerate_module_homs(r0.target, r1.target)
                 if h.is_injective())
    jobs.append(("cross-F2-line0-line1", cross, r0, r1))
    r3 = res["F3-line0"]
    jobs.append(("id-F3-line0", identity_module_hom(r3.target), r3, r3))
    jobs.append(("zero-F3-line0", zero_module_hom(r3.target, r3.target),
                 r3, r3))
    scalar2 = ModuleHom(r3.target, r3.target,
                        [r3.target.act(2, x) for x in range(r3.target.size)])
    jobs.append(("scalar2-F3-line0", scalar2, r3, r3))
    return jobs


def lemma_pro_instances():
    """(label, f, certificate, alpha, alpha') with R(f) steady and equal
    composites, covering alpha = alpha' and distinct pairs over several
    rings."""
    families = []
    z4 = make_cyclic_ring(4)
    m4 = ring_as_module(z4)
    q4 = quotient_module(m4, SubmoduleSet(m4, (0, 2)))[0]
    families.append(("z4", m4, m4, ModuleHom(m4, q4,
                                             [0, 1, 0, 1])))
    f2 = vector_space_module(2, 1, name="F2")
    v2 = vector_space_module(2, 2)
    families.append(("f2", f2, v2, ModuleHom(v2, f2, [0, 0, 1, 1])))
    families.append(("f2z", f2, v2, zero_module_hom(v2, f2)))
    f3 = vector_space_module(3, 1, name="F3")
    v3 = vector_space_module(3, 2)
    families.append(("f3", f3, v3,
                     ModuleHom(v3, f3, [x // 3 for x in range(9)])))
    z6 = make_cyclic_ring(6)
    m6 = ring_as_module(z6)
    q6 = quotient_module(m6, SubmoduleSet(m6, (0, 3)))[0]
    families.append(("z6", m6, m6, ModuleHom(m6, q6,
                                             [x % 3 for x in range(6)])))
    out = []
    for label, p_mod, m_mod, f in families:
        if f.source != m_mod:
            raise ValidationError("family %s is inconsistent" % label)
        rf = radical_hom(f)
        if not is_steady(rf):
            continue
        cert = is_radical_projective(p_mod, max_basis=2).certificate
        if cert is None:
            continue
        alphas = enumerate_homs(cert.semimodule, rf.source)
        groups = {}
        for a in alphas:
            groups.setdefault(compose(rf, a).map, []).append(a)
        added = 0
        for key in sorted(groups):
            grp = groups[key]
            out.append(("%s-diag%d" % (label, added), f, cert, grp[0], grp[0]))
            added += 1
            if len(grp) >= 2:
                out.append(("%s-mixed%d" % (label, added), f, cert,
                            grp[0], grp[1]))
                added += 1
            if added >= 3:
                break
    return out


def doubling_complex():
    """The Z4 doubling two-term complex used for the frozen homology counts."""
    z4 = make_cyclic_ring(4)
    m = ring_as_module(z4)
    return ChainComplex([m, m], [ModuleHom(m, m, [0, 2, 0, 2])])


def resolution_as_complex(r):
    """The augmented resolution viewed as a module complex with the resolved
    module in degree 0."""
    mods = [r.target] + list(r.modules)
    diffs = [r.aug] + list(r.diffs)
    return ChainComplex(mods, diffs)
