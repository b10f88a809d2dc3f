"""Structured-text job formats.

Rings, modules, complexes, short exact sequences and resolutions arrive as
JSON documents; every parser returns a fully validated core object or raises
a validation error naming the offending location.  Serialization helpers
emit canonically ordered, whitespace-stable JSON so identical inputs always
produce identical bytes.
"""

import json

from .complexes import ChainComplex, ChainMap, RadicalSES
from .errors import ValidationError
from .modules import ModuleHom, ModuleTable, make_module, ring_as_module
from .resolutions import RadicalResolution
from .rings import FiniteRing, make_cyclic_ring, make_product_ring

FORMAT_VERSION = "1"


def _fail(where, msg):
    raise ValidationError("at %s: %s" % (where, msg))


def _need(doc, key, where):
    if not isinstance(doc, dict):
        _fail(where, "expected an object")
    if key not in doc:
        _fail(where, "missing field %r" % key)
    return doc[key]


def _int_field(doc, key, where):
    v = _need(doc, key, where)
    if not isinstance(v, int) or isinstance(v, bool):
        _fail("%s.%s" % (where, key), "expected an integer")
    return v


def _int_matrix(doc, key, size, where):
    v = _need(doc, key, where)
    spot = "%s.%s" % (where, key)
    if not isinstance(v, list) or len(v) != size:
        _fail(spot, "expected %d rows" % size)
    for i, row in enumerate(v):
        if not isinstance(row, list) or len(row) != size:
            _fail("%s[%d]" % (spot, i), "expected %d entries" % size)
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool):
                _fail("%s[%d][%d]" % (spot, i, j), "expected an integer")
    return v


def parse_ring(doc, where="ring"):
    """Ring spec -> FiniteRing.

    {"kind":"zn","n":12} | {"kind":"product","factors":[spec,spec]} |
    {"kind":"table","size":4,"add":[[..]],"mul":[[..]],"zero":0,"one":1}
    """
    kind = _need(doc, "kind", where)
    if kind == "zn":
        n = _int_field(doc, "n", where)
        if n < 1:
            _fail("%s.n" % where, "modulus must be positive")
        return make_cyclic_ring(n)
    if kind == "product":
        factors = _need(doc, "factors", where)
        if not isinstance(factors, list) or len(factors) != 2:
            _fail("%s.factors" % where, "expected exactly two factor specs")
        a = parse_ring(factors[0], "%s.factors[0]" % where)
        b = parse_ring(factors[1], "%s.factors[1]" % where)
        return make_product_ring(a, b)
    if kind == "table":
        size = _int_field(doc, "size", where)
        if size < 1:
            _fail("%s.size" % where, "size must be positive")
        add = _int_matrix(doc, "add", size, where)
        mul = _int_matrix(doc, "mul", size, where)
        zero = _int_field(doc, "zero", where)
        one = _int_field(doc, "one", where)
        return FiniteRing(add, mul, zero, one, name="table%d" % size)
    _fail("%s.kind" % where, "unknown ring kind %r" % (kind,))


def parse_module(doc, where="module", ring=None):
    """Module spec -> ModuleTable.

    {"kind":"ring-as-module","ring":ringspec} |
    {"kind":"table","ring":ringspec,"size":4,"add":[[..]],"action":[[..]],
     "zero":0}

    A caller that already parsed the ambient ring passes it in; the spec's
    own "ring" field must then agree with it.
    """
    kind = _need(doc, "kind", where)
    if kind not in ("ring-as-module", "table"):
        _fail("%s.kind" % where, "unknown module kind %r" % (kind,))
    r = parse_ring(_need(doc, "ring", where), "%s.ring" % where)
    if ring is not None:
        if r != ring:
            _fail("%s.ring" % where, "module ring differs from ambient ring")
        r = ring
    if kind == "ring-as-module":
        return ring_as_module(r)
    size = _int_field(doc, "size", where)
    if size < 1:
        _fail("%s.size" % where, "size must be positive")
    add = _int_matrix(doc, "add", size, where)
    action = _need(doc, "action", where)
    spot = "%s.action" % where
    if not isinstance(action, list) or len(action) != r.size:
        _fail(spot, "expected one row per ring element (%d)" % r.size)
    for i, row in enumerate(action):
        if not isinstance(row, list) or len(row) != size:
            _fail("%s[%d]" % (spot, i), "expected %d entries" % size)
    zero = _int_field(doc, "zero", where)
    return make_module(r, add, action, zero, name="table%d" % size)


def parse_hom(arr, source, target, where="hom"):
    """Index array -> ModuleHom from source to target."""
    if not isinstance(arr, list) or len(arr) != source.size:
        _fail(where, "expected %d image indices" % source.size)
    for i, x in enumerate(arr):
        if not isinstance(x, int) or isinstance(x, bool):
            _fail("%s[%d]" % (where, i), "expected an integer")
        if not 0 <= x < target.size:
            _fail("%s[%d]" % (where, i), "index %d outside target" % x)
    return ModuleHom(source, target, arr)


def parse_complex(doc, where="complex", ring=None):
    """Complex spec -> ChainComplex.

    {"modules":[modspec,..],"diffs":[homarray,..]} with modules listed
    bottom degree first and diffs[n-1] the map from degree n to n-1.
    """
    mods_doc = _need(doc, "modules", where)
    if not isinstance(mods_doc, list) or not mods_doc:
        _fail("%s.modules" % where, "expected a nonempty array")
    modules = []
    for i, md in enumerate(mods_doc):
        m = parse_module(md, "%s.modules[%d]" % (where, i), ring)
        if ring is None:
            ring = m.ring
        modules.append(m)
    diffs_doc = _need(doc, "diffs", where)
    if not isinstance(diffs_doc, list) or len(diffs_doc) != len(modules) - 1:
        _fail("%s.diffs" % where,
              "expected %d differentials" % (len(modules) - 1))
    diffs = [parse_hom(arr, modules[n + 1], modules[n],
                       "%s.diffs[%d]" % (where, n))
             for n, arr in enumerate(diffs_doc)]
    return ChainComplex(modules, diffs)


def parse_complex_map(arrs, source, target, where="map"):
    """Array of per-degree index arrays -> ChainMap of module complexes."""
    if not isinstance(arrs, list) or len(arrs) != source.top + 1:
        _fail(where, "expected %d degree components" % (source.top + 1))
    comps = [parse_hom(arr, source.modules[n], target.modules[n],
                       "%s[%d]" % (where, n))
             for n, arr in enumerate(arrs)]
    return ChainMap(source, target, comps)


def parse_ses(doc, where="ses"):
    """SES spec -> RadicalSES.

    {"sub":complexspec,"mid":complexspec,"quot":complexspec,
     "phi":[homarray,..],"psi":[homarray,..]}
    """
    sub = parse_complex(_need(doc, "sub", where), "%s.sub" % where)
    mid = parse_complex(_need(doc, "mid", where), "%s.mid" % where,
                        ring=sub.ring)
    quot = parse_complex(_need(doc, "quot", where), "%s.quot" % where,
                         ring=sub.ring)
    phi = parse_complex_map(_need(doc, "phi", where), sub, mid,
                            "%s.phi" % where)
    psi = parse_complex_map(_need(doc, "psi", where), mid, quot,
                            "%s.psi" % where)
    return RadicalSES(sub, mid, quot, phi, psi)


def parse_homotopy_job(doc, where="homotopy"):
    """Homotopy spec -> (phi, psi, s components).

    {"source":complexspec,"target":complexspec,"phi":[..],"psi":[..],
     "s":[homarray,..]} where s[n] maps degree n of the source into
    degree n+1 of the target (one entry per source degree below the top).
    """
    source = parse_complex(_need(doc, "source", where), "%s.source" % where)
    target = parse_complex(_need(doc, "target", where), "%s.target" % where,
                           ring=source.ring)
    phi = parse_complex_map(_need(doc, "phi", where), source, target,
                            "%s.phi" % where)
    psi = parse_complex_map(_need(doc, "psi", where), source, target,
                            "%s.psi" % where)
    s_doc = _need(doc, "s", where)
    if not isinstance(s_doc, list) or len(s_doc) != source.top:
        _fail("%s.s" % where, "expected %d components" % source.top)
    s = [parse_hom(arr, source.modules[n], target.modules[n + 1],
                   "%s.s[%d]" % (where, n))
         for n, arr in enumerate(s_doc)]
    return phi, psi, s


def parse_resolution(doc, where="resolution"):
    """Resolution spec -> RadicalResolution.

    {"target":modspec,"modules":[modspec,..],"diffs":[homarray,..],
     "aug":homarray}
    """
    target = parse_module(_need(doc, "target", where), "%s.target" % where)
    mods_doc = _need(doc, "modules", where)
    if not isinstance(mods_doc, list) or not mods_doc:
        _fail("%s.modules" % where, "expected a nonempty array")
    modules = [parse_module(md, "%s.modules[%d]" % (where, i), target.ring)
               for i, md in enumerate(mods_doc)]
    diffs_doc = _need(doc, "diffs", where)
    if not isinstance(diffs_doc, list) or len(diffs_doc) != len(modules) - 1:
        _fail("%s.diffs" % where,
              "expected %d differentials" % (len(modules) - 1))
    diffs = [parse_hom(arr, modules[n + 1], modules[n],
                       "%s.diffs[%d]" % (where, n))
             for n, arr in enumerate(diffs_doc)]
    aug = parse_hom(_need(doc, "aug", where), modules[0], target,
                    "%s.aug" % where)
    return RadicalResolution(target, modules, diffs, aug)


def parse_subset_list(arr, size, where="sub"):
    """List of sorted index arrays -> tuple of frozensets, bounds checked."""
    if not isinstance(arr, list):
        _fail(where, "expected an array of index arrays")
    out = []
    for i, part in enumerate(arr):
        spot = "%s[%d]" % (where, i)
        if not isinstance(part, list):
            _fail(spot, "expected an index array")
        for x in part:
            if not isinstance(x, int) or isinstance(x, bool):
                _fail(spot, "expected integers")
            if not 0 <= x < size:
                _fail(spot, "index %d out of range" % x)
        out.append(frozenset(part))
    return tuple(out)


def load_document(path):
    """Read one JSON job document from disk."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError("cannot read %s: %s" % (path, exc.strerror))
    except json.JSONDecodeError as exc:
        raise ValidationError("%s is not valid JSON: line %d column %d"
                              % (path, exc.lineno, exc.colno))


def canonical_json(obj):
    """Canonical serialization: sorted keys, fixed whitespace, newline end."""
    return json.dumps(obj, sort_keys=True, indent=2,
                      separators=(",", ": ")) + "\n"


def subset_array(elements):
    return sorted(elements)


def hom_array(h):
    return list(h.map)


def quotient_doc(bq):
    """BourneQuotient -> {"classes":[[indices]],"reps":[indices]}."""
    return {"classes": [list(c) for c in bq.classes],
            "reps": list(bq.reps)}
