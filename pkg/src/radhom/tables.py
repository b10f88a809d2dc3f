"""Low-level helpers for algebras given by explicit operation tables.

Elements are always the indices ``0..size-1``.  A binary operation is a
``size x size`` table of indices; a scalar action is a table indexed as
``action[scalar][element]``.  Everything here is exhaustive scanning, which
is the point: at desk scale the scan *is* the proof.
"""

import itertools

from .errors import SearchBoundExceeded


def check_table_shape(size, table, name):
    violations = []
    if len(table) != size:
        return ["%s table has %d rows, expected %d" % (name, len(table), size)]
    for i, row in enumerate(table):
        if len(row) != size:
            violations.append("%s table row %d has length %d, expected %d"
                              % (name, i, len(row), size))
            continue
        for j, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < size):
                violations.append("%s table entry (%d,%d)=%r out of range"
                                  % (name, i, j, v))
    return violations


def check_comm_monoid(size, table, unit, name):
    """Violations of commutativity, associativity and the unit law."""
    violations = []
    for a in range(size):
        for b in range(size):
            if table[a][b] != table[b][a]:
                violations.append("%s not commutative at (%d,%d)" % (name, a, b))
    for a in range(size):
        if table[a][unit] != a:
            violations.append("%s unit law fails at %d" % (name, a))
    for a in range(size):
        for b in range(size):
            ab = table[a][b]
            for c in range(size):
                if table[ab][c] != table[a][table[b][c]]:
                    violations.append("%s not associative at (%d,%d,%d)"
                                      % (name, a, b, c))
    return violations


def check_inverses(size, add, zero):
    violations = []
    for a in range(size):
        if not any(add[a][b] == zero for b in range(size)):
            violations.append("no additive inverse for %d" % a)
    return violations


def check_distributive(size, add, mul):
    violations = []
    for a in range(size):
        for b in range(size):
            for c in range(size):
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    violations.append("mul does not distribute at (%d,%d,%d)"
                                      % (a, b, c))
    return violations


def check_absorbing(size, mul, zero):
    violations = []
    for a in range(size):
        if mul[zero][a] != zero or mul[a][zero] != zero:
            violations.append("zero not absorbing at %d" % a)
    return violations


def check_action_laws(s_size, s_add, s_mul, s_one, s_zero,
                      m_size, m_add, m_action, m_zero):
    """Scalar-action laws shared by modules over rings and semimodules over
    semirings: both distributivities, associativity of the action, the unit
    law, and absorption by both zeros."""
    violations = []
    for r in range(s_size):
        for m in range(m_size):
            for m2 in range(m_size):
                if m_action[r][m_add[m][m2]] != m_add[m_action[r][m]][m_action[r][m2]]:
                    violations.append(
                        "action does not distribute over element sum at (%d,%d,%d)"
                        % (r, m, m2))
    for r in range(s_size):
        for r2 in range(s_size):
            for m in range(m_size):
                if m_action[s_add[r][r2]][m] != m_add[m_action[r][m]][m_action[r2][m]]:
                    violations.append(
                        "action does not distribute over scalar sum at (%d,%d,%d)"
                        % (r, r2, m))
                if m_action[s_mul[r][r2]][m] != m_action[r][m_action[r2][m]]:
                    violations.append(
                        "action not associative at (%d,%d,%d)" % (r, r2, m))
    for m in range(m_size):
        if m_action[s_one][m] != m:
            violations.append("action unit law fails at %d" % m)
        if m_action[s_zero][m] != m_zero:
            violations.append("zero scalar does not absorb at %d" % m)
    for r in range(s_size):
        if m_action[r][m_zero] != m_zero:
            violations.append("zero element not absorbed by scalar %d" % r)
    return violations


def close_under(seeds, add, action, zero):
    """Smallest subset containing ``seeds`` and ``zero``, closed under the
    binary table and under every scalar row of ``action`` (pass ``None`` to
    skip the action)."""
    out = set(seeds)
    out.add(zero)
    frontier = list(out)
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(out):
                s = add[x][y]
                if s not in out:
                    out.add(s)
                    nxt.append(s)
            if action is not None:
                for row in action:
                    s = row[x]
                    if s not in out:
                        out.add(s)
                        nxt.append(s)
        frontier = nxt
    return frozenset(out)


def subset_closed(elements, add, action, zero):
    """Reason the subset is not closed, or None.  Scans membership of zero,
    all pairwise sums, and all scalar multiples."""
    s = set(elements)
    if zero not in s:
        return "missing zero element %d" % zero
    for x in elements:
        for y in elements:
            if add[x][y] not in s:
                return "not closed under sum at (%d,%d)" % (x, y)
    if action is not None:
        for r, row in enumerate(action):
            for x in elements:
                if row[x] not in s:
                    return "not closed under action at scalar %d, element %d" % (r, x)
    return None


def canon_key(elements):
    """Canonical sort key for element subsets: cardinality, then the sorted
    element tuple.  Used everywhere ideals or submodules are listed."""
    t = tuple(sorted(elements))
    return (len(t), t)


def greedy_generators(size, add, action, zero):
    """Deterministic generating set: repeatedly adjoin the smallest element
    outside the current span."""
    gens = []
    span = close_under((), add, action, zero)
    while len(span) < size:
        for x in range(size):
            if x not in span:
                gens.append(x)
                break
        span = close_under(gens, add, action, zero)
    return tuple(gens)


def _extend_from_generators(gens, images, s_size, s_add, s_action, s_zero,
                            t_add, t_action, t_zero):
    """Propagate generator images through sums and scalar multiples.
    Returns the full map or None on conflict."""
    out = [-1] * s_size
    out[s_zero] = t_zero
    for g, v in zip(gens, images):
        if out[g] not in (-1, v):
            return None
        out[g] = v
    changed = True
    while changed:
        changed = False
        known = [x for x in range(s_size) if out[x] >= 0]
        for x in known:
            for y in known:
                z = s_add[x][y]
                w = t_add[out[x]][out[y]]
                if out[z] == -1:
                    out[z] = w
                    changed = True
                elif out[z] != w:
                    return None
            for r in range(len(s_action)):
                z = s_action[r][x]
                w = t_action[r][out[x]]
                if out[z] == -1:
                    out[z] = w
                    changed = True
                elif out[z] != w:
                    return None
    if any(v == -1 for v in out):
        return None
    return tuple(out)


def is_hom_map(m, s_size, s_add, s_action, s_zero, t_add, t_action, t_zero):
    if m[s_zero] != t_zero:
        return False
    for x in range(s_size):
        for y in range(s_size):
            if m[s_add[x][y]] != t_add[m[x]][m[y]]:
                return False
    for r in range(len(s_action)):
        for x in range(s_size):
            if m[s_action[r][x]] != t_action[r][m[x]]:
                return False
    return True


def enumerate_table_homs(s_size, s_add, s_action, s_zero,
                         t_size, t_add, t_action, t_zero, bound=10 ** 6):
    """All structure-preserving maps between two table algebras with a common
    scalar set, as sorted map tuples.

    Candidates are generator-image assignments; each is propagated to a full
    map and then fully re-verified, so the propagation never has to be
    trusted.  Raises SearchBoundExceeded if |target| ** #generators exceeds
    ``bound`` (exceeding the bound says nothing about what exists)."""
    gens = greedy_generators(s_size, s_add, s_action, s_zero)
    n_cand = t_size ** len(gens)
    if n_cand > bound:
        raise SearchBoundExceeded(
            "hom enumeration needs %d candidates, bound is %d" % (n_cand, bound),
            searched=0)
    homs = []
    for images in itertools.product(range(t_size), repeat=len(gens)):
        m = _extend_from_generators(gens, images, s_size, s_add, s_action,
                                    s_zero, t_add, t_action, t_zero)
        if m is not None and is_hom_map(m, s_size, s_add, s_action, s_zero,
                                        t_add, t_action, t_zero):
            homs.append(m)
    homs.sort()
    return homs


def compose_maps(g, f):
    return tuple(g[v] for v in f)


def pointwise_sum(h1, h2, t_add):
    return tuple(t_add[a][b] for a, b in zip(h1, h2))


def identity_map(n):
    return tuple(range(n))


def constant_map(n, value):
    return (value,) * n
