"""Independent brute-force oracles used to freeze expected values.

Everything here works straight from definitions (subset scans, explicit
reductions), deliberately sharing no code with the package's enumeration
kernels, so the two routes check each other.
"""

from itertools import combinations


def brute_force_ideals(algebra):
    """All ideals by scanning every subset containing 0 and testing the
    closure rule literally."""
    n = algebra.size
    t = algebra.table
    out = []
    universe = range(1, n)
    for r in range(n):
        for extra in combinations(universe, r):
            s = frozenset((0,) + extra)
            ok = True
            for x in range(n):
                if x in s:
                    continue
                if any(y in s and t[x][y] in s for y in range(n)):
                    ok = False
                    break
            if ok:
                out.append(s)
    return out


def brute_force_generated(algebra, gens):
    """Least ideal containing gens: intersect all ideals from the scan."""
    gens = frozenset(gens)
    best = None
    for ideal in brute_force_ideals(algebra):
        if gens <= ideal:
            best = ideal if best is None else best & ideal
    return best


def naive_meet(algebra, x, y):
    return algebra.table[y][algebra.table[y][x]]


def naive_is_prime(algebra, members):
    members = frozenset(members)
    if members == frozenset(range(algebra.size)):
        return False
    for x in range(algebra.size):
        for y in range(algebra.size):
            if naive_meet(algebra, x, y) in members:
                if x not in members and y not in members:
                    return False
    return True


def reduces_to_zero(algebra, x, sequence):
    cur = x
    for s in sequence:
        cur = algebra.table[cur][s]
    return cur == 0


def witness_exists(algebra, x, gens, max_len=None):
    """Breadth-first reachability of 0 from x by right-multiplication with
    generators; independent of the package's witness search."""
    if x == 0:
        return True
    gens = sorted(set(gens))
    if not gens:
        return False
    seen = {x}
    frontier = [x]
    steps = 0
    limit = max_len if max_len is not None else algebra.size + 1
    while frontier and steps < limit:
        steps += 1
        nxt = []
        for cur in frontier:
            for s in gens:
                t = algebra.table[cur][s]
                if t == 0:
                    return True
                if t not in seen:
                    seen.add(t)
                    nxt.append(t)
        frontier = nxt
    return False


def naive_tree_op(u, v):
    """The tree operation straight from its definition: per vertex, build
    both path tuples and compare them lexicographically."""
    tree = u.tree
    out = {}
    for a in range(tree.size):
        pu = tuple(u.value(w) for w in tree.paths[a])
        pv = tuple(v.value(w) for w in tree.paths[a])
        if pu > pv:
            d = u.value(a) - v.value(a)
            if d:
                out[a] = d
    return out


def all_labeled_posets(n):
    """Every reflexive-transitive-antisymmetric relation on 0..n-1 whose
    identity labeling is a linear extension (every iso class shows up)."""
    pairs = list(combinations(range(n), 2))
    out = []
    for bits in range(1 << len(pairs)):
        rel = [[i == j for j in range(n)] for i in range(n)]
        for i, (a, b) in enumerate(pairs):
            if (bits >> i) & 1:
                rel[a][b] = True
        ok = True
        for a in range(n):
            for b in range(n):
                if not rel[a][b]:
                    continue
                for c in range(n):
                    if rel[b][c] and not rel[a][c]:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(rel)
    return out


def parent_array_trees(n):
    """All rooted trees on n vertices as parent arrays with parent[i] < i
    (every isomorphism class admits such a labeling via breadth-first
    numbering)."""
    if n == 1:
        return [[None]]
    out = []

    def rec(prefix):
        i = len(prefix)
        if i == n:
            out.append(list(prefix))
            return
        for p in range(i):
            rec(prefix + [p])

    rec([None])
    return out
