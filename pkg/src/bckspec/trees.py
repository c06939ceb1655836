"""Symbolic cBCK-algebras built from finite rooted trees.

Elements are finitely supported integer labelings of the vertices whose
first nonzero value along every root-based path is positive.  The
operation subtracts vertexwise exactly where u beats v in the
lexicographic order along the root path, and is zero elsewhere.  The
algebra itself is infinite, but its ideals are governed by vertex
antichains (a root-based path is identified with its terminal vertex),
so ideal and spectral computations stay finite and exact.
"""

from __future__ import annotations

from functools import cached_property

from .errors import SizeGuardError

ANTICHAIN_GUARD = 4096


class RootedTree:
    """Finite rooted tree as a parent array; vertex 0 is the root."""

    def __init__(self, parents):
        parents = tuple(parents)
        if not parents or parents[0] is not None:
            raise ValueError("parents[0] must be None (vertex 0 is the root)")
        m = len(parents)
        for v, p in enumerate(parents[1:], start=1):
            if not isinstance(p, int) or not 0 <= p < m or p == v:
                raise ValueError("bad parent %r for vertex %d" % (p, v))
        self.parents = parents
        self.size = m
        # every vertex must reach the root without cycles
        for v in range(1, m):
            seen = set()
            cur = v
            while cur != 0:
                if cur in seen:
                    raise ValueError("cycle through vertex %d" % v)
                seen.add(cur)
                cur = parents[cur]

    @classmethod
    def chain(cls, n: int) -> "RootedTree":
        """ch_n: the chain with n vertices."""
        if n < 1:
            raise ValueError("chain needs at least one vertex")
        return cls([None] + list(range(n - 1)))

    @classmethod
    def star(cls, n: int) -> "RootedTree":
        """T_n: height one, n leaves hanging off the root."""
        if n < 0:
            raise ValueError("negative leaf count")
        return cls([None] + [0] * n)

    @cached_property
    def children(self):
        out = [[] for _ in range(self.size)]
        for v in range(1, self.size):
            out[self.parents[v]].append(v)
        return tuple(tuple(c) for c in out)

    @cached_property
    def paths(self):
        """paths[v] = the root-based path [root..v] as a vertex tuple."""
        out = [None] * self.size
        out[0] = (0,)
        for v in self._bfs_order[1:]:
            out[v] = out[self.parents[v]] + (v,)
        return tuple(out)

    @cached_property
    def _bfs_order(self):
        order = [0]
        for v in order:
            order.extend(self.children[v])
        return tuple(order)

    @cached_property
    def leaves(self):
        return frozenset(v for v in range(self.size) if not self.children[v])

    def leq_t(self, a: int, b: int) -> bool:
        """Ancestor order: a <=_T b iff a lies on the root path of b."""
        return a in self.paths[b]

    def lca(self, a: int, b: int) -> int:
        pa, pb = self.paths[a], self.paths[b]
        out = 0
        for x, y in zip(pa, pb):
            if x != y:
                break
            out = x
        return out

    def max_vertices(self, vertices):
        """The <=_T-maximal elements of a vertex set."""
        vs = set(vertices)
        return frozenset(
            v for v in vs if not any(w != v and self.leq_t(v, w) for w in vs)
        )

    def antichains(self, guard=ANTICHAIN_GUARD):
        """All antichains of (V, <=_T), the empty one included, sorted by
        (size, vertex tuple).  Refuses trees whose count exceeds the guard."""
        out = [frozenset()]
        for v in self._bfs_order:
            extra = [ac | {v} for ac in out if all(not self._comparable(v, w) for w in ac)]
            out.extend(extra)
            if len(out) > guard:
                raise SizeGuardError(
                    "tree has more than %d antichains" % guard
                )
        out.sort(key=lambda ac: (len(ac), tuple(sorted(ac))))
        return out

    def _comparable(self, a, b):
        return self.leq_t(a, b) or self.leq_t(b, a)

    def to_json(self):
        return {"kind": "tree", "parents": [None] + [int(p) for p in self.parents[1:]]}

    def __eq__(self, other):
        return isinstance(other, RootedTree) and self.parents == other.parents

    def __hash__(self):
        return hash(self.parents)

    def __repr__(self):
        return "RootedTree(parents=%r)" % (list(self.parents),)


class TreeElement:
    """A labeling in A^T: sparse vertex -> nonzero int map, first nonzero
    value along every root-based path positive.  Immutable."""

    __slots__ = ("tree", "_values", "_items")

    def __init__(self, tree: RootedTree, values):
        vals = {int(v): int(c) for v, c in dict(values).items() if int(c) != 0}
        for v in vals:
            if not 0 <= v < tree.size:
                raise ValueError("vertex %r not in tree" % (v,))
        for v, c in vals.items():
            if c > 0:
                continue
            if all(vals.get(a, 0) == 0 for a in tree.paths[v][:-1]):
                raise ValueError(
                    "first nonzero value along the path to vertex %d is %d < 0"
                    % (v, c)
                )
        self.tree = tree
        self._values = vals
        self._items = frozenset(vals.items())

    @classmethod
    def zero(cls, tree):
        return cls(tree, {})

    @classmethod
    def indicator(cls, tree, vertex, value=1):
        return cls(tree, {vertex: value})

    @property
    def support(self):
        return frozenset(self._values)

    def value(self, vertex: int) -> int:
        return self._values.get(vertex, 0)

    @property
    def is_zero(self) -> bool:
        return not self._values

    def to_json(self):
        return {"support": {str(v): c for v, c in sorted(self._values.items())}}

    def __eq__(self, other):
        return (
            isinstance(other, TreeElement)
            and self.tree == other.tree
            and self._items == other._items
        )

    def __hash__(self):
        return hash((self.tree, self._items))

    def __repr__(self):
        return "TreeElement(%r)" % (dict(sorted(self._values.items())),)


def _cmp_states(u: TreeElement, v: TreeElement):
    """Per-vertex sign of the lexicographic comparison of u and v along
    the root path ending there: +1 u greater, -1 smaller, 0 equal so far."""
    tree = u.tree
    st = [0] * tree.size
    for w in tree._bfs_order:
        p = tree.parents[w]
        prior = 0 if w == 0 else st[p]
        if prior:
            st[w] = prior
        else:
            d = u.value(w) - v.value(w)
            st[w] = (d > 0) - (d < 0)
    return st


def _same_tree(u, v):
    if u.tree != v.tree:
        raise ValueError("elements live on different trees")


def compare_lex(u: TreeElement, v: TreeElement, terminal: int) -> int:
    """Lexicographic comparison of u, v restricted to [root, terminal],
    read root-first: -1, 0, or +1."""
    _same_tree(u, v)
    for w in u.tree.paths[terminal]:
        d = u.value(w) - v.value(w)
        if d:
            return 1 if d > 0 else -1
    return 0


def tree_op(u: TreeElement, v: TreeElement) -> TreeElement:
    """The cBCK operation: (u*v)_a = u_a - v_a where u beats v
    lexicographically on [root, a], and 0 elsewhere."""
    _same_tree(u, v)
    st = _cmp_states(u, v)
    out = {}
    for w in u.support | v.support:
        if st[w] > 0:
            d = u.value(w) - v.value(w)
            if d:
                out[w] = d
    try:
        return TreeElement(u.tree, out)
    except ValueError as exc:  # the construction guarantees closure
        raise RuntimeError("tree_op produced an invalid element: %s" % exc) from exc


def tree_meet(u: TreeElement, v: TreeElement) -> TreeElement:
    """Pathwise lexicographic minimum; equals u*(u*v) and v*(v*u)."""
    _same_tree(u, v)
    st = _cmp_states(u, v)
    out = {}
    for w in u.support | v.support:
        c = v.value(w) if st[w] > 0 else u.value(w)
        if c:
            out[w] = c
    try:
        return TreeElement(u.tree, out)
    except ValueError as exc:
        raise RuntimeError("tree_meet produced an invalid element: %s" % exc) from exc


def tree_leq(u: TreeElement, v: TreeElement) -> bool:
    """Derived order: u <= v iff u <=_lex v along every root-based path."""
    _same_tree(u, v)
    return all(s <= 0 for s in _cmp_states(u, v))


class PathIdeal:
    """The ideal I(R) of A^T for a canonical antichain R of vertices
    (paths are identified with terminal vertices; finite trees only).

    The empty antichain is I(empty) = A^T, the top ideal; the antichain of
    all leaves gives {0}, the bottom.
    """

    __slots__ = ("tree", "antichain")

    def __init__(self, tree: RootedTree, antichain):
        ac = frozenset(int(v) for v in antichain)
        for v in ac:
            if not 0 <= v < tree.size:
                raise ValueError("vertex %r not in tree" % (v,))
        for a in ac:
            for b in ac:
                if a != b and tree.leq_t(a, b):
                    raise ValueError(
                        "antichain violation: %d is an ancestor of %d" % (a, b)
                    )
        self.tree = tree
        self.antichain = ac

    @classmethod
    def from_vertices(cls, tree, vertices):
        """Canonicalize: keep only <=_T-maximal vertices (ancestors are
        redundant, since I(q) <= I(p) when p is a prefix of q)."""
        return cls(tree, tree.max_vertices(vertices))

    @classmethod
    def whole_algebra(cls, tree):
        return cls(tree, ())

    @classmethod
    def zero_ideal(cls, tree):
        return cls(tree, tree.leaves)

    @property
    def is_top(self) -> bool:
        return not self.antichain

    def contains(self, u: TreeElement) -> bool:
        """u is in I(R) iff u vanishes on [root, a] for every a in R."""
        if u.tree != self.tree:
            raise ValueError("element lives on a different tree")
        return all(
            all(u.value(w) == 0 for w in self.tree.paths[a]) for a in self.antichain
        )

    def leq(self, other: "PathIdeal") -> bool:
        """I(R1) <= I(R2) iff every vertex of R2 has an ancestor-or-equal
        in R1.  (Validated against membership sampling in the test suite
        before anything relies on it.)"""
        self._check(other)
        return all(
            any(self.tree.leq_t(q, r) for r in self.antichain)
            for q in other.antichain
        )

    def meet(self, other: "PathIdeal") -> "PathIdeal":
        self._check(other)
        return PathIdeal.from_vertices(self.tree, self.antichain | other.antichain)

    def join(self, other: "PathIdeal") -> "PathIdeal":
        self._check(other)
        lcas = {
            self.tree.lca(a, b) for a in self.antichain for b in other.antichain
        }
        return PathIdeal.from_vertices(self.tree, lcas)

    def _check(self, other):
        if not isinstance(other, PathIdeal) or other.tree != self.tree:
            raise ValueError("ideals live on different trees")

    def label(self) -> str:
        if self.is_top:
            return "A^T"
        return "I(%s)" % ",".join(map(str, sorted(self.antichain)))

    def to_json(self):
        return {"antichain": sorted(self.antichain)}

    def __eq__(self, other):
        return (
            isinstance(other, PathIdeal)
            and self.tree == other.tree
            and self.antichain == other.antichain
        )

    def __hash__(self):
        return hash((self.tree, self.antichain))

    def __repr__(self):
        return "PathIdeal(%s)" % self.label()


def principal_ideal(u: TreeElement) -> PathIdeal:
    """The ideal generated by a single element: I of the maximal vertices
    whose root path u vanishes on."""
    tree = u.tree
    vanishing = [
        v
        for v in range(tree.size)
        if all(u.value(w) == 0 for w in tree.paths[v])
    ]
    return PathIdeal.from_vertices(tree, vanishing)


def join_witness(u: TreeElement, p: int, q: int):
    """Constructive evidence for I(p) v I(q) = I(lca(p, q)): given u in the
    lca ideal, return (v, w) with v in I(p), w in I(q) and (u*v)*w = 0.

    w restricts u to the vertices of path(p) off path(q); v = u*w then
    vanishes on path(p).  This matches the textbook construction wherever
    the latter yields a legal element, and is always legal itself.
    """
    tree = u.tree
    lca = tree.lca(p, q)
    if not PathIdeal(tree, (lca,)).contains(u):
        raise ValueError("u is not in the ideal of the lca path")
    q_path = set(tree.paths[q])
    w = TreeElement(
        tree, {a: u.value(a) for a in tree.paths[p] if a not in q_path}
    )
    v = tree_op(u, w)
    ok = (
        PathIdeal(tree, (p,)).contains(v)
        and PathIdeal(tree, (q,)).contains(w)
        and tree_op(tree_op(u, v), w).is_zero
    )
    if not ok:
        raise RuntimeError("join witness construction failed")
    return v, w


class TreeIdealLattice:
    """All ideals of A^T: one per antichain of (V, <=_T), ordered by the
    containment criterion of PathIdeal.leq.  Exposes labels and the prime
    positions (the singleton antichains)."""

    def __init__(self, tree: RootedTree, guard=ANTICHAIN_GUARD):
        self.tree = tree
        self.ideals = [PathIdeal(tree, ac) for ac in tree.antichains(guard)]
        self._index = {i.antichain: k for k, i in enumerate(self.ideals)}
        self.prime_indices = tuple(
            k for k, i in enumerate(self.ideals) if len(i.antichain) == 1
        )

    def __len__(self):
        return len(self.ideals)

    def index_of(self, ideal: PathIdeal) -> int:
        return self._index[ideal.antichain]

    def leq_matrix(self):
        return [[a.leq(b) for b in self.ideals] for a in self.ideals]

    def labels(self):
        out = []
        for i in self.ideals:
            if i.antichain == self.tree.leaves:
                out.append("{0}")
            else:
                out.append(i.label())
        return out

    def to_json(self):
        return {
            "ideals": [sorted(i.antichain) if not i.is_top else None for i in self.ideals],
            "prime": list(self.prime_indices),
        }


def tree_ideal_lattice(tree, guard=ANTICHAIN_GUARD) -> TreeIdealLattice:
    return TreeIdealLattice(tree, guard)


class TreePrimes:
    """The prime ideals I(a), one per vertex, under inclusion."""

    def __init__(self, tree: RootedTree):
        self.tree = tree
        self.ideals = [PathIdeal(tree, (v,)) for v in range(tree.size)]
        self.labels = [i.label() for i in self.ideals]

    def leq_matrix(self):
        return [[a.leq(b) for b in self.ideals] for a in self.ideals]

    def __len__(self):
        return len(self.ideals)


def tree_prime_ideals(tree) -> TreePrimes:
    return TreePrimes(tree)


# -- enumeration of small rooted trees --------------------------------------


def canonical_form(tree: RootedTree, root=0):
    """Nested-tuple canonical form: sorted tuple of children forms."""
    return tuple(sorted(canonical_form(tree, c) for c in tree.children[root]))


def _canon_size(form) -> int:
    return 1 + sum(_canon_size(c) for c in form)


def _forms(n, _cache={1: [()]}):
    """Canonical forms of rooted trees with n vertices."""
    if n in _cache:
        return _cache[n]

    def multisets(budget, minimum):
        # sorted tuples of forms, each >= minimum, sizes summing to budget
        if budget == 0:
            yield ()
            return
        for size in range(1, budget + 1):
            for first in _forms(size):
                if first < minimum:
                    continue
                for rest in multisets(budget - size, first):
                    yield (first,) + rest

    out = sorted(multisets(n - 1, ()))
    _cache[n] = out
    return out


def _form_to_parents(form):
    parents = [None]

    def emit(children, parent_index):
        for child in children:
            parents.append(parent_index)
            emit(child, len(parents) - 1)

    emit(form, 0)
    return parents


def all_rooted_trees(max_vertices: int):
    """One RootedTree per isomorphism class, for 1..max_vertices vertices."""
    out = []
    for n in range(1, max_vertices + 1):
        for form in _forms(n):
            out.append(RootedTree(_form_to_parents(form)))
    return out
