"""Finite posets and distributive lattices: Birkhoff correspondence via
meet-irreducibles, isomorphism search, and the named families (boolean
lattices, boolean-plus-top, chains, products, divisor lattices).

Order duals are always materialized as transposed relations, never kept
as flags, to avoid dual-of-dual bookkeeping mistakes.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .errors import SizeGuardError

ISO_GUARD = 1 << 12
LATTICE_GUARD = 128  # law validation is cubic in the element count


class FinitePoset:
    """Explicit partial order on 0..n-1 as a boolean leq matrix."""

    def __init__(self, leq):
        m = np.array(leq, dtype=bool)
        if m.size == 0:
            m = m.reshape(0, 0)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("leq must be square")
        n = m.shape[0]
        if not np.diagonal(m).all():
            raise ValueError("relation is not reflexive")
        if (m & m.T & ~np.eye(n, dtype=bool)).any():
            raise ValueError("relation is not antisymmetric")
        closure = m @ m
        if (closure & ~m).any():
            raise ValueError("relation is not transitive")
        m.setflags(write=False)
        self.leq_np = m
        self.size = n

    @classmethod
    def antichain(cls, n: int) -> "FinitePoset":
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def chain(cls, n: int) -> "FinitePoset":
        return cls(np.triu(np.ones((n, n), dtype=bool)))

    def leq(self, a: int, b: int) -> bool:
        return bool(self.leq_np[a, b])

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.leq_np.T)

    @cached_property
    def covers_np(self):
        lt = self.leq_np & ~np.eye(self.size, dtype=bool)
        return lt & ~(lt @ lt)

    def cover_pairs(self):
        return [tuple(p) for p in np.argwhere(self.covers_np)]

    def is_antichain(self) -> bool:
        return bool((self.leq_np == np.eye(self.size, dtype=bool)).all())

    def maximal(self):
        lt = self.leq_np & ~np.eye(self.size, dtype=bool)
        return [i for i in range(self.size) if not lt[i].any()]

    def minimal(self):
        lt = self.leq_np & ~np.eye(self.size, dtype=bool)
        return [i for i in range(self.size) if not lt[:, i].any()]

    def restrict(self, indices) -> "FinitePoset":
        idx = list(indices)
        return FinitePoset(self.leq_np[np.ix_(idx, idx)])

    def to_json(self):
        return {"leq": self.leq_np.astype(int).tolist()}

    def __eq__(self, other):
        return isinstance(other, FinitePoset) and (
            self.size == other.size and bool((self.leq_np == other.leq_np).all())
        )

    def __hash__(self):
        return hash((self.size, self.leq_np.tobytes()))

    def __repr__(self):
        return "FinitePoset(size=%d)" % self.size


class FiniteDistLattice:
    """A finite distributive lattice: order matrix plus derived meet/join
    tables.  Construction verifies unique glb/lub for every pair and
    distributivity on all triples (cubic; sizes above LATTICE_GUARD are
    refused)."""

    def __init__(self, leq, _validate=True):
        poset = leq if isinstance(leq, FinitePoset) else FinitePoset(leq)
        n = poset.size
        if n > LATTICE_GUARD:
            raise SizeGuardError(
                "lattice law validation is cubic; %d > guard %d" % (n, LATTICE_GUARD)
            )
        self.poset = poset
        self.size = n
        self.leq_np = poset.leq_np
        m = self.leq_np
        lb = m[:, :, None] & m[:, None, :]  # lb[c,a,b]: c below both a and b
        ub = m.T[:, :, None] & m.T[:, None, :]
        self.meet_np = self._extremum(lb, m, "meet")
        self.join_np = self._extremum(ub, m.T, "join")
        if _validate:
            self._check_laws()
        self.bottom = 0
        self.top = 0
        for x in range(n):
            self.bottom = int(self.meet_np[self.bottom, x])
            self.top = int(self.join_np[self.top, x])

    def _extremum(self, bounds, within, kind):
        # bounds[c,a,b]: c bounds the pair; the extremum must dominate all
        # other bounds via `within` (c within d for meet: d <= c).
        total = bounds.sum(axis=0)
        cnt = np.einsum(
            "dc,dab->cab", within.astype(np.int32), bounds.astype(np.int32)
        )
        hit = bounds & (cnt == total[None, :, :])
        found = hit.sum(axis=0)
        if not (found == 1).all():
            a, b = np.argwhere(found != 1)[0]
            raise ValueError(
                "not a lattice: pair (%d, %d) has no unique %s" % (a, b, kind)
            )
        return hit.argmax(axis=0).astype(np.int16)

    def _check_laws(self):
        m, j = self.meet_np, self.join_np
        if not (m == m.T).all() or not (j == j.T).all():
            raise ValueError("meet or join is not commutative")
        if not (m[m, np.arange(self.size)] == m).all():
            raise ValueError("meet not idempotent-compatible")
        # absorption
        n = self.size
        idx = np.arange(n)
        if not (m[idx[:, None], j] == np.broadcast_to(idx[:, None], (n, n))).all():
            raise ValueError("absorption fails")
        # distributivity: a ^ (b v c) == (a ^ b) v (a ^ c)
        lhs = m[:, j]  # [a,b,c]
        rhs = j[m[:, :, None], m[:, None, :]]
        if not (lhs == rhs).all():
            a, b, c = np.argwhere(lhs != rhs)[0]
            raise ValueError(
                "not distributive at (%d, %d, %d)" % (a, b, c)
            )

    # -- queries ----------------------------------------------------------

    def leq(self, a: int, b: int) -> bool:
        return bool(self.leq_np[a, b])

    def meet(self, a: int, b: int) -> int:
        return int(self.meet_np[a, b])

    def join(self, a: int, b: int) -> int:
        return int(self.join_np[a, b])

    def meet_irreducible_indices(self):
        """Elements m != top such that m = a ^ b forces m in {a, b}."""
        out = []
        for x in range(self.size):
            if x == self.top:
                continue
            strict_above = [a for a in range(self.size) if self.leq_np[x, a] and a != x]
            if all(
                self.meet(a, b) != x
                for a in strict_above
                for b in strict_above
            ):
                out.append(x)
        return out

    def meet_irreducibles(self):
        """The poset MI(D) with the inherited order, plus its indices."""
        idx = self.meet_irreducible_indices()
        return idx, self.poset.restrict(idx)

    @classmethod
    def from_sets(cls, family):
        """Inclusion lattice of a family of sets (must be lattice-closed).
        Elements are ordered by (size, sorted members) for determinism."""
        fam = sorted({frozenset(s) for s in family}, key=lambda s: (len(s), sorted(s)))
        n = len(fam)
        leq = np.zeros((n, n), dtype=bool)
        for i, a in enumerate(fam):
            for k, b in enumerate(fam):
                leq[i, k] = a <= b
        lat = cls(leq)
        lat.members = fam
        return lat

    def to_json(self):
        return {"leq": self.leq_np.astype(int).tolist()}

    def __repr__(self):
        return "FiniteDistLattice(size=%d)" % self.size


# -- Birkhoff ----------------------------------------------------------------


def lattice_from_poset(poset: FinitePoset) -> FiniteDistLattice:
    """The down-set lattice of the poset: the unique finite distributive
    lattice whose meet-irreducibles form the given poset (the complement
    of a principal up-set is meet-irreducible, and nothing else is)."""
    n = poset.size
    if n > 20:
        raise SizeGuardError("down-set enumeration scans 2^%d subsets" % n)
    leq = poset.leq_np
    down_masks = []
    for mask in range(1 << n):
        ok = True
        m = mask
        while m and ok:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            for w in range(n):
                if leq[w, v] and not (mask >> w) & 1:
                    ok = False
                    break
        if ok:
            down_masks.append(mask)
    down_masks.sort(key=lambda x: (bin(x).count("1"), x))
    k = len(down_masks)
    rel = np.zeros((k, k), dtype=bool)
    for i, a in enumerate(down_masks):
        for j, b in enumerate(down_masks):
            rel[i, j] = a & ~b == 0
    lat = FiniteDistLattice(rel)
    lat.downset_masks = down_masks
    return lat


# -- isomorphism search -------------------------------------------------------


def poset_iso(p1: FinitePoset, p2: FinitePoset, guard=ISO_GUARD):
    """A bijection preserving and reflecting the order, or None.

    Backtracking over profile-compatible candidates, most-constrained
    element first; sound and complete below the size guard.
    """
    if p1.size != p2.size:
        return None
    if p1.size > guard:
        raise SizeGuardError("isomorphism search guard is %d elements" % guard)
    raw1 = _raw_profiles(p1)
    raw2 = _raw_profiles(p2)
    if sorted(raw1) != sorted(raw2):
        return None
    candidates = [
        [j for j in range(p2.size) if raw2[j] == raw1[i]] for i in range(p1.size)
    ]
    order = sorted(range(p1.size), key=lambda i: len(candidates[i]))
    leq1, leq2 = p1.leq_np, p2.leq_np
    mapping = [None] * p1.size
    used = [False] * p2.size

    def backtrack(k):
        if k == len(order):
            return True
        i = order[k]
        for j in candidates[i]:
            if used[j]:
                continue
            ok = True
            for kk in range(k):
                ii = order[kk]
                jj = mapping[ii]
                if leq1[i, ii] != leq2[j, jj] or leq1[ii, i] != leq2[jj, j]:
                    ok = False
                    break
            if ok:
                mapping[i] = j
                used[j] = True
                if backtrack(k + 1):
                    return True
                mapping[i] = None
                used[j] = False
        return False

    return mapping if backtrack(0) else None


def _raw_profiles(poset, rounds=3):
    leq = poset.leq_np
    cov = poset.covers_np
    n = poset.size
    labels = [
        (
            int(leq[:, i].sum()),
            int(leq[i].sum()),
            int(cov[:, i].sum()),
            int(cov[i].sum()),
        )
        for i in range(n)
    ]
    for _ in range(rounds):
        labels = [
            (
                labels[i],
                tuple(sorted(labels[j] for j in range(n) if cov[j, i])),
                tuple(sorted(labels[j] for j in range(n) if cov[i, j])),
            )
            for i in range(n)
        ]
    return labels


def lattice_iso(l1: FiniteDistLattice, l2: FiniteDistLattice, guard=ISO_GUARD):
    """Lattice isomorphism (an order iso of lattices preserves meet and
    join automatically), or None."""
    return poset_iso(l1.poset, l2.poset, guard)


# -- named families -----------------------------------------------------------


def boolean_lattice(n: int) -> FiniteDistLattice:
    """B_n, the powerset of an n-set; element i is the bitmask i."""
    if n < 0 or (1 << n) > LATTICE_GUARD:
        raise SizeGuardError("boolean lattice with 2^%d elements refused" % n)
    size = 1 << n
    leq = np.zeros((size, size), dtype=bool)
    for a in range(size):
        for b in range(size):
            leq[a, b] = a & ~b == 0
    return FiniteDistLattice(leq)


def boolean_plus_top(n: int) -> FiniteDistLattice:
    """B_n with a new strict top adjoined (2^n + 1 elements)."""
    if n < 0 or (1 << n) + 1 > LATTICE_GUARD:
        raise SizeGuardError("lattice with 2^%d + 1 elements refused" % n)
    size = (1 << n) + 1
    leq = np.zeros((size, size), dtype=bool)
    for a in range(size - 1):
        for b in range(size - 1):
            leq[a, b] = a & ~b == 0
    leq[:, size - 1] = True
    leq[size - 1, : size - 1] = False
    return FiniteDistLattice(leq)


def chain_lattice(n: int) -> FiniteDistLattice:
    if n < 1:
        raise ValueError("a chain lattice needs at least one element")
    return FiniteDistLattice(FinitePoset.chain(n))


def lattice_product(lattices) -> FiniteDistLattice:
    """Componentwise product, elements in lexicographic tuple order."""
    lattices = list(lattices)
    if not lattices:
        raise ValueError("empty product")
    size = 1
    for l in lattices:
        size *= l.size
    if size > LATTICE_GUARD:
        raise SizeGuardError("product has %d elements, guard is %d" % (size, LATTICE_GUARD))
    strides = [1] * len(lattices)
    for i in range(len(lattices) - 2, -1, -1):
        strides[i] = strides[i + 1] * lattices[i + 1].size

    def untuple(g):
        return [(g // s) % l.size for s, l in zip(strides, lattices)]

    leq = np.zeros((size, size), dtype=bool)
    tuples = [untuple(g) for g in range(size)]
    for a in range(size):
        for b in range(size):
            leq[a, b] = all(
                l.leq_np[x, y] for l, x, y in zip(lattices, tuples[a], tuples[b])
            )
    return FiniteDistLattice(leq)


def divisor_lattice(n: int) -> FiniteDistLattice:
    """Divisors of n under divisibility (meet = gcd, join = lcm)."""
    if n < 1:
        raise ValueError("n must be positive")
    divs = [d for d in range(1, n + 1) if n % d == 0]
    k = len(divs)
    if k > LATTICE_GUARD:
        raise SizeGuardError("divisor lattice too large")
    leq = np.zeros((k, k), dtype=bool)
    for i, a in enumerate(divs):
        for j, b in enumerate(divs):
            leq[i, j] = b % a == 0
    lat = FiniteDistLattice(leq)
    lat.divisors = divs
    return lat


def free_bounded_distributive_2() -> FiniteDistLattice:
    """F_2: 0 < x^y < x, y < xvy < 1 (six elements)."""
    order = ["0", "xy", "x", "y", "xvy", "1"]
    below = {
        "0": set(order),
        "xy": {"xy", "x", "y", "xvy", "1"},
        "x": {"x", "xvy", "1"},
        "y": {"y", "xvy", "1"},
        "xvy": {"xvy", "1"},
        "1": {"1"},
    }
    leq = [[b in below[a] for b in order] for a in order]
    return FiniteDistLattice(leq)
