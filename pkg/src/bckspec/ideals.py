"""Ideal theory for finite algebras: membership, closure, enumeration,
primality, annihilators, involutory checks, and the ideal lattice.

Subsets are carried as bitmasks internally (element i = bit i).  Full
enumeration scans the 2^(n-1) subsets containing 0 with a down-set
prefilter; the default size guard is |A| <= 20, above which
SizeGuardError is raised rather than attempting the scan.
"""

from __future__ import annotations

from . import kernels
from .errors import SizeGuardError

IDEAL_SIZE_GUARD = 20


def _mask_of(members) -> int:
    mask = 0
    for x in members:
        mask |= 1 << x
    return mask


def _members_of(mask: int):
    out = []
    while mask:
        x = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(x)
    return out


class Ideal:
    """A validated ideal: contains 0 and is closed under the rule
    "x*y in I and y in I imply x in I" (hence is a down-set)."""

    __slots__ = ("algebra", "mask", "members")

    def __init__(self, algebra, members):
        mask = members if isinstance(members, int) else _mask_of(members)
        if not kernels.is_ideal_mask(algebra._arr, mask):
            raise ValueError(
                "not an ideal of this algebra: %r" % (sorted(_members_of(mask)),)
            )
        self.algebra = algebra
        self.mask = mask
        self.members = frozenset(_members_of(mask))

    @property
    def proper(self) -> bool:
        return self.mask != (1 << self.algebra.size) - 1

    def sorted_members(self):
        return sorted(self.members)

    def __contains__(self, x) -> bool:
        return (self.mask >> x) & 1 == 1

    def __len__(self):
        return len(self.members)

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.algebra == other.algebra
            and self.mask == other.mask
        )

    def __hash__(self):
        return hash((self.algebra, self.mask))

    def __repr__(self):
        return "Ideal(%r)" % (self.sorted_members(),)


def generated_ideal(algebra, generators) -> Ideal:
    """Least ideal containing the given elements, by fixed-point closure."""
    return Ideal(algebra, kernels.ideal_closure(algebra._arr, _mask_of(generators)))


def membership_witness(algebra, x, generators):
    """A shortest sequence (s_1, ..., s_k) from the generators with
    (..(x*s_1)*..)*s_k = 0, or None when x is outside the generated ideal.

    Breadth-first over reduction states; generators are tried in ascending
    element order so ties break lexicographically and results are stable.
    The witness is re-evaluated before being returned.
    """
    gens = sorted(set(generators))
    if x == 0:
        return ()
    seen = {x: None}
    frontier = [x]
    found = None
    while frontier and found is None:
        nxt = []
        for cur in frontier:
            for s in gens:
                t = algebra.table[cur][s]
                if t in seen:
                    continue
                seen[t] = (cur, s)
                if t == 0:
                    found = t
                    break
                nxt.append(t)
            if found is not None:
                break
        frontier = nxt
    if found is None:
        return None
    path = []
    node = 0
    while seen[node] is not None:
        node, s = seen[node]
        path.append(s)
    path.reverse()
    check = x
    for s in path:
        check = algebra.table[check][s]
    assert check == 0, "witness failed re-evaluation"
    return tuple(path)


def annihilator(algebra, subset) -> Ideal:
    """S* = {a : a ^ s = 0 for every s in S}; always an ideal."""
    meet = algebra.meet_np
    members = [
        a for a in algebra.elements() if all(meet[a][s] == 0 for s in subset)
    ]
    return Ideal(algebra, members)


def is_prime(algebra, ideal: Ideal) -> bool:
    """Proper, and x ^ y in I forces x in I or y in I."""
    if not ideal.proper:
        return False
    meet = algebra.meet_np
    outside = [x for x in algebra.elements() if x not in ideal]
    for i, x in enumerate(outside):
        row = meet[x]
        for y in outside[i:]:
            if (ideal.mask >> int(row[y])) & 1:
                return False
    return True


class IdealLattice:
    """All ideals of a finite algebra under inclusion.

    meet = intersection, join = generated ideal of the union.  Elements are
    ordered by (size, sorted members) for deterministic output; prime and
    maximal members are tagged.
    """

    def __init__(self, algebra, guard=IDEAL_SIZE_GUARD):
        self.algebra = algebra
        masks = kernels.enumerate_ideal_masks(algebra._arr, guard)
        ideals = [Ideal(algebra, m) for m in masks]
        ideals.sort(key=lambda i: (len(i.members), i.sorted_members()))
        self.ideals = ideals
        self._index = {i.mask: k for k, i in enumerate(ideals)}
        self.prime_flags = tuple(is_prime(algebra, i) for i in ideals)
        full = (1 << algebra.size) - 1
        self.maximal_flags = tuple(
            i.mask != full
            and all(
                not (i.mask & ~j.mask == 0 and i.mask != j.mask)
                for j in ideals
                if j.mask != full
            )
            for i in ideals
        )

    def __len__(self):
        return len(self.ideals)

    def index_of(self, ideal: Ideal) -> int:
        return self._index[ideal.mask]

    def leq(self, i: int, j: int) -> bool:
        return self.ideals[i].mask & ~self.ideals[j].mask == 0

    def meet_index(self, i: int, j: int) -> int:
        return self._index[self.ideals[i].mask & self.ideals[j].mask]

    def join_index(self, i: int, j: int) -> int:
        mask = kernels.ideal_closure(
            self.algebra._arr, self.ideals[i].mask | self.ideals[j].mask
        )
        return self._index[mask]

    def primes(self):
        return [i for i, f in zip(self.ideals, self.prime_flags) if f]

    def leq_matrix(self):
        n = len(self.ideals)
        return [[self.leq(i, j) for j in range(n)] for i in range(n)]

    def labels(self):
        return ["{%s}" % ",".join(map(str, i.sorted_members())) for i in self.ideals]

    def to_json(self):
        return {
            "ideals": [i.sorted_members() for i in self.ideals],
            "prime": [k for k, f in enumerate(self.prime_flags) if f],
            "maximal": [k for k, f in enumerate(self.maximal_flags) if f],
        }


def all_ideals(algebra, guard=IDEAL_SIZE_GUARD) -> IdealLattice:
    return IdealLattice(algebra, guard)


def prime_ideals(algebra, guard=IDEAL_SIZE_GUARD):
    return all_ideals(algebra, guard).primes()


def irreducible_and_meetprime_check(algebra, ideal: Ideal, lattice=None):
    """Evaluate irreducibility and meet-primality of a PROPER ideal against
    the full ideal list; the whole algebra reports (False, False) so the
    three primality notions coincide elementwise.
    """
    lattice = lattice or all_ideals(algebra)
    if not ideal.proper:
        return False, False
    irreducible = True
    meet_prime = True
    masks = [i.mask for i in lattice.ideals]
    p = ideal.mask
    for a in masks:
        for b in masks:
            m = a & b
            if m == p and a != p and b != p:
                irreducible = False
            if m & ~p == 0 and a & ~p != 0 and b & ~p != 0:
                meet_prime = False
    return irreducible, meet_prime


def involution_table(algebra, lattice=None):
    """Triples (I, I*, I**) for every ideal."""
    lattice = lattice or all_ideals(algebra)
    out = []
    for ideal in lattice.ideals:
        star = annihilator(algebra, ideal.members)
        double = annihilator(algebra, star.members)
        out.append((ideal, star, double))
    return out


def is_involutory(algebra, lattice=None) -> bool:
    """Every ideal equals its double annihilator.  Always true for finite
    algebras; computed directly rather than assumed."""
    return all(i.mask == d.mask for i, _, d in involution_table(algebra, lattice))


def is_trivial(algebra) -> bool:
    return algebra.size == 1


def is_simple(algebra) -> bool:
    """Exactly the two ideals {0} and A.  The one-element algebra has one
    ideal and is reported not simple (two-ideal reading, by convention)."""
    if is_trivial(algebra):
        return False
    full = (1 << algebra.size) - 1
    # simple iff every nonzero element generates everything
    return all(
        kernels.ideal_closure(algebra._arr, 1 << x) == full
        for x in range(1, algebra.size)
    )


def congruence_from_ideal(algebra, ideal: Ideal):
    """Equivalence classes of theta_I: x ~ y iff x*y in I and y*x in I.

    Classes are returned sorted by least member; the class of 0 is I.
    Transitivity is verified and a failure raises RuntimeError (it cannot
    happen for a valid ideal).
    """
    n = algebra.size
    t = algebra.table
    rel = [
        [
            ((ideal.mask >> t[x][y]) & 1) and ((ideal.mask >> t[y][x]) & 1)
            for y in range(n)
        ]
        for x in range(n)
    ]
    for x in range(n):
        for y in range(n):
            if not rel[x][y]:
                continue
            for z in range(n):
                if rel[y][z] and not rel[x][z]:
                    raise RuntimeError(
                        "theta_I is not transitive at (%d, %d, %d)" % (x, y, z)
                    )
    seen = set()
    classes = []
    for x in range(n):
        if x in seen:
            continue
        cls = tuple(y for y in range(n) if rel[x][y])
        seen.update(cls)
        classes.append(cls)
    classes.sort(key=lambda c: c[0])
    return classes
