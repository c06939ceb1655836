"""Spectra of cBCK-algebras: the prime-ideal space with opens sigma(I),
plus the point-set topology checks (T0, quasi-sober, multiplicative
basis, Hochster's conditions, Priestley separation, Noetherian-ness).

Finite algebras get their spectrum from exhaustive ideal enumeration;
tree algebras get theirs symbolically from vertex antichains, so the
space is finite even though the algebra is not.
"""

from __future__ import annotations

from itertools import product as iter_product

from . import ideals as ideal_mod
from .constructions import cbck_union
from .core import BckHomomorphism
from .errors import ImproperPreimageError, SizeGuardError
from .lattices import FiniteDistLattice, FinitePoset, lattice_iso
from .trees import PathIdeal, TreeElement, TreeIdealLattice, principal_ideal

IRREDUCIBLE_POINT_GUARD = 16


def _mask(points) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def _unmask(mask: int):
    out = []
    while mask:
        p = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(p)
    return frozenset(out)


class FiniteSpace:
    """A finite point set with an explicit family of open sets.

    The family must be closed under pairwise union and intersection, and
    the distinguished basis must generate every open as a union.  The
    empty set is open in every space produced here (sigma({0})); the full
    set is open exactly when sigma(A) covers the spectrum, which holds
    for every algebra this package can represent.
    """

    def __init__(self, points, opens, basis=None, validate=True):
        self.points = tuple(points)
        n = len(self.points)
        fam = sorted(
            {frozenset(o) for o in opens}, key=lambda s: (len(s), sorted(s))
        )
        self.opens = tuple(fam)
        self.open_masks = tuple(_mask(o) for o in fam)
        if basis is None:
            basis = fam
        bas = sorted({frozenset(b) for b in basis}, key=lambda s: (len(s), sorted(s)))
        self.basis = tuple(bas)
        if validate:
            self._validate(n)

    def _validate(self, n):
        masks = set(self.open_masks)
        full = (1 << n) - 1
        for o in self.opens:
            for p in o:
                if not 0 <= p < n:
                    raise ValueError("open set mentions unknown point %r" % (p,))
        for a in self.open_masks:
            for b in self.open_masks:
                if (a | b) & full not in masks or (a & b) not in masks:
                    raise ValueError(
                        "family not closed under union/intersection"
                    )
        bmasks = [_mask(b) for b in self.basis]
        for bm in bmasks:
            if bm not in masks:
                raise ValueError("basis member is not open")
        for om in self.open_masks:
            gen = 0
            for bm in bmasks:
                if bm & ~om == 0:
                    gen |= bm
            if gen != om:
                raise ValueError("basis does not generate the opens")

    @property
    def size(self) -> int:
        return len(self.points)

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def closed_masks(self):
        return [self.full_mask & ~m for m in self.open_masks]

    def subspace(self, indices) -> "FiniteSpace":
        idx = sorted(indices)
        pos = {p: i for i, p in enumerate(idx)}
        opens = {frozenset(pos[p] for p in o if p in pos) for o in self.opens}
        basis = {frozenset(pos[p] for p in b if p in pos) for b in self.basis}
        return FiniteSpace([self.points[p] for p in idx], opens, basis)

    def to_json(self):
        return {
            "points": list(self.points),
            "opens": [sorted(self.points[p] for p in o) for o in self.opens],
            "basis": [sorted(self.points[p] for p in b) for b in self.basis],
        }

    def __repr__(self):
        return "FiniteSpace(%d points, %d opens)" % (self.size, len(self.opens))


# -- topology checks ----------------------------------------------------------


def check_T0(space: FiniteSpace) -> bool:
    """Distinct points are separated by some open set."""
    for x in range(space.size):
        for y in range(x + 1, space.size):
            if all(((m >> x) & 1) == ((m >> y) & 1) for m in space.open_masks):
                return False
    return True


def check_compact(space: FiniteSpace) -> bool:
    """In a finite family closed under unions, X is compact iff the whole
    point set is itself open."""
    return space.full_mask in space.open_masks


def compact_opens(space: FiniteSpace):
    """The compact members of the family.  Every open of a finite space is
    compact (any cover has a finite subfamily: the whole family); checked
    literally by covering each open with its open subsets."""
    out = []
    for om, o in zip(space.open_masks, space.opens):
        cover = 0
        for m in space.open_masks:
            if m & ~om == 0:
                cover |= m
        if cover == om:  # always true: om covers itself
            out.append(o)
    return out


def compact_open_lattice(space: FiniteSpace) -> FiniteDistLattice:
    """The lattice K(X) of compact open subsets under inclusion; equal to
    the full open-set lattice for finite spaces."""
    return FiniteDistLattice.from_sets(compact_opens(space))


def check_multiplicative_basis(space: FiniteSpace) -> bool:
    """Compact opens form a basis closed under finite intersections (H3)."""
    kmasks = [_mask(k) for k in compact_opens(space)]
    kset = set(kmasks)
    for a in kmasks:
        for b in kmasks:
            if a & b not in kset:
                return False
    for om in space.open_masks:
        gen = 0
        for km in kmasks:
            if km & ~om == 0:
                gen |= km
        if gen != om:
            return False
    return True


def _closure_masks(space: FiniteSpace):
    """closure[x] as a mask: the complement of the union of opens missing x."""
    out = []
    for x in range(space.size):
        miss = 0
        for m in space.open_masks:
            if not (m >> x) & 1:
                miss |= m
        out.append(space.full_mask & ~miss)
    return out


def check_quasi_sober(space: FiniteSpace, guard=IRREDUCIBLE_POINT_GUARD) -> bool:
    """Every nonempty irreducible closed set is the closure of a point.

    A subset C is irreducible iff every two opens meeting C intersect
    inside C.  Exponential in principle; refuses spaces beyond the point
    guard.
    """
    if space.size > guard:
        raise SizeGuardError("quasi-sober check guard is %d points" % guard)
    closures = _closure_masks(space)
    for c in space.closed_masks():
        if c == 0:
            continue
        traces = {m & c for m in space.open_masks if m & c}
        irreducible = all(a & b & c for a in traces for b in traces)
        if irreducible and c not in closures:
            return False
    return True


def check_spectral(space: FiniteSpace) -> bool:
    """Hochster's characterization: compact, T0, multiplicative basis,
    quasi-sober."""
    return (
        check_compact(space)
        and check_T0(space)
        and check_multiplicative_basis(space)
        and check_quasi_sober(space)
    )


def check_hausdorff(space: FiniteSpace) -> bool:
    for x in range(space.size):
        for y in range(x + 1, space.size):
            if not any(
                (a >> x) & 1 and (b >> y) & 1 and not a & b
                for a in space.open_masks
                for b in space.open_masks
            ):
                return False
    return True


def check_noetherian(space: FiniteSpace) -> bool:
    """Every open compact; immediate for finite spaces but asserted
    literally via compact_opens."""
    return len(compact_opens(space)) == len(space.opens)


def specialization_order(space: FiniteSpace) -> FinitePoset:
    """x <= y iff every open containing y contains x (equivalently y is in
    the closure of x); for spectra this is inclusion of prime ideals."""
    n = space.size
    leq = [[True] * n for _ in range(n)]
    for m in space.open_masks:
        for x in range(n):
            if not (m >> x) & 1:
                for y in range(n):
                    if (m >> y) & 1:
                        leq[x][y] = False
    return FinitePoset(leq)


def closed_points(space: FiniteSpace):
    closures = _closure_masks(space)
    return [x for x in range(space.size) if closures[x] == 1 << x]


def maximal_spectrum(space: FiniteSpace) -> FiniteSpace:
    return space.subspace(closed_points(space))


def check_priestley(space: FiniteSpace, order: FinitePoset) -> bool:
    """Compact, and every x !<= y is witnessed by a clopen up-set
    containing x but not y."""
    if order.size != space.size:
        raise ValueError("order and space have different point counts")
    if not check_compact(space):
        return False
    open_set = set(space.open_masks)
    clopen_upsets = []
    for m in space.open_masks:
        if space.full_mask & ~m not in open_set:
            continue
        upset = all(
            not ((m >> x) & 1 and order.leq(x, y) and not (m >> y) & 1)
            for x in range(space.size)
            for y in range(space.size)
        )
        if upset:
            clopen_upsets.append(m)
    for x in range(space.size):
        for y in range(space.size):
            if x == y or order.leq(x, y):
                continue
            if not any((m >> x) & 1 and not (m >> y) & 1 for m in clopen_upsets):
                return False
    return True


def homeomorphic(s1: FiniteSpace, s2: FiniteSpace):
    """A point bijection carrying opens onto opens, or None.

    Also runs the lattice route (open-set lattices compared by
    lattice_iso) and insists the two methods agree.
    """
    direct = _homeo_search(s1, s2)
    lat1 = FiniteDistLattice.from_sets(s1.opens)
    lat2 = FiniteDistLattice.from_sets(s2.opens)
    via_lattice = lattice_iso(lat1, lat2)
    if (direct is None) != (via_lattice is None):
        raise RuntimeError(
            "homeomorphism search and open-set-lattice route disagree"
        )
    return direct


def _homeo_search(s1, s2):
    if s1.size != s2.size or len(s1.opens) != len(s2.opens):
        return None
    if sorted(len(o) for o in s1.opens) != sorted(len(o) for o in s2.opens):
        return None

    def profile(space, x):
        return tuple(sorted(len(o) for o in space.opens if x in o))

    prof1 = [profile(s1, x) for x in range(s1.size)]
    prof2 = [profile(s2, x) for x in range(s2.size)]
    if sorted(prof1) != sorted(prof2):
        return None
    target = set(s2.open_masks)
    mapping = [None] * s1.size
    used = [False] * s2.size

    def backtrack(x):
        if x == s1.size:
            for m in s1.open_masks:
                img = 0
                mm = m
                while mm:
                    p = (mm & -mm).bit_length() - 1
                    mm &= mm - 1
                    img |= 1 << mapping[p]
                if img not in target:
                    return False
            return True
        for y in range(s2.size):
            if used[y] or prof2[y] != prof1[x]:
                continue
            mapping[x] = y
            used[y] = True
            if backtrack(x + 1):
                return True
            mapping[x] = None
            used[y] = False
        return False

    return mapping if backtrack(0) else None


def disjoint_union_space(spaces) -> FiniteSpace:
    """Topological disjoint union: opens are blockwise unions of
    component opens."""
    spaces = list(spaces)
    points = []
    offsets = []
    for i, s in enumerate(spaces):
        offsets.append(len(points))
        points.extend("%d:%s" % (i, p) for p in s.points)
    count = 1
    for s in spaces:
        count *= max(1, len(s.opens))
        if count > (1 << 16):
            raise SizeGuardError("disjoint union would have too many opens")
    opens = []
    for pick in iter_product(*(s.opens for s in spaces)):
        o = set()
        for off, part in zip(offsets, pick):
            o.update(off + p for p in part)
        opens.append(frozenset(o))
    basis = []
    for off, s in zip(offsets, spaces):
        for b in s.basis:
            basis.append(frozenset(off + p for p in b))
    return FiniteSpace(points, opens, basis)


# -- spectra of finite algebras ----------------------------------------------


class AlgebraSpectrum:
    """The spectrum of a finite algebra: points are prime ideals, opens are
    the sigma(I) over all ideals, basis the sigma(a)."""

    def __init__(self, algebra, guard=ideal_mod.IDEAL_SIZE_GUARD):
        self.algebra = algebra
        self.lattice = ideal_mod.all_ideals(algebra, guard)
        primes = [
            (k, i)
            for k, i in enumerate(self.lattice.ideals)
            if self.lattice.prime_flags[k]
        ]
        self.primes = [i for _, i in primes]
        labels = ["P{%s}" % ",".join(map(str, p.sorted_members())) for p in self.primes]
        opens = [self.sigma(i) for i in self.lattice.ideals]
        basis = [self.sigma_elem(a) for a in algebra.elements()]
        self.space = FiniteSpace(labels, opens, basis)

    def sigma(self, ideal) -> frozenset:
        """sigma(I) = the primes that do not contain I."""
        mask = ideal.mask if isinstance(ideal, ideal_mod.Ideal) else _mask(ideal)
        return frozenset(
            j for j, p in enumerate(self.primes) if mask & ~p.mask != 0
        )

    def sigma_elem(self, a: int) -> frozenset:
        return frozenset(j for j, p in enumerate(self.primes) if a not in p)

    def v_closed(self, ideal) -> frozenset:
        """V(I) = primes containing I = complement of sigma(I)."""
        return frozenset(range(len(self.primes))) - self.sigma(ideal)

    def prime_poset(self) -> FinitePoset:
        n = len(self.primes)
        return FinitePoset(
            [
                [self.primes[i].mask & ~self.primes[j].mask == 0 for j in range(n)]
                for i in range(n)
            ]
        )


def spectrum(algebra, guard=ideal_mod.IDEAL_SIZE_GUARD) -> AlgebraSpectrum:
    return AlgebraSpectrum(algebra, guard)


class TreeSpectrum:
    """The spectrum of a tree algebra, computed symbolically: one point per
    vertex (the prime I(path to it)), opens from all antichain ideals.
    Every such ideal is principal (generated by a sum of indicators on the
    minimal vertices off its down-set), so the basis is the whole family.
    """

    def __init__(self, tree, guard=4096):
        self.tree = tree
        self.lattice = TreeIdealLattice(tree, guard)
        self.primes = [PathIdeal(tree, (v,)) for v in range(tree.size)]
        labels = ["I(%d)" % v for v in range(tree.size)]
        opens = [self.sigma(i) for i in self.lattice.ideals]
        self.space = FiniteSpace(labels, opens, opens)

    def sigma(self, ideal: PathIdeal) -> frozenset:
        return frozenset(
            v for v in range(self.tree.size) if not ideal.leq(self.primes[v])
        )

    def v_closed(self, ideal: PathIdeal) -> frozenset:
        return frozenset(range(self.tree.size)) - self.sigma(ideal)

    def prime_poset(self) -> FinitePoset:
        n = self.tree.size
        return FinitePoset(
            [[self.primes[i].leq(self.primes[j]) for j in range(n)] for i in range(n)]
        )


def tree_spectrum(tree, guard=4096) -> TreeSpectrum:
    return TreeSpectrum(tree, guard)


# -- derived checks on spectra -------------------------------------------------


def clopen_upset_check(spec: AlgebraSpectrum, ideal) -> bool:
    """For involutory algebras sigma(I) is clopen (complement sigma(I*))
    and an up-set for prime inclusion."""
    s = spec.sigma(ideal)
    members = ideal.members if isinstance(ideal, ideal_mod.Ideal) else set(ideal)
    star = ideal_mod.annihilator(spec.algebra, members)
    comp = spec.sigma(star)
    if s | comp != frozenset(range(len(spec.primes))) or s & comp:
        return False
    if frozenset(s) not in set(spec.space.opens) or comp not in set(spec.space.opens):
        return False
    order = spec.prime_poset()
    return all(
        not (x in s and order.leq(x, y) and y not in s)
        for x in range(len(spec.primes))
        for y in range(len(spec.primes))
    )


def check_compact_iff_fg(spec) -> tuple:
    """(compact, finitely generated as an ideal), computed independently.

    Finite algebras: the maximal elements always generate.  Tree algebras:
    search the vertex indicators for one whose principal ideal is already
    the whole algebra (the root indicator always is).
    """
    compact = check_compact(spec.space)
    if isinstance(spec, AlgebraSpectrum):
        gens = spec.algebra.maximal_elements()
        fg = (
            ideal_mod.generated_ideal(spec.algebra, gens).mask
            == (1 << spec.algebra.size) - 1
        )
    else:
        fg = any(
            principal_ideal(TreeElement.indicator(spec.tree, v)).is_top
            for v in range(spec.tree.size)
        )
    return compact, fg


class SpectrumMap:
    """X(h): X(B) -> X(A) by preimage, with the spectral property checked.

    Preimages are verified prime; a preimage equal to the whole source is
    surfaced as ImproperPreimageError naming the offending prime (the
    convention-free reading of the theory).
    """

    def __init__(self, source_spec: AlgebraSpectrum, target_spec: AlgebraSpectrum, hom: BckHomomorphism):
        if hom.source != source_spec.algebra:
            raise ValueError("hom source does not match the source spectrum")
        if hom.target != target_spec.algebra:
            raise ValueError("hom target does not match the target spectrum")
        self.source_spec = source_spec
        self.target_spec = target_spec
        self.hom = hom
        full = frozenset(hom.source.elements())
        point_map = []
        for q in target_spec.primes:
            pre = hom.preimage(q.members)
            if pre == full:
                raise ImproperPreimageError(q.sorted_members())
            ideal = ideal_mod.Ideal(hom.source, pre)
            if not ideal_mod.is_prime(hom.source, ideal):
                raise RuntimeError(
                    "preimage %r is not prime; theory violated" % (sorted(pre),)
                )
            point_map.append(
                next(
                    k
                    for k, p in enumerate(source_spec.primes)
                    if p.mask == ideal.mask
                )
            )
        self.point_map = tuple(point_map)
        self.spectral = self._spectral()

    def _spectral(self) -> bool:
        target_opens = set(self.target_spec.space.open_masks)
        for om in self.source_spec.space.open_masks:
            pre = 0
            for q_idx, p_idx in enumerate(self.point_map):
                if (om >> p_idx) & 1:
                    pre |= 1 << q_idx
            if pre not in target_opens:
                return False
        return True


def spectrum_map(source_spec, target_spec, hom) -> SpectrumMap:
    return SpectrumMap(source_spec, target_spec, hom)


def check_union_homeo(components, guard=ideal_mod.IDEAL_SIZE_GUARD) -> bool:
    """spectrum(union) is homeomorphic to the disjoint union of the
    component spectra."""
    union = cbck_union(components)
    whole = spectrum(union.algebra, guard).space
    parts = disjoint_union_space([spectrum(c, guard).space for c in components])
    return homeomorphic(whole, parts) is not None
