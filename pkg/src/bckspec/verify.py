"""Named verification suites: each re-derives one batch of the theory's
claims on a concrete corpus and reports per-check pass/fail.

Suites are deterministic under a fixed seed; the corpus is finite
algebras up to 12 elements (chains, unions, products) plus all rooted
trees up to 7 vertices.
"""

from __future__ import annotations

import random
from functools import lru_cache

from . import ideals as ideal_mod
from .constructions import cbck_union, direct_product, standard_chain, trivial_algebra
from .lattices import (
    FiniteDistLattice,
    FinitePoset,
    boolean_lattice,
    boolean_plus_top,
    chain_lattice,
    free_bounded_distributive_2,
    lattice_from_poset,
    lattice_iso,
    lattice_product,
    poset_iso,
)
from .spectra import (
    check_multiplicative_basis,
    check_priestley,
    check_quasi_sober,
    check_T0,
    check_union_homeo,
    compact_open_lattice,
    specialization_order,
    spectrum,
    tree_spectrum,
)
from .trees import (
    RootedTree,
    TreeElement,
    all_rooted_trees,
    canonical_form,
    tree_ideal_lattice,
    tree_leq,
    tree_meet,
    tree_op,
    tree_prime_ideals,
)


class Check:
    def __init__(self, label, ok, detail=""):
        self.label = label
        self.ok = bool(ok)
        self.detail = detail

    def to_json(self):
        out = {"label": self.label, "ok": self.ok}
        if self.detail:
            out["detail"] = self.detail
        return out


class SuiteResult:
    def __init__(self, name, seed, checks):
        self.name = name
        self.seed = seed
        self.checks = list(checks)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def to_json(self):
        return {
            "suite": self.name,
            "seed": self.seed,
            "ok": self.ok,
            "checks": [c.to_json() for c in self.checks],
        }


# -- corpus --------------------------------------------------------------------


def finite_corpus():
    """Named finite algebras, all of size <= 12."""
    c = {k: standard_chain(k) for k in range(1, 6)}
    entries = [("trivial", trivial_algebra())]
    entries += [("C_%d" % k, alg) for k, alg in c.items()]
    unions = {
        "C1+C1": [c[1], c[1]],
        "C1+C1+C1": [c[1], c[1], c[1]],
        "C1+C2": [c[1], c[2]],
        "C2+C3": [c[2], c[3]],
        "C1+C2+C3": [c[1], c[2], c[3]],
    }
    entries += [(name, cbck_union(parts).algebra) for name, parts in unions.items()]
    products = {
        "C1xC1": [c[1], c[1]],
        "C1xC2": [c[1], c[2]],
        "C2xC2": [c[2], c[2]],
        "C1xC1xC1": [c[1], c[1], c[1]],
    }
    entries += [(name, direct_product(parts).algebra) for name, parts in products.items()]
    return entries


@lru_cache(maxsize=None)
def tree_corpus(max_vertices=7):
    return tuple(all_rooted_trees(max_vertices))


@lru_cache(maxsize=None)
def _tree_lattice(parents):
    return tree_ideal_lattice(RootedTree(parents))


@lru_cache(maxsize=None)
def _tree_dist_lattice(parents):
    return FiniteDistLattice(_tree_lattice(parents).leq_matrix())


@lru_cache(maxsize=None)
def _tree_spectrum(parents):
    return tree_spectrum(RootedTree(parents))


def _tree_poset(tree) -> FinitePoset:
    return FinitePoset(
        [[tree.leq_t(a, b) for b in range(tree.size)] for a in range(tree.size)]
    )


def _kx_lattice(space) -> FiniteDistLattice:
    return compact_open_lattice(space)


def _tree_name(tree) -> str:
    return "tree%d%s" % (tree.size, canonical_form(tree))


# -- individual suites ----------------------------------------------------------


def suite_figures(seed=0):
    """Exact regression of the three worked ideal-lattice diagrams."""
    checks = []
    cases = {
        "T_2": (
            RootedTree.star(2),
            5,
            3,
            {
                ("{0}", "I(1)"),
                ("{0}", "I(2)"),
                ("I(1)", "I(0)"),
                ("I(2)", "I(0)"),
                ("I(0)", "A^T"),
            },
            {"I(0)", "I(1)", "I(2)"},
        ),
        "T_3": (
            RootedTree.star(3),
            9,
            4,
            {
                ("{0}", "I(1,2)"),
                ("{0}", "I(1,3)"),
                ("{0}", "I(2,3)"),
                ("I(1,2)", "I(1)"),
                ("I(1,2)", "I(2)"),
                ("I(1,3)", "I(1)"),
                ("I(1,3)", "I(3)"),
                ("I(2,3)", "I(2)"),
                ("I(2,3)", "I(3)"),
                ("I(1)", "I(0)"),
                ("I(2)", "I(0)"),
                ("I(3)", "I(0)"),
                ("I(0)", "A^T"),
            },
            {"I(0)", "I(1)", "I(2)", "I(3)"},
        ),
        "H": (
            RootedTree([None, 0, 0, 2, 2]),
            11,
            5,
            {
                ("{0}", "I(1,3)"),
                ("{0}", "I(1,4)"),
                ("{0}", "I(3,4)"),
                ("I(1,3)", "I(1,2)"),
                ("I(1,3)", "I(3)"),
                ("I(1,4)", "I(1,2)"),
                ("I(1,4)", "I(4)"),
                ("I(3,4)", "I(3)"),
                ("I(3,4)", "I(4)"),
                ("I(1,2)", "I(1)"),
                ("I(1,2)", "I(2)"),
                ("I(3)", "I(2)"),
                ("I(4)", "I(2)"),
                ("I(1)", "I(0)"),
                ("I(2)", "I(0)"),
                ("I(0)", "A^T"),
            },
            {"I(0)", "I(1)", "I(2)", "I(3)", "I(4)"},
        ),
    }
    for name, (tree, n_ideals, n_primes, want_covers, want_primes) in cases.items():
        lat = tree_ideal_lattice(tree)
        primes = tree_prime_ideals(tree)
        labels = lat.labels()
        dist = FiniteDistLattice(lat.leq_matrix())
        got_covers = {
            (labels[i], labels[j]) for i, j in dist.poset.cover_pairs()
        }
        got_primes = {labels[k] for k in lat.prime_indices}
        checks.append(
            Check("%s ideal count = %d" % (name, n_ideals), len(lat) == n_ideals)
        )
        checks.append(
            Check("%s prime count = %d" % (name, n_primes), len(primes) == n_primes)
        )
        checks.append(
            Check(
                "%s labeled Hasse diagram" % name,
                got_covers == want_covers,
                "" if got_covers == want_covers else repr(got_covers ^ want_covers),
            )
        )
        checks.append(Check("%s prime labels" % name, got_primes == want_primes))
    return SuiteResult("figures", seed, checks)


def suite_tn_lattices(seed=0):
    """id(A^{T_n}) is the boolean lattice with a new top, n = 1..5."""
    checks = []
    for n in range(1, 6):
        tree = RootedTree.star(n)
        dist = _tree_dist_lattice(tree.parents)
        target = boolean_plus_top(n)
        checks.append(
            Check(
                "id(A^T_%d) iso B_%d plus top (%d elements)" % (n, n, target.size),
                lattice_iso(dist, target) is not None,
            )
        )
    return SuiteResult("tn-lattices", seed, checks)


def suite_tree_duals(seed=0):
    """Prime poset of A^T is order-anti-isomorphic to T, all trees <= 7."""
    checks = []
    bad = []
    trees = tree_corpus(7)
    for tree in trees:
        primes = tree_prime_ideals(tree)
        got = FinitePoset(primes.leq_matrix())
        if poset_iso(got, _tree_poset(tree).dual()) is None:
            bad.append(_tree_name(tree))
    checks.append(
        Check(
            "X(A^T) anti-isomorphic to T for all %d trees" % len(trees),
            not bad,
            ", ".join(bad),
        )
    )
    return SuiteResult("tree-duals", seed, checks)


def suite_union_primes(seed=0):
    """Brute-force primes of a union equal the blockwise characterization."""
    checks = []
    pool = {1: standard_chain(1), 2: standard_chain(2), 3: standard_chain(3)}
    combos = [
        (a, b) for a in pool for b in pool if a <= b
    ] + [
        (a, b, c)
        for a in pool
        for b in pool
        for c in pool
        if a <= b <= c
    ]
    for combo in combos:
        union = cbck_union([pool[k] for k in combo])
        brute = {
            frozenset(p.members)
            for p in ideal_mod.all_ideals(union.algebra).primes()
        }
        predicted = set()
        for mu, comp in enumerate(union.components):
            for q in ideal_mod.all_ideals(comp).primes():
                members = {0}
                for lam, other in enumerate(union.components):
                    if lam == mu:
                        members.update(
                            union.global_index(mu, x) for x in q.members
                        )
                    else:
                        members.update(
                            union.global_index(lam, x) for x in range(other.size)
                        )
                predicted.add(frozenset(members))
        name = "+".join("C%d" % k for k in combo)
        checks.append(Check("primes of %s blockwise" % name, brute == predicted))
    return SuiteResult("union-primes", seed, checks)


def suite_gspec(seed=0):
    """Every corpus spectrum is T0, quasi-sober, with a multiplicative basis."""
    checks = []
    for name, alg in finite_corpus():
        space = spectrum(alg).space
        ok = (
            check_T0(space)
            and check_quasi_sober(space)
            and check_multiplicative_basis(space)
        )
        checks.append(Check("gspec %s" % name, ok))
    bad = []
    for tree in tree_corpus(7):
        space = _tree_spectrum(tree.parents).space
        if not (
            check_T0(space)
            and check_quasi_sober(space)
            and check_multiplicative_basis(space)
        ):
            bad.append(_tree_name(tree))
    checks.append(
        Check("gspec all tree spectra (7 vertices max)", not bad, ", ".join(bad))
    )
    return SuiteResult("gspec", seed, checks)


def suite_priestley(seed=0):
    """Finite algebras are involutory, so their spectra are Priestley; the
    prime posets are therefore antichains."""
    checks = []
    for name, alg in finite_corpus():
        spec = spectrum(alg)
        order = specialization_order(spec.space)
        ok = check_priestley(spec.space, order)
        checks.append(Check("priestley %s" % name, ok))
        checks.append(
            Check("prime poset of %s is an antichain" % name, spec.prime_poset().is_antichain())
        )
        checks.append(
            Check("%s involutory" % name, ideal_mod.is_involutory(alg, spec.lattice))
        )
    return SuiteResult("priestley", seed, checks)


def suite_sigma_kx(seed=0):
    """sigma is a lattice isomorphism onto the topology, and the
    compact-open lattice of the spectrum recovers the ideal lattice."""
    checks = []
    for name, alg in finite_corpus():
        spec = spectrum(alg)
        lat = spec.lattice
        sig = [spec.sigma(i) for i in lat.ideals]
        inj = len(set(sig)) == len(sig)
        meets = all(
            sig[lat.meet_index(i, j)] == sig[i] & sig[j]
            for i in range(len(lat))
            for j in range(len(lat))
        )
        joins = all(
            sig[lat.join_index(i, j)] == sig[i] | sig[j]
            for i in range(len(lat))
            for j in range(len(lat))
        )
        checks.append(Check("sigma iso %s" % name, inj and meets and joins))
        ideal_lat = FiniteDistLattice(lat.leq_matrix())
        checks.append(
            Check(
                "KX = id %s" % name,
                lattice_iso(_kx_lattice(spec.space), ideal_lat) is not None,
            )
        )
    bad_sigma = []
    bad_kx = []
    for tree in tree_corpus(7):
        spec = _tree_spectrum(tree.parents)
        lat = spec.lattice
        sig = [spec.sigma(i) for i in lat.ideals]
        inj = len(set(sig)) == len(sig)
        pairs_ok = True
        for i, a in enumerate(lat.ideals):
            for j, b in enumerate(lat.ideals):
                if sig[lat.index_of(a.meet(b))] != sig[i] & sig[j]:
                    pairs_ok = False
                if sig[lat.index_of(a.join(b))] != sig[i] | sig[j]:
                    pairs_ok = False
        if not (inj and pairs_ok):
            bad_sigma.append(_tree_name(tree))
        dist = _tree_dist_lattice(tree.parents)
        if lattice_iso(_kx_lattice(spec.space), dist) is None:
            bad_kx.append(_tree_name(tree))
    checks.append(Check("sigma iso all tree spectra", not bad_sigma, ", ".join(bad_sigma)))
    checks.append(Check("KX = id all tree algebras", not bad_kx, ", ".join(bad_kx)))
    return SuiteResult("sigma-kx", seed, checks)


def suite_noncompact(seed=0):
    """KX of an n-fold union of two-element chains is the boolean lattice
    B_n, n = 1..4 (the finite instances of the noncompact example)."""
    checks = []
    for n in range(1, 5):
        union = cbck_union([standard_chain(1)] * n)
        kx = _kx_lattice(spectrum(union.algebra).space)
        checks.append(
            Check(
                "KX(union of %d C_1) iso B_%d" % (n, n),
                lattice_iso(kx, boolean_lattice(n)) is not None,
            )
        )
    return SuiteResult("noncompact", seed, checks)


def suite_union_coproduct(seed=0):
    """The spectrum of a union is the disjoint union of the spectra,
    for 20 randomized finite unions."""
    rng = random.Random(seed)
    checks = []
    for trial in range(20):
        blocks = [
            standard_chain(rng.randint(1, 3)) for _ in range(rng.randint(2, 3))
        ]
        ok = check_union_homeo(blocks)
        checks.append(
            Check(
                "trial %d: union of %s" % (trial, [b.size - 1 for b in blocks]),
                ok,
            )
        )
    return SuiteResult("union-coproduct", seed, checks)


def _random_tree(rng, max_vertices=8):
    n = rng.randint(1, max_vertices)
    parents = [None] + [rng.randrange(i) for i in range(1, n)]
    return RootedTree(parents)


def _random_element(rng, tree, max_support=6):
    size = rng.randint(0, min(max_support, tree.size))
    verts = rng.sample(range(tree.size), size)
    values = {}
    for v in verts:
        c = rng.choice([k for k in range(-9, 10) if k])
        values[v] = c
    # repair: ancestors have smaller indices, so one ascending pass suffices
    for v in sorted(values):
        if values[v] < 0 and all(
            values.get(a, 0) == 0 for a in tree.paths[v][:-1]
        ):
            values[v] = -values[v]
    return TreeElement(tree, values)


def suite_axioms_random(seed=0, instances=10000, witness_instances=1500):
    """Fuzz the identities on random tree elements, and the generated-ideal
    membership/witness equivalence on random finite algebras."""
    rng = random.Random(seed)
    failures = []
    for trial in range(instances):
        tree = _random_tree(rng)
        u = _random_element(rng, tree)
        v = _random_element(rng, tree)
        w = _random_element(rng, tree)
        zero = TreeElement.zero(tree)
        try:
            if tree_op(tree_op(u, v), w) != tree_op(tree_op(u, w), v):
                failures.append((trial, "cBCK1"))
            if tree_op(u, tree_op(u, v)) != tree_op(v, tree_op(v, u)):
                failures.append((trial, "cBCK2"))
            if not tree_op(u, u).is_zero:
                failures.append((trial, "cBCK3"))
            if tree_op(u, zero) != u:
                failures.append((trial, "cBCK4"))
            muv = tree_meet(u, v)
            if muv != tree_meet(v, u):
                failures.append((trial, "meet commutativity"))
            if muv != tree_op(u, tree_op(u, v)):
                failures.append((trial, "meet via operation"))
            if tree_leq(u, v) != tree_op(u, v).is_zero:
                failures.append((trial, "derived order"))
            if tree_leq(u, v):
                if not tree_leq(tree_op(u, w), tree_op(v, w)):
                    failures.append((trial, "left isotone"))
                if not tree_leq(tree_op(w, v), tree_op(w, u)):
                    failures.append((trial, "right antitone"))
            uv = tree_op(u, v)
            if not tree_leq(uv, u):
                failures.append((trial, "u*v <= u"))
            if (uv == u) != muv.is_zero:
                failures.append((trial, "u*v = u iff meet zero"))
        except Exception as exc:  # any crash is a failure too
            failures.append((trial, "exception: %r" % exc))
        if len(failures) > 10:
            break
    checks = [
        Check(
            "tree identities, %d instances" % instances,
            not failures,
            repr(failures[:5]),
        )
    ]

    pool = [alg for _, alg in finite_corpus()]
    wit_failures = []
    for trial in range(witness_instances):
        alg = rng.choice(pool)
        gens = rng.sample(range(alg.size), rng.randint(0, min(3, alg.size)))
        x = rng.randrange(alg.size)
        witness = ideal_mod.membership_witness(alg, x, gens)
        member = x in ideal_mod.generated_ideal(alg, gens)
        if (witness is not None) != member:
            wit_failures.append((trial, alg.size, gens, x))
        if len(wit_failures) > 10:
            break
    checks.append(
        Check(
            "membership/witness equivalence, %d instances" % witness_instances,
            not wit_failures,
            repr(wit_failures[:5]),
        )
    )
    return SuiteResult("axioms-random", seed, checks)


def suite_f2_negative(seed=0):
    """No tree with up to 6 vertices has ideal lattice F_2."""
    f2 = free_bounded_distributive_2()
    hits = []
    trees = tree_corpus(6)
    for tree in trees:
        dist = _tree_dist_lattice(tree.parents)
        if dist.size == f2.size and lattice_iso(dist, f2) is not None:
            hits.append(_tree_name(tree))
    checks = [
        Check(
            "no tree ideal lattice (<= 6 vertices, %d trees) is F_2" % len(trees),
            not hits,
            ", ".join(hits),
        ),
        Check("MI(F_2) has 4 elements", len(f2.meet_irreducibles()[0]) == 4),
    ]
    return SuiteResult("f2-negative", seed, checks)


def suite_culmination(seed=0):
    """The lattice families reached by the compact-open functor."""
    checks = []
    bad = []
    for tree in tree_corpus(7):
        kx = _kx_lattice(_tree_spectrum(tree.parents).space)
        target = lattice_from_poset(_tree_poset(tree).dual())
        if lattice_iso(kx, target) is None:
            bad.append(_tree_name(tree))
    checks.append(
        Check("KX(A^T) iso downsets of T dual, all trees <= 7", not bad, ", ".join(bad))
    )
    for n in range(2, 7):
        tree = RootedTree.chain(n - 1)
        kx = _kx_lattice(_tree_spectrum(tree.parents).space)
        checks.append(
            Check(
                "KX(A^ch_%d) iso %d-chain" % (n - 1, n),
                lattice_iso(kx, chain_lattice(n)) is not None,
            )
        )
    for n in range(1, 5):
        kx = _kx_lattice(_tree_spectrum(RootedTree.star(n).parents).space)
        checks.append(
            Check(
                "KX(A^T_%d) iso B_%d plus top" % (n, n),
                lattice_iso(kx, boolean_plus_top(n)) is not None,
            )
        )
    for n in range(1, 5):
        union = cbck_union([standard_chain(1)] * n)
        kx = _kx_lattice(spectrum(union.algebra).space)
        checks.append(
            Check(
                "KX(%d-fold C_1 union) iso B_%d" % (n, n),
                lattice_iso(kx, boolean_lattice(n)) is not None,
            )
        )
    samples = [
        ("(C1+C1), C2", [cbck_union([standard_chain(1)] * 2).algebra, standard_chain(2)]),
        (
            "(C1+C1), (C1+C1)",
            [cbck_union([standard_chain(1)] * 2).algebra] * 2,
        ),
        (
            "C1, (C1+C1), C3",
            [
                standard_chain(1),
                cbck_union([standard_chain(1)] * 2).algebra,
                standard_chain(3),
            ],
        ),
    ]
    for name, comps in samples:
        whole = _kx_lattice(spectrum(cbck_union(comps).algebra).space)
        parts = lattice_product([_kx_lattice(spectrum(c).space) for c in comps])
        checks.append(
            Check(
                "KX(union of %s) iso product of KX parts" % name,
                lattice_iso(whole, parts) is not None,
            )
        )
    return SuiteResult("culmination", seed, checks)


SUITES = {
    "figures": suite_figures,
    "tn-lattices": suite_tn_lattices,
    "tree-duals": suite_tree_duals,
    "union-primes": suite_union_primes,
    "gspec": suite_gspec,
    "priestley": suite_priestley,
    "sigma-kx": suite_sigma_kx,
    "noncompact": suite_noncompact,
    "union-coproduct": suite_union_coproduct,
    "axioms-random": suite_axioms_random,
    "f2-negative": suite_f2_negative,
    "culmination": suite_culmination,
}


def run_suite(name, seed=0) -> SuiteResult:
    if name not in SUITES:
        raise KeyError("unknown suite %r; known: %s" % (name, ", ".join(sorted(SUITES))))
    return SUITES[name](seed)


def run_all(seed=0):
    return [fn(seed) for fn in SUITES.values()]
