"""Backend equivalence: the compiled and pure kernels must agree exactly,
witnesses included."""

import random

import numpy as np
import pytest

from bckspec import kernels
from bckspec.constructions import cbck_union, direct_product, standard_chain
from bckspec.errors import SizeGuardError

BACKENDS = kernels.available_backends()


def random_tables(count, rng):
    """Valid algebra tables plus mutated (mostly invalid) ones."""
    pool = [
        standard_chain(1),
        standard_chain(3),
        cbck_union([standard_chain(1), standard_chain(2)]).algebra,
        direct_product([standard_chain(1), standard_chain(1)]).algebra,
    ]
    tables = [np.array(a.table) for a in pool]
    for _ in range(count):
        base = rng.choice(pool)
        t = np.array(base.table)
        for _ in range(rng.randint(1, 3)):
            x = rng.randrange(base.size)
            y = rng.randrange(base.size)
            t[x, y] = rng.randrange(base.size)
        tables.append(t)
    return tables


def test_both_backends_present_or_noted():
    assert "pure" in BACKENDS
    # the compiled backend is optional; everything below degrades to a
    # self-comparison when it failed to build
    assert kernels.BACKEND in BACKENDS


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_axiom_witnesses_match_pure(name):
    impl = BACKENDS[name]
    pure = BACKENDS["pure"]
    rng = random.Random(99)
    for t in random_tables(40, rng):
        assert impl.axiom_witnesses(t) == pure.axiom_witnesses(t)


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_mask_kernels_match_pure(name):
    impl = BACKENDS[name]
    pure = BACKENDS["pure"]
    rng = random.Random(5)
    pool = [
        standard_chain(2),
        cbck_union([standard_chain(1), standard_chain(2)]).algebra,
        cbck_union([standard_chain(1)] * 3).algebra,
    ]
    for a in pool:
        t = np.array(a.table)
        assert impl.enumerate_ideal_masks(t) == pure.enumerate_ideal_masks(t)
        for _ in range(30):
            seed = rng.randrange(1 << a.size)
            assert impl.ideal_closure(t, seed) == pure.ideal_closure(t, seed)
            assert impl.is_ideal_mask(t, seed | 1) == pure.is_ideal_mask(t, seed | 1)
        assert (impl.leq_matrix(t) == pure.leq_matrix(t)).all()
        assert (impl.meet_table(t) == pure.meet_table(t)).all()


@pytest.mark.parametrize("name", sorted(BACKENDS))
def test_guards(name):
    impl = BACKENDS[name]
    big = np.zeros((22, 22), dtype=np.int32)
    with pytest.raises(SizeGuardError):
        impl.enumerate_ideal_masks(big)


def test_selected_backend_exports():
    for fn in (
        "axiom_witnesses",
        "leq_matrix",
        "meet_table",
        "ideal_closure",
        "is_ideal_mask",
        "enumerate_ideal_masks",
    ):
        assert callable(getattr(kernels, fn))
