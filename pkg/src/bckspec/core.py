"""Finite commutative BCK-algebras presented by Cayley tables.

An algebra lives on {0..n-1} with constant 0 fixed at index 0 and the
binary operation given by ``table[x][y]``.  Construction checks the four
defining identities exhaustively (O(n^3), intended for n up to ~512) and
rejects failures; a table whose zero sits at a different index simply
fails cBCK4 at index 0 and is rejected, never permuted.  The derived
order x <= y iff x*y = 0, and the meet x ^ y = y*(y*x), are computed on
demand and cached.  Instances are immutable and safe to share.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from . import kernels
from .errors import AxiomError, HomomorphismError, TableError, UnboundedError

AXIOM_NAMES = ("cBCK1", "cBCK2", "cBCK3", "cBCK4")


def validate_table(table):
    """Structural check; returns the table as an int32 array or raises TableError."""
    try:
        arr = np.asarray(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise TableError("table is not rectangular integer data: %s" % exc) from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] == 0:
        raise TableError("table must be square and non-empty, got shape %r" % (arr.shape,))
    n = arr.shape[0]
    if arr.min() < 0 or arr.max() >= n:
        bad = np.argwhere((arr < 0) | (arr >= n))[0]
        raise TableError(
            "entry at (%d, %d) is out of range 0..%d" % (bad[0], bad[1], n - 1)
        )
    return arr.astype(np.int32)


def check_axioms(table):
    """Check cBCK1-4 on a candidate table.

    Returns {axiom name: None or first counterexample tuple}; every failing
    axiom is reported, not just the first.  Malformed input raises
    TableError, a distinct failure mode from a well-formed table failing
    an axiom.
    """
    return kernels.axiom_witnesses(validate_table(table))


def axioms_pass(report) -> bool:
    return all(w is None for w in report.values())


class FiniteCbckAlgebra:
    """A finite cBCK-algebra; see the module docstring for conventions."""

    def __init__(self, table):
        arr = validate_table(table)
        report = kernels.axiom_witnesses(arr)
        failures = {k: w for k, w in report.items() if w is not None}
        if failures:
            raise AxiomError(failures)
        arr.setflags(write=False)
        self._arr = arr
        self.size = int(arr.shape[0])
        self.table = tuple(tuple(int(v) for v in row) for row in arr)

    # -- basic structure ------------------------------------------------

    def elements(self):
        return range(self.size)

    def op(self, x: int, y: int) -> int:
        self._check_index(x)
        self._check_index(y)
        return self.table[x][y]

    def _check_index(self, x):
        if not 0 <= x < self.size:
            raise IndexError("element %r out of range 0..%d" % (x, self.size - 1))

    @cached_property
    def leq_np(self):
        m = kernels.leq_matrix(self._arr)
        m.setflags(write=False)
        return m

    @cached_property
    def meet_np(self):
        m = kernels.meet_table(self._arr)
        m.setflags(write=False)
        return m

    def leq(self, x: int, y: int) -> bool:
        return self.op(x, y) == 0

    def meet(self, x: int, y: int) -> int:
        """Greatest lower bound of x and y: returns y*(y*x)."""
        return self.table[y][self.op(y, x)]

    def top(self):
        """The top element if the algebra is bounded, else None."""
        col_ok = (self._arr == 0).all(axis=0)
        hits = np.flatnonzero(col_ok)
        return int(hits[0]) if hits.size else None

    @property
    def bounded(self) -> bool:
        return self.top() is not None

    def join(self, x: int, y: int) -> int:
        """Least upper bound 1*((1*x) ^ (1*y)); only defined when bounded."""
        one = self.top()
        if one is None:
            raise UnboundedError("join requires a bounded algebra")
        return self.op(one, self.meet(self.op(one, x), self.op(one, y)))

    def power(self, x: int, y: int, n: int) -> int:
        """x*y^n, i.e. x with y subtracted n times."""
        if n < 0:
            raise ValueError("n must be non-negative")
        out = x
        for _ in range(n):
            out = self.op(out, y)
        return out

    # -- predicates ------------------------------------------------------

    def satisfies_en(self, n: int) -> bool:
        """True iff x*y^n = x*y^(n+1) holds for all pairs."""
        if n < 1:
            raise ValueError("n must be positive")
        for x in self.elements():
            for y in self.elements():
                p = self.power(x, y, n)
                if self.table[p][y] != p:
                    return False
        return True

    def is_implicative(self) -> bool:
        """True iff x*(y*x) = x for all pairs (follows from (E_1))."""
        t = self.table
        return all(
            t[x][t[y][x]] == x for x in self.elements() for y in self.elements()
        )

    def is_chain(self) -> bool:
        leq = self.leq_np
        return bool((leq | leq.T).all())

    def is_directed(self) -> bool:
        """Every pair of elements has a common upper bound."""
        leq = self.leq_np
        for x in self.elements():
            ub = leq[x] & leq
            # ub[y, z] iff z bounds both x and y
            if not ub.any(axis=1).all():
                return False
        return True

    def maximal_elements(self):
        leq = self.leq_np
        out = []
        for x in self.elements():
            above = np.flatnonzero(leq[x])
            if len(above) == 1 and above[0] == x:
                out.append(x)
        return out

    # -- plumbing ---------------------------------------------------------

    def to_json(self):
        return {"kind": "table", "size": self.size, "table": [list(r) for r in self.table]}

    def __eq__(self, other):
        return isinstance(other, FiniteCbckAlgebra) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return "FiniteCbckAlgebra(size=%d)" % self.size


def check_homomorphism(source, target, mapping):
    """Validate a candidate homomorphism source -> target.

    Returns (True, None) or (False, first violating pair (x, y)).  A map of
    the wrong length or with out-of-range values raises HomomorphismError.
    """
    mapping = list(mapping)
    if len(mapping) != source.size:
        raise HomomorphismError(
            "map has length %d, source has %d elements" % (len(mapping), source.size)
        )
    for v in mapping:
        if not 0 <= v < target.size:
            raise HomomorphismError("map value %r not a target element" % (v,))
    for x in source.elements():
        for y in source.elements():
            if mapping[source.table[x][y]] != target.table[mapping[x]][mapping[y]]:
                return False, (x, y)
    return True, None


class BckHomomorphism:
    """A verified BCK-homomorphism (h(x*y) = h(x)*h(y); hence h(0) = 0)."""

    def __init__(self, source, target, mapping):
        ok, witness = check_homomorphism(source, target, mapping)
        if not ok:
            raise HomomorphismError(
                "h(x*y) != h(x)*h(y) at (x, y) = %r" % (witness,)
            )
        self.source = source
        self.target = target
        self.mapping = tuple(int(v) for v in mapping)

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, algebra, range(algebra.size))

    def __call__(self, x: int) -> int:
        return self.mapping[x]

    def preimage(self, subset):
        subset = frozenset(subset)
        return frozenset(x for x in self.source.elements() if self.mapping[x] in subset)

    def to_json(self):
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "map": list(self.mapping),
        }

    def __repr__(self):
        return "BckHomomorphism(%d -> %d elements)" % (
            self.source.size,
            self.target.size,
        )
