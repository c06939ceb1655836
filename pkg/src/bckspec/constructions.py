"""Constructors: standard chains C_k, cBCK-unions glued at 0, direct products.

Unions number their elements with the shared zero at 0 followed by each
component's nonzero elements in input order; a provenance table records
where every element came from so tests can name atoms deterministically.
Only finite unions are built here.
"""

from __future__ import annotations

from .core import BckHomomorphism, FiniteCbckAlgebra


def trivial_algebra() -> FiniteCbckAlgebra:
    return FiniteCbckAlgebra([[0]])


def standard_chain(k: int) -> FiniteCbckAlgebra:
    """C_k on {0..k} with x*y = max(x - y, 0); element i encodes i/k."""
    if k < 1:
        raise ValueError("k must be >= 1; use trivial_algebra() for one element")
    n = k + 1
    return FiniteCbckAlgebra([[max(x - y, 0) for y in range(n)] for x in range(n)])


class CbckUnion:
    """A finite cBCK-union: components overlapping only in 0, with x*y = x
    across blocks and the component operation inside a block.

    ``provenance[g]`` is (component index, original index) for g > 0 and
    None for the shared zero.
    """

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise ValueError("empty component list")
        self.components = components
        self._offsets = []
        off = 1
        prov = [None]
        for i, comp in enumerate(components):
            self._offsets.append(off)
            for x in range(1, comp.size):
                prov.append((i, x))
            off += comp.size - 1
        self.provenance = tuple(prov)
        size = off

        table = [[0] * size for _ in range(size)]
        for g1 in range(size):
            for g2 in range(size):
                table[g1][g2] = self._op(g1, g2)
        self.algebra = FiniteCbckAlgebra(table)

    def _op(self, g1, g2):
        if g1 == 0:
            return 0
        if g2 == 0:
            return g1
        i1, x1 = self.provenance[g1]
        i2, x2 = self.provenance[g2]
        if i1 != i2:
            return g1
        return self.global_index(i1, self.components[i1].table[x1][x2])

    def global_index(self, component: int, original: int) -> int:
        if original == 0:
            return 0
        return self._offsets[component] + original - 1

    def block_elements(self, component: int):
        """Global indices of the component's elements, zero included."""
        comp = self.components[component]
        return [self.global_index(component, x) for x in range(comp.size)]

    def block_embedding(self, component: int) -> BckHomomorphism:
        comp = self.components[component]
        mapping = [self.global_index(component, x) for x in range(comp.size)]
        return BckHomomorphism(comp, self.algebra, mapping)

    def to_json(self):
        return {"kind": "union", "components": [c.to_json() for c in self.components]}


def cbck_union(components) -> CbckUnion:
    return CbckUnion(components)


class DirectProduct:
    """Componentwise product; used to generate test algebras.

    Tuples are numbered in lexicographic order with the first component
    most significant, so the zero tuple lands at index 0.
    """

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise ValueError("empty component list")
        self.components = components
        sizes = [c.size for c in components]
        strides = [1] * len(sizes)
        for i in range(len(sizes) - 2, -1, -1):
            strides[i] = strides[i + 1] * sizes[i + 1]
        self._strides = strides
        size = strides[0] * sizes[0]

        table = [[0] * size for _ in range(size)]
        for g1 in range(size):
            t1 = self.to_tuple(g1)
            for g2 in range(size):
                t2 = self.to_tuple(g2)
                res = tuple(
                    c.table[a][b] for c, a, b in zip(components, t1, t2)
                )
                table[g1][g2] = self.to_index(res)
        self.algebra = FiniteCbckAlgebra(table)

    def to_tuple(self, g: int):
        out = []
        for stride, comp in zip(self._strides, self.components):
            out.append((g // stride) % comp.size)
        return tuple(out)

    def to_index(self, values) -> int:
        return sum(v * s for v, s in zip(values, self._strides))

    def to_json(self):
        return {"kind": "product", "components": [c.to_json() for c in self.components]}


def direct_product(components) -> DirectProduct:
    return DirectProduct(components)
