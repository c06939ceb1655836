"""JSON schemas for algebras, trees, homomorphisms, elements and ideals,
plus DOT (Hasse diagram) export.

Algebra specs compose recursively:
    {"kind": "table", "size": n, "table": [[...], ...]}
    {"kind": "chain", "k": k}
    {"kind": "union", "components": [<algebra>, ...]}
    {"kind": "product", "components": [<algebra>, ...]}
    {"kind": "tree", "parents": [null, 0, ...]}   (a tree, not an algebra)
Homomorphisms: {"source": <algebra>, "target": <algebra>, "map": [...]}.
Tree elements: {"support": {"<vertex>": <int>, ...}}; tree ideals:
{"antichain": [v, ...]} with null meaning the whole algebra.
"""

from __future__ import annotations

import json

import numpy as np

from .constructions import cbck_union, direct_product, standard_chain
from .core import BckHomomorphism, FiniteCbckAlgebra, check_axioms
from .errors import SpecParseError
from .trees import PathIdeal, RootedTree, TreeElement


def _require(obj, key, kinds):
    if not isinstance(obj, dict) or key not in obj:
        raise SpecParseError("expected an object with %r" % key)
    val = obj[key]
    if kinds is not None and not isinstance(val, kinds):
        raise SpecParseError("field %r has the wrong type" % key)
    return val


def build_algebra(spec) -> FiniteCbckAlgebra:
    kind = _require(spec, "kind", str)
    if kind == "table":
        table = _require(spec, "table", list)
        if "size" in spec and spec["size"] != len(table):
            raise SpecParseError("declared size does not match the table")
        return FiniteCbckAlgebra(table)
    if kind == "chain":
        return standard_chain(int(_require(spec, "k", int)))
    if kind == "union":
        comps = [build_algebra(c) for c in _require(spec, "components", list)]
        return cbck_union(comps).algebra
    if kind == "product":
        comps = [build_algebra(c) for c in _require(spec, "components", list)]
        return direct_product(comps).algebra
    raise SpecParseError("unknown algebra kind %r" % kind)


def build_tree(spec) -> RootedTree:
    if _require(spec, "kind", str) != "tree":
        raise SpecParseError("not a tree spec")
    return RootedTree(_require(spec, "parents", list))


def build_object(spec):
    """Dispatch: returns ("tree", RootedTree) or ("algebra", FiniteCbckAlgebra)."""
    kind = _require(spec, "kind", str)
    if kind == "tree":
        return "tree", build_tree(spec)
    return "algebra", build_algebra(spec)


def build_object_or_table(spec):
    """Like build_object, but a well-formed table failing the axioms comes
    back as ("table-report", (axiom report, table)) instead of raising, so
    callers can distinguish mathematical failure from a parse error."""
    kind = _require(spec, "kind", str)
    if kind == "table":
        table = _require(spec, "table", list)
        if "size" in spec and spec["size"] != len(table):
            raise SpecParseError("declared size does not match the table")
        report = check_axioms(table)
        if any(w is not None for w in report.values()):
            return "table-report", (report, table)
        return "algebra", FiniteCbckAlgebra(table)
    return build_object(spec)


def build_homomorphism(spec) -> BckHomomorphism:
    source = build_algebra(_require(spec, "source", dict))
    target = build_algebra(_require(spec, "target", dict))
    mapping = _require(spec, "map", list)
    return BckHomomorphism(source, target, mapping)


def build_tree_element(tree: RootedTree, spec) -> TreeElement:
    support = _require(spec, "support", dict)
    return TreeElement(tree, {int(v): int(c) for v, c in support.items()})


def build_path_ideal(tree: RootedTree, spec) -> PathIdeal:
    ac = _require(spec, "antichain", (list, type(None)))
    if ac is None:
        return PathIdeal.whole_algebra(tree)
    return PathIdeal.from_vertices(tree, ac)


def load_spec(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError("invalid JSON: %s" % exc) from None


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, stable separators, one trailing
    newline."""
    return json.dumps(obj, sort_keys=True, indent=2, default=_coerce) + "\n"


def _coerce(value):
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError("cannot serialize %r" % type(value))


def dot_hasse(labels, leq, highlight=(), name="hasse") -> str:
    """DOT text for the Hasse diagram of an explicit order.

    Only cover edges are drawn, lower node first; highlighted nodes (the
    primes, in ideal-lattice exports) get the red attribute.
    """
    n = len(labels)
    leq = [[bool(v) for v in row] for row in leq]
    lt = [[leq[i][j] and i != j for j in range(n)] for i in range(n)]
    lines = ["digraph %s {" % name, "  rankdir=BT;", '  node [shape=circle];']
    highlight = set(highlight)
    for i, lab in enumerate(labels):
        attrs = ['label="%s"' % lab]
        if i in highlight:
            attrs.append("color=red")
            attrs.append("fontcolor=red")
        lines.append("  n%d [%s];" % (i, ", ".join(attrs)))
    for i in range(n):
        for j in range(n):
            if not lt[i][j]:
                continue
            if any(lt[i][k] and lt[k][j] for k in range(n)):
                continue
            lines.append("  n%d -> n%d;" % (i, j))
    lines.append("}")
    return "\n".join(lines) + "\n"
