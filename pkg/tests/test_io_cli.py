import json
import subprocess
import sys

import pytest

from bckspec import io as io_mod
from bckspec.constructions import cbck_union, standard_chain
from bckspec.errors import SpecParseError
from bckspec.trees import PathIdeal, RootedTree, TreeElement

BROKEN_TABLE = {"kind": "table", "size": 3, "table": [[0, 0, 0], [1, 0, 0], [2, 2, 0]]}


def run_cli(args, stdin=None, env=None):
    import os

    full_env = dict(os.environ)
    full_env.update(env or {})
    proc = subprocess.run(
        [sys.executable, "-m", "bckspec.cli"] + args,
        capture_output=True,
        text=True,
        input=stdin,
        env=full_env,
    )
    return proc.returncode, proc.stdout


def test_build_algebra_kinds():
    chain = io_mod.build_algebra({"kind": "chain", "k": 2})
    assert chain == standard_chain(2)
    nested = io_mod.build_algebra(
        {
            "kind": "union",
            "components": [
                {"kind": "chain", "k": 1},
                {"kind": "product", "components": [{"kind": "chain", "k": 1}] * 2},
            ],
        }
    )
    assert nested.size == 1 + 1 + 3
    table = io_mod.build_algebra({"kind": "table", "size": 2, "table": [[0, 0], [1, 0]]})
    assert table == standard_chain(1)


def test_parse_errors():
    for bad in [
        {},
        {"kind": "nope"},
        {"kind": "chain"},
        {"kind": "table", "size": 2, "table": [[0, 0], [1, 0], [0, 0]]},
        {"kind": "tree"},
    ]:
        with pytest.raises(SpecParseError):
            io_mod.build_object(bad)


def test_homomorphism_and_tree_parsers():
    hom = io_mod.build_homomorphism(
        {
            "source": {"kind": "chain", "k": 1},
            "target": {"kind": "chain", "k": 2},
            "map": [0, 2],
        }
    )
    assert hom(1) == 2
    tree = io_mod.build_tree({"kind": "tree", "parents": [None, 0, 0]})
    assert tree == RootedTree.star(2)
    el = io_mod.build_tree_element(tree, {"support": {"1": 4}})
    assert el == TreeElement(tree, {1: 4})
    ideal = io_mod.build_path_ideal(tree, {"antichain": [0, 1]})
    assert ideal == PathIdeal(tree, {1})
    top = io_mod.build_path_ideal(tree, {"antichain": None})
    assert top.is_top


def test_dot_output_shape():
    u = cbck_union([standard_chain(1), standard_chain(1)])
    from bckspec.ideals import IdealLattice

    lat = IdealLattice(u.algebra)
    dot = io_mod.dot_hasse(
        lat.labels(),
        lat.leq_matrix(),
        highlight=[k for k, f in enumerate(lat.prime_flags) if f],
    )
    assert dot.startswith("digraph")
    assert dot.count("->") == 4  # cover edges of the 4-element diamond
    assert dot.count("fontcolor=red") == 2


def test_cli_check_pass_and_fail():
    code, out = run_cli(["check", "--input", json.dumps({"kind": "chain", "k": 3})])
    assert code == 0
    report = json.loads(out)
    assert report["pass"] and report["simple"] and report["chain"]
    code, out = run_cli(["check", "--input", json.dumps(BROKEN_TABLE)])
    assert code == 1
    report = json.loads(out)
    assert report["pass"] is False and report["axioms"]["cBCK2"] is not None


def test_cli_exit_codes():
    code, out = run_cli(["check", "--input", "{not json"])
    assert code == 2
    code, out = run_cli(["check", "--input", json.dumps({"kind": "chain", "k": 25})])
    assert code == 3
    code, _ = run_cli(["verify", "--suite", "does-not-exist"])
    assert code == 2


def test_cli_spectrum_tree():
    spec = {"kind": "tree", "parents": [None, 0, 0]}
    code, out = run_cli(["spectrum", "--input", json.dumps(spec)])
    assert code == 0
    report = json.loads(out)
    assert len(report["points"]) == 3
    assert len(report["opens"]) == 5
    for key in ("T0", "quasi_sober", "multiplicative_basis", "spectral", "noetherian"):
        assert report["checks"][key] is True
    assert report["checks"]["priestley"] is False


def test_cli_spectrum_union_and_chain():
    spec = {"kind": "union", "components": [{"kind": "chain", "k": 1}] * 2}
    code, out = run_cli(["spectrum", "--input", json.dumps(spec)])
    report = json.loads(out)
    assert len(report["points"]) == 2
    assert report["checks"]["hausdorff"] is True
    code, out = run_cli(["spectrum", "--input", json.dumps({"kind": "chain", "k": 2})])
    assert len(json.loads(out)["points"]) == 1


def test_cli_ideals_and_tree_dot():
    spec = {"kind": "union", "components": [{"kind": "chain", "k": 1}] * 2}
    code, out = run_cli(["ideals", "--input", json.dumps(spec), "--format", "dot"])
    assert code == 0 and out.startswith("digraph")
    tree = {"kind": "tree", "parents": [None, 0, 0]}
    code, out = run_cli(["tree", "--input", json.dumps(tree)])
    assert code == 0
    report = json.loads(out)
    assert report["vertices"] == 3 and report["prime_count"] == 3
    assert len(report["ideals"]) == 5
    code, out = run_cli(["tree", "--input", json.dumps(tree), "--format", "dot"])
    assert out.count("fontcolor=red") == 3


def test_cli_duality():
    tree = {"kind": "tree", "parents": [None, 0, 0]}
    code, out = run_cli(["duality", "--input", json.dumps(tree)])
    assert code == 0
    report = json.loads(out)
    assert report["compact_open_count"] == 5
    assert report["birkhoff_round_trip"] is True
    assert "B_2 plus top" in report["matches"]


def test_cli_verify_suite():
    code, out = run_cli(["verify", "--suite", "figures"])
    assert code == 0
    report = json.loads(out)
    assert report["ok"] is True


def test_cli_determinism():
    spec = json.dumps({"kind": "union", "components": [{"kind": "chain", "k": 2}] * 2})
    outputs = {run_cli(["spectrum", "--input", spec])[1] for _ in range(2)}
    assert len(outputs) == 1
    outputs = {run_cli(["verify", "--suite", "union-coproduct", "--seed", "5"])[1] for _ in range(2)}
    assert len(outputs) == 1


def test_cli_stdin():
    code, out = run_cli(["check", "--input", "-"], stdin=json.dumps({"kind": "chain", "k": 1}))
    assert code == 0 and json.loads(out)["pass"]


def test_cli_output_identical_across_backends():
    spec = json.dumps(
        {"kind": "union", "components": [{"kind": "chain", "k": 1}] * 3}
    )
    args = ["spectrum", "--input", spec]
    _, default_out = run_cli(args)
    _, pure_out = run_cli(args, env={"BCKSPEC_PURE": "1"})
    assert default_out == pure_out
