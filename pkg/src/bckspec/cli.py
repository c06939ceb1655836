"""Command-line surface.

    bck check    --input spec.json          axiom/ideal report
    bck spectrum --input spec.json          spectrum + topology checks
    bck ideals   --input spec.json          ideal lattice (json or dot)
    bck tree     --input tree.json          tree-algebra ideal report
    bck duality  --input spec.json          compact-open lattice and Birkhoff data
    bck verify   --suite all --seed 0       named verification suites

--input takes a path, '-' for stdin, or an inline JSON object.  Exit
codes: 0 ok, 1 mathematical failure, 2 parse error, 3 size guard.
"""

from __future__ import annotations

import argparse
import sys

from . import io as io_mod
from . import verify as verify_mod
from .core import check_axioms
from .errors import AxiomError, SizeGuardError, SpecParseError, TableError
from .ideals import IDEAL_SIZE_GUARD, IdealLattice, is_involutory, is_simple, is_trivial
from .lattices import (
    boolean_lattice,
    boolean_plus_top,
    chain_lattice,
    lattice_from_poset,
    lattice_iso,
)
from .spectra import (
    check_compact,
    compact_open_lattice,
    check_hausdorff,
    check_multiplicative_basis,
    check_noetherian,
    check_priestley,
    check_quasi_sober,
    check_spectral,
    check_T0,
    closed_points,
    specialization_order,
    spectrum,
    tree_spectrum,
)
from .trees import ANTICHAIN_GUARD, tree_ideal_lattice, tree_prime_ideals

EXIT_OK = 0
EXIT_MATH = 1
EXIT_PARSE = 2
EXIT_GUARD = 3


def _algebra_guard(args) -> int:
    return IDEAL_SIZE_GUARD if args.guard is None else args.guard


def _tree_guard(args) -> int:
    return ANTICHAIN_GUARD if args.guard is None else args.guard


def _read_input(arg: str):
    if arg is None:
        raise SpecParseError("--input is required for this command")
    if arg.lstrip().startswith("{"):
        text = arg
    elif arg == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(arg) as fh:
                text = fh.read()
        except OSError as exc:
            raise SpecParseError("cannot read %r: %s" % (arg, exc)) from None
    return io_mod.load_spec(text)


def _emit(text: str):
    sys.stdout.write(text)


def cmd_check(args) -> int:
    spec = _read_input(args.input)
    kind, obj = io_mod.build_object_or_table(spec)
    if kind == "tree":
        raise SpecParseError("check expects an algebra spec; use `bck tree`")
    if kind == "table-report":
        report, table = obj
        out = {
            "axioms": {k: list(w) if w else None for k, w in report.items()},
            "size": len(table),
            "pass": False,
        }
        _emit(io_mod.dumps(out))
        return EXIT_MATH
    algebra = obj
    lattice = IdealLattice(algebra, _algebra_guard(args))
    out = {
        "axioms": {name: None for name in sorted(check_axioms(algebra.table))},
        "pass": True,
        "size": algebra.size,
        "trivial": is_trivial(algebra),
        "simple": is_simple(algebra),
        "involutory": is_involutory(algebra, lattice),
        "bounded": algebra.top(),
        "directed": algebra.is_directed(),
        "chain": algebra.is_chain(),
        "implicative": algebra.is_implicative(),
        "ideal_count": len(lattice),
    }
    _emit(io_mod.dumps(out))
    return EXIT_OK


def _space_report(space, spec_obj):
    order = specialization_order(space)
    report = {
        "points": list(space.points),
        "opens": [sorted(space.points[p] for p in o) for o in space.opens],
        "basis": [sorted(space.points[p] for p in b) for b in space.basis],
        "checks": {
            "T0": check_T0(space),
            "quasi_sober": check_quasi_sober(space),
            "multiplicative_basis": check_multiplicative_basis(space),
            "compact": check_compact(space),
            "spectral": check_spectral(space),
            "hausdorff": check_hausdorff(space),
            "priestley": check_priestley(space, order),
            "noetherian": check_noetherian(space),
        },
        "closed_points": [space.points[p] for p in closed_points(space)],
        "specialization_covers": [
            [space.points[a], space.points[b]] for a, b in order.cover_pairs()
        ],
    }
    return report, order


def cmd_spectrum(args) -> int:
    spec = _read_input(args.input)
    kind, obj = io_mod.build_object(spec)
    spect = (
        tree_spectrum(obj, _tree_guard(args))
        if kind == "tree"
        else spectrum(obj, _algebra_guard(args))
    )
    report, order = _space_report(spect.space, spect)
    if args.format == "dot":
        _emit(
            io_mod.dot_hasse(
                spect.space.points,
                order.leq_np.tolist(),
                highlight=closed_points(spect.space),
                name="specialization",
            )
        )
    else:
        _emit(io_mod.dumps(report))
    return EXIT_OK


def cmd_ideals(args) -> int:
    spec = _read_input(args.input)
    kind, obj = io_mod.build_object(spec)
    if kind == "tree":
        raise SpecParseError("ideals expects an algebra spec; use `bck tree`")
    lattice = IdealLattice(obj, _algebra_guard(args))
    if args.format == "dot":
        _emit(
            io_mod.dot_hasse(
                lattice.labels(),
                lattice.leq_matrix(),
                highlight=[k for k, f in enumerate(lattice.prime_flags) if f],
                name="ideals",
            )
        )
    else:
        _emit(io_mod.dumps(lattice.to_json()))
    return EXIT_OK


def cmd_tree(args) -> int:
    spec = _read_input(args.input)
    kind, obj = io_mod.build_object(spec)
    if kind != "tree":
        raise SpecParseError("tree expects a tree spec")
    lattice = tree_ideal_lattice(obj, _tree_guard(args))
    primes = tree_prime_ideals(obj)
    if args.format == "dot":
        _emit(
            io_mod.dot_hasse(
                lattice.labels(),
                lattice.leq_matrix(),
                highlight=list(lattice.prime_indices),
                name="tree_ideals",
            )
        )
        return EXIT_OK
    out = {
        "vertices": obj.size,
        "ideals": [
            None if i.is_top else sorted(i.antichain) for i in lattice.ideals
        ],
        "labels": lattice.labels(),
        "prime": list(lattice.prime_indices),
        "prime_count": len(primes),
    }
    _emit(io_mod.dumps(out))
    return EXIT_OK


def cmd_duality(args) -> int:
    spec = _read_input(args.input)
    kind, obj = io_mod.build_object(spec)
    spect = (
        tree_spectrum(obj, _tree_guard(args))
        if kind == "tree"
        else spectrum(obj, _algebra_guard(args))
    )
    kx = compact_open_lattice(spect.space)
    mi_idx, mi = kx.meet_irreducibles()
    roundtrip = lattice_iso(lattice_from_poset(mi), kx) is not None
    matches = []
    if lattice_iso(kx, chain_lattice(kx.size)) is not None:
        matches.append("chain")
    n = kx.size.bit_length() - 1
    if kx.size == 1 << n and lattice_iso(kx, boolean_lattice(n)) is not None:
        matches.append("B_%d" % n)
    m = (kx.size - 1).bit_length() - 1
    if (
        kx.size >= 3
        and kx.size == (1 << m) + 1
        and lattice_iso(kx, boolean_plus_top(m)) is not None
    ):
        matches.append("B_%d plus top" % m)
    if args.format == "dot":
        labels = ["k%d" % i for i in range(kx.size)]
        _emit(io_mod.dot_hasse(labels, kx.leq_np.tolist(), highlight=mi_idx, name="kx"))
        return EXIT_OK
    out = {
        "compact_open_count": kx.size,
        "meet_irreducible_count": len(mi_idx),
        "birkhoff_round_trip": roundtrip,
        "matches": matches,
        "leq": kx.leq_np.astype(int).tolist(),
    }
    _emit(io_mod.dumps(out))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "all":
        results = verify_mod.run_all(args.seed)
    else:
        try:
            results = [verify_mod.run_suite(args.suite, args.seed)]
        except KeyError as exc:
            raise SpecParseError(str(exc)) from None
    report = {
        "ok": all(r.ok for r in results),
        "suites": [r.to_json() for r in results],
    }
    _emit(io_mod.dumps(report))
    return EXIT_OK if report["ok"] else EXIT_MATH


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bck", description="commutative BCK-algebra toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in [
        ("check", cmd_check),
        ("spectrum", cmd_spectrum),
        ("ideals", cmd_ideals),
        ("tree", cmd_tree),
        ("duality", cmd_duality),
    ]:
        p = sub.add_parser(name)
        p.add_argument("--input", help="path, '-' for stdin, or inline JSON")
        p.add_argument("--format", choices=["json", "dot"], default="json")
        p.add_argument(
            "--guard",
            type=int,
            default=None,
            help="enumeration bound (default: 20 elements for algebras, "
            "4096 antichains for trees)",
        )
        p.add_argument("--seed", type=int, default=0)
        p.set_defaults(fn=fn)
    p = sub.add_parser("verify")
    p.add_argument("--suite", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(fn=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (SpecParseError, TableError) as exc:
        _emit(io_mod.dumps({"error": str(exc), "kind": "parse"}))
        return EXIT_PARSE
    except AxiomError as exc:
        _emit(
            io_mod.dumps(
                {
                    "error": str(exc),
                    "kind": "axioms",
                    "witnesses": {k: list(w) for k, w in exc.witnesses.items()},
                }
            )
        )
        return EXIT_MATH
    except SizeGuardError as exc:
        _emit(io_mod.dumps({"error": str(exc), "kind": "guard"}))
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
