"""Command-line front end.

    unexpected-curves table --config dfn --n 4
    unexpected-curves construct --config b3 --k 2 --d 2 --line "-12,10,7" --syzygy-index 1
    unexpected-curves reproduce --filter b3

Exit codes: 0 success, 1 failed acceptance check, 2 usage error,
3 mathematical inconsistency, 4 genericity failure.
"""

import argparse
from concurrent.futures import ProcessPoolExecutor
import json
import os
import sys

from .arrangements import (
    GenericLine, GenericityError, b3, build_arrangement, fermat_dual, is_generic_line, load_points,
    make_generic_line,
)
from .construction import construct_curve, verify_curve
from .fatpoints import dim_table
from .forms import ProjPoint, parse_form
from .splitting import NonConvergenceError, splitting_type
from .syzygies import CertificationError, lift_tuple, restricted_syzygies, verify_global_syzygy
from .unexpectedness import (
    format_table, in_range, is_unexpected_direct, reconcile, splitting_table,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_MATH, EXIT_GENERICITY = 0, 1, 2, 3, 4
SEED_ENV = "UNEXPECTED_CURVES_SEED"


class UsageError(Exception):
    pass


def _default_seed():
    raw = os.environ.get(SEED_ENV, "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV} must be an integer, got {raw!r}")


def load_config(args):
    """Exactly one source: --config b3 | dfn (with --n) or --points-file."""
    if args.points_file and args.config:
        raise UsageError("give either --config or --points-file, not both")
    if args.points_file:
        return load_points(args.points_file)
    if args.config == "b3":
        return b3()
    if args.config == "dfn":
        if args.n is None or args.n < 2:
            raise UsageError("--config dfn needs --n >= 2")
        return fermat_dual(args.n)
    raise UsageError("a configuration is required: --config {b3,dfn} or --points-file")


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')} is required for {args.command}")


def _line(args, arrangement, order):
    if args.line:
        P = ProjPoint.parse(args.line, order)
        if not is_generic_line(arrangement, P):
            raise GenericityError(f"line {args.line} fails the genericity filter")
        return GenericLine.from_dual_point(P)
    return make_generic_line(arrangement, seed=args.seed)


# -- subcommands ---------------------------------------------------------------
def _table_row(payload):
    Z, k, seed, samples = payload
    rows = splitting_table(Z, seed=seed, samples=samples, ks=[k])
    return rows[0]


def cmd_table(args):
    Z = load_config(args)
    ks = [k for k in range(1, len(Z) + 2) if k * (k - 1) // 2 <= len(Z)]
    payloads = [(Z, k, args.seed, args.samples) for k in ks]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_table_row, payloads))  # map keeps input order
    else:
        rows = [_table_row(p) for p in payloads]
    for r in rows:
        if r.converged and not r.splitting.consistent:
            raise CertificationError(f"k={r.k}: splitting {r.splitting} fails the Chern sum")
    if args.format == "json":
        return {
            "config": Z.name,
            "size": len(Z),
            "rows": [dict(r.to_json(), in_range=in_range(len(Z), r.k)) for r in rows],
        }
    return f"{Z.name}, |Z| = {len(Z)}\n" + format_table(rows)


def cmd_splitting(args):
    _need(args, "k")
    Z = load_config(args)
    st = splitting_type(Z, args.k, seed=args.seed, samples=args.samples)
    if not st.consistent:
        raise CertificationError(f"splitting {st} is inconsistent with the dimension table")
    if args.format == "json":
        return dict(st.to_json(), config=Z.name)
    a, eps, ts = st.base, st.gaps, st.mults
    return f"{Z.name} k={st.k}: ({st})  base {a}, eps {list(eps)}, t {list(ts)}"


def cmd_dimtable(args):
    _need(args, "k")
    Z = load_config(args)
    st = splitting_type(Z, args.k, seed=args.seed, samples=args.samples)
    table = dim_table(Z, args.k, seed=args.seed, samples=args.samples, j_max=st.exponents[-1] + 1)
    if args.format == "json":
        return dict(table.to_json(), config=Z.name, splitting=list(st.exponents))
    lines = [f"{Z.name} k={args.k}", " j | D(j) | D(j)-D(j-1)"]
    for j, (v, dv) in enumerate(zip(table.values(), table.differences())):
        lines.append(f"{j:>2} | {v:>4} | {dv:>3}")
    return "\n".join(lines)


def cmd_syzygies(args):
    _need(args, "k", "d")
    Z = load_config(args)
    A = build_arrangement(Z)
    L = _line(args, A, Z.order)
    basis = restricted_syzygies(A, L, args.k, args.d)
    out = []
    for i, s in enumerate(basis, 1):
        entry = dict(s.to_json(), index=i)
        if args.lift:
            g = lift_tuple(s, L)
            ok, _ = verify_global_syzygy(A, L, args.k, g, modulus="f+line")
            entry["lift"] = [str(c) for c in g]
            entry["lift_verified"] = ok
        out.append(entry)
    if args.format == "json":
        return {"config": Z.name, "line": str(L.dual_point), "k": args.k, "d": args.d, "basis": out}
    lines = [f"{Z.name} k={args.k} d={args.d} {L}: {len(basis)} basis syzygies"]
    for e in out:
        lines.append(f"[{e['index']}] " + "; ".join(e["components"]))
        if "lift" in e:
            lines.append(f"    lift ({'verified' if e['lift_verified'] else 'NOT verified'}): " + "; ".join(e["lift"]))
    return "\n".join(lines)


def cmd_construct(args):
    _need(args, "k", "d")
    Z = load_config(args)
    A = build_arrangement(Z)
    L = _line(args, A, Z.order)
    basis = restricted_syzygies(A, L, args.k, args.d)
    if not basis:
        raise UsageError(f"no restricted syzygies in degree {args.d} for k={args.k}")
    if not 1 <= args.syzygy_index <= len(basis):
        raise UsageError(f"--syzygy-index must be in 1..{len(basis)}")
    rep = construct_curve(basis[args.syzygy_index - 1], L, A)
    if not rep.ok:
        raise CertificationError("constructed curve fails certification")
    if args.format == "json":
        return dict(rep.to_json(), config=Z.name, k=args.k, syzygy_index=args.syzygy_index,
                    basis_size=len(basis))
    lines = [
        f"C = {rep.curve}",
        f"degree {rep.degree} (expected {rep.expected_degree}), multiplicity {rep.mult_at_P} at {rep.point}",
        f"multiplicities on Z: {rep.multiplicity_profile()}",
    ]
    if rep.non_determined:
        lines.append("non-determined: " + ", ".join(str(n.point) for n in rep.non_determined))
    return "\n".join(lines)


def cmd_verify(args):
    _need(args, "curve_file", "point", "d")
    Z = load_config(args)
    with open(args.curve_file) as fh:
        text = " ".join(fh.read().split())
    P = ProjPoint.parse(args.point, Z.order)
    a, b, c = P.coords
    C = parse_form(text, order=Z.order, extra={"a": a, "b": b, "c": c})
    rep = verify_curve(C, Z, P, args.d)
    if args.format == "json":
        return dict(rep.to_json(), config=Z.name, profile={str(m): n for m, n in rep.multiplicity_profile().items()})
    singular = [f"{p} ({m})" for p, m in rep.multiplicities_at_Z if m > 1]
    return "\n".join([
        f"degree {rep.degree}, multiplicity {rep.mult_at_P} at {rep.point} (wanted {args.d})",
        f"multiplicities on Z: {rep.multiplicity_profile()}",
        "singular points of Z: " + (", ".join(singular) or "none"),
        "ok" if rep.ok else "FAILED",
    ])


def cmd_unexpected(args):
    _need(args, "k", "d")
    Z = load_config(args)
    v = is_unexpected_direct(Z, args.d, args.k, seed=args.seed, samples=args.samples)
    try:
        st = splitting_type(Z, args.k, seed=args.seed, samples=args.samples)
    except NonConvergenceError:
        st = None
    if st is not None:
        for r in reconcile(Z, st, seed=args.seed, samples=args.samples):
            if r.d == args.d:
                v = r
    out = dict(v.to_json(), config=Z.name, splitting=list(st.exponents) if st else None)
    if args.format == "json":
        return out
    return (
        f"type ({args.d + args.k},{args.d}) on {Z.name}: actual {v.actual_dim}, expected {v.expected_dim}, "
        f"unexpected {v.verdict_direct}, independent {v.independent}, "
        f"simple {v.verdict_simple}, gap {v.verdict_epsilon}"
    )


def cmd_reproduce(args):
    from .reproduce import Context, run_checks

    echo = None if args.format == "json" else print
    results = run_checks(args.filter, ctx=Context(seed=args.seed, samples=args.samples), echo=echo)
    failed = [r for r in results if not r.passed]
    args._exit = EXIT_FAILED if failed else EXIT_OK
    if args.format == "json":
        return {"checks": [r.to_json() for r in results], "failed": len(failed)}
    return f"{len(results) - len(failed)}/{len(results)} checks passed"


COMMANDS = {
    "table": cmd_table,
    "splitting": cmd_splitting,
    "dimtable": cmd_dimtable,
    "syzygies": cmd_syzygies,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "unexpected": cmd_unexpected,
    "reproduce": cmd_reproduce,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", choices=["b3", "dfn"])
    common.add_argument("--n", type=int)
    common.add_argument("--points-file")
    common.add_argument("--k", type=int)
    common.add_argument("--d", type=int)
    common.add_argument("--line", help='dual point of L, e.g. "-12,10,7"')
    common.add_argument("--syzygy-index", type=int, default=1, help="1-based position in the basis")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--samples", type=int, default=2)
    common.add_argument("--format", choices=["json", "text"], default="text")
    common.add_argument("--out")

    parser = argparse.ArgumentParser(prog="unexpected-curves", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "table":
            p.add_argument("--jobs", type=int, default=1, help="rows computed in parallel")
        if name == "syzygies":
            p.add_argument("--lift", action="store_true", help="also lift to ternary forms and verify modulo (f, L)")
        if name == "verify":
            p.add_argument("--curve-file")
            p.add_argument("--point")
        if name == "reproduce":
            p.add_argument("--filter", help="tag or name fragment, e.g. b3, dfn4, fixtures")
    return parser


def _emit(payload, args):
    text = json.dumps(payload, indent=2, sort_keys=True) if args.format == "json" else payload
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _glue_negative_values(argv):
    # "--line -12,10,7" would otherwise be read as an unknown option
    out = []
    for tok in argv:
        if out and out[-1] in ("--line", "--point") and tok.startswith("-"):
            out[-1] = f"{out[-1]}={tok}"
        else:
            out.append(tok)
    return out


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        if args.seed is None:
            args.seed = _default_seed()
        if args.samples < 2:
            raise UsageError("--samples must be at least 2")
        args._exit = EXIT_OK
        payload = COMMANDS[args.command](args)
        _emit(payload, args)
        return args._exit
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CertificationError, NonConvergenceError) as exc:
        print(f"inconsistency: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_MATH
    except GenericityError as exc:
        print(f"genericity failure (try another --seed): {exc}", file=sys.stderr)
        return EXIT_GENERICITY
    except (ValueError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
