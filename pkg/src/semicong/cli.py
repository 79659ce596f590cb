"""Command-line interface.

Exit codes: 0 success / every checked theorem holds, 1 axiom or hypothesis
violation, 2 parse error, 3 a theorem check failed.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .congruences import (
    CongruenceKind,
    OracleBoundExceeded,
    is_b_lattice,
    is_b_lattice_of_skew_rings,
    is_completely_regular_semiring,
    is_idempotent_semiring,
    is_skew_ring,
    named_congruence,
)
from .core import AxiomError, TableError
from .elements import (
    NotQuasiCompletelyRegular,
    additive_idempotents,
    is_completely_regular_element,
    is_quasi_completely_regular,
    profile,
)
from .enumeration import FILTERS, enumerate_semirings
from .formats import ParseError, read_rees, read_semiring, serialize_semiring
from .relations import (
    NotAdditivelyQuasiRegular,
    green_d,
    green_h,
    green_j,
    green_l,
    green_r,
    star_d,
    star_h,
    star_j,
    star_l,
    star_r,
)
from .structures import (
    ReesSpecError,
    StructureFinding,
    decompose,
    is_completely_archimedean,
    is_completely_simple,
    is_quasi_orthodox,
    rees_matrix,
    validate_p,
)
from .verify import TAGS, format_report, verify

EXIT_OK, EXIT_VIOLATION, EXIT_PARSE, EXIT_FINDING = 0, 1, 2, 3

RELATIONS = {
    "L+": green_l, "R+": green_r, "J+": green_j, "H+": green_h, "D+": green_d,
    "L*": star_l, "R*": star_r, "J*": star_j, "H*": star_h, "D*": star_d,
}


def _fmt_relation(rel) -> str:
    if rel.is_reflexive() and rel.is_symmetric() and rel.is_transitive():
        return "classes: " + " | ".join(" ".join(map(str, c)) for c in rel.to_partition().classes)
    return "pairs: " + " ".join(f"({a},{b})" for a, b in rel.pairs())


def _fmt_partition(theta) -> str:
    return " | ".join(" ".join(map(str, c)) for c in theta.classes)


def cmd_validate(args, out):
    S = read_semiring(args.file)
    print(f"valid semiring of order {S.order}", file=out)
    return EXIT_OK


def cmd_classify(args, out):
    S = read_semiring(args.file)
    idem = additive_idempotents(S)
    print("element reg_index cr_index zero additive_idempotent completely_regular", file=out)
    for a in S.elements:
        p = profile(S, a)
        cells = [a, p.reg_index, p.cr_index, p.zero_of, a in idem, is_completely_regular_element(S, a)]
        print(" ".join("-" if c is None else str(c).lower() for c in cells), file=out)
    props = {
        "quasi_completely_regular": is_quasi_completely_regular(S),
        "completely_regular": is_completely_regular_semiring(S),
        "completely_archimedean": is_completely_archimedean(S),
        "completely_simple": is_completely_simple(S),
        "quasi_orthodox": is_quasi_orthodox(S),
        "skew_ring": is_skew_ring(S),
        "b_lattice": is_b_lattice(S),
        "idempotent_semiring": is_idempotent_semiring(S),
        "b_lattice_of_skew_rings": is_b_lattice_of_skew_rings(S),
    }
    for k, v in props.items():
        print(f"{k}: {str(v).lower()}", file=out)
    return EXIT_OK


def cmd_relations(args, out):
    S = read_semiring(args.file)
    for name in args.which.split(","):
        if name not in RELATIONS:
            raise SystemExit(f"unknown relation {name!r}; choose from {', '.join(RELATIONS)}")
        print(f"{name} {_fmt_relation(RELATIONS[name](S))}", file=out)
    return EXIT_OK


def cmd_congruence(args, out):
    S = read_semiring(args.file)
    kinds = [k.value for k in CongruenceKind] if args.kind == "all" else args.kind.split(",")
    status = EXIT_OK
    for kind in kinds:
        try:
            theta = named_congruence(S, CongruenceKind(kind))
            print(f"{kind}: {_fmt_partition(theta)}", file=out)
        except (NotQuasiCompletelyRegular, NotAdditivelyQuasiRegular, ValueError) as exc:
            print(f"{kind}: unavailable ({exc})", file=out)
            status = EXIT_VIOLATION
    return status


def cmd_rees(args, out):
    spec = read_rees(args.spec)
    bad = validate_p(spec)
    if bad:
        for cond, idx in bad:
            print(f"condition ({cond}) violated at {idx}", file=out)
        return EXIT_VIOLATION
    print(serialize_semiring(rees_matrix(spec)), end="", file=out)
    return EXIT_OK


def cmd_decompose(args, out):
    S = read_semiring(args.file)
    if not is_quasi_completely_regular(S):
        print("not quasi completely regular", file=out)
        return EXIT_VIOLATION
    try:
        d = decompose(S)
    except StructureFinding as exc:
        print(f"finding: {exc} {exc.witness}", file=out)
        return EXIT_FINDING
    print(f"components: {len(d.components)}", file=out)
    for alpha, (block, K, c) in enumerate(zip(d.components, d.kernels, d.coords)):
        print(f"component {alpha}: {' '.join(map(str, block))}", file=out)
        print(f"  kernel: {' '.join(map(str, sorted(K)))}", file=out)
        if c is not None:
            sp = c.spec
            print(f"  rees: |I|={sp.band_i.order} |R|={sp.ring.order} |L|={sp.band_l.order} P={[list(r) for r in sp.P]}", file=out)
    print("b-lattice:", file=out)
    print(serialize_semiring(d.blattice), end="", file=out)
    return EXIT_OK


def cmd_enumerate(args, out):
    filters = [f for f in (args.filter or "").split(",") if f]
    outdir = Path(args.out) if args.out else None
    if outdir:
        outdir.mkdir(parents=True, exist_ok=True)
    count = 0
    for S in enumerate_semirings(args.order, filters=filters, upto_iso=args.upto_iso):
        name = f"order{args.order}-{count:05d}"
        text = serialize_semiring(S, comment=name)
        if outdir:
            (outdir / f"{name}.sr").write_text(text)
        else:
            print(text, file=out)
        count += 1
    print(f"# count {count}", file=out)
    return EXIT_OK


def _verify_file(job):
    path, theorems, fmt = job
    fmt = "json" if fmt == "json-like" else fmt
    S = read_semiring(path)
    report = verify(S, Path(path).stem, theorems)
    return format_report(report, fmt), bool(report.failures)


def cmd_verify(args, out):
    theorems = args.theorems.split(",") if args.theorems else None
    if theorems:
        unknown = set(theorems) - set(TAGS)
        if unknown:
            raise SystemExit(f"unknown theorem tags: {', '.join(sorted(unknown))}")
    if args.corpus:
        paths = sorted(Path(args.corpus).glob("*.sr"), key=lambda p: p.stem)
    elif args.file:
        paths = [Path(args.file)]
    else:
        raise SystemExit("verify needs FILE or --corpus DIR")
    jobs = [(str(p), theorems, args.format) for p in paths]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            results = list(pool.map(_verify_file, jobs, chunksize=8))
    else:
        results = [_verify_file(j) for j in jobs]
    found = False
    for text, failed in results:
        out.write(text)
        found |= failed
    return EXIT_FINDING if found else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semicong", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="parse and check semiring axioms")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("classify", help="element profiles and semiring-level predicates")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("relations", help="Green's relations and starred variants")
    s.add_argument("file")
    s.add_argument("--which", default="L+,R+,J+,H+,D+", help="comma list of " + ",".join(RELATIONS))
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser("congruence", help="named congruences")
    s.add_argument("file")
    s.add_argument("--kind", default="all", help="rho|sigma|nu|y|ystar|epsilon|omega|all (comma list)")
    s.set_defaults(func=cmd_congruence)

    s = sub.add_parser("rees", help="build a Rees matrix semiring from a .rees spec")
    s.add_argument("spec")
    s.set_defaults(func=cmd_rees)

    s = sub.add_parser("decompose", help="b-lattice of completely Archimedean components")
    s.add_argument("file")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("enumerate", help="all semirings of a small order")
    s.add_argument("--order", type=int, required=True)
    s.add_argument("--filter", help="comma list of " + ",".join(FILTERS))
    s.add_argument("--upto-iso", action="store_true")
    s.add_argument("--out", help="write one .sr file per instance into this directory")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("verify", help="check the theorems on one file or a corpus directory")
    s.add_argument("file", nargs="?")
    s.add_argument("--corpus")
    s.add_argument("--theorems", help="comma list of " + ",".join(TAGS))
    s.add_argument("--format", choices=["lines", "json", "json-like"], default="lines")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (ParseError, TableError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except AxiomError as exc:
        print(f"axiom violation: {exc}", file=sys.stderr)
        for v in exc.violations[:10]:
            print(f"  {v.axiom} at {v.witness}", file=sys.stderr)
        return EXIT_VIOLATION
    except (ReesSpecError, NotQuasiCompletelyRegular, NotAdditivelyQuasiRegular, OracleBoundExceeded) as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION


if __name__ == "__main__":
    sys.exit(main())
