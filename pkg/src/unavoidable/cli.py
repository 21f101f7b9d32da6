"""Command-line front end.

Inputs are ``catalog:<name>`` (e.g. ``catalog:join_power(rp2_6,2)``),
``file:<path>`` (facet list), or a bare catalog name.  ``--porcelain``
switches to ``key=value`` lines.  Exit codes: 0 success, 1 input error or
failed check, 2 capacity refusal.
"""
from __future__ import annotations

import argparse
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import catalog
from .complex import SimplicialComplex, join, pushforward
from .exceptions import CapacityError, UnavoidableError
from .formats import format_facets, parse_map, read_facets, read_generators, read_wh
from .lp import format_certificate
from .partition import is_minimal_r_unavoidable, pi, pi_oracle, sarkaria_bound
from .ramsey import GraphProperty, induced_edge_group, is_pr_admissible, ramsey_complex
from .symmetry import PermGroup
from .threshold import format_rho, threshold_solution
from .wh import wh_sublevel

EXIT_OK, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2


class Out:
    """Collects output so every command prints deterministically."""

    def __init__(self, porcelain: bool):
        self.porcelain = porcelain

    def fields(self, pairs: list[tuple[str, object]]) -> None:
        if self.porcelain:
            for k, v in pairs:
                print(f"{k}={v}")
        else:
            width = max(len(k) for k, _ in pairs)
            for k, v in pairs:
                print(f"{k.ljust(width)}  {v}")


# -- inputs -------------------------------------------------------------------------

def load(spec: str, gens: str | None = None) -> catalog.CatalogEntry:
    if spec.startswith("file:"):
        path = Path(spec[5:])
        K = read_facets(path)
        G = PermGroup(K.n, read_generators(gens, K.n)) if gens else None
        return catalog.CatalogEntry(path.name, K, G)
    if gens:
        raise UnavoidableError("--gens only applies to file: inputs")
    if spec.startswith("catalog:"):
        spec = spec[8:]
    return catalog.builtin(spec)


def _bare_complex(spec: str) -> SimplicialComplex:
    """Load without computing invariants (for constructions)."""
    if spec.startswith("file:"):
        return read_facets(spec[5:])
    return load(spec).complex


def report_fields(entry: catalog.CatalogEntry, timings: dict | None = None) -> list[tuple[str, object]]:
    p = entry.expected
    out = [
        ("name", entry.name),
        ("n", entry.complex.n),
        ("pi", p.pi),
        ("rho", format_rho(p.rho)),
        ("epsilon", p.epsilon),
        ("classification", entry.classification()),
        ("self_dual", str(p.self_dual).lower()),
        ("min_nonface_size", "none" if p.min_nonface_size is None else p.min_nonface_size),
    ]
    if timings is not None:
        out += [(f"time_{k}", f"{v:.3f}s") for k, v in timings.items()]
    return out


# -- commands -----------------------------------------------------------------------

def cmd_pi(args, out: Out) -> int:
    entry = load(args.input, args.gens)
    if out.porcelain:
        out.fields([("name", entry.name), ("n", entry.complex.n), ("pi", entry.expected.pi)])
    else:
        print(entry.expected.pi)
    return EXIT_OK


def cmd_rho(args, out: Out) -> int:
    entry = load(args.input, args.gens)
    value = format_rho(entry.expected.rho)
    if out.porcelain:
        out.fields([("name", entry.name), ("n", entry.complex.n), ("rho", value)])
    else:
        print(value)
    if args.certificate:
        sol = threshold_solution(entry.complex)
        print(format_certificate(sol.result), end="")
    return EXIT_OK


def cmd_classify(args, out: Out) -> int:
    t0 = time.perf_counter()
    entry = load(args.input, args.gens)
    cls = entry.classification()
    if out.porcelain:
        timings = {"total": time.perf_counter() - t0} if args.timings else None
        out.fields(report_fields(entry, timings))
    else:
        print(cls)
    return EXIT_OK


def cmd_report(args, out: Out) -> int:
    t0 = time.perf_counter()
    entry = load(args.input, args.gens)
    fields = report_fields(entry)
    if args.timings:
        fields.append(("time_total", f"{time.perf_counter() - t0:.3f}s"))
    out.fields(fields)
    return EXIT_OK


def cmd_minimal(args, out: Out) -> int:
    K = _bare_complex(args.input)
    value = str(is_minimal_r_unavoidable(K, args.r)).lower()
    if out.porcelain:
        out.fields([("n", K.n), ("r", args.r), ("minimal", value)])
    else:
        print(value)
    return EXIT_OK


def _emit_complex(K: SimplicialComplex, name: str, args, out: Out) -> int:
    if args.report:
        out.fields(report_fields(catalog.CatalogEntry(name, K)))
    else:
        print(format_facets(K), end="")
    return EXIT_OK


def cmd_join(args, out: Out) -> int:
    K = join(*(_bare_complex(s) for s in args.inputs))
    return _emit_complex(K, "join", args, out)


def cmd_push(args, out: Out) -> int:
    K = _bare_complex(args.input)
    try:
        text = Path(args.map_file).read_text()
    except OSError as exc:
        raise UnavoidableError(f"cannot read {args.map_file}: {exc.strerror}") from None
    return _emit_complex(pushforward(K, parse_map(text)), "pushforward", args, out)


def cmd_wh(args, out: Out) -> int:
    W = read_wh(args.file)
    return _emit_complex(wh_sublevel(W, args.r), "wh_sublevel", args, out)


def cmd_table(args, out: Out) -> int:
    if args.max_n < 2:
        raise UnavoidableError("table needs max_n >= 2")
    cells = catalog.table(args.max_n)
    bad = 0
    if out.porcelain:
        for c in cells:
            line = f"family={c.family} n={c.n} status={c.status}"
            if c.computed:
                line += " " + " ".join(f"{k}={format_rho(v) if k == 'rho' else v}"
                                       for k, v in c.computed.items())
            print(line)
    else:
        current = None
        for c in cells:
            if c.family != current:
                current = c.family
                print(f"{c.family}^(*n)")
                print(f"  {'n':>3} {'pi':>4} {'rho':>8} {'eps':>4} {'nu':>4}  status")
            if c.computed:
                v = c.computed
                print(f"  {c.n:>3} {v['pi']:>4} {format_rho(v['rho']):>8} "
                      f"{v['epsilon']:>4} {v['nu']:>4}  {c.status}")
            else:
                print(f"  {c.n:>3} {'-':>4} {'-':>8} {'-':>4} {'-':>4}  {c.status}")
    for c in cells:
        if c.status == "MISMATCH":
            bad += 1
            print(f"MISMATCH {c.family} n={c.n}: computed {c.computed}, "
                  f"closed form {c.expected}", file=sys.stderr)
    return EXIT_INPUT if bad else EXIT_OK


def cmd_ramsey(args, out: Out) -> int:
    prop = GraphProperty.parse(args.property)
    entry = catalog.CatalogEntry(f"ramsey({args.n},{prop})", ramsey_complex(args.n, prop),
                                 induced_edge_group(args.n))
    admissible = is_pr_admissible(args.n, prop, args.r)
    p = entry.expected
    out.fields([
        ("n", args.n), ("property", prop), ("r", args.r),
        ("admissible", str(admissible).lower()),
        ("pi", p.pi), ("rho", format_rho(p.rho)), ("epsilon", p.epsilon),
        ("r_unavoidable", str(p.pi <= args.r).lower()),
    ])
    return EXIT_OK


def cmd_catalog(args, out: Out) -> int:
    if args.action == "list":
        present = set(catalog.available_data())
        for form in catalog.BUILTIN_FORMS:
            print(form)
        for name in catalog.DATA_COMPLEXES:
            status = "present" if name in present else f"missing from {catalog.data_dir()}"
            print(f"{name} (data: {status})")
        return EXIT_OK
    if args.target is None:
        raise UnavoidableError(f"catalog {args.action} needs an argument")
    if args.action == "show":
        entry = load(args.target)
        fields = report_fields(entry)
        fields.append(("facets", len(entry.complex.facets) if entry.complex.has_facets else "lazy"))
        fields.append(("minimal_nonfaces", len(entry.complex.minimal_nonfaces())))
        G = entry.generators
        fields.append(("generators", len(G.generators) if G is not None else 0))
        out.fields(fields)
        return EXIT_OK
    # ingest
    path = Path(args.target)
    name = args.name or path.stem
    entry = catalog.ingest(path, name, args.gens)
    fields = report_fields(entry)
    if name in catalog.CERTIFICATION:
        gates = ["generators"] if args.gens else []
        gates += [label for label, _ in catalog.CERTIFICATION[name]]
        fields.append(("certified", ",".join(g.replace(" ", "_") for g in gates)))
    else:
        fields.append(("certified", "no profile"))
    out.fields(fields)
    return EXIT_OK


# -- check --------------------------------------------------------------------------

def _random_complex(rng: random.Random, n: int) -> SimplicialComplex:
    k = rng.randint(1, 6)
    return SimplicialComplex.from_facets(n, [rng.randrange(1, 1 << n) for _ in range(k)])


def _check_items(seed: int):
    """Yield ``(item, status, detail)`` triples; status is PASS, FAIL or SKIP."""
    small = ["three_point", "rp2_6", "skeleton(6,2)", "cross_polytope(3)",
             "key_iv(6,2,3,1)", "join_power(three_point,3)", "join_power(rp2_6,2)",
             "empty(4)", "simplex(3)"]
    entries = [catalog.builtin(name) for name in small]

    mism = [e.name for e in entries if e.complex.n <= 12 and pi(e.complex) != pi_oracle(e.complex)]
    rng = random.Random(seed)
    randoms = [_random_complex(rng, rng.randint(1, 9)) for _ in range(60)]
    mism += [repr(K) for K in randoms if pi(K) != pi_oracle(K)]
    yield "oracle equivalence", ("FAIL" if mism else "PASS"), ", ".join(mism)

    bad = []
    for e in entries:
        sol = threshold_solution(e.complex)
        if not sol.result.verify(sol.program) or sol.rho != e.expected.rho:
            bad.append(e.name)
    yield "lp duality certificates", ("FAIL" if bad else "PASS"), ", ".join(bad)

    ineq = [e.name for e in entries + [catalog.CatalogEntry("random", K) for K in randoms]
            if e.expected.epsilon < 0]
    yield "pi <= floor(1/rho) + 1", ("FAIL" if ineq else "PASS"), ", ".join(ineq)

    try:
        catalog.certify("rp2_6", catalog.rp2_6())
        yield "certify builtin rp2_6", "PASS", ""
    except UnavoidableError as exc:
        yield "certify builtin rp2_6", "FAIL", str(exc)

    for name in ("rp2_6",) + catalog.DATA_COMPLEXES:
        files = catalog.data_files(name)
        item = f"certify data {name}"
        if files is None:
            if name in catalog.DATA_COMPLEXES:
                yield item, "SKIP", f"{name}.facets not in {catalog.data_dir()}"
            continue
        try:
            catalog.ingest(files[0], name, files[1])
            yield item, "PASS", ""
        except UnavoidableError as exc:
            yield item, "FAIL", str(exc)

    present = set(catalog.available_data())
    for fam in catalog.TABLE_FAMILIES:
        item = f"table {fam.name}"
        if fam.name in catalog.DATA_COMPLEXES and fam.name not in present:
            yield item, "SKIP", "data file absent"
            continue
        try:
            base = catalog.builtin(fam.name)
        except UnavoidableError as exc:
            yield item, "FAIL", str(exc)
            continue
        cells = [catalog.table_cell(fam, n, base) for n in range(1, 4)]
        bad = [f"n={c.n}" for c in cells if c.status == "MISMATCH"]
        yield item, ("FAIL" if bad else "PASS"), ", ".join(bad)

    L = catalog.builtin("ramsey(6,3)").expected
    ok = (L.pi, L.rho, L.epsilon, L.min_nonface_size) == (2, Fraction(2, 5), 1, 6)
    yield "ramsey R(3,3)", ("PASS" if ok else "FAIL"), "" if ok else str(L)

    J = [sarkaria_bound(catalog.builtin(f"join_power(rp2_6,{r - 1})").complex, r)
         for r in (2, 3, 5)]
    ok = J == [5 * r - 6 for r in (2, 3, 5)]
    yield "sarkaria bound", ("PASS" if ok else "FAIL"), "" if ok else str(J)


def cmd_check(args, out: Out) -> int:
    failed = 0
    for item, status, detail in _check_items(args.seed):
        failed += status == "FAIL"
        if out.porcelain:
            print(f"item={item.replace(' ', '_')} status={status}")
        else:
            print(f"{status} {item}" + (f": {detail}" if detail else ""))
    return EXIT_INPUT if failed else EXIT_OK


# -- argument parsing ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--porcelain", action="store_true", help="key=value output")
    common.add_argument("--timings", action="store_true", help="include wall-clock timings")

    parser = argparse.ArgumentParser(prog="unavoidable", description=__doc__.splitlines()[0],
                                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    for name, func, text in (("pi", cmd_pi, "partition number"),
                             ("rho", cmd_rho, "threshold characteristic"),
                             ("classify", cmd_classify, "linearity class"),
                             ("report", cmd_report, "all invariants")):
        p = add(name, func, text)
        p.add_argument("input")
        p.add_argument("--gens", help="generators file for file: inputs")
        if name == "rho":
            p.add_argument("--certificate", action="store_true", help="dump the LP certificate")

    p = add("minimal", cmd_minimal, "minimal r-unavoidability test")
    p.add_argument("input")
    p.add_argument("r", type=int)

    p = add("join", cmd_join, "join of complexes (facet list)")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--report", action="store_true")

    p = add("push", cmd_push, "pushforward along a ground map (facet list)")
    p.add_argument("input")
    p.add_argument("map_file")
    p.add_argument("--report", action="store_true")

    p = add("table", cmd_table, "join-power table")
    p.add_argument("max_n", type=int)

    p = add("ramsey", cmd_ramsey, "complex of a graph property")
    p.add_argument("n", type=int)
    p.add_argument("r", type=int)
    p.add_argument("--property", default="clique:3")

    p = add("wh", cmd_wh, "sublevel complex of a weighted hypergraph (facet list)")
    p.add_argument("file")
    p.add_argument("r", type=int)
    p.add_argument("--report", action="store_true")

    p = add("catalog", cmd_catalog, "list, show or ingest catalog complexes")
    p.add_argument("action", choices=("list", "show", "ingest"))
    p.add_argument("target", nargs="?")
    p.add_argument("--gens")
    p.add_argument("--name", help="certification profile for ingest (default: file stem)")

    p = add("check", cmd_check, "run the invariant suite")
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Out(args.porcelain)
    try:
        return args.func(args, out)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UnavoidableError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
