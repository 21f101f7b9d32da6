"""Named complexes with invariants recomputed on load.

Builtins are constructed in code.  The complex projective plane on 9
vertices and the 15-vertex quaternionic analogue are read from data files
(``<name>.facets`` plus optional ``<name>.gens``) and must pass a
certification gate before use.  The data directory is the package's
``data/`` folder unless ``UNAVOIDABLE_DATA`` points elsewhere.
"""
from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from pathlib import Path
from typing import Callable

from .complex import (
    SimplicialComplex,
    is_self_dual,
    join_power,
    vset,
)
from .exceptions import CertificationError, InvalidInputError
from .formats import read_facets, read_generators
from .partition import is_minimal_r_unavoidable, pi
from .ramsey import clique, induced_edge_group, ramsey_complex
from .symmetry import (
    PermGroup,
    Permutation,
    automorphism_group,
    check_automorphisms,
    direct_product,
    symmetric_group,
    wreath_power,
)
from .threshold import Linearity, classify, epsilon_from, rho, rho_symmetrized

DATA_ENV = "UNAVOIDABLE_DATA"
DATA_COMPLEXES = ("cp2_9", "hp2_15")

RP2_6_FACETS = ("123", "124", "135", "146", "156", "236", "245", "256", "345", "346")


def data_dir() -> Path:
    env = os.environ.get(DATA_ENV)
    return Path(env) if env else Path(__file__).with_name("data")


# -- entries ----------------------------------------------------------------------

@dataclass(frozen=True)
class Profile:
    """Invariants computed by the engine for one complex."""

    pi: int
    rho: Fraction | float
    epsilon: int
    self_dual: bool
    min_nonface_size: int | None


@dataclass
class CatalogEntry:
    name: str
    complex: SimplicialComplex
    generators: PermGroup | None = None
    #: set when minimality is known structurally (joins of minimal complexes)
    minimal: bool | None = None
    expected: Profile = field(init=False)

    def __post_init__(self):
        if self.generators is not None:
            check_automorphisms(self.complex, self.generators.generators)
        self.expected = profile(self.complex, self.generators)

    def classification(self) -> Linearity:
        p = self.expected
        minimal = self.minimal
        if minimal is None and p.epsilon > 0:
            minimal = is_minimal_r_unavoidable(self.complex, p.pi)
        return classify(self.complex, p.pi, p.rho, minimal=minimal)


def profile(K: SimplicialComplex, G: PermGroup | None = None) -> Profile:
    p = pi(K)
    r = rho_symmetrized(K, G) if G is not None and G.generators else rho(K)
    sizes = [c.bit_count() for c in K.minimal_nonfaces()]
    return Profile(p, r, epsilon_from(p, r), is_self_dual(K), min(sizes) if sizes else None)


# -- builtin constructions --------------------------------------------------------

def skeleton(n: int, k: int) -> SimplicialComplex:
    """All subsets of ``[n]`` with at most ``k`` elements."""
    if not 0 <= k <= n:
        raise InvalidInputError(f"skeleton needs 0 <= k <= n, got n={n}, k={k}")
    if k == n:
        return SimplicialComplex.simplex(n)
    return SimplicialComplex.from_min_nonfaces(
        n, [vset(c) for c in combinations(range(n), k + 1)])


def cross_polytope(n: int) -> SimplicialComplex:
    """Boundary of the ``n``-dimensional cross-polytope on ``2n`` vertices.

    Vertices ``2i, 2i+1`` (0-based) are the antipodal pair ``±e_i``.
    """
    if n < 1:
        raise InvalidInputError("cross-polytope needs n >= 1")
    return SimplicialComplex.from_min_nonfaces(2 * n, [3 << (2 * i) for i in range(n)])


def key_iv_parameters(N: int, k: int, r: int, s: int) -> tuple[int, int, int]:
    """``(n, p, q)`` with ``n = N+1``, ``p = N+1-(r-s)``, ``q = r-s``."""
    if k < 0 or not 0 <= s <= r or r < 1:
        raise InvalidInputError("key_iv needs k >= 0, r >= 1 and 0 <= s <= r")
    if r * (k + 1) + s <= N + 1:
        raise InvalidInputError("key_iv needs r(k+1) + s > N + 1")
    n, q = N + 1, r - s
    p = n - q
    if p < k + 1:
        raise InvalidInputError("key_iv needs N+1-(r-s) >= k+1")
    return n, p, q


def key_iv(N: int, k: int, r: int, s: int) -> SimplicialComplex:
    """Sets of size ``<= k`` in ``[N+1]`` together with sets of size
    ``<= k+1`` in ``[N+1-(r-s)]``."""
    n, p, _ = key_iv_parameters(N, k, r, s)
    faces = [vset(c) for c in combinations(range(n), k)]
    faces += [vset(c) for c in combinations(range(p), k + 1)]
    return SimplicialComplex.from_facets(n, faces)


def _parse_facet_strings(rows) -> list[int]:
    return [vset(int(ch) - 1 for ch in row) for row in rows]


def rp2_6() -> SimplicialComplex:
    return SimplicialComplex.from_facets(6, _parse_facet_strings(RP2_6_FACETS))


# -- certification ----------------------------------------------------------------

def euler_characteristic(K: SimplicialComplex) -> int:
    f = K.f_vector()
    return sum((-1) ** (i - 1) * f[i] for i in range(1, len(f)))


def _edge_degrees_ok(K: SimplicialComplex) -> bool:
    """Every codimension-one face lies in exactly two facets."""
    counts: dict[int, int] = {}
    for f in K.facets:
        t = f
        while t:
            v = t & -t
            counts[f ^ v] = counts.get(f ^ v, 0) + 1
            t ^= v
    return all(c == 2 for c in counts.values())


Gate = tuple[str, Callable[[SimplicialComplex, PermGroup | None], bool]]


def _min_nf(K):
    return min((c.bit_count() for c in K.minimal_nonfaces()), default=None)


def _rho_of(K, G):
    return rho_symmetrized(K, G) if G is not None and G.generators else rho(K)


def _transitive(K, G):
    return G is None or G.is_transitive()


CERTIFICATION: dict[str, list[Gate]] = {
    "rp2_6": [
        ("vertex count", lambda K, G: K.n == 6 and K.vertices() == K.ground),
        ("euler characteristic", lambda K, G: euler_characteristic(K) == 1),
        ("f-vector", lambda K, G: K.f_vector() == [1, 6, 15, 10]),
        ("pseudomanifold", lambda K, G: _edge_degrees_ok(K)),
        ("self-dual", lambda K, G: is_self_dual(K)),
        ("min non-face size", lambda K, G: _min_nf(K) == 3),
    ],
    "cp2_9": [
        ("vertex count", lambda K, G: K.n == 9 and K.vertices() == K.ground),
        ("facet count", lambda K, G: len(K.facets) == 36),
        ("facet dimension", lambda K, G: all(f.bit_count() == 5 for f in K.facets)),
        ("self-dual", lambda K, G: is_self_dual(K)),
        ("min non-face size", lambda K, G: _min_nf(K) == 4),
        ("vertex transitivity", _transitive),
        ("rho", lambda K, G: _rho_of(K, G) == Fraction(4, 9)),
    ],
    "hp2_15": [
        ("vertex count", lambda K, G: K.n == 15 and K.vertices() == K.ground),
        ("self-dual", lambda K, G: is_self_dual(K)),
        ("min non-face size", lambda K, G: _min_nf(K) == 6),
        ("vertex transitivity", _transitive),
        ("rho", lambda K, G: _rho_of(K, G) == Fraction(6, 15)),
    ],
}


def certify(name: str, K: SimplicialComplex, G: PermGroup | None = None) -> list[str]:
    """Run the gates for ``name`` in order; return the names of passed gates.

    Raises :class:`CertificationError` naming the first failed gate.
    Generators, when given, must be automorphisms.
    """
    gates = CERTIFICATION.get(name)
    if gates is None:
        raise InvalidInputError(f"no certification profile for {name!r}")
    passed = []
    if G is not None:
        try:
            check_automorphisms(K, G.generators)
        except InvalidInputError as exc:
            raise CertificationError(name, "generators", str(exc)) from None
        passed.append("generators")
    for label, check in gates:
        if not check(K, G):
            raise CertificationError(name, label)
        passed.append(label)
    return passed


def ingest(path: str | Path, name: str | None = None,
           gens_path: str | Path | None = None) -> CatalogEntry:
    """Load a facet file, certify it when a profile exists, return an entry.

    The profile is chosen by ``name`` or, by default, the file stem.
    """
    path = Path(path)
    name = name or path.stem
    K = read_facets(path)
    G = None
    if gens_path is not None:
        G = PermGroup(K.n, read_generators(gens_path, K.n))
    if name in CERTIFICATION:
        certify(name, K, G)
    return CatalogEntry(name, K, G)


def data_files(name: str) -> tuple[Path, Path | None] | None:
    base = data_dir()
    facets = base / f"{name}.facets"
    if not facets.is_file():
        return None
    gens = base / f"{name}.gens"
    return facets, gens if gens.is_file() else None


def _load_data(name: str) -> CatalogEntry:
    files = data_files(name)
    if files is None:
        raise InvalidInputError(f"data file {name}.facets not found in {data_dir()}")
    facets, gens = files
    entry = ingest(facets, name, gens)
    entry.minimal = True  # self-dual complexes are minimal 2-unavoidable
    return entry


# -- name resolution --------------------------------------------------------------

_TOKEN = re.compile(r"\s*([A-Za-z_][A-Za-z0-9_]*|\d+|[(),])")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise InvalidInputError(f"cannot parse catalog name {text!r}")
        out.append(m.group(1))
        pos = m.end()
    return out


def parse_name(text: str):
    """``"join_power(skeleton(5,1),2)"`` -> ``("join_power", [("skeleton", [5, 1]), 2])``."""
    tokens = _tokenize(text)
    pos = 0

    def expr():
        nonlocal pos
        if pos >= len(tokens):
            raise InvalidInputError(f"truncated catalog name {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok.isdigit():
            return int(tok)
        if not (tok[0].isalpha() or tok[0] == "_"):
            raise InvalidInputError(f"unexpected {tok!r} in {text!r}")
        args = []
        if pos < len(tokens) and tokens[pos] == "(":
            pos += 1
            while True:
                args.append(expr())
                if pos < len(tokens) and tokens[pos] == ",":
                    pos += 1
                    continue
                if pos < len(tokens) and tokens[pos] == ")":
                    pos += 1
                    break
                raise InvalidInputError(f"expected ',' or ')' in {text!r}")
        return (tok, args)

    tree = expr()
    if pos != len(tokens) or isinstance(tree, int):
        raise InvalidInputError(f"cannot parse catalog name {text!r}")
    return tree


def _ints(name: str, args, count: int) -> list[int]:
    if len(args) != count or not all(isinstance(a, int) for a in args):
        raise InvalidInputError(f"{name} takes {count} integer argument(s)")
    return args


def _canonical(tree) -> str:
    if isinstance(tree, int):
        return str(tree)
    head, args = tree
    return head if not args else f"{head}({','.join(_canonical(a) for a in args)})"


def _build(tree) -> CatalogEntry:
    head, args = tree
    name = _canonical(tree)
    if head == "three_point":
        _ints(head, args, 0)
        return CatalogEntry(name, skeleton(3, 1), symmetric_group(3), minimal=True)
    if head == "rp2_6":
        _ints(head, args, 0)
        K = rp2_6()
        certify("rp2_6", K)
        return CatalogEntry(name, K, automorphism_group(K), minimal=True)
    if head == "skeleton":
        n, k = _ints(head, args, 2)
        return CatalogEntry(name, skeleton(n, k), symmetric_group(n))
    if head == "simplex":
        (n,) = _ints(head, args, 1)
        return CatalogEntry(name, SimplicialComplex.simplex(n), symmetric_group(n))
    if head == "empty":
        (n,) = _ints(head, args, 1)
        return CatalogEntry(name, SimplicialComplex.empty(n), symmetric_group(n))
    if head == "cross_polytope":
        (n,) = _ints(head, args, 1)
        base = PermGroup(2, [Permutation((1, 0))], order=2)
        return CatalogEntry(name, cross_polytope(n), wreath_power(base, n))
    if head == "key_iv":
        N, k, r, s = _ints(head, args, 4)
        n, p, q = key_iv_parameters(N, k, r, s)
        G = direct_product(symmetric_group(p), symmetric_group(q))
        return CatalogEntry(name, key_iv(N, k, r, s), G)
    if head == "ramsey":
        n, k = _ints(head, args, 2)
        return CatalogEntry(name, ramsey_complex(n, clique(k)), induced_edge_group(n))
    if head == "join_power":
        if len(args) != 2 or isinstance(args[0], int) or not isinstance(args[1], int):
            raise InvalidInputError("join_power takes a catalog name and an integer")
        base = _build(args[0])
        m = args[1]
        if m < 1:
            raise InvalidInputError("join_power needs m >= 1")
        G = wreath_power(base.generators, m) if base.generators is not None else None
        minimal = True if base.minimal else None
        return CatalogEntry(name, join_power(base.complex, m), G, minimal=minimal)
    if head in DATA_COMPLEXES:
        _ints(head, args, 0)
        return _load_data(head)
    raise InvalidInputError(f"unknown catalog name {head!r}")


def builtin(name: str) -> CatalogEntry:
    """Resolve a catalog name such as ``rp2_6`` or ``join_power(three_point,3)``."""
    return _build(parse_name(name))


BUILTIN_FORMS = (
    "three_point", "rp2_6", "skeleton(n,k)", "cross_polytope(n)", "key_iv(N,k,r,s)",
    "simplex(n)", "empty(n)", "ramsey(n,k)", "join_power(name,m)",
)


def available_data() -> list[str]:
    return [name for name in DATA_COMPLEXES if data_files(name) is not None]


# -- the join-power table ---------------------------------------------------------

@dataclass(frozen=True)
class Family:
    """Base complex of a table row and its closed-form values for ``K^{*n}``."""

    name: str
    vertices: int
    rho: Callable[[int], Fraction]
    epsilon: Callable[[int], int]

    def closed_form(self, n: int) -> dict:
        return {"pi": n + 1, "rho": self.rho(n), "epsilon": self.epsilon(n),
                "nu": self.vertices * n}


TABLE_FAMILIES = (
    Family("three_point", 3, lambda n: Fraction(2, 3 * n), lambda n: n // 2),
    Family("rp2_6", 6, lambda n: Fraction(1, 2 * n), lambda n: n),
    Family("cp2_9", 9, lambda n: Fraction(4, 9 * n), lambda n: 5 * n // 4),
    Family("hp2_15", 15, lambda n: Fraction(6, 15 * n), lambda n: 3 * n // 2),
)


@dataclass(frozen=True)
class TableCell:
    family: str
    n: int
    status: str                 # "ok", "MISMATCH", "capacity", "skipped"
    computed: dict | None = None
    expected: dict | None = None


def table_cell(family: Family, n: int, base: CatalogEntry | None = None) -> TableCell:
    if family.vertices * n > 64:
        return TableCell(family.name, n, "capacity", expected=family.closed_form(n))
    if base is None:
        base = builtin(family.name)
    G = wreath_power(base.generators, n) if base.generators is not None else None
    K = join_power(base.complex, n)
    p = pi(K)
    r = rho_symmetrized(K, G) if G is not None else rho(K)
    computed = {"pi": p, "rho": r, "epsilon": epsilon_from(p, r), "nu": K.n}
    expected = family.closed_form(n)
    status = "ok" if computed == expected else "MISMATCH"
    return TableCell(family.name, n, status, computed, expected)


def table(max_n: int) -> list[TableCell]:
    """Cells for ``K^{*n}``, ``n = 1..max_n``, for every table family.

    Families whose data files are missing produce ``skipped`` cells.
    """
    if max_n < 1:
        raise InvalidInputError("max_n must be >= 1")
    present = set(available_data())
    cells = []
    for fam in TABLE_FAMILIES:
        if fam.name in DATA_COMPLEXES and fam.name not in present:
            cells += [TableCell(fam.name, n, "skipped") for n in range(1, max_n + 1)]
            continue
        base = builtin(fam.name)
        cells += [table_cell(fam, n, base) for n in range(1, max_n + 1)]
    return cells
