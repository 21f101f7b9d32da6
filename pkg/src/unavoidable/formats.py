"""Plain-text file formats.

Facet list::

    # comment
    n 6
    1 2 3
    1 2 4

The first non-comment line declares the ground set ``[n]``; every further
line is a facet of 1-based vertices.  A single line ``empty`` declares the
complex ``{∅}``.  The weighted-hypergraph variant ends each member line
with ``w <rational>``.

Generators: one permutation per line in 1-based cycle notation.

Ground maps::

    map 4 2
    1 1 2 2

lists the 1-based image of each source vertex in order.
"""
from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Iterable, Iterator

from .complex import GroundMap, SimplicialComplex, members, vset
from .exceptions import InvalidInputError
from .symmetry import Permutation
from .wh import WeightedHypergraph


def _lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _header(lines: Iterator[tuple[int, str]], what: str) -> int:
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise InvalidInputError(f"{what}: missing 'n <N>' header") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] != "n" or not parts[1].isdigit():
        raise InvalidInputError(f"{what}: line {lineno}: expected 'n <N>', got {line!r}")
    return int(parts[1])


def _vertices(tokens: Iterable[str], n: int, lineno: int, what: str) -> int:
    out = []
    for tok in tokens:
        if not tok.isdigit() or not 1 <= int(tok) <= n:
            raise InvalidInputError(f"{what}: line {lineno}: bad vertex {tok!r} for n = {n}")
        out.append(int(tok) - 1)
    return vset(out)


def parse_facets(text: str, what: str = "facet list") -> SimplicialComplex:
    lines = _lines(text)
    n = _header(lines, what)
    facets, empty = [], False
    for lineno, line in lines:
        if line == "empty":
            empty = True
            continue
        facets.append(_vertices(line.split(), n, lineno, what))
    if empty and any(facets):
        raise InvalidInputError(f"{what}: 'empty' mixed with facets")
    if not empty and not facets:
        raise InvalidInputError(f"{what}: no facets (write 'empty' for the complex {{∅}})")
    return SimplicialComplex.from_facets(n, facets)


def format_facets(K: SimplicialComplex, comment: str | None = None) -> str:
    """Canonical facet list: facets in increasing bitmask order."""
    out = [f"# {comment}"] if comment else []
    out.append(f"n {K.n}")
    facets = K.maximal_faces()
    if facets == (0,):
        out.append("empty")
    else:
        out += [" ".join(str(v + 1) for v in members(f)) for f in sorted(facets)]
    return "\n".join(out) + "\n"


def read_facets(path: str | Path) -> SimplicialComplex:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {p}: {exc.strerror}") from None
    return parse_facets(text, what=str(p))


def write_facets(K: SimplicialComplex, path: str | Path, comment: str | None = None) -> None:
    Path(path).write_text(format_facets(K, comment))


def parse_generators(text: str, n: int) -> list[Permutation]:
    return [Permutation.from_cycles(line, n) for _, line in _lines(text)]


def read_generators(path: str | Path, n: int) -> list[Permutation]:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {p}: {exc.strerror}") from None
    return parse_generators(text, n)


def format_generators(gens: Iterable[Permutation]) -> str:
    return "".join((g.to_cycles() or "()") + "\n" for g in gens)


def parse_map(text: str) -> GroundMap:
    tokens = [tok for _, line in _lines(text) for tok in line.split()]
    if len(tokens) < 3 or tokens[0] != "map":
        raise InvalidInputError("map file must start with 'map <n_src> <n_dst>'")
    try:
        n_src, n_dst = int(tokens[1]), int(tokens[2])
        image = [int(t) - 1 for t in tokens[3:]]
    except ValueError:
        raise InvalidInputError("map file: non-integer token") from None
    if len(image) != n_src:
        raise InvalidInputError(f"map file: expected {n_src} images, got {len(image)}")
    return GroundMap(n_src, n_dst, tuple(image))


def format_map(f: GroundMap) -> str:
    return f"map {f.n_src} {f.n_dst}\n" + " ".join(str(y + 1) for y in f.image) + "\n"


def parse_wh(text: str, what: str = "weighted hypergraph") -> WeightedHypergraph:
    lines = _lines(text)
    n = _header(lines, what)
    weights: dict[int, Fraction] = {}
    for lineno, line in lines:
        head, sep, w = line.rpartition(" w ")
        if not sep:
            if line.startswith("w "):
                head, w = "", line[2:]
            else:
                raise InvalidInputError(f"{what}: line {lineno}: missing 'w <rational>'")
        tokens = head.split()
        mask = 0 if tokens == ["empty"] else _vertices(tokens, n, lineno, what)
        try:
            value = Fraction(w.strip())
        except (ValueError, ZeroDivisionError):
            raise InvalidInputError(f"{what}: line {lineno}: bad weight {w.strip()!r}") from None
        if mask in weights:
            raise InvalidInputError(f"{what}: line {lineno}: duplicate member")
        weights[mask] = value
    return WeightedHypergraph(n, weights)


def format_wh(W: WeightedHypergraph) -> str:
    out = [f"n {W.n}"]
    for m in W.members:
        label = " ".join(str(v + 1) for v in members(m)) or "empty"
        out.append(f"{label} w {W.weights[m]}")
    return "\n".join(out) + "\n"


def read_wh(path: str | Path) -> WeightedHypergraph:
    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {p}: {exc.strerror}") from None
    return parse_wh(text, what=str(p))
