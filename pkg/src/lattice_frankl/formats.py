"""Text formats: ``LATTICE v1`` cover files and Graphviz DOT output.

A ``LATTICE v1`` block looks like::

    # optional comments
    lattice 4
    0 1
    0 2
    1 3
    2 3

Each pair line ``a b`` says that ``b`` covers ``a``. A file may hold several
blocks; a new block starts at every ``lattice`` header.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .errors import CycleError, NotALatticeError, ParseError, RangeError, RedundantCoverError
from .order import Lattice, Poset, is_lattice, lattice_from_poset, poset_from_covers

HEADER = "lattice"


def _blocks(text: str) -> list[tuple[int, int, list[tuple[int, int, int]]]]:
    blocks: list[tuple[int, int, list[tuple[int, int, int]]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == HEADER:
            if len(parts) != 2 or not parts[1].isdigit():
                raise ParseError(f"expected 'lattice <n>', got {raw.strip()!r}", lineno)
            n = int(parts[1])
            if n < 1:
                raise ParseError("a lattice needs at least one element", lineno)
            blocks.append((lineno, n, []))
            continue
        if not blocks:
            raise ParseError("data before the 'lattice <n>' header", lineno)
        if len(parts) != 2:
            raise ParseError(f"expected a cover pair '<a> <b>', got {raw.strip()!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer element in {raw.strip()!r}", lineno) from None
        blocks[-1][2].append((lineno, a, b))
    return blocks


def _build(lineno: int, n: int, rows: list[tuple[int, int, int]], strict: bool) -> Lattice:
    pairs = [(a, b) for _, a, b in rows]
    try:
        poset = poset_from_covers(n, pairs, strict=strict)
    except RangeError as exc:
        raise ParseError(str(exc), lineno) from None
    except CycleError as exc:
        raise ParseError(f"cyclic order: {exc}", lineno) from None
    except RedundantCoverError as exc:
        bad = next(ln for ln, a, b in rows if (a, b) == exc.pair)
        raise ParseError(str(exc), bad) from None
    if strict:
        if len(poset.minimal) > 1:
            raise ParseError(f"several minimal elements {list(poset.minimal)}", lineno)
        if len(poset.maximal) > 1:
            raise ParseError(f"several maximal elements {list(poset.maximal)}", lineno)
    check = is_lattice(poset)
    if not check.ok:
        raise NotALatticeError(check.witness, check.missing)
    return lattice_from_poset(poset)


def parse_lattices(text: str, strict: bool = True) -> list[Lattice]:
    return [_build(lineno, n, rows, strict) for lineno, n, rows in _blocks(text)]


def parse_lattice(text: str, strict: bool = True) -> Lattice:
    found = parse_lattices(text, strict)
    if len(found) != 1:
        raise ParseError(f"expected exactly one lattice block, found {len(found)}")
    return found[0]


def read_lattice(path: str, strict: bool = True) -> Lattice:
    with open(path, encoding="utf-8") as fh:
        return parse_lattice(fh.read(), strict)


def format_lattice(L: Lattice | Poset, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{HEADER} {L.n}")
    lines.extend(f"{a} {b}" for a, b in L.covers)
    return "\n".join(lines) + "\n"


def write_lattices(lattices: Iterable[Lattice], out: TextIO) -> int:
    count = 0
    for i, L in enumerate(lattices):
        if i:
            out.write("\n")
        out.write(format_lattice(L))
        count += 1
    return count


def to_dot(L: Lattice | Poset) -> str:
    lines = ["digraph hasse { rankdir=BT;"]
    lines.extend(f"v{i};" for i in range(L.n))
    lines.extend(f"v{a} -> v{b};" for a, b in sorted(L.covers))
    lines.append("}")
    return "\n".join(lines) + "\n"
