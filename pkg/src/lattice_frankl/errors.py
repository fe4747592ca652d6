"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class LatticeToolError(Exception):
    """Base class for all errors raised by lattice_frankl."""


class RangeError(LatticeToolError, ValueError):
    pass


class CycleError(LatticeToolError, ValueError):
    """The closure of the given relation is not antisymmetric."""


class RedundantCoverError(LatticeToolError, ValueError):
    """An input cover pair is implied transitively by the others."""

    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"cover pair {pair[0]} {pair[1]} is implied by other pairs")
        self.pair = pair


class NotALatticeError(LatticeToolError, ValueError):
    """Some pair of elements lacks a join or a meet."""

    def __init__(self, witness: tuple[int, int], missing: str):
        super().__init__(f"elements {witness[0]} and {witness[1]} have no {missing}")
        self.witness = witness
        self.missing = missing


class EmptySetError(LatticeToolError, ValueError):
    pass


class SizeError(LatticeToolError, ValueError):
    pass


class NotIrreducibleError(LatticeToolError, ValueError):
    def __init__(self, element: int, kind: str):
        super().__init__(f"element {element} is not {kind}-irreducible")
        self.element = element
        self.kind = kind


class BadSubsetError(LatticeToolError, ValueError):
    pass


class ResourceError(LatticeToolError):
    """Requested work exceeds the configured desk-scale limits."""


class ParseError(LatticeToolError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
