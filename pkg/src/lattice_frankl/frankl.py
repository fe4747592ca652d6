"""The lattice form of the union-closed sets conjecture.

A lattice with more than one element satisfies it when some
join-irreducible ``j`` has ``2 * |up(j)| <= |L|``.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .enumeration import DEFAULT_MAX_SIZE, enumerate_lattices, lattice_certs
from .errors import SizeError
from .order import Lattice, irreducible_profile


def frankl_witnesses(L: Lattice) -> frozenset[int]:
    if L.n < 2:
        raise SizeError("the conjecture concerns lattices with more than one element")
    prof = irreducible_profile(L)
    return frozenset(j for j in prof.join_irr if 2 * L.up[j].bit_count() <= L.n)


def satisfies_conjecture(L: Lattice) -> bool:
    """Single-element lattices are vacuously fine (see :func:`is_vacuous`)."""
    if is_vacuous(L):
        return True
    return bool(frankl_witnesses(L))


def is_vacuous(L: Lattice) -> bool:
    return L.n == 1


@dataclass
class SizeSummary:
    n: int
    lattices: int = 0
    counterexamples: int = 0
    # number of witnesses -> number of lattices
    witness_histogram: dict[int, int] = field(default_factory=dict)
    counterexample_certs: list = field(default_factory=list)


@dataclass
class SweepReport:
    max_n: int
    sizes: list[SizeSummary]

    @property
    def counterexamples(self) -> int:
        return sum(s.counterexamples for s in self.sizes)

    @property
    def counts(self) -> dict[int, int]:
        return {s.n: s.lattices for s in self.sizes}

    @property
    def certified_min_size(self) -> int | None:
        """Lower bound on a counterexample's size, or None if one was found."""
        return self.max_n + 1 if self.counterexamples == 0 else None

    def to_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "counts": {str(s.n): s.lattices for s in self.sizes},
            "counterexamples": self.counterexamples,
            "witness_histograms": {
                str(s.n): {str(k): v for k, v in s.witness_histogram.items()} for s in self.sizes
            },
            "minimum_counterexample_size_exceeds": self.max_n if self.counterexamples == 0 else None,
        }


def _sweep_size(args: tuple[int, int]) -> SizeSummary:
    n, max_size = args
    summary = SizeSummary(n)
    hist: Counter[int] = Counter()
    for cert in lattice_certs(n, max_size):
        L = cert.to_lattice()
        summary.lattices += 1
        w = len(frankl_witnesses(L))
        hist[w] += 1
        if w == 0:
            summary.counterexamples += 1
            summary.counterexample_certs.append(cert)
    summary.witness_histogram = dict(sorted(hist.items()))
    return summary


def counterexample_sweep(max_n: int, jobs: int = 1, max_size: int = DEFAULT_MAX_SIZE) -> SweepReport:
    """Check every lattice with ``2 <= n <= max_n``; sizes are merged in increasing order."""
    if max_n < 2:
        raise SizeError("the sweep needs max_n >= 2")
    work = [(n, max_size) for n in range(2, max_n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            sizes = list(pool.map(_sweep_size, work))
    else:
        sizes = [_sweep_size(w) for w in work]
    return SweepReport(max_n, sizes)


def iter_counterexamples(n: int, max_size: int = DEFAULT_MAX_SIZE):
    for L in enumerate_lattices(n, max_size):
        if not satisfies_conjecture(L):
            yield L
