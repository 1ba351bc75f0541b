"""Weights for GL_n: alcove data, linkage tests, cuts and Koppinen orbits."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .partitions import Partition, as_partition, conjugate


class Weight(tuple):
    """A weakly decreasing integer vector of fixed length (entries may be negative)."""

    def __new__(cls, entries: Sequence[int]):
        entries = [int(x) for x in entries]
        if any(entries[k] < entries[k + 1] for k in range(len(entries) - 1)):
            raise ValueError(f"weight not dominant: {entries}")
        return super().__new__(cls, entries)

    def __repr__(self) -> str:
        return f"Weight({tuple(self)})"


def _pairs(n):
    return ((i, j) for i in range(n) for j in range(i + 1, n))


def _check_same_rank(lam, mu):
    if len(lam) != len(mu):
        raise ValueError(f"rank mismatch: {tuple(lam)} vs {tuple(mu)}")


def d_value(lam: Sequence[int], l: int) -> int:
    """Number of alcove walls between the fundamental alcove and ``lam``.

    The sum over i < j of floor((lam_i - lam_j - i + j - 1) / l); the rank
    is ``len(lam)``, so pad partitions before calling.
    """
    if l < 2:
        raise ValueError("l must be at least 2")
    return sum((lam[i] - lam[j] + j - i - 1) // l for i, j in _pairs(len(lam)))


def is_interior(lam: Sequence[int], l: int) -> bool:
    """No root hyperplane of the dot action passes through ``lam``."""
    return all((lam[i] - lam[j] + j - i) % l for i, j in _pairs(len(lam)))


def is_steinberg(mu: Sequence[int], p: int) -> bool:
    """Consecutive differences are all congruent to -1 mod ``p``."""
    if p <= 0:
        raise ValueError("Steinberg weights need a prime p > 0")
    return all((mu[k] - mu[k + 1] + 1) % p == 0 for k in range(len(mu) - 1))


def is_strictly_dominant(lam: Sequence[int], l: int) -> bool:
    return all(lam[k] - lam[k + 1] >= l - 1 for k in range(len(lam) - 1))


def residues(lam: Sequence[int], l: int) -> list[int]:
    return sorted((x - k - 1) % l for k, x in enumerate(lam))


def same_block_candidate(lam: Sequence[int], mu: Sequence[int], l: int) -> bool:
    """Necessary condition for linkage: equal multisets of ``lam_i - i`` mod ``l``."""
    _check_same_rank(lam, mu)
    return residues(lam, l) == residues(mu, l)


def d_reflect(lam: Sequence[int], s: int) -> Weight:
    """The weight ``(s - lam_n, ..., s - lam_1)``; it dualises Ext between weights."""
    return Weight([s - x for x in reversed(lam)])


# --- Horizontal and vertical cuts --------------------------------------------

@dataclass(frozen=True)
class CutDecomposition:
    blocks: tuple[tuple[Partition, Partition], ...]
    orientation: str  # "horizontal" or "vertical"

    def to_json(self) -> dict:
        return {
            "orientation": self.orientation,
            "blocks": [[list(a), list(b)] for a, b in self.blocks],
        }


def find_horizontal_cut(lam: Sequence[int], mu: Sequence[int]) -> CutDecomposition | None:
    """Finest splitting of the rows into blocks of equal total size.

    A cut sits after row ``j`` whenever the first ``j`` rows of both partitions
    have the same size.  Returns None when no cut exists.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise ValueError("partitions of different sizes cannot be cut")
    n = max(len(lam), len(mu))
    cuts = []
    a = b = 0
    for j in range(1, n):
        a += lam.part(j - 1)
        b += mu.part(j - 1)
        if a == b:
            cuts.append(j)
    if not cuts:
        return None
    bounds = [0] + cuts + [n]
    blocks = tuple(
        (Partition(lam.part(k) for k in range(lo, hi)), Partition(mu.part(k) for k in range(lo, hi)))
        for lo, hi in zip(bounds, bounds[1:])
    )
    return CutDecomposition(blocks, "horizontal")


def find_vertical_cut(lam: Sequence[int], mu: Sequence[int]) -> CutDecomposition | None:
    """Same as the horizontal cut, applied to the columns."""
    cut = find_horizontal_cut(conjugate(lam), conjugate(mu))
    if cut is None:
        return None
    blocks = tuple((conjugate(a), conjugate(b)) for a, b in cut.blocks)
    return CutDecomposition(blocks, "vertical")


# --- Koppinen orbits ---------------------------------------------------------

def in_star(lam: Sequence[int], mu: Sequence[int], p: int) -> bool:
    """``lam`` lies in the open star of the Steinberg vertex ``mu``."""
    _check_same_rank(lam, mu)
    return all(abs((lam[i] - lam[j]) - (mu[i] - mu[j])) < p for i, j in _pairs(len(lam)))


def dot_orbit(mu: Sequence[int], lam: Sequence[int]) -> set[tuple[int, ...]]:
    """Orbit of ``lam`` under the stabiliser of the Steinberg weight ``mu``
    (all weights, dominant or not)."""
    diff = [a - b for a, b in zip(lam, mu)]
    return {tuple(m + d for m, d in zip(mu, perm)) for perm in permutations(diff)}


def koppinen_orbit(mu: Sequence[int], lam: Sequence[int], p: int) -> frozenset[Weight]:
    """Dominant members of the dot-orbit of ``lam`` around the vertex ``mu``."""
    _check_same_rank(lam, mu)
    if not is_steinberg(mu, p):
        raise ValueError(f"{tuple(mu)} is not a Steinberg weight for p={p}")
    if not in_star(lam, mu, p):
        raise ValueError(f"{tuple(lam)} is outside the star of {tuple(mu)}")
    orbit = dot_orbit(mu, lam)
    return frozenset(
        Weight(w) for w in orbit if all(w[k] >= w[k + 1] for k in range(len(w) - 1))
    )
