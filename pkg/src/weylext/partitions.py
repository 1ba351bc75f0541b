"""Partitions, compositions, dominance, regularity and the Mullineux map."""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction, so ``Partition((3, 1, 0))``
    equals ``Partition((3, 1))``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[k] < parts[k + 1] for k in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, k: int) -> int:
        """Part ``k`` (0-based), zero past the end."""
        return self[k] if 0 <= k < len(self) else 0

    def padded(self, n: int) -> tuple[int, ...]:
        if n < len(self):
            raise ValueError(f"{tuple(self)} has more than {n} parts")
        return tuple(self) + (0,) * (n - len(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


class Composition(tuple):
    """A finite sequence of non-negative integers (order matters)."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = [int(x) for x in parts]
        if any(x < 0 for x in parts):
            raise ValueError(f"negative entry in {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"


def as_partition(x: Sequence[int]) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


def partitions_of(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` in reverse lexicographic order."""
    if n < 0:
        return
    cap = n if max_part is None else min(n, max_part)
    rows = n if max_parts is None else max_parts

    def rec(remaining, largest, left):
        if remaining == 0:
            yield ()
            return
        if left == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in rec(remaining - first, first, left - 1):
                yield (first,) + rest

    for parts in rec(n, cap, rows):
        yield Partition(parts)


def dominates(lhs: Sequence[int], rhs: Sequence[int]) -> bool:
    """True when ``lhs`` dominates ``rhs`` (partial sums of lhs never smaller).

    Inputs of different sizes are incomparable and give False.
    """
    if sum(lhs) != sum(rhs):
        return False
    a = b = 0
    for k in range(max(len(lhs), len(rhs))):
        a += lhs[k] if k < len(lhs) else 0
        b += rhs[k] if k < len(rhs) else 0
        if a < b:
            return False
    return True


def conjugate(lam: Sequence[int]) -> Partition:
    lam = as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x > j) for j in range(lam[0]))


def is_column_regular(lam: Sequence[int], l: int) -> bool:
    """Every difference between consecutive parts (the last part counted
    against zero) is below ``l``."""
    lam = as_partition(lam)
    _check_modulus(l)
    return all(lam[k] - lam.part(k + 1) < l for k in range(len(lam)))


def is_row_regular(lam: Sequence[int], l: int) -> bool:
    """No non-zero part occurs ``l`` or more times."""
    lam = as_partition(lam)
    _check_modulus(l)
    run = 0
    for k, x in enumerate(lam):
        run = run + 1 if k and lam[k - 1] == x else 1
        if run >= l:
            return False
    return True


def nu_composition(mu: Sequence[int], d: int, t: int) -> Composition:
    """Move ``t`` from entry ``d + 1`` to entry ``d`` (entries numbered from 1)."""
    mu = list(mu)
    if not 1 <= d < len(mu):
        raise ValueError(f"index {d} out of range for {tuple(mu)}")
    if not 0 <= t <= mu[d]:
        raise ValueError(f"cannot move {t} from entry {d + 1} of {tuple(mu)}")
    mu[d - 1] += t
    mu[d] -= t
    return Composition(mu)


def _check_modulus(l: int) -> None:
    if l < 2:
        raise ValueError(f"modulus must be at least 2, got {l}")


# --- Mullineux map via the l-rim algorithm -----------------------------------

def _rim_path(lam: Partition) -> list[tuple[int, int]]:
    # rim nodes, walked from the end of the first row leftwards and down
    path = []
    for k, x in enumerate(lam):
        lo = max(lam.part(k + 1) - 1, 0)
        path.extend((k, j) for j in range(x - 1, lo - 1, -1))
    return path


def l_rim(lam: Sequence[int], l: int) -> list[tuple[int, int]]:
    """Nodes of the ``l``-rim of ``lam`` as 0-based (row, column) pairs."""
    lam = as_partition(lam)
    path = _rim_path(lam)
    row_start = {}
    for idx, (r, _) in enumerate(path):
        row_start.setdefault(r, idx)
    out = []
    row = 0
    while row < len(lam):
        start = row_start[row]
        seg = path[start:start + l]
        out.extend(seg)
        if len(seg) < l:
            break
        row = seg[-1][0] + 1
    return out


def mullineux_symbol(lam: Sequence[int], l: int) -> list[tuple[int, int]]:
    """Columns ``(A_i, R_i)``: size and row count of each successive l-rim."""
    lam = as_partition(lam)
    cols = []
    while lam:
        rim = l_rim(lam, l)
        rows = {r for r, _ in rim}
        parts = list(lam)
        for r, _ in rim:
            parts[r] -= 1
        cols.append((len(rim), len(rows)))
        lam = Partition(parts)
    return cols


def _rebuild(inner: Partition, size: int, nrows: int, l: int) -> Partition | None:
    target = inner.size + size
    found = None

    def rec(k, acc, left):
        nonlocal found
        if found is not None:
            return
        if k == nrows:
            if left == 0:
                cand = Partition(acc)
                if len(cand) == nrows and is_row_regular(cand, l):
                    rim = l_rim(cand, l)
                    skew = {(r, c) for r in range(nrows) for c in range(inner.part(r), cand[r])}
                    if len(rim) == size and set(rim) == skew:
                        found = cand
            return
        lo = max(inner.part(k), 1)
        hi = inner.part(k) + left
        if k:
            hi = min(hi, acc[-1])
            # the skew shape is a rim: no 2x2 square
            if acc[-1] > inner.part(k - 1):
                hi = min(hi, inner.part(k - 1) + 1)
        for x in range(hi, lo - 1, -1):
            rec(k + 1, acc + [x], left - (x - inner.part(k)))

    rec(0, [], size)
    return found


def mullineux(lam: Sequence[int], l: int) -> Partition:
    """Mullineux image of an ``l``-row-regular partition.

    Each rim column ``(A, R)`` of the symbol becomes ``(A, A - R + e)`` with
    ``e = 1`` when ``l`` does not divide ``A``; the partition is rebuilt from
    the innermost rim outwards.
    """
    lam = as_partition(lam)
    _check_modulus(l)
    if not is_row_regular(lam, l):
        raise ValueError(f"{tuple(lam)} is not {l}-row-regular")
    cols = [(a, a - r + (1 if a % l else 0)) for a, r in mullineux_symbol(lam, l)]
    cur = Partition()
    for size, nrows in reversed(cols):
        nxt = _rebuild(cur, size, nrows, l)
        if nxt is None:
            raise RuntimeError(f"no partition realises symbol column {(size, nrows)} over {tuple(cur)}")
        cur = nxt
    return cur
