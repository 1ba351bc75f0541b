"""Moving Ext values between the Schur algebra and the Hecke algebra.

Schur-side values come from the rank-2 engine, possibly after splitting
the pair along a horizontal cut or conjugating it.  A Hecke-side value is
only reported inside the degree windows where the two Ext groups are
known to agree.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .alcove import CutDecomposition, Weight, d_value, d_reflect, find_horizontal_cut, is_interior, same_block_candidate
from .engine import EXACT, NABLA_NABLA, NABLA_SIMPLE, UNSUPPORTED, Engine, ExtQuery, default_engine
from .params import FieldParams
from .partitions import Partition, as_partition, conjugate, is_column_regular, is_row_regular

SCHUR = "schur"
HECKE = "hecke"


class TransferRefused(Exception):
    """The requested value does not transfer to the Hecke algebra."""


class UnsupportedRank(Exception):
    """The pair is neither rank 2 nor reducible to rank-2 pieces."""


@dataclass
class TransferResult:
    value: int | None
    window_ok: bool
    rules: list[str] = field(default_factory=list)
    caveats: list[str] = field(default_factory=list)
    query: tuple | None = None

    def to_json(self) -> dict:
        out = {
            "value": self.value,
            "window_ok": self.window_ok,
            "rules": list(self.rules),
            "caveats": list(self.caveats),
        }
        if self.query is not None:
            out["query"] = [list(x) for x in self.query]
        return out


# --- Kuenneth combination ----------------------------------------------------

def convolve(seqs: Sequence[Sequence[int]], top: int) -> list[int]:
    """Degree-wise convolution of dimension sequences, truncated at ``top``."""
    out = [1] + [0] * top
    for seq in seqs:
        nxt = [0] * (top + 1)
        for a, x in enumerate(out):
            if not x:
                continue
            for b in range(min(len(seq), top + 1 - a)):
                nxt[a + b] += x * seq[b]
        out = nxt
    return out


def kunneth_combine(
    blocks: CutDecomposition | Sequence[tuple],
    m: int,
    leaf: Callable[[tuple, int], int],
    leaf_kind: str = NABLA_NABLA,
    side: str = SCHUR,
) -> int:
    """Sum over m = m_1 + ... + m_k of the product of ``leaf(block_j, m_j)``.

    Simple-target leaves only combine on the Schur side: the corresponding
    identity fails for the Hecke algebra.
    """
    if leaf_kind == NABLA_SIMPLE and side == HECKE:
        raise TransferRefused("cut formula with simple targets has no Hecke-side counterpart")
    if side not in (SCHUR, HECKE):
        raise ValueError(f"unknown side {side!r}")
    pieces = blocks.blocks if isinstance(blocks, CutDecomposition) else tuple(blocks)
    seqs = []
    for block in pieces:
        seq = []
        for k in range(m + 1):
            val = leaf(block, k)
            if val is None:
                raise ValueError(f"missing leaf value for {block} in degree {k}")
            seq.append(val)
        seqs.append(seq)
    return convolve(seqs, m)[m]


# --- Schur side --------------------------------------------------------------

def _pad2(lam):
    return Weight(as_partition(lam).padded(2))


def _engine_leaf(engine, params, kind, notes):
    def leaf(block, k):
        lam, mu = block
        if len(lam) > 2 or len(mu) > 2:
            raise UnsupportedRank(f"block {tuple(lam)}, {tuple(mu)} has more than two rows")
        val = engine.query(ExtQuery(kind, _pad2(lam), _pad2(mu), k, params), want_trace=False)
        if val.status == UNSUPPORTED:
            notes.append(f"engine returned Unsupported for {tuple(lam)}, {tuple(mu)} in degree {k}")
            return None
        return val.dim
    return leaf


def schur_ext(lam, mu, i: int, params: FieldParams, engine: Engine | None = None, kind: str = NABLA_NABLA):
    """Ext^i between induced modules (or induced and simple) for partitions.

    Returns ``(value, rules, caveats)``; ``value`` is None when the engine
    cannot decide.  Raises UnsupportedRank when no reduction to rank 2 exists.
    """
    engine = engine or default_engine()
    lam, mu = as_partition(lam), as_partition(mu)
    if lam.size != mu.size:
        raise ValueError("partitions of different sizes")
    rules, notes = [], []
    leaf = _engine_leaf(engine, params, kind, notes)
    if len(lam) <= 2 and len(mu) <= 2:
        rules.append("rank-stability")
        try:
            return leaf((lam, mu), i), rules, notes
        except ValueError:
            return None, rules, notes
    cut = find_horizontal_cut(lam, mu)
    if cut is not None and all(len(a) <= 2 and len(b) <= 2 for a, b in cut.blocks):
        rules += ["rank-stability", "horizontal-cut" if kind == NABLA_NABLA else "horizontal-cut-simple"]
        try:
            return kunneth_combine(cut, i, leaf, kind, SCHUR), rules, notes
        except ValueError:
            return None, rules, notes
    if kind == NABLA_NABLA:
        lam2, mu2 = conjugate_query(lam, mu)
        if len(lam2) <= 2 and len(mu2) <= 2 or _cut_ok(lam2, mu2):
            value, sub, subnotes = schur_ext(lam2, mu2, i, params, engine, kind)
            return value, ["conjugation"] + sub, notes + subnotes
    raise UnsupportedRank(f"no rank-2 reduction for {tuple(lam)}, {tuple(mu)}")


def _cut_ok(lam, mu):
    cut = find_horizontal_cut(lam, mu)
    return cut is not None and all(len(a) <= 2 and len(b) <= 2 for a, b in cut.blocks)


# --- Hecke side --------------------------------------------------------------

def hecke_window(lam, mu, i: int, l: int) -> tuple[bool, list[str], list[str]]:
    """Whether Ext^i(S^lam, S^mu) is known to equal the Schur-side value."""
    lam, mu = as_partition(lam), as_partition(mu)
    if l >= 3 and 0 <= i <= l - 3:
        return True, ["degree-window"], []
    if i == 0 and l == 2:
        if is_row_regular(lam, 2):
            return True, ["l2-hom-row-regular"], []
        if is_column_regular(mu, 2):
            return True, ["l2-hom-column-regular"], []
        return False, [], ["Hom transfer at l=2 needs lam row 2-regular or mu column 2-regular"]
    if i == 1 and l == 3:
        note = "degree 1 > l-3 lies outside the general window; using the l=3 degree-1 identity"
        if len(lam) <= 3 and len(mu) <= 3 and is_row_regular(lam, 3) and is_row_regular(mu, 3):
            return True, ["l3-degree-one"], [note]
        return False, [], [note + ", which needs row 3-regular partitions with at most 3 parts"]
    return False, [], [f"degree {i} outside the transfer window for l={l}"]


def specht_ext(lam, mu, i: int, params: FieldParams, engine: Engine | None = None) -> TransferResult:
    """Ext^i(S^lam, S^mu) over the Hecke algebra, when it transfers."""
    lam, mu = as_partition(lam), as_partition(mu)
    if i < 0:
        raise ValueError("degree must be non-negative")
    ok, rules, caveats = hecke_window(lam, mu, i, params.l)
    if not ok:
        return TransferResult(None, False, rules, caveats, (lam, mu))
    value, more, notes = schur_ext(lam, mu, i, params, engine)
    caveats += notes
    return TransferResult(value, True, rules + more, caveats, (lam, mu))


def conjugate_query(lam, mu) -> tuple[Partition, Partition]:
    """``(mu', lam')``: the pair with the same Ext in every degree."""
    return conjugate(mu), conjugate(lam)


def d_shift_query(lam, mu, s: int, i: int, params: FieldParams, n: int | None = None,
                  engine: Engine | None = None) -> TransferResult:
    """Evaluate the query at the reflected pair ``(D lam, D mu)`` where
    ``D x = (s - x_n, ..., s - x_1)``."""
    lam, mu = as_partition(lam), as_partition(mu)
    n = n or max(len(lam), len(mu), 1)
    lam2 = Partition(d_reflect(lam.padded(n), s))
    mu2 = Partition(d_reflect(mu.padded(n), s))
    caveats = []
    if s <= max(lam.part(0), mu.part(0)):
        caveats.append(f"s={s} must exceed the first parts for the Hecke-side identity")
    ok, rules, more = hecke_window(lam2, mu2, i, params.l)
    caveats += more
    ok = ok and not caveats
    value = None
    if ok:
        value, sub, notes = schur_ext(lam2, mu2, i, params, engine)
        rules = ["d-shift"] + rules + sub
        caveats += notes
    return TransferResult(value, ok, rules, caveats, (lam2, mu2))


def rank_stability_note(lam, mu, n: int, N: int) -> bool:
    """Ext between induced modules computed at rank n holds at any rank N >= n."""
    lam, mu = as_partition(lam), as_partition(mu)
    if n > N:
        raise ValueError("need n <= N")
    if len(lam) > n or len(mu) > n:
        raise ValueError(f"weights do not fit in rank {n}")
    return True


def global_dimension(n: int, r: int, l: int) -> int | None:
    """Global dimension of the q-Schur algebra S(n, r), when known."""
    if l > n:
        return 2 * (n - 1) * (r // l)
    if l == n and r % l == 0:
        return 2 * (l - 1) * (r // l)
    return None


def simple_ext_bounds(lam: Sequence[int], mu: Sequence[int], m: int, l: int) -> tuple[bool, bool]:
    """``(vanishes, one_dimensional)`` for Ext^m(L(lam), L(mu)) and
    Ext^m(nabla(lam), Delta(mu)): zero above d(lam) + d(mu), and a copy of
    the field exactly there for interior weights in one block."""
    lam, mu = Weight(lam), Weight(mu)
    total = d_value(lam, l) + d_value(mu, l)
    top = (
        m == total
        and is_interior(lam, l)
        and is_interior(mu, l)
        and same_block_candidate(lam, mu, l)
    )
    return m > total, top
