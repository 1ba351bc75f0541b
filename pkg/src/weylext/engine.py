"""Memoized recursion for dim Ext^m between rank-2 induced and simple modules.

Convention: a nonzero Ext(nabla(lam), nabla(mu)) needs mu <= lam in the
dominance order, i.e. the first argument dominates.

After twisting by a power of the determinant every pair becomes
``lam = (c, 0)``, ``mu = (c - e, e)``.  Writing ``c = L*a + i`` with L the
current modulus, three shapes cover every linked pair:

* ``e = i + 1 (mod L)`` and ``i <= L - 2`` (odd ``a - b``): the answer is the
  sum of an ``m - 1`` query at the same modulus and an ``m`` query one
  Frobenius layer down;
* ``e = 0 (mod L)`` and ``i <= L - 2`` (even ``a - b``): degree 0 is the
  Hom classification, higher degrees drop ``m`` by one;
* ``i = L - 1``: a single query one layer down.

The layer below modulus ``l`` has modulus ``p``; in characteristic 0 it is
semisimple and contributes a Kronecker delta.  Modulus 0 below stands for
that semisimple layer.
"""
from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from typing import Sequence

from .alcove import Weight, d_value, same_block_candidate
from .params import FieldParams

NABLA_NABLA = "nabla-nabla"
NABLA_SIMPLE = "nabla-simple"
KINDS = (NABLA_NABLA, NABLA_SIMPLE)

EXACT = "Exact"
ZERO_BY_BLOCK = "ZeroByBlock"
ZERO_BY_BOUND = "ZeroByBound"
UNSUPPORTED = "Unsupported"

CONVENTION = "Ext(nabla(lambda), -) can be nonzero only when mu <= lambda (first argument dominates)"


class UnsupportedQuery(Exception):
    """Raised by helpers that need a definite answer and got Unsupported."""


@dataclass(frozen=True)
class ExtValue:
    """A dimension with its status and the tree of rules that produced it."""

    dim: int
    status: str
    step: dict = field(compare=False, hash=False)
    children: tuple = field(default=(), compare=False, hash=False)

    def __post_init__(self):
        if self.status in (ZERO_BY_BLOCK, ZERO_BY_BOUND) and self.dim:
            raise ValueError("zero status with non-zero dimension")

    @property
    def trace(self) -> list[dict]:
        """Rule applications in pre-order."""
        out, stack = [], [self]
        while stack:
            node = stack.pop()
            out.append(dict(node.step))
            stack.extend(reversed(node.children))
        return out

    def to_json(self, trace: bool = True) -> dict:
        out = {"dim": self.dim, "status": self.status}
        if trace:
            out["trace"] = self.trace
        return out


@dataclass(frozen=True)
class ExtQuery:
    kind: str
    lam: Weight
    mu: Weight
    m: int
    params: FieldParams
    layer: str = "quantum"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}")
        if len(self.lam) != 2 or len(self.mu) != 2:
            raise ValueError("the engine handles rank-2 weights only")
        if sum(self.lam) != sum(self.mu):
            raise ValueError(f"degree mismatch: {tuple(self.lam)} vs {tuple(self.mu)}")
        if self.m < 0:
            raise ValueError("degree m must be non-negative")
        if self.layer not in ("quantum", "classical"):
            raise ValueError(f"unknown layer {self.layer!r}")

    @classmethod
    def from_json(cls, data: dict) -> "ExtQuery":
        params = FieldParams(int(data["p"]), int(data.get("l", data["p"])))
        return cls(
            data.get("kind", NABLA_NABLA),
            Weight(data["lambda"]),
            Weight(data["mu"]),
            int(data["m"]),
            params,
            data.get("layer", "quantum"),
        )

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "m": self.m,
            "p": self.params.p,
            "l": self.params.l,
            "layer": self.layer,
        }


def normalize_pair(lam: Sequence[int], mu: Sequence[int]) -> tuple[Weight, Weight, int]:
    """Twist both weights by det^(-lam_2) so the first becomes (c, 0)."""
    lam, mu = Weight(lam), Weight(mu)
    if len(lam) != 2 or len(mu) != 2:
        raise ValueError("rank-2 weights expected")
    if sum(lam) != sum(mu):
        raise ValueError("degree mismatch")
    t = -lam[1]
    return Weight((lam[0] + t, 0)), Weight((mu[0] + t, mu[1] + t)), t


def _leaf(dim, status, **step):
    return ExtValue(dim, status, step)


def _combine(step, children):
    status = UNSUPPORTED if any(ch.status == UNSUPPORTED for ch in children) else EXACT
    dim = sum(ch.dim for ch in children)
    return ExtValue(dim, status, step, tuple(children))


def _linked(c, e, L):
    return e % L == 0 or (e - c - 1) % L == 0


def _simple_dim(c, L, p):
    c0, rest = c % L, c // L
    if p == 0:
        return (c0 + 1) * (rest + 1)
    dim = c0 + 1
    while rest:
        dim *= rest % p + 1
        rest //= p
    return dim


def _hom_base(c, e, L, p):
    # a map nabla(c, 0) -> nabla(c - e, e) exists iff e = c + 1 mod M for
    # some modulus M = L p^k exceeding e
    if e == 0:
        return 1
    if e < 0:
        return 0
    M = L
    while M <= c + 1:
        if e < M and (c + 1 - e) % M == 0:
            return 1
        if p == 0:
            break
        M *= p
    return 0


class Engine:
    """Memoized Ext engine.  One instance may be shared between threads."""

    def __init__(self, use_cache: bool = True, max_depth: int = 100_000, cache_dir: str | None = None):
        self.use_cache = use_cache
        self.max_depth = max_depth
        self._memo: dict = {}
        self._lock = threading.Lock()
        self._store: dict[str, int] = {}
        self._store_dirty = False
        self.cache_dir = cache_dir
        if cache_dir:
            self._load_store()

    # -- persistent cache ---------------------------------------------------

    def _store_path(self):
        return os.path.join(self.cache_dir, "ext_cache.txt")

    def _load_store(self):
        try:
            with open(self._store_path()) as fh:
                for line in fh:
                    key, sep, val = line.strip().rpartition("=")
                    if sep:
                        self._store[key] = int(val)
        except FileNotFoundError:
            pass

    def save(self) -> None:
        """Write the persistent cache (no-op without a cache directory)."""
        if not self.cache_dir or not self._store_dirty:
            return
        os.makedirs(self.cache_dir, exist_ok=True)
        with self._lock:
            lines = [f"{k}={v}\n" for k, v in sorted(self._store.items())]
        tmp = self._store_path() + ".tmp"
        with open(tmp, "w") as fh:
            fh.writelines(lines)
        os.replace(tmp, self._store_path())
        self._store_dirty = False

    # -- public queries -----------------------------------------------------

    def query(self, q: ExtQuery, want_trace: bool = True) -> ExtValue:
        lam, mu, t = normalize_pair(q.lam, q.mu)
        params = q.params
        L = params.l if q.layer == "quantum" else params.p
        c, e = lam[0], mu[1]
        key = f"{q.kind}|{L}|{params.p}|{c}|{e}|{q.m}"
        if not want_trace and key in self._store:
            return _leaf(self._store[key], EXACT, rule="cache", key=key)
        fn = self._nn if q.kind == NABLA_NABLA else self._ns
        val = fn(c, e, q.m, L, params.p, 0)
        if self.cache_dir and val.status == EXACT:
            with self._lock:
                if self._store.get(key) != val.dim:
                    self._store[key] = val.dim
                    self._store_dirty = True
        if t:
            val = _combine({"rule": "det-twist", "twist": t}, [val])
        return val

    def ext_nabla_nabla(self, lam, mu, m: int, params: FieldParams) -> ExtValue:
        """dim Ext^m(nabla(lam), nabla(mu)) for rank-2 weights."""
        return self.query(ExtQuery(NABLA_NABLA, Weight(lam), Weight(mu), m, params))

    def ext_nabla_simple(self, lam, mu, m: int, params: FieldParams) -> ExtValue:
        """dim Ext^m(nabla(lam), L(mu)) for rank-2 weights."""
        return self.query(ExtQuery(NABLA_SIMPLE, Weight(lam), Weight(mu), m, params))

    def ext_sequence(self, lam, mu, top: int, params: FieldParams, kind: str = NABLA_NABLA) -> list[ExtValue]:
        return [self.query(ExtQuery(kind, Weight(lam), Weight(mu), m, params), want_trace=False) for m in range(top + 1)]

    def euler_check(self, lam, mu, params: FieldParams) -> bool:
        """Alternating sum of Ext dimensions up to the wall-count bound is 0."""
        lam, mu = Weight(lam), Weight(mu)
        if lam == mu:
            raise ValueError("the Euler identity needs distinct weights")
        top = d_value(lam, params.l) - d_value(mu, params.l)
        total = 0
        for m, val in enumerate(self.ext_sequence(lam, mu, top, params)):
            if val.status == UNSUPPORTED:
                raise UnsupportedQuery(f"Ext^{m} unsupported for {tuple(lam)}, {tuple(mu)}")
            total += (-1) ** m * val.dim
        return total == 0

    # -- recursion ----------------------------------------------------------

    def _memoized(self, key, compute):
        if self.use_cache:
            hit = self._memo.get(key)
            if hit is not None:
                return hit
        val = compute()
        if self.use_cache:
            val = self._memo.setdefault(key, val)
        return val

    def _check_depth(self, depth):
        if depth > self.max_depth:
            raise RecursionError("Ext recursion exceeded its depth bound")

    def _nn(self, c, e, m, L, p, depth):
        self._check_depth(depth)
        return self._memoized((NABLA_NABLA, L, p, c, e, m), lambda: self._nn_compute(c, e, m, L, p, depth))

    def _nn_compute(self, c, e, m, L, p, depth):
        if L == 0:
            hit = int(e == 0 and m == 0)
            return _leaf(hit, EXACT, rule="semisimple", m=m)
        if e == 0:
            return _leaf(int(m == 0), EXACT, rule="extvan", m=m, equal=True)
        if e < 0:
            return _leaf(0, EXACT, rule="extvan", m=m, equal=False)
        if not _linked(c, e, L):
            return _leaf(0, ZERO_BY_BLOCK, rule="block", modulus=L)
        bound = c // L - (c - 2 * e) // L
        if m > bound:
            return _leaf(0, ZERO_BY_BOUND, rule="bound", bound=bound, m=m)
        a, i = divmod(c, L)
        down = depth + 1
        if i <= L - 2 and (e - i - 1) % L == 0:
            f = (e - i - 1) // L
            b = a - 1 - 2 * f
            step = {"rule": "Thm6.1-odd", "a": a, "b": b, "i": i, "f": f, "d": e, "m": m, "modulus": L}
            parts = []
            if m >= 1:
                parts.append(self._nn(L * a - i - 2, e - i - 1, m - 1, L, p, down))
            parts.append(self._nn(a - 1, f, m, p, p, down))
            return _combine(step, parts)
        if i <= L - 2:  # e = 0 mod L
            k = e // L
            b = a - 2 * k
            if m == 0:
                return _leaf(_hom_base(c, e, L, p), EXACT, rule="hom-base", a=a, b=b, i=i, d=e, m=0, modulus=L)
            step = {"rule": "Thm6.2-even", "a": a, "b": b, "i": i, "d": e, "m": m, "modulus": L}
            return _combine(step, [self._nn(2 * k * L - i - 2, e - i - 1, m - 1, L, p, down)])
        # i = L - 1, and linkage forces e = 0 mod L
        f = e // L
        b = a - 2 * f
        step = {"rule": "Thm6.3", "a": a, "b": b, "i": i, "f": f, "d": e, "m": m, "modulus": L}
        return _combine(step, [self._nn(a, f, m, p, p, down)])

    def _ns(self, c, e, m, L, p, depth):
        self._check_depth(depth)
        return self._memoized((NABLA_SIMPLE, L, p, c, e, m), lambda: self._ns_compute(c, e, m, L, p, depth))

    def _ns_compute(self, c, e, m, L, p, depth):
        if L == 0:
            return _leaf(int(e == 0 and m == 0), EXACT, rule="semisimple", m=m)
        if e == 0 and m == 0:
            simple = _simple_dim(c, L, p) == c + 1
            return _leaf(int(simple), EXACT, rule="simple-head", c=c, modulus=L)
        if e < 0:
            if m == 0:
                return _leaf(0, EXACT, rule="extvan", m=0, equal=False)
            return _leaf(0, UNSUPPORTED, rule="unsupported", reason="simple target above the induced module", m=m)
        if not _linked(c, e, L):
            return _leaf(0, ZERO_BY_BLOCK, rule="block", modulus=L)
        a, i = divmod(c, L)
        down = depth + 1
        if i <= L - 2 and (e - i - 1) % L == 0:
            f = (e - i - 1) // L
            step = {"rule": "Thm6.5", "a": a, "b": a - 1 - 2 * f, "i": i, "f": f, "d": e, "m": m, "modulus": L}
            parts = []
            if m >= 1:
                parts.append(self._ns(L * a - i - 2, e - i - 1, m - 1, L, p, down))
            parts.append(self._ns(a - 1, f, m, p, p, down))
            return _combine(step, parts)
        if i <= L - 2:
            b = a - 2 * (e // L)
            if m == 0:
                return _leaf(0, EXACT, rule="Thm6.6-at-m0", a=a, b=b, i=i, d=e, m=0, modulus=L)
            step = {"rule": "Thm6.6", "a": a, "b": b, "i": i, "d": e, "m": m, "modulus": L}
            return _combine(step, [self._ns(L * a - i - 2, e - i - 1, m - 1, L, p, down)])
        f = e // L
        step = {"rule": "Thm6.7", "a": a, "b": a - 2 * f, "i": i, "f": f, "d": e, "m": m, "modulus": L}
        return _combine(step, [self._ns(a, f, m, p, p, down)])


_DEFAULT = Engine()


def default_engine() -> Engine:
    return _DEFAULT


def ext_nabla_nabla(lam, mu, m: int, params: FieldParams) -> ExtValue:
    return _DEFAULT.ext_nabla_nabla(lam, mu, m, params)


def ext_nabla_simple(lam, mu, m: int, params: FieldParams) -> ExtValue:
    return _DEFAULT.ext_nabla_simple(lam, mu, m, params)


def euler_check(lam, mu, params: FieldParams) -> bool:
    return _DEFAULT.euler_check(lam, mu, params)


def hom_base_gl2(lam, mu, params: FieldParams) -> int:
    """1 if Hom(nabla(lam), nabla(mu)) is non-zero, else 0 (rank 2)."""
    lam, mu, _ = normalize_pair(lam, mu)
    return _hom_base(lam[0], mu[1], params.l, params.p)


def top_degree(lam, mu, params: FieldParams) -> int:
    """d(lam) - d(mu), the largest degree that can carry a non-zero Ext."""
    return d_value(Weight(lam), params.l) - d_value(Weight(mu), params.l)


def linked(lam, mu, params: FieldParams) -> bool:
    return same_block_candidate(Weight(lam), Weight(mu), params.l)
