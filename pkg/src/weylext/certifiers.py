"""Existence certificates for non-zero maps between Specht modules.

Two searches are provided.  The local-reflection search moves ``d`` boxes
between two rows under a prime-power modulus.  The tableau-coefficient
search handles pairs where ``s`` boxes leave the first row and form a new
bottom row: it looks for integers ``gamma`` and ``e`` such that some nice
tableau has coefficient ``f`` not divisible by ``p**e`` while every
coefficient ``g`` is.

Tableaux are stored as multiplicity matrices: ``mult[j][i]`` counts the
entries ``i + 1`` in row ``j + 1``.  Rows and entries are 0-based in code
and 1-based in the formulas quoted in docstrings.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Sequence

from .alcove import is_interior, is_strictly_dominant
from .params import falling, is_prime, rising, valuation
from .partitions import Composition, Partition, as_partition, conjugate, dominates, is_row_regular, mullineux, nu_composition


# --- Tableaux ----------------------------------------------------------------

@dataclass(frozen=True)
class Tableau:
    shape: Partition
    content: Composition
    mult: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.mult) != len(self.shape):
            raise ValueError("one multiplicity row per row of the shape")
        for j, row in enumerate(self.mult):
            if len(row) != len(self.content) or any(x < 0 for x in row):
                raise ValueError(f"bad multiplicity row {row}")
            if sum(row) != self.shape[j]:
                raise ValueError(f"row {j + 1} has the wrong length")
        for i, total in enumerate(self.content):
            if sum(row[i] for row in self.mult) != total:
                raise ValueError(f"entry {i + 1} occurs the wrong number of times")

    def rows(self) -> list[list[int]]:
        """The unique row-weakly-increasing filling."""
        return [[i + 1 for i, x in enumerate(row) for _ in range(x)] for row in self.mult]

    def above(self, h: int) -> int:
        """``T_h``: entries greater than ``h`` in row ``h`` (1-based)."""
        if h > len(self.mult):
            return 0
        return sum(self.mult[h - 1][h:])

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "content": list(self.content),
            "mult": [list(r) for r in self.mult],
            "rows": self.rows(),
        }

    def __str__(self) -> str:
        return "|".join("".join(str(x) for x in row) for row in self.rows())


def enumerate_pseudo_standard(lam: Sequence[int], nu: Sequence[int]) -> Iterator[Tableau]:
    """Multiplicity matrices of shape ``lam`` and type ``nu`` where entry i
    may sit in row j only if i = j or lam_i < lam_j."""
    lam = as_partition(lam)
    nu = Composition(nu)
    if lam.size != nu.size:
        raise ValueError(f"sizes differ: {lam.size} vs {nu.size}")
    nrows, ncols = len(lam), len(nu)
    allowed = [[i == j or lam.part(i) < lam[j] for i in range(ncols)] for j in range(nrows)]
    caps = list(nu)
    mat = [[0] * ncols for _ in range(nrows)]

    def fill(j, i, left):
        if i == ncols:
            if left:
                return
            if j + 1 == nrows:
                if not any(caps):
                    yield Tableau(lam, nu, tuple(tuple(r) for r in mat))
                return
            yield from fill(j + 1, 0, lam[j + 1])
            return
        if not allowed[j][i]:
            yield from fill(j, i + 1, left)
            return
        room = sum(caps[k] for k in range(i + 1, ncols) if allowed[j][k])
        for x in range(min(left, caps[i]), max(left - room, 0) - 1, -1):
            mat[j][i] = x
            caps[i] -= x
            yield from fill(j, i + 1, left - x)
            caps[i] += x
        mat[j][i] = 0

    if nrows == 0:
        if not any(nu):
            yield Tableau(lam, nu, ())
        return
    yield from fill(0, 0, lam[0])


# --- Canonical one-move pairs ------------------------------------------------

@dataclass(frozen=True)
class ShapeData:
    """``lam = (l_0 + s, l_1^(m_1 - 1), ...)`` and ``mu = (l_0, l_1^(m_1 - 1), ..., s)``.

    ``ls = (l_0, ..., l_r)`` and ``ms = (m_0, ..., m_r)`` with ``m_0 = 1``.
    """

    s: int
    ls: tuple[int, ...]
    ms: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.ls) - 1

    def l(self, i: int) -> int:
        return self.ls[i] if i <= self.r else self.s

    def m(self, i: int) -> int:
        if i < 0:
            return 0
        return self.ms[i] if i <= self.r else self.ms[-1] + 1

    def partitions(self) -> tuple[Partition, Partition]:
        rows = []
        for i in range(1, self.r + 1):
            rows += [self.ls[i]] * (self.ms[i] - self.ms[i - 1])
        lam = Partition([self.ls[0] + self.s] + rows)
        mu = Partition([self.ls[0]] + rows + [self.s])
        return lam, mu

    def to_json(self) -> dict:
        return {"s": self.s, "l": list(self.ls), "m": list(self.ms)}


def canonicalize_fm_pair(lam: Sequence[int], mu: Sequence[int]) -> ShapeData | None:
    """Shape data when ``mu`` comes from ``lam`` by moving ``s > 0`` boxes
    from the first row to a new last row; None otherwise."""
    lam, mu = as_partition(lam), as_partition(mu)
    k = len(lam)
    if k == 0 or len(mu) != k + 1 or lam.size != mu.size:
        return None
    if tuple(lam[1:]) != tuple(mu[1:k]):
        return None
    s = mu[k]
    if s <= 0 or lam[0] - s != mu[0]:
        return None
    ls, ms = [mu[0]], [1]
    for j in range(1, k):
        if lam[j] == ls[-1] and len(ls) > 1:
            ms[-1] = j + 1
        else:
            ls.append(lam[j])
            ms.append(j + 1)
    return ShapeData(s, tuple(ls), tuple(ms))


def n_value(T: Tableau, data: ShapeData, i: int) -> int:
    """``n_i(T)``: the sum of ``T_h`` over rows ``m_(i-1) + 1 .. m_i``."""
    return sum(T.above(h) for h in range(data.m(i - 1) + 1, data.m(i) + 1))


def is_nice(T: Tableau, data: ShapeData) -> bool:
    """For each ``i >= 1``, rows of length ``l_i`` hold at most
    ``l_i - l_(i+1)`` entries greater than ``m_i``; after the last group the
    next row length is taken to be 0."""
    for i in range(1, data.r + 1):
        nxt = data.ls[i + 1] if i < data.r else 0
        rows = range(data.m(i - 1), data.m(i))  # 0-based rows of group i
        count = sum(sum(T.mult[j][data.m(i):]) for j in rows)
        if count > data.ls[i] - nxt:
            return False
    return True


def c_coeff(T: Tableau, gamma: Sequence[int], data: ShapeData, i: int) -> int:
    prod = falling(gamma[i - 1], data.s - n_value(T, data, i))
    for h in range(data.m(i - 1) + 1, data.m(i) + 1):
        prod *= factorial(T.above(h))
    return prod


def f_coeff(T: Tableau, gamma: Sequence[int], data: ShapeData) -> int:
    """``f(T)``, the product of ``c_i(T)`` over ``i = 1..r``."""
    if len(gamma) != data.r:
        raise ValueError(f"need {data.r} gamma values")
    out = 1
    for i in range(1, data.r + 1):
        out *= c_coeff(T, gamma, data, i)
    return out


def _gamma(gamma, data, i):
    if i == 0:
        return data.s
    if i > data.r:
        return 0
    return gamma[i - 1]


def _shift(gamma, data, b):
    return (
        data.l(b) - data.l(b + 1) + data.m(b + 1) - data.m(b)
        + _gamma(gamma, data, b) - _gamma(gamma, data, b + 1)
    )


def g_coeff_split(S: Tableau, b: int, t: int, gamma: Sequence[int], data: ShapeData) -> Fraction:
    """``g`` by the three-branch definition (b = 0, 0 < b < r, b = r)."""
    if b == 0:
        return Fraction(f_coeff(S, gamma, data) * comb_rising(_shift(gamma, data, 0), t))
    others = 1
    for i in range(1, data.r + 1):
        if i != b:
            others *= c_coeff(S, gamma, data, i)
    mb = data.m(b)
    local = falling(gamma[b - 1], data.s - n_value(S, data, b) - t) * factorial(S.above(mb) + t)
    for j in range(data.m(b - 1) + 1, mb):
        local *= factorial(S.above(j))
    return Fraction(others * comb_rising(_shift(gamma, data, b), t) * local)


def g_coeff_closed(S: Tableau, b: int, t: int, gamma: Sequence[int], data: ShapeData) -> Fraction | None:
    """``g`` by the single closed formula; None when its denominator vanishes."""
    mb = data.m(b)
    den = falling(_gamma(gamma, data, b) + n_value(S, data, b) + t - data.s, t)
    if den == 0:
        return None
    num = f_coeff(S, gamma, data) * comb_rising(_shift(gamma, data, b), t) * falling(S.above(mb) + t, t)
    return Fraction(num, den)


def g_coeff(S: Tableau, b: int, t: int, gamma: Sequence[int], data: ShapeData) -> Fraction:
    """``g`` for a tableau of type ``nu(mu, m_b, t)``, checked against the
    closed formula wherever that is defined."""
    value = g_coeff_split(S, b, t, gamma, data)
    alt = g_coeff_closed(S, b, t, gamma, data)
    if alt is not None and alt != value:
        raise ArithmeticError(f"g formulas disagree for {S} (b={b}, t={t}, gamma={tuple(gamma)})")
    return value


def comb_rising(x: int, t: int) -> int:
    """``x`` rising ``t`` divided by ``t!``; always an integer."""
    out = Fraction(rising(x, t), factorial(t))
    assert out.denominator == 1
    return out.numerator


def gamma_candidates(data: ShapeData, p: int, window: int = 8) -> Iterator[tuple[int, ...]]:
    """Integer vectors obeying the forced residues mod ``p``, lifted by
    ``0 .. window - 1`` multiples of ``p``; empty if ``l_0 + m_r`` is not
    divisible by ``p``."""
    if p < 3:
        raise ValueError("p must be at least 3")
    if (data.ls[0] + data.ms[-1]) % p:
        return
    base = [(data.ls[0] - data.ls[i] + data.ms[i] + data.s - 1) % p for i in range(1, data.r + 1)]
    lifts = [[res + k * p for k in range(window)] for res in base]
    yield from itertools.product(*lifts)


@dataclass(frozen=True)
class FMCertificate:
    e: int
    gamma: tuple[int, ...]
    witness: Tableau
    data: ShapeData
    p: int

    def __post_init__(self):
        d, p = self.data, self.p
        if self.e < 1:
            raise ValueError("e must be positive")
        if (d.ls[0] + d.ms[-1]) % p:
            raise ValueError("block congruence l_0 + m_r = 0 mod p fails")
        for i in range(1, d.r + 1):
            if (self.gamma[i - 1] - (d.ls[0] - d.ls[i] + d.ms[i] + d.s - 1)) % p:
                raise ValueError(f"gamma_{i} has the wrong residue")
        if valuation(f_coeff(self.witness, self.gamma, d), p) >= self.e:
            raise ValueError("witness coefficient is divisible by p^e")

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "gamma": list(self.gamma),
            "p": self.p,
            "shape_data": self.data.to_json(),
            "witness": self.witness.to_json(),
        }


def _g_ok(val: Fraction, e: int, p: int) -> bool:
    return val.denominator == 1 and valuation(val.numerator, p) >= e


def fm_side_conditions(lam, mu, data: ShapeData) -> list[tuple[int, int, list[Tableau]]]:
    """All (b, t, tableaux of type nu(mu, m_b, t)) entering condition (ii)."""
    mu = as_partition(mu)
    out = []
    for b in range(data.r + 1):
        d = data.m(b)
        for t in range(1, mu.part(d) + 1):
            nu = nu_composition(mu.padded(len(mu)), d, t)
            out.append((b, t, list(enumerate_pseudo_standard(lam, nu))))
    return out


def fayers_martin_certificate(lam, mu, p: int, window: int = 8, emax: int = 16) -> FMCertificate | None:
    """Search for (gamma, e) certifying Hom(S^lam, S^mu) != 0.

    For each gamma candidate the best exponent is one more than the least
    p-adic valuation of f over nice tableaux; it is accepted when every g
    coefficient is an integer divisible by p**e.  None proves nothing.
    """
    if p < 3 or not is_prime(p):
        raise ValueError("p must be a prime of at least 3")
    data = canonicalize_fm_pair(lam, mu)
    if data is None:
        raise ValueError(f"{tuple(lam)}, {tuple(mu)} is not a one-move pair")
    lam, mu = as_partition(lam), as_partition(mu)
    nice = [T for T in enumerate_pseudo_standard(lam, mu) if is_nice(T, data)]
    if not nice:
        return None
    sides = None
    for gamma in gamma_candidates(data, p, window):
        best, witness = None, None
        for T in nice:
            v = valuation(f_coeff(T, gamma, data), p)
            if best is None or v < best:
                best, witness = v, T
        if best == float("inf"):
            continue
        e = int(best) + 1
        if e > emax:
            continue
        if sides is None:
            sides = fm_side_conditions(lam, mu, data)
        if all(_g_ok(g_coeff(S, b, t, gamma, data), e, p) for b, t, tabs in sides for S in tabs):
            return FMCertificate(e, tuple(gamma), witness, data, p)
    return None


# --- Local reflections -------------------------------------------------------

@dataclass(frozen=True)
class CPCertificate:
    i: int
    j: int
    a: int
    m: int
    d: int
    modulus: int

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "a": self.a, "m": self.m, "d": self.d, "modulus": self.modulus}


def carter_payne_certificate(lam, mu, p: int, l: int | None = None) -> CPCertificate | None:
    """Find rows i > j (1-based), a >= 1 and m with

        d = lam_i - lam_j - i + j - m * M,   0 < d < M,

    such that moving ``d`` boxes from row i up to row j of ``lam`` gives
    ``mu``.  Classically ``M = p**a``; when ``l != p`` only adjacent rows are
    allowed and ``M = l * p**(a - 1)``.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    l = p if l is None else l
    if lam.size != mu.size or lam == mu:
        return None
    n = max(len(lam), len(mu))
    diff = [mu.part(k) - lam.part(k) for k in range(n)]
    changed = [k for k in range(n) if diff[k]]
    if len(changed) != 2:
        return None
    j0, i0 = changed
    d = diff[j0]
    if d <= 0 or diff[i0] != -d:
        return None
    i, j = i0 + 1, j0 + 1
    if l != p and i != j + 1:
        return None
    h = lam.part(i0) - lam.part(j0) - i + j
    a = 1
    while True:
        M = p ** a if l == p else l * p ** (a - 1)
        if d < M and (h - d) % M == 0:
            return CPCertificate(i, j, a, (h - d) // M, d, M)
        if M > abs(h - d) and M > d:
            return None
        a += 1


# --- Predicates from the Ext bounds ------------------------------------------

def wen_dims(lam: Sequence[int], d: int, i: int, l: int) -> tuple[int, int]:
    """Dimensions of Ext^i(L(w.lam), nabla(lam)) and Ext^i(nabla(w.lam), nabla(lam))
    for w a product of ``d`` commuting reflections: ``(int(i == d), C(d, i))``."""
    if not is_strictly_dominant(lam, l):
        raise ValueError(f"{tuple(lam)} is not strictly dominant for l={l}")
    if not is_interior(lam, l):
        raise ValueError(f"{tuple(lam)} lies on a wall for l={l}")
    if not 0 <= d <= len(lam) // 2:
        raise ValueError(f"d={d} outside 0..{len(lam) // 2}")
    if not 0 <= i <= d:
        raise ValueError(f"degree {i} outside 0..{d}")
    return int(i == d), comb(d, i)


def kulkarni_bound(lam: Sequence[int]) -> int:
    """Upper bound for dim Hom(nabla(r, 0, ..., 0), nabla(lam))."""
    as_partition(lam)
    return 1


def kleshchev_sheth_condition(lam, mu, l: int) -> bool:
    """True when the conjugate Mullineux image of ``mu`` is not dominated by
    ``lam``; then Ext^1(D^lam, D^mu) agrees with Hom(rad S^lam, D^mu)."""
    if l < 4:
        raise ValueError("the criterion needs l >= 4")
    lam, mu = as_partition(lam), as_partition(mu)
    if not (is_row_regular(lam, l) and is_row_regular(mu, l)):
        raise ValueError("both partitions must be l-row-regular")
    target = conjugate(mullineux(mu, l))
    return not dominates(lam, target)
