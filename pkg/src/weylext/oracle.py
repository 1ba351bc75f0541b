"""Brute-force Hom spaces for rank-one hyperalgebra modules.

``nabla(c)`` is realised as the degree-``c`` symmetric power with basis
``v_k = x^(c-k) y^k``.  Divided powers act by

    F^(r) v_k = [c-k choose r] v_(k+r),    E^(r) v_k = [k choose r] v_(k-r)

so that F sends x^3 to 3 x^2 y.  Classically the binomials are reduced
mod p.  For the quantum case (p = 0, q of order l) we use symmetric
quantum binomials in v with v^2 = q, evaluated in a prime field GF(P)
that contains a primitive 2l-th root of unity.  A Hom space is the
solution space of the linear system "commutes with every E^(r), F^(r)".
"""
from __future__ import annotations

from .kernels import pascal_mod, rank_mod_p
from .params import FieldParams, is_prime

DEFAULT_LIMIT = 512


class _Coefficients:
    """Binomial coefficients in the field attached to ``params``."""

    def __init__(self, params: FieldParams):
        self.params = params
        if params.classical:
            self.modulus = params.p
            self._q = None
        elif params.p == 0:
            self.modulus, self._q = _quantum_field(params.l)
        else:
            raise NotImplementedError(
                "the oracle covers q = 1 in characteristic p and q a root of unity in characteristic 0"
            )
        self._table = [[1]]

    def _grow(self, n):
        if n < len(self._table):
            return
        if self._q is None:
            self._table = pascal_mod(max(n, 2 * len(self._table)), self.modulus)
            return
        P, v = self.modulus, self._q
        vinv = pow(v, P - 2, P)
        table = self._table
        for m in range(len(table), n + 1):
            prev = table[-1]
            row = [1] * (m + 1)
            for k in range(1, m):
                row[k] = (pow(vinv, m - k, P) * prev[k - 1] + pow(v, k, P) * prev[k]) % P
            table.append(row)

    def binom(self, n: int, r: int) -> int:
        if r < 0 or n < r:
            return 0
        self._grow(n)
        return self._table[n][r]


_FIELD_CACHE: dict[int, tuple[int, int]] = {}


def _quantum_field(l: int) -> tuple[int, int]:
    """A prime P = 1 mod 2l just below 2**30 and an element of order 2l."""
    if l in _FIELD_CACHE:
        return _FIELD_CACHE[l]
    order = 2 * l
    P = (2 ** 30 // order) * order + 1
    while not is_prime(P):
        P -= order
    factors = {q for q in range(2, order + 1) if order % q == 0 and is_prime(q)}
    for g in range(2, P):
        v = pow(g, (P - 1) // order, P)
        if all(pow(v, order // q, P) != 1 for q in factors):
            _FIELD_CACHE[l] = (P, v)
            return P, v
    raise RuntimeError("no primitive root found")  # unreachable for prime P


_COEFF_CACHE: dict[FieldParams, _Coefficients] = {}


def _coefficients(params: FieldParams) -> _Coefficients:
    coeffs = _COEFF_CACHE.get(params)
    if coeffs is None:
        coeffs = _COEFF_CACHE.setdefault(params, _Coefficients(params))
    return coeffs


class DualWeylModule:
    """The module nabla(c) with its divided-power action."""

    def __init__(self, c: int, params: FieldParams, limit: int = DEFAULT_LIMIT):
        if c < 0:
            raise ValueError("highest weight must be non-negative")
        if c > limit:
            raise ValueError(f"weight {c} exceeds the oracle limit {limit}")
        self.c = c
        self.params = params
        self.coeffs = _coefficients(params)

    @property
    def dim(self) -> int:
        return self.c + 1

    def f_coeff(self, k: int, r: int) -> int:
        return self.coeffs.binom(self.c - k, r)

    def e_coeff(self, k: int, r: int) -> int:
        return self.coeffs.binom(k, r)

    def matrix(self, kind: str, r: int) -> list[list[int]]:
        """Matrix of E^(r) or F^(r); column k is the image of v_k."""
        n = self.dim
        mat = [[0] * n for _ in range(n)]
        for k in range(n):
            if kind == "F" and k + r < n:
                mat[k + r][k] = self.f_coeff(k, r)
            elif kind == "E" and k - r >= 0:
                mat[k - r][k] = self.e_coeff(k, r)
            elif kind not in ("E", "F"):
                raise ValueError(f"unknown generator {kind!r}")
        return mat

    def simple_basis(self) -> list[int]:
        """Indices k with v_k in the simple socle L(c)."""
        return [k for k in range(self.dim) if self.coeffs.binom(self.c, k)]

    def to_json(self) -> dict:
        return {
            "c": self.c,
            "p": self.params.p,
            "l": self.params.l,
            "modulus": self.coeffs.modulus,
            "E": {str(r): self.matrix("E", r) for r in range(1, self.dim)},
            "F": {str(r): self.matrix("F", r) for r in range(1, self.dim)},
        }


def _hom_dim(c: int, c2: int, params: FieldParams, simple: bool, limit: int) -> int:
    src = DualWeylModule(c, params, limit)
    dst = DualWeylModule(c2, params, limit)
    if (c - c2) % 2:
        return 0
    e = (c - c2) // 2
    # phi(v_k) = x_k w_(k-e)
    ks = range(max(0, e), min(c, c2 + e) + 1)
    if simple:
        allowed = set(dst.simple_basis())
        ks = [k for k in ks if k - e in allowed]
    col = {k: i for i, k in enumerate(ks)}
    if not col:
        return 0
    rows = []
    for r in range(1, max(c, c2) + 1):
        for k in range(c + 1):
            for lhs_k, lhs, rhs in (
                (k + r, src.f_coeff(k, r) if k + r <= c else 0, dst.f_coeff(k - e, r) if 0 <= k - e <= c2 else 0),
                (k - r, src.e_coeff(k, r) if k >= r else 0, dst.e_coeff(k - e, r) if 0 <= k - e <= c2 else 0),
            ):
                row = {}
                if lhs and lhs_k in col:
                    row[col[lhs_k]] = lhs
                if rhs and k in col:
                    row[col[k]] = row.get(col[k], 0) - rhs
                if any(row.values()):
                    dense = [0] * len(col)
                    for j, x in row.items():
                        dense[j] = x
                    rows.append(dense)
    return len(col) - rank_mod_p(rows, len(col), src.coeffs.modulus)


def oracle_hom_dim(c: int, c2: int, params: FieldParams, limit: int = DEFAULT_LIMIT) -> int:
    """dim Hom(nabla(c), nabla(c2)) computed by linear algebra."""
    return _hom_dim(c, c2, params, False, limit)


def oracle_hom_to_simple(c: int, c2: int, params: FieldParams, limit: int = DEFAULT_LIMIT) -> int:
    """dim Hom(nabla(c), L(c2)) computed by linear algebra."""
    return _hom_dim(c, c2, params, True, limit)


def simple_dim(c: int, params: FieldParams) -> int:
    """dim L(c) from the base-(l, p, p, ...) digits of c."""
    c0, rest = c % params.l, c // params.l
    if params.p == 0:
        return (c0 + 1) * (rest + 1)
    dim = c0 + 1
    while rest:
        dim *= rest % params.p + 1
        rest //= params.p
    return dim


def is_nabla_simple(c: int, params: FieldParams) -> bool:
    return simple_dim(c, params) == c + 1
