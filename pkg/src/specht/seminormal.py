"""Contents, semisimplicity, and seminormal matrix representations of Specht modules."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Any

from . import linalg
from .arith import Field, RationalFunctionField, quantum_integer
from .tableaux import (
    Multipartition,
    StandardTableau,
    multipartitions,
    restrict_tableau,
    restriction_partition,
    standard_tableaux,
)


class NotSemisimpleError(ValueError):
    """Two distinct standard tableaux share a content vector."""

    def __init__(self, witness: tuple[StandardTableau, StandardTableau]):
        s, t = witness
        super().__init__(f"contents do not separate {s} and {t}")
        self.witness = witness


@dataclass(frozen=True)
class ParamSet:
    """Level, multicharge and ground field; the cyclotomic parameters are derived.

    ``Q_l = [charge_l]_xi + shifts_l``. The shifts are zero except in the
    degenerate deformation used to reach non-separated charges with xi^2 = 1.
    """

    charge: tuple[int, ...]
    field: Field = field(default_factory=RationalFunctionField)
    xi: Any = None
    shifts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "charge", tuple(int(k) for k in self.charge))
        if not self.charge:
            raise ValueError("level must be at least 1")
        if self.xi is None:
            object.__setattr__(self, "xi", self.field.xi)
        if self.shifts and len(self.shifts) != len(self.charge):
            raise ValueError("one shift per component")

    @property
    def level(self) -> int:
        return len(self.charge)

    @cached_property
    def _qints(self) -> dict[int, Any]:
        return {}

    def qint(self, k: int):
        cache = self._qints
        if k not in cache:
            cache[k] = quantum_integer(k, self.xi)
        return cache[k]

    @cached_property
    def xi_inverse(self):
        return self.field.one / self.xi

    @cached_property
    def Q(self) -> tuple:
        out = [self.qint(k) for k in self.charge]
        if self.shifts:
            out = [q + s for q, s in zip(out, self.shifts)]
        return tuple(out)

    def content_of_node(self, node) -> Any:
        l, r, c = node
        d = c - r
        if self.shifts:
            return self.xi ** (2 * d) * self.Q[l - 1] + self.qint(d)
        return self.qint(self.charge[l - 1] + d)

    def describe(self) -> dict:
        return {"charge": list(self.charge), **self.field.describe()}


def content(t: StandardTableau, k: int, params: ParamSet):
    """c_k(t) = xi^(2(c-r)) Q_l + [c-r]_xi where k sits at (l, r, c)."""
    if not 1 <= k <= t.size:
        raise ValueError(f"k={k} out of range")
    node = t.position(k)
    l, r, c = node
    d = c - r
    return params.xi ** (2 * d) * params.Q[l - 1] + params.qint(d)


def content_vector(t: StandardTableau, params: ParamSet) -> tuple:
    return tuple(params.content_of_node(node) for node in t.node_sequence)


def poincare_polynomial(n: int, params: ParamSet):
    xi = params.xi
    out = params.field.one
    for k in range(1, n + 1):
        out = out * params.qint(k)
    Q = params.Q
    for k in range(params.level):
        for l in range(k + 1, params.level):
            for m in range(-n + 1, n):
                out = out * (xi ** (2 * m) * Q[k] + params.qint(m) - Q[l])
    return out


@dataclass(frozen=True)
class Separation:
    ok: bool
    witness: tuple[StandardTableau, StandardTableau] | None = None

    def __bool__(self):
        return self.ok


@lru_cache(maxsize=256)
def contents_separate(n: int, params: ParamSet) -> Separation:
    """Whether content vectors tell all standard tableaux of size n apart."""
    seen: dict[tuple, StandardTableau] = {}
    for lam in multipartitions(n, params.level):
        for t in standard_tableaux(lam):
            key = content_vector(t, params)
            if key in seen:
                return Separation(False, (seen[key], t))
            seen[key] = t
    return Separation(True)


# --------------------------------------------------------------------------
# Matrix modules


@dataclass
class HeckeModule:
    """Generator matrices of a right module, acting on row vectors."""

    shape: Multipartition
    basis: tuple[StandardTableau, ...]
    params: ParamSet
    T: list  # T[r-1] is the matrix of T_r
    L: list  # L[k-1] is the matrix of L_k

    @property
    def field(self) -> Field:
        return self.params.field

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.shape.size

    @cached_property
    def index(self) -> dict[StandardTableau, int]:
        return {t: i for i, t in enumerate(self.basis)}

    def restricted_generators(self) -> list[tuple[str, list]]:
        """Generators of the subalgebra H_{n-1}: T_1..T_{n-2}, L_1..L_{n-1}."""
        n = self.n
        gens = [(f"T{r}", self.T[r - 1]) for r in range(1, n - 1)]
        gens += [(f"L{k}", self.L[k - 1]) for k in range(1, n)]
        return gens

    def generators(self) -> list[tuple[str, list]]:
        gens = [(f"T{r}", self.T[r - 1]) for r in range(1, self.n)]
        gens += [(f"L{k}", self.L[k - 1]) for k in range(1, self.n + 1)]
        return gens


@dataclass
class SeminormalModule(HeckeModule):
    pass


def _dominates_swap(t: StandardTableau, r: int) -> bool:
    """``t ⊳ t(r, r+1)``: r sits in an earlier component or a higher row than r+1."""
    a, b = t.position(r), t.position(r + 1)
    return (a.comp, a.row) < (b.comp, b.row)


def seminormal_coefficients(t: StandardTableau, r: int, params: ParamSet):
    """``(a_r(t), alpha_r(t), v)`` where ``f_t T_r = a f_t + alpha f_v``.

    ``alpha`` is 1 when t dominates v and otherwise given by the closed formula
    in the contents of r in t and in v; ``v`` is ``None`` if t(r,r+1) is not standard.
    """
    xi, xi_inv = params.xi, params.xi_inverse
    c_r = params.content_of_node(t.position(r))
    c_r1 = params.content_of_node(t.position(r + 1))
    diff = c_r1 - c_r
    if params.field.is_zero(diff):
        raise NotSemisimpleError((t, t))
    a = (params.field.one + (xi - xi_inv) * c_r1) / diff
    v = t.swap(r)
    if v is None:
        return a, params.field.zero, None
    if _dominates_swap(t, r):
        return a, params.field.one, v
    x, y = c_r, c_r1  # c_r(v) = c_{r+1}(t)
    one = params.field.one
    alpha = (one - xi_inv * x + xi * y) * (one + xi * x - xi_inv * y) / ((x - y) * (y - x))
    return a, alpha, v


def alpha_from_quadratic(t: StandardTableau, r: int, params: ParamSet):
    """The coefficient forced by (T_r + xi^-1)(T_r - xi) = 0 given alpha_r(v) = 1."""
    a_t, _, v = seminormal_coefficients(t, r, params)
    a_v, _, _ = seminormal_coefficients(v, r, params)
    return params.field.one + a_t * a_v


def build_seminormal(lam: Multipartition, params: ParamSet, *, check: bool = True) -> SeminormalModule:
    if check:
        sep = contents_separate(lam.size, params)
        if not sep:
            raise NotSemisimpleError(sep.witness)
    fld = params.field
    basis = standard_tableaux(lam)
    index = {t: i for i, t in enumerate(basis)}
    d, n = len(basis), lam.size
    L = []
    for k in range(1, n + 1):
        mat = linalg.zeros(fld, d)
        for i, t in enumerate(basis):
            mat[i][i] = params.content_of_node(t.position(k))
        L.append(mat)
    T = []
    for r in range(1, n):
        mat = linalg.zeros(fld, d)
        for i, t in enumerate(basis):
            a, alpha, v = seminormal_coefficients(t, r, params)
            mat[i][i] = a
            if v is not None:
                mat[i][index[v]] = alpha
        T.append(mat)
    return SeminormalModule(lam, basis, params, T, L)


# --------------------------------------------------------------------------
# Relations


@dataclass
class RelationVerdict:
    ok: bool
    failures: list[str] = field(default_factory=list)

    @property
    def first_failure(self) -> str | None:
        return self.failures[0] if self.failures else None

    def __bool__(self):
        return self.ok


def relation_checks(M: HeckeModule):
    """Yield ``(name, lhs, rhs)`` for every defining relation."""
    fld = M.field
    p = M.params
    mul = lambda a, b: linalg.matmul(fld, a, b)  # noqa: E731
    d, n = M.dim, M.n
    T, L = M.T, M.L
    zero = linalg.zeros(fld, d)
    if n >= 1:
        prod = linalg.identity(fld, d)
        for q in p.Q:
            prod = mul(prod, linalg.add_scalar(fld, L[0], -q))
        yield "cyclotomic: prod_l (L1 - Q_l) = 0", prod, zero
    for r in range(1, n):
        lhs = mul(linalg.add_scalar(fld, T[r - 1], p.xi_inverse), linalg.add_scalar(fld, T[r - 1], -p.xi))
        yield f"quadratic: (T{r} + xi^-1)(T{r} - xi) = 0", lhs, zero
    for r in range(1, n):
        rhs = linalg.add(mul(mul(T[r - 1], L[r - 1]), T[r - 1]), T[r - 1])
        yield f"L{r + 1} = T{r} L{r} T{r} + T{r}", L[r], rhs
    for r in range(1, n + 1):
        for t in range(r + 1, n + 1):
            yield f"L{r} L{t} = L{t} L{r}", mul(L[r - 1], L[t - 1]), mul(L[t - 1], L[r - 1])
    for r in range(1, n):
        for s in range(r + 2, n):
            yield f"T{r} T{s} = T{s} T{r}", mul(T[r - 1], T[s - 1]), mul(T[s - 1], T[r - 1])
    for s in range(1, n - 1):
        a, b = T[s - 1], T[s]
        yield f"braid T{s} T{s + 1} T{s} = T{s + 1} T{s} T{s + 1}", mul(mul(a, b), a), mul(mul(b, a), b)
    for r in range(1, n):
        for t in range(1, n + 1):
            if t not in (r, r + 1):
                yield f"T{r} L{t} = L{t} T{r}", mul(T[r - 1], L[t - 1]), mul(L[t - 1], T[r - 1])


def verify_relations(M: HeckeModule, exhaustive: bool = False) -> RelationVerdict:
    failures = []
    for name, lhs, rhs in relation_checks(M):
        if not linalg.equal(M.field, lhs, rhs):
            failures.append(name)
            if not exhaustive:
                break
    return RelationVerdict(not failures, failures)


# --------------------------------------------------------------------------
# Semisimple branching


@dataclass
class BlockDecomposition:
    shape: Multipartition
    blocks: list[tuple[Multipartition, list[int]]]
    ok: bool
    failures: list[str] = field(default_factory=list)

    @property
    def summands(self) -> list[tuple[Multipartition, int]]:
        return [(mu, len(idx)) for mu, idx in self.blocks]


def semisimple_restriction(M: HeckeModule, small: dict[Multipartition, HeckeModule] | None = None) -> BlockDecomposition:
    """Check that restriction to H_{n-1} splits entry-exactly along f_t -> f_{t↓}."""
    lam, fld = M.shape, M.field
    n = lam.size
    parts = restriction_partition(lam)
    blocks = [(mu, [M.index[t] for t in tabs]) for mu, tabs in parts.items()]
    if n == 0:
        return BlockDecomposition(lam, [], True)
    block_of = {}
    for b, (_, idx) in enumerate(blocks):
        for i in idx:
            block_of[i] = b
    if small is None:
        small = {mu: build_seminormal(mu, M.params) for mu in parts}
    failures = []
    restricted = {t: restrict_tableau(t, n - 1) for t in M.basis}
    small_gens = {mu: dict(S.generators()) for mu, S in small.items()}
    for name, mat in M.restricted_generators():
        for i, row in enumerate(mat):
            for j, x in enumerate(row):
                if block_of[i] != block_of[j]:
                    if not fld.is_zero(x):
                        failures.append(f"{name}: leakage from {M.basis[i]} to {M.basis[j]}")
                    continue
                mu = blocks[block_of[i]][0]
                S = small[mu]
                y = small_gens[mu][name][S.index[restricted[M.basis[i]]]][S.index[restricted[M.basis[j]]]]
                if not fld.is_zero(x - y):
                    failures.append(f"{name}: entry ({M.basis[i]}, {M.basis[j]}) differs from S^{mu}")
    return BlockDecomposition(lam, blocks, not failures, failures)
