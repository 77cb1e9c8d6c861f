"""Restriction filtrations of specialized Specht modules and their certificates.

For removable nodes A_1 > ... > A_z of lam and mu_r = lam - A_r, layer r is
spanned by the Murphy vectors m_t with Shape(t↓) ⊵ mu_r. Each layer is checked
to be stable under T_1..T_{n-2}, L_1..L_{n-1}, and the quotient of layer r by
layer r-1 is compared with the Specht module of mu_r through m_t -> m_{t↓}.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .arith import Field, format_e
from .murphy import (
    ConfigurationError,
    Deformation,
    SpechtModule,
    choose_deformation,
    murphy_action,
    specialize_module,
)
from .seminormal import verify_relations
from .tableaux import (
    Multipartition,
    Node,
    dominates,
    removable_nodes,
    restrict_tableau,
)


@dataclass(frozen=True)
class Filtration:
    shape: Multipartition
    nodes: tuple[Node, ...]  # A_1 > ... > A_z
    mus: tuple[Multipartition, ...]
    layers: tuple[tuple[int, ...], ...]  # basis indices of layer r, increasing
    field: Field

    @property
    def length(self) -> int:
        return len(self.nodes)

    def block(self, r: int) -> tuple[int, ...]:
        """Indices in layer r but not in layer r-1 (r is 1-based)."""
        prev = set(self.layers[r - 2]) if r > 1 else set()
        return tuple(i for i in self.layers[r - 1] if i not in prev)

    def with_layer(self, r: int, indices) -> "Filtration":
        layers = list(self.layers)
        layers[r - 1] = tuple(sorted(indices))
        return Filtration(self.shape, self.nodes, self.mus, tuple(layers), self.field)


def build_filtration(S: SpechtModule) -> Filtration:
    lam = S.shape
    nodes = tuple(removable_nodes(lam))
    mus = tuple(lam.remove(A) for A in nodes)
    n = lam.size
    down = [restrict_tableau(t, n - 1).shape for t in S.basis]
    layers = tuple(tuple(i for i, nu in enumerate(down) if dominates(nu, mu)) for mu in mus)
    return Filtration(lam, nodes, mus, layers, S.field)


@dataclass
class SubmoduleVerdict:
    ok: bool
    escapes: list[tuple[str, int]] = field(default_factory=list)  # (generator, basis index)

    def __bool__(self):
        return self.ok


class _Span:
    """Row-reduced spanning set supporting exact membership tests."""

    def __init__(self, fld: Field, vectors):
        self.field = fld
        self.rows, self.pivots = linalg.rref(fld, [list(v) for v in vectors]) if vectors else ([], [])
        self.rows = self.rows[: len(self.pivots)]

    def reduce(self, vec):
        fld = self.field
        out = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = out[p]
            if not fld.is_zero(c):
                out = [x - c * y for x, y in zip(out, row)]
        return out

    def contains(self, vec) -> bool:
        return all(self.field.is_zero(x) for x in self.reduce(vec))


def verify_submodule(S: SpechtModule, layer, *, stop_early: bool = False) -> SubmoduleVerdict:
    fld = S.field
    d = S.dim
    unit = []
    for i in layer:
        e = [fld.zero] * d
        e[i] = fld.one
        unit.append(e)
    span = _Span(fld, unit)
    escapes = []
    for name, mat in S.restricted_generators():
        for i in layer:
            if not span.contains(mat[i]):
                escapes.append((name, i))
                if stop_early:
                    return SubmoduleVerdict(False, escapes)
    return SubmoduleVerdict(not escapes, escapes)


@dataclass
class HomCertificate:
    layer: int
    theta: list  # rows indexed by the layer's new tableaux, columns by Std(mu)
    residuals: dict[str, bool]  # generator -> residual exactly zero
    bijective: bool
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.bijective and all(self.residuals.values()) and not self.problems


def _same_parameters(S: SpechtModule, small: SpechtModule) -> bool:
    return (
        S.deformation == small.deformation
        and S.params.charge == small.params.charge
        and S.field == small.field
    )


def theta_map(S: SpechtModule, filt: Filtration, r: int, small: SpechtModule) -> HomCertificate:
    """Certify that m_t + (layer r-1) -> m_{t↓} intertwines the subalgebra action."""
    if not _same_parameters(S, small):
        raise ConfigurationError("the small Specht module was built with different parameters")
    mu = filt.mus[r - 1]
    if small.shape != mu:
        raise ConfigurationError(f"expected the Specht module of {mu}, got {small.shape}")
    fld = S.field
    n = S.n
    block = filt.block(r)
    prev = set(filt.layers[r - 2]) if r > 1 else set()
    problems = []
    target = []
    for i in block:
        t_down = restrict_tableau(S.basis[i], n - 1)
        j = small.index.get(t_down)
        if j is None:
            problems.append(f"{S.basis[i]} restricts outside Std({mu})")
        target.append(j)
    theta = linalg.zeros(fld, len(block), small.dim)
    for a, j in enumerate(target):
        if j is not None:
            theta[a][j] = fld.one
    bijective = len(block) == small.dim and linalg.rank(fld, theta) == small.dim
    residuals: dict[str, bool] = {}
    if problems:
        return HomCertificate(r, theta, residuals, False, problems)
    pos = {i: a for a, i in enumerate(block)}
    small_gens = dict(small.generators())
    for name, mat in S.restricted_generators():
        g_small = small_gens[name]
        ok = True
        for a, i in enumerate(block):
            # coset image of m_t g, expressed through theta
            image = [fld.zero] * small.dim
            for j, x in enumerate(mat[i]):
                if fld.is_zero(x) or j in prev:
                    continue
                if j not in pos:
                    ok = False  # escapes layer r
                    break
                image[target[pos[j]]] = image[target[pos[j]]] + x
            if not ok or not all(fld.is_zero(x - y) for x, y in zip(image, g_small[target[a]])):
                ok = False
                break
        residuals[name] = ok
    return HomCertificate(r, theta, residuals, bijective)


@dataclass
class LayerReport:
    node: Node
    mu: Multipartition
    dim: int
    submodule_ok: bool
    theta_ok: bool

    def to_json(self) -> dict:
        return {
            "node": list(self.node),
            "mu": self.mu.render(exponents=False),
            "dim": self.dim,
            "submodule_ok": self.submodule_ok,
            "theta_ok": self.theta_ok,
        }


@dataclass
class RestrictionReport:
    shape: Multipartition
    charge: tuple[int, ...]
    deformation: Deformation
    field: Field
    layers: list[LayerReport]
    relations_ok: bool
    sizes_ok: bool

    @property
    def ok(self) -> bool:
        return self.relations_ok and self.sizes_ok and all(l.submodule_ok and l.theta_ok for l in self.layers)

    def to_json(self) -> dict:
        return {
            "lambda": self.shape.render(exponents=False),
            "multicharge": list(self.charge),
            "lifted_multicharge": list(self.deformation.generic_charge),
            "deformation": self.deformation.kind,
            "field": self.field.describe(),
            "e": format_e(self.field.quantum_characteristic()),
            "layers": [l.to_json() for l in self.layers],
            "relations_ok": self.relations_ok,
            "pass": self.ok,
        }


def certify_filtration(S: SpechtModule, filt: Filtration, small: dict[Multipartition, SpechtModule]) -> tuple[list[LayerReport], bool]:
    reports = []
    prev = 0
    sizes_ok = True
    for r in range(1, filt.length + 1):
        mu = filt.mus[r - 1]
        layer = filt.layers[r - 1]
        sub = verify_submodule(S, layer, stop_early=True)
        cert = theta_map(S, filt, r, small[mu])
        dim = len(layer) - prev
        nested = r == 1 or set(filt.layers[r - 2]) <= set(layer)
        sizes_ok = sizes_ok and nested and dim == small[mu].dim
        reports.append(LayerReport(filt.nodes[r - 1], mu, dim, sub.ok, cert.ok))
        prev = len(layer)
    sizes_ok &= prev == S.dim
    return reports, sizes_ok


def small_modules(lam: Multipartition, S: SpechtModule) -> dict[Multipartition, SpechtModule]:
    dfm = S.deformation
    return {
        lam.remove(A): specialize_module(murphy_action(lam.remove(A), dfm), S.field, S.params.charge)
        for A in removable_nodes(lam)
    }


def restriction_report(lam: Multipartition, charge, target: Field, deformation: Deformation | None = None) -> RestrictionReport:
    charge = tuple(int(k) for k in charge)
    if lam.size == 0:
        raise ValueError("restriction needs n >= 1")
    if deformation is None:
        deformation = choose_deformation(charge, target, lam.size)
    S = specialize_module(murphy_action(lam, deformation), target, charge)
    relations_ok = verify_relations(S).ok
    filt = build_filtration(S)
    layers, sizes_ok = certify_filtration(S, filt, small_modules(lam, S))
    return RestrictionReport(lam, charge, deformation, target, layers, relations_ok, sizes_ok)
