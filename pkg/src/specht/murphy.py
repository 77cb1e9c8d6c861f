"""Murphy bases of Specht modules, integral matrices, and specialization.

The Murphy basis is computed inside the Specht module, never in the regular
representation: the generator ``m_{t^lam}`` coincides with ``f_{t^lam}``, and
``m_t = m_{t^lam} T_{d(t)}`` is obtained by pushing that vector through the
seminormal T-matrices along a reduced word of d(t).

A generic module lives over Q(v). Two one-parameter families reach a target:

* ``"xi"``: xi = v and Q_l = [lifted charge_l]_v, specialized at v -> xi.
  The lifted charge agrees with the target charge modulo e.
* ``"charge"``: xi = +-1 is kept fixed and Q_l = [charge_l]_xi + (l-1) v,
  specialized at v -> 0. Used for xi^2 = 1 with e infinite, where no lift of
  the charge separates contents.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .arith import (
    INFINITY,
    Field,
    IntegralityError,
    LaurentPolynomial,
    Rationals,
    RationalFunction,
    RationalFunctionField,
    SpecializationPoleError,
    format_e,
)
from .seminormal import (
    HeckeModule,
    ParamSet,
    build_seminormal,
    contents_separate,
    verify_relations,
)
from .tableaux import Multipartition, StandardTableau, tableau_dominates, tableau_permutation


class UnsupportedTargetError(ValueError):
    """No one-parameter deformation of the requested parameters is available."""


class ConfigurationError(ValueError):
    pass


GENERIC = RationalFunctionField()


def lift_multicharge(charge, e, n: int) -> tuple[int, ...]:
    """Smallest strictly increasing lift, congruent mod e, with gaps >= 2n.

    For e infinite the charge is returned unchanged and must already separate
    contents over Q(v).
    """
    charge = tuple(int(k) for k in charge)
    if e == INFINITY:
        sep = contents_separate(n, ParamSet(charge, GENERIC))
        if not sep:
            raise UnsupportedTargetError(
                f"charge {charge} does not separate contents at e=inf (witness {sep.witness[0]} / {sep.witness[1]})"
            )
        return charge
    e = int(e)
    out = [charge[0]]
    for k in charge[1:]:
        low = out[-1] + 2 * n
        out.append(low + (k - low) % e)
    return tuple(out)


@dataclass(frozen=True)
class Deformation:
    """How the generic module over Q(v) is reached and specialized."""

    kind: str  # "xi" or "charge"
    charge: tuple[int, ...]  # target charge
    generic_charge: tuple[int, ...]  # charge used over Q(v)
    xi_constant: int | None = None  # fixed xi for the "charge" route

    @property
    def params(self) -> ParamSet:
        if self.kind == "xi":
            return ParamSet(self.generic_charge, GENERIC)
        v = RationalFunction.v()
        shifts = tuple(v * l for l in range(len(self.charge)))
        return ParamSet(self.generic_charge, GENERIC, xi=RationalFunction.constant(self.xi_constant), shifts=shifts)

    def point(self, target: Field):
        return target.xi if self.kind == "xi" else target.zero

    def describe(self) -> dict:
        out = {"kind": self.kind, "generic_charge": list(self.generic_charge)}
        if self.xi_constant is not None:
            out["xi"] = self.xi_constant
        return out


def choose_deformation(charge, target: Field, n: int) -> Deformation:
    charge = tuple(int(k) for k in charge)
    e = target.quantum_characteristic()
    try:
        return Deformation("xi", charge, lift_multicharge(charge, e, n))
    except UnsupportedTargetError:
        if isinstance(target, Rationals) and target.xi_value in (1, -1):
            return Deformation("charge", charge, charge, int(target.xi_value))
        raise


@dataclass
class MurphyModule:
    """Murphy-basis matrices over Z[v, 1/v], plus the transition from the f-basis."""

    shape: Multipartition
    basis: tuple[StandardTableau, ...]
    deformation: Deformation
    transition: list  # row t = m_t in f-coordinates
    generic: HeckeModule  # m-basis matrices over Q(v)
    T: list  # Laurent matrices
    L: list

    @property
    def params(self) -> ParamSet:
        return self.generic.params

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_json(self) -> dict:
        return {
            "lambda": self.shape.render(exponents=False),
            "deformation": self.deformation.describe(),
            "basis": [str(t) for t in self.basis],
            "T": [[[x.to_json() for x in row] for row in mat] for mat in self.T],
            "L": [[[x.to_json() for x in row] for row in mat] for mat in self.L],
        }


@dataclass
class SpechtModule(HeckeModule):
    deformation: Deformation = field(default=None)

    def to_json(self) -> dict:
        text = self.field.text
        return {
            "lambda": self.shape.render(exponents=False),
            **self.params.describe(),
            "basis": [str(t) for t in self.basis],
            "T": [[[text(x) for x in row] for row in mat] for mat in self.T],
            "L": [[[text(x) for x in row] for row in mat] for mat in self.L],
        }


def murphy_vectors(sem: HeckeModule, words: dict[StandardTableau, list[int]] | None = None) -> list:
    """Transition matrix: row t is ``m_t = f_{t^lam} T_{d(t)}`` in f-coordinates."""
    fld = sem.field
    d = sem.dim
    start = [fld.zero] * d
    start[0] = fld.one
    cache: dict[tuple[int, ...], list] = {(): start}

    def along(word: tuple[int, ...]) -> list:
        if word not in cache:
            prev = along(word[:-1])
            cache[word] = linalg.vecmat(fld, prev, sem.T[word[-1] - 1])
        return cache[word]

    rows = []
    for t in sem.basis:
        word = words[t] if words is not None else tableau_permutation(t)[1]
        rows.append(along(tuple(word)))
    return rows


def check_unitriangular(sem: HeckeModule, transition: list) -> list[str]:
    fld = sem.field
    problems = []
    for i, t in enumerate(sem.basis):
        if transition[i][i] != fld.one:
            problems.append(f"diagonal entry at {t} is {transition[i][i]}")
        for j, s in enumerate(sem.basis):
            if j != i and not fld.is_zero(transition[i][j]) and not tableau_dominates(s, t):
                problems.append(f"m_{t} has an f_{s} component but {s} does not dominate {t}")
    return problems


def _to_laurent(x: RationalFunction, where: str) -> LaurentPolynomial:
    out = x.laurent_or_none()
    if out is None:
        raise IntegralityError(f"{where}: entry {x} is not in Z[v, 1/v]")
    return out


@lru_cache(maxsize=512)
def murphy_action(lam: Multipartition, deformation: Deformation) -> MurphyModule:
    params = deformation.params
    sem = build_seminormal(lam, params)
    fld = params.field
    transition = murphy_vectors(sem)
    problems = check_unitriangular(sem, transition)
    if problems:
        raise AssertionError(f"transition matrix for {lam} is not unitriangular: {problems[0]}")
    inv = linalg.unitriangular_inverse(fld, transition)
    T = [linalg.conjugate(fld, transition, g, inv) for g in sem.T]
    L = [linalg.conjugate(fld, transition, g, inv) for g in sem.L]
    generic = HeckeModule(lam, sem.basis, params, T, L)
    T_l = [[[_to_laurent(x, f"{lam} T{r}") for x in row] for row in mat] for r, mat in enumerate(T, 1)]
    L_l = [[[_to_laurent(x, f"{lam} L{k}") for x in row] for row in mat] for k, mat in enumerate(L, 1)]
    return MurphyModule(lam, sem.basis, deformation, transition, generic, T_l, L_l)


def specialize_module(M: MurphyModule, target: Field, charge=None) -> SpechtModule:
    """Entry-wise v -> xi (or v -> 0 for the charge route) into ``target``."""
    dfm = M.deformation
    charge = tuple(charge) if charge is not None else dfm.charge
    e = target.quantum_characteristic()
    if dfm.kind == "xi":
        if e == INFINITY:
            ok = dfm.generic_charge == charge
        else:
            ok = len(charge) == len(dfm.generic_charge) and all(
                (a - b) % int(e) == 0 for a, b in zip(dfm.generic_charge, charge)
            )
        if not ok:
            raise ConfigurationError(
                f"generic charge {dfm.generic_charge} is not a lift of {charge} for e={format_e(e)}"
            )
    elif not (isinstance(target, Rationals) and target.xi_value == dfm.xi_constant and dfm.charge == charge):
        raise ConfigurationError("charge-route module specialized to a different target")
    point = dfm.point(target)
    one = target.one

    def spec(x: LaurentPolynomial):
        try:
            return x.evaluate(point, one)
        except ZeroDivisionError:
            raise SpecializationPoleError(f"{x} has a pole at v={target.text(point)}") from None

    T = [linalg.map_entries(spec, mat) for mat in M.T]
    L = [linalg.map_entries(spec, mat) for mat in M.L]
    return SpechtModule(M.shape, M.basis, ParamSet(charge, target), T, L, deformation=dfm)


def specht_module(lam: Multipartition, charge, target: Field, deformation: Deformation | None = None) -> SpechtModule:
    if deformation is None:
        deformation = choose_deformation(charge, target, lam.size)
    return specialize_module(murphy_action(lam, deformation), target, charge)


def check_integrality(M: MurphyModule) -> bool:
    """Re-derive every Laurent entry from the Q(v) matrices."""
    for lau, gen in ((M.T, M.generic.T), (M.L, M.generic.L)):
        for mat_l, mat_g in zip(lau, gen):
            for row_l, row_g in zip(mat_l, mat_g):
                for x, y in zip(row_l, row_g):
                    if x.to_ratfunc() != y:
                        return False
    return True


def l_triangularity_problems(M: MurphyModule) -> list[str]:
    """Coefficients of m_s in m_t L_k vanish unless s ⊵ t; the diagonal is c_k(t)."""
    gen = M.generic
    fld, params = gen.field, gen.params
    problems = []
    for k, mat in enumerate(gen.L, 1):
        for i, t in enumerate(M.basis):
            if mat[i][i] != params.content_of_node(t.position(k)):
                problems.append(f"L{k}: diagonal at {t}")
            for j, s in enumerate(M.basis):
                if j != i and not fld.is_zero(mat[i][j]) and not tableau_dominates(s, t):
                    problems.append(f"L{k}: m_{t} L{k} involves m_{s}")
    return problems


def specialized_relations_ok(S: SpechtModule) -> bool:
    return verify_relations(S).ok
