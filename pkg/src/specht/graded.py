"""Residues, tableau degrees, defects and graded branching of Specht modules.

Everything here is combinatorial: the graded Specht module is represented by its
graded character, a map from residue sequences to Laurent polynomials in q.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import INFINITY, LaurentPolynomial, format_e
from .tableaux import (
    Multipartition,
    Node,
    StandardTableau,
    addable_nodes,
    initial_tableau,
    removable_nodes,
    restrict_tableau,
    standard_tableaux,
)


def _norm_e(e):
    if e is None or e == INFINITY or e == "inf":
        return INFINITY
    e = int(e)
    if e < 2:
        raise ValueError(f"e must be at least 2 or infinite, got {e}")
    return e


@dataclass(frozen=True)
class QuiverData:
    """Vertex set Z/eZ (or Z for e infinite) with its symmetric Cartan pairing."""

    e: object = INFINITY

    def __post_init__(self):
        object.__setattr__(self, "e", _norm_e(self.e))

    @property
    def finite(self) -> bool:
        return self.e != INFINITY

    def vertex(self, k: int) -> int:
        return k % self.e if self.finite else k

    def vertices(self) -> list[int] | None:
        return list(range(self.e)) if self.finite else None

    def cartan(self, i: int, j: int) -> int:
        """(alpha_i, alpha_j)."""
        i, j = self.vertex(i), self.vertex(j)
        if i == j:
            return 2
        if self.e == 2:
            return -2
        if self.vertex(i - j) in (self.vertex(1), self.vertex(-1)):
            return -1
        return 0

    def weight_pairing(self, charge, i: int) -> int:
        """(Lambda, alpha_i) for Lambda = sum_l Lambda_{charge_l}."""
        return sum(1 for k in charge if self.vertex(k) == self.vertex(i))


@dataclass(frozen=True)
class RootVector:
    """Finitely supported map I -> N, i.e. an element of Q^+."""

    counts: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_residues(cls, residues) -> "RootVector":
        return cls(tuple(sorted(Counter(residues).items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def __add__(self, other: "RootVector") -> "RootVector":
        total = Counter(self.as_dict())
        total.update(other.as_dict())
        return RootVector(tuple(sorted((i, m) for i, m in total.items() if m)))

    @property
    def height(self) -> int:
        return sum(m for _, m in self.counts)

    def pairing(self, other: "RootVector", quiver: QuiverData) -> int:
        return sum(a * b * quiver.cartan(i, j) for i, a in self.counts for j, b in other.counts)

    def __str__(self):
        return " + ".join(f"{m}*a{i}" if m != 1 else f"a{i}" for i, m in self.counts) or "0"


def residue(node: Node, charge, e) -> int:
    l, r, c = node
    return QuiverData(e).vertex(charge[l - 1] + c - r)


def residue_sequence(t: StandardTableau, charge, e) -> tuple[int, ...]:
    q = QuiverData(e)
    return tuple(q.vertex(charge[l - 1] + c - r) for l, r, c in t.node_sequence)


def i_nodes(lam: Multipartition, i: int, charge, e) -> tuple[list[Node], list[Node]]:
    """(Add_i(lam), Rem_i(lam)), both in increasing lexicographic order."""
    q = QuiverData(e)
    i = q.vertex(i)
    add = [A for A in addable_nodes(lam) if residue(A, charge, q.e) == i]
    rem = sorted(A for A in removable_nodes(lam) if residue(A, charge, q.e) == i)
    return add, rem


def degree_stats(lam: Multipartition, A: Node, charge, e) -> tuple[int, int]:
    """(d_A^lam, d^A_lam): signed counts of i-nodes above and below A."""
    if A not in addable_nodes(lam) and A not in removable_nodes(lam):
        raise ValueError(f"{A} is neither addable nor removable for {lam}")
    add, rem = i_nodes(lam, residue(A, charge, e), charge, e)
    up = sum(1 for B in add if B > A) - sum(1 for B in rem if B > A)
    down = sum(1 for B in add if B < A) - sum(1 for B in rem if B < A)
    return up, down


def _key(charge, e):
    return tuple(int(k) for k in charge), _norm_e(e)


@lru_cache(maxsize=None)
def _tableau_degree(t: StandardTableau, charge, e) -> int:
    n = t.size
    if n == 0:
        return 0
    return _tableau_degree(restrict_tableau(t, n - 1), charge, e) + degree_stats(t.shape, t.position(n), charge, e)[0]


def tableau_degree(t: StandardTableau, charge, e) -> int:
    return _tableau_degree(t, *_key(charge, e))


def y_exponents(lam: Multipartition, charge, e) -> tuple[int, ...]:
    t = initial_tableau(lam)
    degs = [tableau_degree(restrict_tableau(t, k), charge, e) for k in range(lam.size + 1)]
    return tuple(b - a for a, b in zip(degs, degs[1:]))


def beta(lam: Multipartition, charge, e) -> RootVector:
    return RootVector.from_residues(residue(A, charge, e) for A in lam.nodes)


def beta_and_defect(lam: Multipartition, charge, e) -> tuple[RootVector, int]:
    q = QuiverData(e)
    b = beta(lam, charge, q.e)
    lam_pair = sum(m * q.weight_pairing(charge, i) for i, m in b.counts)
    twice = 2 * lam_pair - b.pairing(b, q)
    if twice % 2 or twice < 0:
        raise ArithmeticError(f"defect of {lam} is not a non-negative integer: {Fraction(twice, 2)}")
    return b, twice // 2


def defect(lam: Multipartition, charge, e) -> int:
    return beta_and_defect(lam, charge, e)[1]


Character = dict[tuple[int, ...], LaurentPolynomial]


def _q(exp: int) -> LaurentPolynomial:
    return LaurentPolynomial.monomial(exp, 1, var="q")


def _add_into(out: Character, key, value: LaurentPolynomial) -> None:
    total = out.get(key, LaurentPolynomial(var="q")) + value
    if total.is_zero():
        out.pop(key, None)
    else:
        out[key] = total


@lru_cache(maxsize=None)
def _graded_character(lam: Multipartition, charge, e) -> tuple:
    out: Character = {}
    for t in standard_tableaux(lam):
        _add_into(out, residue_sequence(t, charge, e), _q(tableau_degree(t, charge, e)))
    return tuple(sorted(out.items()))


def graded_character(lam: Multipartition, charge, e) -> Character:
    return dict(_graded_character(lam, *_key(charge, e)))


def graded_dimension(lam: Multipartition, charge, e) -> LaurentPolynomial:
    total = LaurentPolynomial(var="q")
    for value in graded_character(lam, charge, e).values():
        total = total + value
    return total


def character_to_json(ch: Character) -> list:
    return [[list(k), v.to_json()] for k, v in sorted(ch.items())]


@dataclass
class BranchingVerdict:
    shape: Multipartition
    charge: tuple[int, ...]
    e: object
    i: int
    lhs: Character
    rhs: Character
    terms: list[tuple[Node, int, Multipartition]] = field(default_factory=list)  # (B, d_B^lam, lam - B)

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> dict:
        return {
            "lambda": self.shape.render(exponents=False),
            "e": format_e(self.e),
            "multicharge": list(self.charge),
            "i": self.i,
            "lhs_character": character_to_json(self.lhs),
            "rhs_character": character_to_json(self.rhs),
            "terms": [{"node": list(B), "shift": d, "mu": mu.render(exponents=False)} for B, d, mu in self.terms],
            "pass": self.ok,
        }


def graded_branching_check(lam: Multipartition, i: int, charge, e) -> BranchingVerdict:
    """i-restriction of the graded character against the shifted sum over removable i-nodes."""
    charge, e = _key(charge, e)
    i = QuiverData(e).vertex(i)
    n = lam.size
    lhs: Character = {}
    if n:
        for key, value in graded_character(lam, charge, e).items():
            if key[-1] == i:
                _add_into(lhs, key[:-1], value)
    rhs: Character = {}
    terms = []
    for B in i_nodes(lam, i, charge, e)[1]:
        d = degree_stats(lam, B, charge, e)[0]
        mu = lam.remove(B)
        terms.append((B, d, mu))
        for key, value in graded_character(mu, charge, e).items():
            _add_into(rhs, key, value * _q(d))
    return BranchingVerdict(lam, charge, e, i, lhs, rhs, terms)


def branching_residues(lam: Multipartition, charge, e) -> list[int]:
    """Residues of removable nodes, each once, in increasing order."""
    return sorted({residue(A, charge, e) for A in removable_nodes(lam)})


def graded_dimension_branching_ok(lam: Multipartition, charge, e) -> bool:
    """Graded dimension of the restriction equals the sum of shifted smaller ones."""
    total_lhs = graded_dimension(lam, charge, e) if lam.size else LaurentPolynomial(var="q")
    total_rhs = LaurentPolynomial(var="q")
    for i in branching_residues(lam, charge, e):
        for B in i_nodes(lam, i, charge, e)[1]:
            d = degree_stats(lam, B, charge, e)[0]
            total_rhs = total_rhs + graded_dimension(lam.remove(B), charge, e) * _q(d)
    return total_lhs == total_rhs


@dataclass
class DualShiftVerdict:
    shape: Multipartition
    rows: list[tuple[Node, int, int, int, int]]  # (B, d^B, def lam, def lam-B, d_B)

    @property
    def ok(self) -> bool:
        return all(down == dl - dm - up for _, down, dl, dm, up in self.rows)

    def to_json(self) -> dict:
        return {
            "lambda": self.shape.render(exponents=False),
            "rows": [
                {"node": list(B), "d_down": down, "defect": dl, "defect_mu": dm, "d_up": up}
                for B, down, dl, dm, up in self.rows
            ],
            "pass": self.ok,
        }


def dual_shift_check(lam: Multipartition, charge, e) -> DualShiftVerdict:
    rows = []
    dl = defect(lam, charge, e)
    for B in removable_nodes(lam):
        up, down = degree_stats(lam, B, charge, e)
        rows.append((B, down, dl, defect(lam.remove(B), charge, e), up))
    return DualShiftVerdict(lam, rows)
