"""The acceptance matrix: ten exact checks over exhaustive small ranges.

Each criterion is a function returning a :class:`CriterionResult`. The driver
in :mod:`specht.cli` and ``tests/test_acceptance.py`` both call :func:`run`.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .arith import INFINITY, CyclotomicField, Field, PrimeField, Rationals, RationalFunctionField
from .graded import (
    beta_and_defect,
    branching_residues,
    dual_shift_check,
    graded_branching_check,
    graded_dimension_branching_ok,
)
from .murphy import (
    Deformation,
    check_integrality,
    check_unitriangular,
    l_triangularity_problems,
    murphy_action,
    specht_module,
)
from .restriction import (
    build_filtration,
    certify_filtration,
    restriction_report,
    small_modules,
)
from .seminormal import (
    ParamSet,
    build_seminormal,
    contents_separate,
    semisimple_restriction,
    verify_relations,
)
from .tableaux import (
    count_standard_tableaux,
    dominates,
    multipartitions,
    removable_nodes,
    restrict_tableau,
    restriction_partition,
    standard_tableaux,
)


@dataclass
class CriterionResult:
    number: int
    name: str
    ok: bool
    checked: int
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    notes: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        return f"[{status}] criterion {self.number:>2} {self.name}: {self.checked} checks in {self.seconds:.1f}s{extra}"

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "name": self.name,
            "pass": self.ok,
            "checked": self.checked,
            "failures": self.failures[:20],
            "notes": self.notes,
        }


# --------------------------------------------------------------------------
# ranges

GENERIC = RationalFunctionField()
GENERIC_RANGE = ((1, 5), (2, 5), (3, 4))  # (level, max n)


def separated_charges(level: int, n: int) -> list[tuple[int, ...]]:
    """Two charges per level whose consecutive gaps are at least 2n."""
    base = tuple(2 * n * l for l in range(level))
    shifted = tuple(-1 + (2 * n + 1) * l for l in range(level))
    return [base, shifted]


def generic_cases(ranges=GENERIC_RANGE):
    for level, top in ranges:
        for n in range(1, top + 1):
            for charge in separated_charges(level, n):
                for lam in multipartitions(n, level):
                    yield lam, charge


NON_SEMISIMPLE_TARGETS: tuple[Field, ...] = (
    Rationals(Fraction(1)),
    PrimeField(2, 1),
    PrimeField(3, 1),
    CyclotomicField(3),
    CyclotomicField(4),
)
NON_SEMISIMPLE_CHARGES = ((0,), (0, 0), (0, 1))

SEMISIMPLE_TARGETS: tuple[tuple[Field, tuple[int, ...]], ...] = (
    (GENERIC, (0,)),
    (GENERIC, (0, 10)),
    (Rationals(Fraction(1)), (0,)),
    (Rationals(Fraction(2)), (0, 10)),
    (PrimeField(11, 1), (0,)),
)

GRADED_E = (2, 3, 4, INFINITY)


def graded_charges(e, level: int) -> list[tuple[int, ...]]:
    if level == 1:
        return [(0,)]
    seconds = range(e) if e != INFINITY else (0, 1, 2, 5)
    return [(0, k) for k in seconds]


# --------------------------------------------------------------------------
# criteria


def relations_suite() -> CriterionResult:
    res = CriterionResult(1, "relations", True, 0)
    for lam, charge in generic_cases():
        verdict = verify_relations(build_seminormal(lam, ParamSet(charge)))
        res.checked += 1
        if not verdict.ok:
            res.failures.append(f"{lam} charge {charge}: {verdict.first_failure}")
    return res


def _murphy_cases():
    for lam, charge in generic_cases():
        yield lam, charge, murphy_action(lam, Deformation("xi", charge, charge))


def triangularity_suite() -> CriterionResult:
    res = CriterionResult(2, "L-triangularity", True, 0)
    for lam, charge, M in _murphy_cases():
        res.checked += 1
        problems = l_triangularity_problems(M)
        if problems:
            res.failures.append(f"{lam} charge {charge}: {problems[0]}")
    return res


def integrality_suite() -> CriterionResult:
    res = CriterionResult(3, "unitriangularity+integrality", True, 0)
    for lam, charge, M in _murphy_cases():
        res.checked += 1
        problems = check_unitriangular(M.generic, M.transition)
        if problems:
            res.failures.append(f"{lam} charge {charge}: {problems[0]}")
        if not check_integrality(M):
            res.failures.append(f"{lam} charge {charge}: Laurent form disagrees with Q(v) matrices")
    return res


def semisimple_branching_suite() -> CriterionResult:
    res = CriterionResult(4, "semisimple branching", True, 0)
    for lam, charge in generic_cases(((1, 5), (2, 5))):
        res.checked += 1
        blocks = semisimple_restriction(build_seminormal(lam, ParamSet(charge)))
        if not blocks.ok:
            res.failures.append(f"{lam} charge {charge}: {blocks.failures[0]}")
    return res


def non_semisimple_cases(max_n: int = 5):
    for F in NON_SEMISIMPLE_TARGETS:
        for charge in NON_SEMISIMPLE_CHARGES:
            for n in range(1, max_n + 1):
                for lam in multipartitions(n, len(charge)):
                    yield F, charge, lam


def filtration_suite() -> CriterionResult:
    res = CriterionResult(5, "restriction filtration", True, 0)
    routes = set()
    for F, charge, lam in non_semisimple_cases():
        rep = restriction_report(lam, charge, F)
        routes.add((str(F), charge, rep.deformation.kind, rep.deformation.generic_charge if lam.size == 5 else None))
        res.checked += 1
        if not rep.ok:
            res.failures.append(f"{F} charge {charge} {lam}: {rep.to_json()}")
    res.notes = [f"{F} charge {c}: {kind} route, n=5 lift {g}" for F, c, kind, g in sorted(routes, key=str) if g]
    return res


def counts_suite(max_n: int = 8, max_level: int = 3, enumerate_up_to: int = 6) -> CriterionResult:
    """Counts through the hook formula everywhere, and through explicit tableaux for small n."""
    res = CriterionResult(6, "restriction bijection counts", True, 0)
    for level in range(1, max_level + 1):
        for n in range(1, max_n + 1):
            for lam in multipartitions(n, level):
                res.checked += 1
                total = sum(count_standard_tableaux(lam.remove(A)) for A in removable_nodes(lam))
                if total != count_standard_tableaux(lam):
                    res.failures.append(f"{lam}: {total} != {count_standard_tableaux(lam)}")
                if n <= enumerate_up_to:
                    parts = restriction_partition(lam)
                    expected = {lam.remove(A) for A in removable_nodes(lam)}
                    if set(parts) != expected:
                        res.failures.append(f"{lam}: restriction classes {sorted(map(str, parts))}")
                    for mu, tabs in parts.items():
                        images = {restrict_tableau(t, n - 1) for t in tabs}
                        if len(images) != len(tabs) or images != set(standard_tableaux(mu)):
                            res.failures.append(f"{lam}: t -> t↓ is not a bijection onto Std({mu})")
    return res


def graded_suite(max_n: int = 8) -> CriterionResult:
    res = CriterionResult(7, "graded branching", True, 0)
    for e in GRADED_E:
        for level in (1, 2):
            for charge in graded_charges(e, level):
                for n in range(0, max_n + 1):
                    for lam in multipartitions(n, level):
                        for i in branching_residues(lam, charge, e):
                            res.checked += 1
                            verdict = graded_branching_check(lam, i, charge, e)
                            if not verdict.ok:
                                res.failures.append(f"{lam} charge {charge} e={e} i={i}")
                        res.checked += 1
                        if not graded_dimension_branching_ok(lam, charge, e):
                            res.failures.append(f"{lam} charge {charge} e={e}: graded dimensions")
    return res


def dual_shift_suite(max_n: int = 8) -> CriterionResult:
    res = CriterionResult(8, "dual degree shift", True, 0)
    for e in GRADED_E:
        for level in (1, 2):
            for charge in graded_charges(e, level):
                for n in range(0, max_n + 1):
                    for lam in multipartitions(n, level):
                        res.checked += 1
                        try:
                            beta_and_defect(lam, charge, e)
                        except ArithmeticError as exc:
                            res.failures.append(str(exc))
                            continue
                        if not dual_shift_check(lam, charge, e).ok:
                            res.failures.append(f"{lam} charge {charge} e={e}")
    return res


def cross_check_suite(max_n: int = 5) -> CriterionResult:
    res = CriterionResult(9, "semisimple cross-check", True, 0)
    for F, charge in SEMISIMPLE_TARGETS:
        for n in range(1, max_n + 1):
            params = ParamSet(charge, F)
            if not contents_separate(n, params):
                res.failures.append(f"{F} charge {charge} is not semisimple at n={n}")
                continue
            for lam in multipartitions(n, len(charge)):
                res.checked += 1
                blocks = semisimple_restriction(build_seminormal(lam, params))
                rep = restriction_report(lam, charge, F)
                summands = [(mu, d) for mu, d in blocks.summands]
                layers = [(l.mu, l.dim) for l in rep.layers]
                if not (blocks.ok and rep.ok and summands == layers):
                    res.failures.append(f"{F} charge {charge} {lam}: summands {summands} vs layers {layers}")
                mus = [mu for mu, _ in layers]
                if not all(dominates(a, b) and a != b for a, b in zip(mus, mus[1:])):
                    res.failures.append(f"{F} charge {charge} {lam}: layers not dominance-decreasing")
    return res


def fault_injection_suite(max_n: int = 4) -> CriterionResult:
    """Every single perturbation must be caught by the suite it targets."""
    res = CriterionResult(10, "fault injection", True, 0)
    coeff_total = coeff_caught = 0
    for lam, charge in generic_cases(((1, max_n), (2, max_n))):
        M = build_seminormal(lam, ParamSet(charge))
        one = M.field.one
        for r, mat in enumerate(M.T):
            for i, row in enumerate(mat):
                for j, x in enumerate(row):
                    if M.field.is_zero(x):
                        continue
                    coeff_total += 1
                    saved = row[j]
                    row[j] = x + one
                    if not verify_relations(M).ok:
                        coeff_caught += 1
                    else:
                        res.failures.append(f"seminormal T{r + 1}[{i}][{j}] of {lam}: perturbation passed")
                    row[j] = saved
    layer_total = layer_caught = 0
    for F, charge, lam in non_semisimple_cases(max_n):
        S = specht_module(lam, charge, F)
        filt = build_filtration(S)
        small = small_modules(lam, S)
        for r in range(1, filt.length + 1):
            layer = set(filt.layers[r - 1])
            outside = [i for i in range(S.dim) if i not in layer]
            variants = [layer - {a} for a in sorted(layer)]
            variants += [layer | {b} for b in outside]
            variants += [(layer - {a}) | {b} for a in sorted(layer) for b in outside]
            for bad_layer in variants:
                layer_total += 1
                bad = filt.with_layer(r, bad_layer)
                reports, sizes_ok = certify_filtration(S, bad, small)
                if sizes_ok and all(x.submodule_ok and x.theta_ok for x in reports):
                    res.failures.append(f"{F} charge {charge} {lam} layer {r} -> {sorted(bad_layer)}: passed")
                else:
                    layer_caught += 1
    res.checked = coeff_total + layer_total
    res.notes = [
        f"seminormal coefficient +1 perturbations caught: {coeff_caught}/{coeff_total}",
        f"filtration layer perturbations caught: {layer_caught}/{layer_total}",
    ]
    return res


CRITERIA: dict[str, Callable[[], CriterionResult]] = {
    "relations": relations_suite,
    "triangularity": triangularity_suite,
    "integrality": integrality_suite,
    "semisimple": semisimple_branching_suite,
    "filtration": filtration_suite,
    "counts": counts_suite,
    "graded": graded_suite,
    "dual": dual_shift_suite,
    "crosscheck": cross_check_suite,
    "faults": fault_injection_suite,
}


def run_one(name: str) -> CriterionResult:
    start = time.perf_counter()
    res = CRITERIA[name]()
    res.seconds = time.perf_counter() - start
    res.ok = not res.failures
    return res


def run(names=None, jobs: int = 1) -> list[CriterionResult]:
    names = list(CRITERIA) if not names else list(names)
    unknown = [n for n in names if n not in CRITERIA]
    if unknown:
        raise KeyError(f"unknown criteria {unknown}; choose from {list(CRITERIA)}")
    if jobs > 1 and len(names) > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_one, names))
    else:
        results = [run_one(n) for n in names]
    return sorted(results, key=lambda r: r.number)
