"""Consistency suite tying the computation routes together.

Each check runs a family of exact comparisons and reports the first
counterexample it finds, if any.  The oracle check is the backbone: on
every classical partition orbit up to a rank bound, the closed
Clebsch-Gordan formulas, the root-space grading pipeline, and the matrix
nullity oracle must produce identical multiplicities and dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, List

from .dataset import evaluate_conditions, load_records
from .errors import DatasetSchemaError, MissingDataError
from .matrixoracle import build_matrix_triple, oracle_sl2_data
from .orbits import Partition, enumerate_partitions, weighted_dynkin_from_partition
from .realforms import describe, exceptional_s_value
from .rootsystems import LieType, WeightedDynkinDiagram, ad_grading, build_root_system
from .sl2data import (
    dim_c_formula,
    dim_g0_formula,
    dim_v_rho_formula,
    module_multiplicities,
    multiplicities_formula,
)

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    cases: int
    detail: str = ""  # minimal counterexample, empty when passed


def _classical_types(max_rank: int) -> Iterator[LieType]:
    for fam in "ABCD":
        for rank in range(_MIN_RANK[fam], max_rank + 1):
            yield LieType.of(fam, rank)


def check_oracle_equivalence(max_rank: int = 6) -> CheckResult:
    """Formula vs grading vs matrix oracle on every orbit up to the bound."""
    name = "oracle-equivalence"
    cases = 0
    for t in _classical_types(max_rank):
        rs = build_root_system(t)
        for p in enumerate_partitions(t, t.matrix_size):
            formula = multiplicities_formula(t, p)
            wdd = weighted_dynkin_from_partition(t, p)
            graded = module_multiplicities(ad_grading(rs, wdd)).as_dict()
            oracle = oracle_sl2_data(build_matrix_triple(t, p)).as_dict()
            if not formula == graded == oracle:
                return CheckResult(name, False, cases,
                                   f"{t.name} {p}: formula {formula}, "
                                   f"grading {graded}, oracle {oracle}")
            n0 = formula.get(0, 0)
            g0 = sum(m for j, m in formula.items() if j % 2 == 0)
            v = sum(formula.values())
            dims = (dim_c_formula(t, p), dim_g0_formula(t, p), dim_v_rho_formula(t, p))
            if dims != (n0, g0, v):
                return CheckResult(name, False, cases,
                                   f"{t.name} {p}: closed dims {dims} != {(n0, g0, v)}")
            cases += 1
    return CheckResult(name, True, cases)


def check_parity_lemma(max_rank: int = 6) -> CheckResult:
    """dim g_0 = dim V_rho exactly when all parts share one parity."""
    name = "parity-lemma"
    cases = 0
    for t in _classical_types(max_rank):
        for p in enumerate_partitions(t, t.matrix_size):
            single_parity = len({part % 2 for part in p.parts}) == 1
            equal = dim_g0_formula(t, p) == dim_v_rho_formula(t, p)
            if equal != single_parity:
                return CheckResult(name, False, cases,
                                   f"{t.name} {p}: dim g_0 = dim V_rho is {equal}, "
                                   f"single parity is {single_parity}")
            cases += 1
    return CheckResult(name, True, cases)


def _n_row(t: LieType, p: Partition, top: int) -> tuple:
    n = multiplicities_formula(t, p)
    return tuple(n.get(j, 0) for j in range(top + 1))


def check_table_rows() -> CheckResult:
    """The odd-family sl2-data rows in closed form, with s = n_2 - n_0."""
    name = "table-rows"
    cases = 0
    for q in range(2, 7):
        for p in range(1, q):
            t = LieType.of("A", p + q - 1)
            part = Partition.of(*([2] * p + [1] * (q - p)))
            want = (p * p - 1 + (q - p) ** 2, 2 * p * (q - p), p * p)
            got = _n_row(t, part, 2)
            s = describe("su", (p, q)).s
            if got != want or s != got[2] - got[0] or s != 1 - (q - p) ** 2:
                return CheckResult(name, False, cases,
                                   f"su({p},{q}): n {got}, expected {want}, s {s}")
            cases += 1
    for m in range(1, 5):
        mm = 2 * m + 1  # so*(2 mm) = so*(4m+2)
        t = LieType.of("D", mm)
        part = Partition.of(*([2] * (mm - 1) + [1, 1]))
        want = (m * (2 * m + 1) + 1, 4 * m, m * (2 * m - 1))
        got = _n_row(t, part, 2)
        s = describe("sostar", (mm,)).s
        if got != want or s != got[2] - got[0] or s != -(2 * m + 1):
            return CheckResult(name, False, cases,
                               f"so*({2 * mm}): n {got}, expected {want}, s {s}")
        cases += 1
    t = LieType.of("E6")
    wdd = WeightedDynkinDiagram(lie_type=t, labels=(1, 0, 0, 0, 0, 1))
    data = module_multiplicities(ad_grading(build_root_system(t), wdd))
    row = tuple(data.n_at(j) for j in range(3))
    s = exceptional_s_value("E6^-14")
    total = sum(m * (j + 1) for j, m in data.n)
    if row != (22, 16, 8) or total != 78 or s != row[2] - row[0]:
        return CheckResult(name, False, cases,
                           f"E6 odd diagram: n {row}, sum {total}, s {s}")
    cases += 1
    return CheckResult(name, True, cases)


def check_dataset_conditions() -> CheckResult:
    """Exactly the odd E6^-14 record passes all of (a), (b), (c)."""
    name = "dataset-conditions"
    try:
        records = load_records()
    except (DatasetSchemaError, MissingDataError) as exc:
        return CheckResult(name, False, 0, str(exc))
    cases = 0
    winners = []
    for rec in records:
        ev = evaluate_conditions(rec)
        if ev.all_hold:
            winners.append(rec.realform)
        cases += 1
    if winners != ["E6^-14"]:
        return CheckResult(name, False, cases,
                           f"all-true records {winners}, expected ['E6^-14']")
    by_form = {rec.realform: evaluate_conditions(rec) for rec in records}
    for form in ("E7^7", "E8^8"):
        if form in by_form and tuple(by_form[form]) != (True, False, True):
            return CheckResult(name, False, cases,
                               f"{form} conditions {tuple(by_form[form])}, "
                               "expected (True, False, True)")
    if "E6^-26" in by_form and by_form["E6^-26"].a:
        return CheckResult(name, False, cases, "E6^-26 unexpectedly passes (a)")
    return CheckResult(name, True, cases)


def run_all(max_rank: int = 6) -> List[CheckResult]:
    return [
        check_oracle_equivalence(max_rank),
        check_parity_lemma(max_rank),
        check_table_rows(),
        check_dataset_conditions(),
    ]
