"""sl2-module multiplicities n_j and the closed dimension formulas.

Three independent routes to the same numbers meet here.  The grading
pipeline differences dim g_j - dim g_{j+2}.  The tensor route decomposes
the adjoint representation by Clebsch-Gordan (gl = V (x) V, so = /\^2 V,
sp = S^2 V) straight from the partition.  The closed formulas for dim c,
dim V_rho, dim g_0 follow Collingwood-McGovern, Cor. 6.1.4, with the
correction term for dim V_rho linear in the odd multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple, Union

from .errors import DomainError, InconsistentGradingError
from .orbits import Partition, partition_fits_family
from .rootsystems import GradingDims, LieFamily, LieType

_FormulaType = Union[LieType, LieFamily, str]


@dataclass(frozen=True)
class Sl2Data:
    """Multiplicities n_j of the (j+1)-dimensional summands, plus dim g."""

    n: Tuple[Tuple[int, int], ...]  # sorted (weight, multiplicity), zeros dropped
    dim_g: int

    def __post_init__(self) -> None:
        if sum(m * (j + 1) for j, m in self.n) != self.dim_g:
            raise InconsistentGradingError(
                f"sum n_j (j+1) = {sum(m * (j + 1) for j, m in self.n)} != dim g = {self.dim_g}"
            )
        if any(m < 0 or j < 0 for j, m in self.n):
            raise InconsistentGradingError(f"negative weight or multiplicity in {self.n}")

    def n_at(self, j: int) -> int:
        return dict(self.n).get(j, 0)

    def as_dict(self) -> Dict[int, int]:
        return dict(self.n)

    @property
    def max_weight(self) -> int:
        return max((j for j, _ in self.n), default=0)

    @property
    def dim_c(self) -> int:
        """Centralizer of the triple: the weight-0 multiplicity."""
        return self.n_at(0)

    @property
    def dim_g0(self) -> int:
        return sum(m for j, m in self.n if j % 2 == 0)

    @property
    def dim_v_rho(self) -> int:
        """Total number of irreducible summands (= dim of ker ad_e)."""
        return sum(m for _, m in self.n)

    def n_row(self) -> Tuple[int, ...]:
        """(n_0, ..., n_max) with zeros kept, for table rendering."""
        return tuple(self.n_at(j) for j in range(self.max_weight + 1))


def module_multiplicities(g: GradingDims) -> Sl2Data:
    """n_j = dim g_j - dim g_{j+2}; negative values mean the label vector
    was not the weighted Dynkin diagram of any nilpotent orbit."""
    dims = g.as_dict()
    top = max(g.weights)
    pairs = []
    for j in range(0, top + 1):
        m = dims.get(j, 0) - dims.get(j + 2, 0)
        if m < 0:
            raise InconsistentGradingError(
                f"n_{j} = {dims.get(j, 0)} - {dims.get(j + 2, 0)} < 0"
            )
        if m:
            pairs.append((j, m))
    return Sl2Data(n=tuple(pairs), dim_g=g.total)


def is_even_triple(d: Sl2Data) -> bool:
    return all(j % 2 == 0 for j, _ in d.n)


def _family_of(t: _FormulaType) -> str:
    if isinstance(t, LieType):
        return t.family.value
    if isinstance(t, LieFamily):
        return t.value
    return str(t)


def _check_formula_input(t: _FormulaType, p: Partition) -> str:
    fam = _family_of(t)
    if fam not in "ABCD":
        raise DomainError(f"partition formulas apply to classical types, not {fam}")
    if isinstance(t, LieType) and p.n != t.matrix_size:
        raise DomainError(f"{t.name} needs a partition of {t.matrix_size}, got {p.n}")
    if not partition_fits_family(fam, p):
        raise DomainError(f"{p} violates the {fam}-type parity rule")
    return fam


def _tensor_summands(k: int, l: int):
    """Highest ad_h weights in V_k (x) V_l (dims k and l)."""
    return range(k + l - 2, abs(k - l) - 1, -2)


def _alternating_summands(k: int, start_offset: int):
    """Weights in /\^2 V_k (offset 4) or S^2 V_k (offset 2)."""
    return range(2 * k - start_offset, -1, -4)


def multiplicities_formula(t: _FormulaType, p: Partition) -> Dict[int, int]:
    """All n_j by Clebsch-Gordan decomposition of the adjoint module.

    gl_N = V (x) V with V = (+)_a V_{k_a}; so_N and sp_N are its
    alternating and symmetric halves.  Type A drops one trivial summand
    for the trace.
    """
    fam = _check_formula_input(t, p)
    parts = p.parts
    n: Dict[int, int] = {}

    def add(j: int, count: int = 1) -> None:
        n[j] = n.get(j, 0) + count

    if fam == "A":
        for k in parts:
            for l in parts:
                for j in _tensor_summands(k, l):
                    add(j)
        add(0, -1)
    else:
        for a, k in enumerate(parts):
            for l in parts[a + 1:]:
                for j in _tensor_summands(k, l):
                    add(j)
        offset = 2 if fam == "C" else 4
        for k in parts:
            for j in _alternating_summands(k, offset):
                add(j)
    return {j: m for j, m in n.items() if m}


def dim_c_formula(t: _FormulaType, p: Partition) -> int:
    """Reductive centralizer of the triple (Collingwood-McGovern 6.1.3):
    A: sum r_i^2 - 1; B/D: so factors on odd parts, sp on even;
    C: the other way around."""
    fam = _check_formula_input(t, p)
    r = p.multiplicities()
    if fam == "A":
        return sum(m * m for m in r.values()) - 1
    so_parity = 1 if fam in ("B", "D") else 0
    total = 0
    for part, m in r.items():
        if part % 2 == so_parity:
            total += m * (m - 1) // 2
        else:
            total += m * (m + 1) // 2
    return total


def dim_v_rho_formula(t: _FormulaType, p: Partition) -> int:
    """dim ker ad_e: A: sum s_i^2 - 1; C: (sum s_i^2 + sum_{odd} r_i)/2;
    B/D: (sum s_i^2 - sum_{odd} r_i)/2, s the dual partition."""
    fam = _check_formula_input(t, p)
    sq = sum(s * s for s in p.dual().parts)
    if fam == "A":
        return sq - 1
    odd = sum(m for part, m in p.multiplicities().items() if part % 2)
    if fam == "C":
        return (sq + odd) // 2
    return (sq - odd) // 2


def dim_g0_formula(t: _FormulaType, p: Partition) -> int:
    """dim V_rho minus the opposite-parity correction: every pair of parts
    i < j of opposite parity costs 2i (type A) or i (B/C/D) times r_i r_j."""
    fam = _check_formula_input(t, p)
    r = p.multiplicities()
    weight = 2 if fam == "A" else 1
    correction = 0
    for i, ri in r.items():
        for j, rj in r.items():
            if i < j and (i + j) % 2 == 1:
                correction += weight * i * ri * rj
    return dim_v_rho_formula(t, p) - correction
