"""Extended-magical verdicts and the exhaustive classification scan.

A real nilpotent orbit, given as a signed partition datum, carries an
extended magical triple exactly when the reductive centralizer of the
triple is compact and

    dim m - dim h  =  dim g_0 - 2 dim c,

with the left side read off the Cartan decomposition of the real form and
the right side off the complex sl2-module data of the orbit.  The verdict
is even or odd according to whether every ad_h weight of the adjoint
module is even.

The scan in classify_family runs this criterion over every orbit label
and every sign assignment of a family within a size bound.  Real forms
that admit an even magical triple fall into four families: split forms,
Hermitian tube-type forms whose complexification is A_{2n-1}, B_n, C_n,
D_n or E7, the forms so(p,q) with p,q >= 3, and four exceptional forms.
admits_even_magical encodes that membership test.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple

from .errors import DomainError
from .orbits import (
    OrbitLabel,
    Partition,
    SignedPartitionData,
    enumerate_orbit_labels,
    enumerate_signed_data,
)
from .realforms import (
    CLASSICAL_FAMILIES,
    EXCEPTIONAL_FORMS,
    CentralizerRealForm,
    centralizer_realform,
    describe,
)
from .sl2data import dim_c_formula, dim_g0_formula, multiplicities_formula

Params = Tuple[int, ...]


class Verdict(Enum):
    NOT_EXTENDED_MAGICAL = "NotExtendedMagical"
    EVEN_MAGICAL = "EvenMagical"
    ODD_MAGICAL = "OddMagical"

    def __str__(self) -> str:
        return self.value

    @property
    def is_magical(self) -> bool:
        return self is not Verdict.NOT_EXTENDED_MAGICAL


@dataclass(frozen=True)
class Witness:
    """The two integers and two flags the criterion compares."""

    m_minus_h: int
    g0_minus_2c: int
    centralizer_compact: bool
    even_triple: bool


@dataclass(frozen=True)
class MagicalStatus:
    verdict: Verdict
    witness: Witness
    centralizer: CentralizerRealForm

    def __post_init__(self) -> None:
        w = self.witness
        magical = w.centralizer_compact and w.m_minus_h == w.g0_minus_2c
        if magical != self.verdict.is_magical:
            raise DomainError(f"verdict {self.verdict} contradicts witness {w}")
        if magical:
            expected = Verdict.EVEN_MAGICAL if w.even_triple else Verdict.ODD_MAGICAL
            if self.verdict is not expected:
                raise DomainError(f"parity flag {w.even_triple} contradicts {self.verdict}")


def involution_sign(j: int, k: int) -> int:
    """Sign of the magical involution on the k-fold lowering of a
    highest-weight vector of ad_h weight j: +1 on the trivial summands,
    (-1)^(k+1) elsewhere."""
    if not 0 <= k <= j:
        raise DomainError(f"lowering depth k={k} outside 0..{j}")
    if j == 0:
        return 1
    return 1 if (k + 1) % 2 == 0 else -1


def extended_magical_status(
    family: str, params: Params, p: Partition, signed: SignedPartitionData
) -> MagicalStatus:
    """Evaluate the criterion on one real orbit of a classical form."""
    if family not in CLASSICAL_FAMILIES:
        raise DomainError(f"criterion evaluation needs a classical family, got {family!r}")
    if signed.family != family or tuple(signed.params) != tuple(params):
        raise DomainError(f"signed datum {signed} does not belong to {family}{params}")
    if signed.partition != p:
        raise DomainError(f"signed datum {signed} does not refine {p}")

    form = describe(family, tuple(params))
    ambient = form.complexification()
    n = multiplicities_formula(ambient, p)
    cz = centralizer_realform(signed)
    witness = Witness(
        m_minus_h=form.s,
        g0_minus_2c=dim_g0_formula(ambient, p) - 2 * dim_c_formula(ambient, p),
        centralizer_compact=cz.is_compact,
        even_triple=all(j % 2 == 0 for j in n),
    )
    if not witness.centralizer_compact or witness.m_minus_h != witness.g0_minus_2c:
        verdict = Verdict.NOT_EXTENDED_MAGICAL
    elif witness.even_triple:
        verdict = Verdict.EVEN_MAGICAL
    else:
        verdict = Verdict.ODD_MAGICAL
    return MagicalStatus(verdict=verdict, witness=witness, centralizer=cz)


@dataclass(frozen=True)
class ClassifiedOrbit:
    """One magical row of a classification scan."""

    family: str
    params: Params
    label: OrbitLabel
    status: MagicalStatus
    signed: SignedPartitionData  # representative sign assignment
    data_count: int  # how many sign assignments reach the verdict

    @property
    def sort_key(self):
        return self.params, self.label.sort_key

    def __str__(self) -> str:
        name = describe(self.family, self.params).name
        return f"{name} {self.label}: {self.status.verdict}"


def classify_realform(family: str, params: Params) -> Tuple[ClassifiedOrbit, ...]:
    """All magical orbits of one real form, sorted by orbit label.

    Very even D partitions contribute both tagged labels; the verdict is
    a function of the partition and signs alone, so the pair agrees.
    """
    form = describe(family, tuple(params))
    ambient = form.complexification()
    rows: List[ClassifiedOrbit] = []
    cache = {}
    for label in enumerate_orbit_labels(ambient, ambient.matrix_size):
        p = label.partition
        if p not in cache:
            hits = []
            for signed in enumerate_signed_data(family, tuple(params), p):
                status = extended_magical_status(family, tuple(params), p, signed)
                if status.verdict.is_magical:
                    hits.append((status, signed))
            if hits and any(st.verdict is not hits[0][0].verdict for st, _ in hits):
                raise DomainError(f"sign assignments of {p} disagree on the verdict")
            cache[p] = hits
        if cache[p]:
            status, signed = cache[p][0]
            rows.append(ClassifiedOrbit(family, tuple(params), label, status,
                                        signed, len(cache[p])))
    rows.sort(key=lambda row: row.sort_key)
    return tuple(rows)


def family_parameter_space(family: str, size_bound: int) -> List[Params]:
    """Parameter tuples of a classical family up to the size bound.

    Sizes count p+q for su, so and sp(2p,2q), n for sl(n,R) and sp(2n,R),
    and m for su*(2m) and so*(2m).  Pairs are canonicalized to p <= q;
    lower cutoffs skip non-simple or redundant small members.
    """
    if family == "su":
        return [(p, q) for q in range(1, size_bound) for p in range(1, q + 1)
                if p + q <= size_bound]
    if family == "sl":
        return [(n,) for n in range(2, size_bound + 1)]
    if family == "sustar":
        return [(m,) for m in range(2, size_bound + 1)]
    if family == "so":
        return [(p, q) for q in range(1, size_bound) for p in range(1, q + 1)
                if 5 <= p + q <= size_bound]
    if family == "sostar":
        return [(m,) for m in range(3, size_bound + 1)]
    if family == "spr":
        return [(n,) for n in range(2, size_bound + 1)]
    if family == "sp":
        return [(p, q) for q in range(1, size_bound) for p in range(1, q + 1)
                if p + q <= size_bound]
    raise DomainError(f"no parameter space for family {family!r}")


def classify_family(family: str, size_bound: int) -> Tuple[ClassifiedOrbit, ...]:
    """Exhaustive scan of a classical family: every parameter tuple up to
    the bound, every orbit label, every sign assignment."""
    if family not in CLASSICAL_FAMILIES:
        raise DomainError(f"family scans cover classical families, got {family!r}")
    rows: List[ClassifiedOrbit] = []
    for params in sorted(family_parameter_space(family, size_bound),
                         key=lambda t: (sum(t), t)):
        rows.extend(classify_realform(family, params))
    return tuple(rows)


def admits_even_magical(family: str, params: Params = ()) -> bool:
    """Whether the real form carries an even magical triple at all.

    The four qualifying families: split real forms; Hermitian forms of
    tube type whose complexification is A_{2n-1}, B_n, C_n, D_n or E7;
    so(p,q) with p, q >= 3; and E6^2, E7^-5, E8^-24, F4^4.
    """
    form = describe(family, tuple(params))
    ambient = form.complexification()
    if form.ss_rank == ambient.rank:  # split forms have full restricted rank
        return True
    if form.hermitian and form.tube_type:
        letter = ambient.family.value
        if letter in ("B", "C", "D") or ambient.name == "E7":
            return True
        if letter == "A" and ambient.rank % 2 == 1:
            return True
    if family == "so" and min(params) >= 3:
        return True
    return family in ("E6^2", "E7^-5", "E8^-24", "F4^4")
