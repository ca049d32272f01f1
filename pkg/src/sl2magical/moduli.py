"""Slodowy parameter counts, expected dimensions, and Cayley domains.

The parameter space attached to a triple over a genus-g surface collects
the deformations of a bundle for the compact part of the centralizer and
one section space per highest-weight line that the Cartan involution
places in m.  A line of ad_h weight w twists by K^{w/2+1}, whose real
section count is 2(g-1)(w+1); the bundle part contributes 2(g-1) per
dimension of c cap h.  The expected dimension of a component is
2(g-1) dim g^R, and the shortfall (the rigidity gap) vanishes exactly
for even magical data.

Odd magical triples instead feed the Cayley correspondence: their
maximal-component moduli are exhausted by a K^2-twisted moduli space of
a smaller group times a rank-one factor.  cayley_domain records that
smaller group per family.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple, Union

from .errors import DomainError, MissingDataError
from .matrixoracle import build_matrix_triple, oracle_sigma_split
from .orbits import OrbitLabel, Partition, SignedPartitionData
from .realforms import RealFormDescriptor
from .realforms import describe, milnor_wood as milnor_wood_bound

Params = Tuple[int, ...]
Orbit = Union[OrbitLabel, Partition]


@dataclass(frozen=True)
class SlodowyReport:
    genus: int
    slodowy_param_dim: int
    expected_dim: int
    gap: int
    milnor_wood: Optional[int]  # only for Hermitian forms
    a: Tuple[Tuple[int, int], ...]  # (weight, dim A_w), zero rows dropped
    dim_c_cap_h: int

    def a_dict(self) -> Dict[int, int]:
        return dict(self.a)


def slodowy_parameter_dim(genus: int, dim_c_cap_h: int, a: Mapping[int, int]) -> int:
    """Real parameter count 2(g-1)[dim(c cap h) + sum_w a_w (w+1)]."""
    if genus < 2:
        raise DomainError(f"parameter counts need genus >= 2, got {genus}")
    if dim_c_cap_h < 0 or any(v < 0 for v in a.values()):
        raise DomainError("negative dimension in parameter count")
    if any(w < 1 for w in a):
        raise DomainError("multiplicity table a is indexed by positive weights")
    return 2 * (genus - 1) * (dim_c_cap_h + sum(v * (w + 1) for w, v in a.items()))


def expected_dim(genus: int, d: RealFormDescriptor) -> int:
    """Dimension 2(g-1) dim g^R that a full component would have."""
    if genus < 2:
        raise DomainError(f"expected dimensions need genus >= 2, got {genus}")
    return 2 * (genus - 1) * d.dim_g_real


def _classical_split(form: RealFormDescriptor, p: Partition,
                     signed: SignedPartitionData) -> Tuple[int, Dict[int, int]]:
    triple = build_matrix_triple(form.complexification(), p)
    report = oracle_sigma_split(triple, signed)
    dim_c_cap_h = report.split_at(0)[0]
    a = {w: m for w, m in report.m_parts().items() if w > 0 and m > 0}
    return dim_c_cap_h, a


def _exceptional_split(form: RealFormDescriptor, orbit) -> Tuple[int, Dict[int, int]]:
    # deferred import: the dataset module is optional for classical work
    from .dataset import find_record

    record = find_record(form.family, orbit)
    if record is None:
        raise MissingDataError(f"no curated record for {form.family} orbit {orbit}")
    data = record.sl2_data()
    if data.max_weight > 2:
        raise MissingDataError(
            f"{form.family} {record.wdd}: records only localize the involution "
            "up to weight 2"
        )
    missing = [c for c in ("dim_V_cap_h", "dim_c_cap_h", "dim_Veven_cap_m")
               if getattr(record, c) is None]
    if missing:
        raise MissingDataError(f"{form.family} record lacks columns {missing}")
    a2 = record.dim_Veven_cap_m
    a1 = (data.dim_v_rho - record.dim_V_cap_h) - a2 - (data.dim_c - record.dim_c_cap_h)
    if a1 < 0:
        raise MissingDataError(f"{form.family} record columns are inconsistent: a_1 = {a1}")
    a = {w: v for w, v in ((1, a1), (2, a2)) if v > 0}
    return record.dim_c_cap_h, a


def rigidity_report(genus: int, family: str, params: Params, orbit: Orbit,
                    signed: Optional[SignedPartitionData] = None) -> SlodowyReport:
    """Parameter count vs. expected dimension for one real orbit.

    Classical families split every highest-weight space through the
    matrix-model involution; exceptional forms read the split off the
    curated record for the orbit's weighted diagram.  The gap is zero
    exactly on even magical data.
    """
    form = describe(family, tuple(params))
    if form.is_exceptional:
        dim_c_cap_h, a = _exceptional_split(form, orbit)
    else:
        p = orbit.partition if isinstance(orbit, OrbitLabel) else orbit
        if signed is None:
            raise DomainError("classical rigidity reports need a signed datum")
        if signed.partition != p:
            raise DomainError(f"signed datum {signed} does not refine {p}")
        dim_c_cap_h, a = _classical_split(form, p, signed)

    param = slodowy_parameter_dim(genus, dim_c_cap_h, a)
    expect = expected_dim(genus, form)
    mw = milnor_wood_bound(form, genus) if form.hermitian else None
    return SlodowyReport(
        genus=genus, slodowy_param_dim=param, expected_dim=expect,
        gap=expect - param, milnor_wood=mw,
        a=tuple(sorted(a.items())), dim_c_cap_h=dim_c_cap_h,
    )


@dataclass(frozen=True)
class CayleyDomain:
    """Domain bookkeeping of the Cayley map for an odd magical family."""

    tilde_g_real: str  # semisimple part of the Cayley real form
    twist_exponent: int  # K-power on the tilde factor
    extra_factor: str  # the rank-one centralizer summand
    m_c: int
    l_weights: Tuple[int, ...]
    tube_form: str  # maximal tube subform the triple restricts to


def cayley_domain(family: str, params: Params = ()) -> CayleyDomain:
    """tilde g^R and its hat-c factor for the families with odd triples:
    su(p,q) with p < q, so*(4m+2), and E6^-14."""
    if family == "su":
        p, q = params
        if not 1 <= p < q:
            raise DomainError(f"su{params} has no odd magical triple")
        return CayleyDomain(
            tilde_g_real=f"sl({p},C)", twist_exponent=2,
            extra_factor=f"s(u({q - p})+u(1))", m_c=2, l_weights=(0,),
            tube_form=f"su({p},{p})",
        )
    if family == "sostar":
        (m,) = params
        if m < 3 or m % 2 == 0:
            raise DomainError(f"so*({2 * m}) has no odd magical triple")
        return CayleyDomain(
            tilde_g_real=f"su*({m - 1})", twist_exponent=2,
            extra_factor="u(1)", m_c=2, l_weights=(0,),
            tube_form=f"so*({2 * (m - 1)})",
        )
    if family == "E6^-14":
        return CayleyDomain(
            tilde_g_real="so(1,7)", twist_exponent=2,
            extra_factor="u(1)", m_c=2, l_weights=(0,),
            tube_form="so(2,8)",
        )
    raise DomainError(f"{family} has no odd magical triple")
