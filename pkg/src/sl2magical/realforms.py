"""Catalog of noncompact real forms and their centralizer arithmetic.

Descriptors carry the Cartan-decomposition dimensions (dim h, dim m, and
their difference s), Hermitian/tube flags, the symmetric-space rank, and
the maximal tube-type subform for the Hermitian nontube families.  The
stored ranks are validated by a restricted-root checksum: the rank plus
the total multiplicity of the positive restricted roots must equal dim m.

Centralizers of triples are assembled factor-by-factor from signed
partition data, with compactness decided by the closed per-family
conditions (definite unitary/orthogonal/quaternionic factors are compact,
split and star factors of positive rank are not).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

from .errors import DomainError
from .orbits import SignedPartitionData
from .rootsystems import LieType

Params = Tuple[int, ...]

EXCEPTIONAL_FORMS: Dict[str, Dict] = {
    # token: ambient complex type, dim h, symmetric-space rank,
    #        restricted positive roots as (count, multiplicity) classes,
    #        hermitian, tube, maximal subtube
    "E6^6":   {"ambient": "E6", "dim_h": 36, "rank": 6, "roots": ((36, 1),)},
    "E6^2":   {"ambient": "E6", "dim_h": 38, "rank": 4, "roots": ((12, 1), (12, 2))},
    "E6^-14": {"ambient": "E6", "dim_h": 46, "rank": 2, "roots": ((2, 6), (2, 8), (2, 1)),
               "hermitian": True, "tube": False, "subtube": "so(2,8)"},
    "E6^-26": {"ambient": "E6", "dim_h": 52, "rank": 2, "roots": ((3, 8),)},
    "E7^7":   {"ambient": "E7", "dim_h": 63, "rank": 7, "roots": ((63, 1),)},
    "E7^-5":  {"ambient": "E7", "dim_h": 69, "rank": 4, "roots": ((12, 1), (12, 4))},
    "E7^-25": {"ambient": "E7", "dim_h": 79, "rank": 3, "roots": ((6, 8), (3, 1)),
               "hermitian": True, "tube": True},
    "E8^8":   {"ambient": "E8", "dim_h": 120, "rank": 8, "roots": ((120, 1),)},
    "E8^-24": {"ambient": "E8", "dim_h": 136, "rank": 4, "roots": ((12, 1), (12, 8))},
    "F4^4":   {"ambient": "F4", "dim_h": 24, "rank": 4, "roots": ((24, 1),)},
    "F4^-20": {"ambient": "F4", "dim_h": 36, "rank": 1, "roots": ((1, 8), (1, 7))},
    "G2^2":   {"ambient": "G2", "dim_h": 6, "rank": 2, "roots": ((6, 1),)},
}

CLASSICAL_FAMILIES = ("su", "sl", "sustar", "so", "sostar", "spr", "sp")


@dataclass(frozen=True)
class RealFormDescriptor:
    family: str
    params: Params
    name: str
    dim_g_real: int
    dim_h: int
    hermitian: bool
    tube_type: Optional[bool]  # None when not Hermitian
    ss_rank: int
    maximal_subtube: Optional[str]

    @property
    def dim_m(self) -> int:
        return self.dim_g_real - self.dim_h

    @property
    def s(self) -> int:
        return self.dim_m - self.dim_h

    @property
    def is_exceptional(self) -> bool:
        return self.family in EXCEPTIONAL_FORMS

    def complexification(self) -> LieType:
        if self.is_exceptional:
            return LieType.of(EXCEPTIONAL_FORMS[self.family]["ambient"])
        fam = self.family
        if fam in ("su", "sl"):
            return LieType.of("A", self._n() - 1)
        if fam == "sustar":
            return LieType.of("A", self._n() - 1)
        if fam == "so":
            n = self._n()
            return LieType.of("B", (n - 1) // 2) if n % 2 else LieType.of("D", n // 2)
        if fam == "sostar":
            return LieType.of("D", self.params[0])
        if fam == "spr":
            return LieType.of("C", self.params[0])
        return LieType.of("C", self.params[0] + self.params[1])

    def _n(self) -> int:
        """Size of the complex defining representation."""
        fam = self.family
        if fam in ("su", "so"):
            return self.params[0] + self.params[1]
        if fam == "sl":
            return self.params[0]
        if fam in ("sustar", "sostar"):
            return 2 * self.params[0]
        if fam == "spr":
            return 2 * self.params[0]
        if fam == "sp":
            return 2 * (self.params[0] + self.params[1])
        raise DomainError(f"{self.name} has no defining representation size")


def _herm_so(p: int, q: int) -> bool:
    return min(p, q) == 2 or max(p, q) == 2


def describe(family: str, params: Params = ()) -> RealFormDescriptor:
    """Descriptor for a noncompact real form; family is a classical tag
    (su, sl, sustar, so, sostar, spr, sp) or an exceptional token like
    'E6^-14'."""
    if family in EXCEPTIONAL_FORMS:
        info = EXCEPTIONAL_FORMS[family]
        ambient = LieType.of(info["ambient"])
        return RealFormDescriptor(
            family=family, params=(), name=family,
            dim_g_real=ambient.dim, dim_h=info["dim_h"],
            hermitian=info.get("hermitian", False),
            tube_type=info.get("tube") if info.get("hermitian") else None,
            ss_rank=info["rank"],
            maximal_subtube=info.get("subtube"),
        )
    if family not in CLASSICAL_FAMILIES:
        raise DomainError(f"unknown real form family {family!r}")

    if family == "su":
        p, q = params
        if p < 1 or q < 1:
            raise DomainError("su(p,q) needs p, q >= 1")
        n = p + q
        return RealFormDescriptor(
            family, params, f"su({p},{q})", n * n - 1, p * p + q * q - 1,
            hermitian=True, tube_type=(p == q), ss_rank=min(p, q),
            maximal_subtube=None if p == q else f"su({min(p, q)},{min(p, q)})",
        )
    if family == "sl":
        (n,) = params
        if n < 2:
            raise DomainError("sl(n,R) needs n >= 2")
        herm = n == 2
        return RealFormDescriptor(
            family, params, f"sl({n},R)", n * n - 1, n * (n - 1) // 2,
            hermitian=herm, tube_type=True if herm else None, ss_rank=n - 1,
            maximal_subtube=None,
        )
    if family == "sustar":
        (m,) = params
        if m < 2:
            raise DomainError("su*(2m) needs m >= 2")
        return RealFormDescriptor(
            family, params, f"su*({2 * m})", 4 * m * m - 1, m * (2 * m + 1),
            hermitian=False, tube_type=None, ss_rank=m - 1, maximal_subtube=None,
        )
    if family == "so":
        p, q = params
        if p < 1 or q < 1 or p + q < 5:
            raise DomainError("so(p,q) needs p, q >= 1 and p + q >= 5 here")
        n = p + q
        herm = _herm_so(p, q)
        return RealFormDescriptor(
            family, params, f"so({p},{q})", n * (n - 1) // 2,
            p * (p - 1) // 2 + q * (q - 1) // 2,
            hermitian=herm, tube_type=True if herm else None, ss_rank=min(p, q),
            maximal_subtube=None,
        )
    if family == "sostar":
        (m,) = params
        if m < 3:
            raise DomainError("so*(2m) needs m >= 3 here")
        nontube = m % 2 == 1
        return RealFormDescriptor(
            family, params, f"so*({2 * m})", m * (2 * m - 1), m * m,
            hermitian=True, tube_type=not nontube, ss_rank=m // 2,
            maximal_subtube=f"so*({2 * (m - 1)})" if nontube else None,
        )
    if family == "spr":
        (n,) = params
        if n < 1:
            raise DomainError("sp(2n,R) needs n >= 1")
        return RealFormDescriptor(
            family, params, f"sp({2 * n},R)", n * (2 * n + 1), n * n,
            hermitian=True, tube_type=True, ss_rank=n, maximal_subtube=None,
        )
    p, q = params
    if p < 1 or q < 1:
        raise DomainError("sp(2p,2q) needs p, q >= 1")
    n = p + q
    return RealFormDescriptor(
        family, params, f"sp({2 * p},{2 * q})", n * (2 * n + 1),
        p * (2 * p + 1) + q * (2 * q + 1),
        hermitian=False, tube_type=None, ss_rank=min(p, q), maximal_subtube=None,
    )


_TOKEN_RE = re.compile(r"^([A-G][0-9])\^(-?[0-9]+)$")


def exceptional_s_value(token: str) -> int:
    match = _TOKEN_RE.match(token)
    if not match or token not in EXCEPTIONAL_FORMS:
        raise DomainError(f"unknown exceptional real form {token!r}")
    return int(match.group(2))


def restricted_root_data(d: RealFormDescriptor) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """(rank, ((positive-root count, multiplicity), ...)) of the restricted
    root system; rank + sum(count * mult) must equal dim m."""
    if d.is_exceptional:
        info = EXCEPTIONAL_FORMS[d.family]
        return info["rank"], tuple(info["roots"])
    fam, params = d.family, d.params
    if fam == "su":
        p, q = sorted(params)
        if p < q:
            return p, ((p * (p - 1), 2), (p, 2 * (q - p)), (p, 1))
        return p, ((p * (p - 1), 2), (p, 1))
    if fam == "sl":
        (n,) = params
        return n - 1, ((n * (n - 1) // 2, 1),)
    if fam == "sustar":
        (m,) = params
        return m - 1, ((m * (m - 1) // 2, 4),)
    if fam == "so":
        p, q = sorted(params)
        if p < q:
            return p, ((p * (p - 1), 1), (p, q - p))
        return p, ((p * (p - 1), 1),)
    if fam == "sostar":
        (m,) = params
        k = m // 2
        if m % 2 == 0:
            return k, ((k * (k - 1), 4), (k, 1))
        return k, ((k * (k - 1), 4), (k, 4), (k, 1))
    if fam == "spr":
        (n,) = params
        return n, ((n * (n - 1), 1), (n, 1))
    p, q = sorted(params)
    if p < q:
        return p, ((p * (p - 1), 4), (p, 4 * (q - p)), (p, 3))
    return p, ((p * (p - 1), 4), (p, 3))


def restricted_root_checksum(d: RealFormDescriptor) -> bool:
    rank, roots = restricted_root_data(d)
    return rank == d.ss_rank and rank + sum(c * m for c, m in roots) == d.dim_m


def milnor_wood(d: RealFormDescriptor, genus: int) -> int:
    if not d.hermitian:
        raise DomainError(f"{d.name} is not Hermitian; no Milnor-Wood bound")
    if genus < 2:
        raise DomainError("Milnor-Wood arithmetic needs genus >= 2")
    return d.ss_rank * (2 * genus - 2)


@dataclass(frozen=True)
class CentralizerRealForm:
    """Reductive centralizer of a triple inside the real form."""

    factors: Tuple[str, ...]
    is_compact: bool
    wrapped: bool = False  # True when the factors sit inside an s(...) trace condition

    def __str__(self) -> str:
        if not self.factors:
            return "0"
        body = "+".join(self.factors)
        return f"s({body})" if self.wrapped else body


def centralizer_realform(signed: SignedPartitionData) -> CentralizerRealForm:
    """Factor list and compactness per the signed-data conventions.

    su: s(sum u(p_i,q_i)); sl: s(sum gl(r_i,R)); su*: s(sum u*(2 r_i));
    so: sp(r_i,R) on even parts + so(p_i,q_i) on odd; sp(2n,R) the mirror;
    so*: sp(2p_i,2q_i) on even + so*(2 r_i) on odd; sp(2p,2q) the mirror.
    """
    fam = signed.family
    part_list = sorted(signed.partition.multiplicities(), reverse=True)
    factors = []
    compact = True

    if fam == "su":
        for i in part_list:
            a, b = signed.sign_split(i)
            factors.append(f"u({a},{b})")
            compact = compact and (a == 0 or b == 0)
        return CentralizerRealForm(tuple(factors), compact, wrapped=True)

    if fam == "sl":
        for i in part_list:
            factors.append(f"gl({signed.row_count(i)},R)")
        compact = signed.partition.parts == (signed.params[0],)
        return CentralizerRealForm(tuple(factors), compact, wrapped=True)

    if fam == "sustar":
        for i in part_list:
            factors.append(f"u*({2 * signed.row_count(i)})")
        m = signed.params[0]
        compact = signed.partition.parts == (m, m)
        return CentralizerRealForm(tuple(factors), compact, wrapped=True)

    if fam == "so":
        for i in part_list:
            if i % 2 == 0:
                r = signed.row_count(i)
                factors.append(f"sp({r},R)")
                compact = False
            else:
                a, b = signed.sign_split(i)
                factors.append(f"so({a},{b})")
                compact = compact and (a == 0 or b == 0)
        return CentralizerRealForm(tuple(factors), compact)

    if fam == "spr":
        for i in part_list:
            if i % 2 == 1:
                r = signed.row_count(i)
                factors.append(f"sp({r},R)")
                compact = False
            else:
                a, b = signed.sign_split(i)
                factors.append(f"so({a},{b})")
                compact = compact and (a == 0 or b == 0)
        return CentralizerRealForm(tuple(factors), compact)

    if fam == "sostar":
        for i in part_list:
            r = signed.row_count(i)
            if i % 2 == 0:
                a, b = signed.sign_split(i)
                factors.append(f"sp({2 * a},{2 * b})")
                compact = compact and (a == 0 or b == 0)
            else:
                factors.append(f"so*({2 * r})")
                compact = compact and r <= 1
        return CentralizerRealForm(tuple(factors), compact)

    # sp(2p,2q)
    for i in part_list:
        r = signed.row_count(i)
        if i % 2 == 1:
            a, b = signed.sign_split(i)
            factors.append(f"sp({2 * a},{2 * b})")
            compact = compact and (a == 0 or b == 0)
        else:
            factors.append(f"so*({2 * r})")
            compact = compact and r <= 1
    return CentralizerRealForm(tuple(factors), compact)
