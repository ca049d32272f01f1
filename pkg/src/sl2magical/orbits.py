"""Nilpotent orbit labels: partitions, parity rules, signed refinements.

Complex nilpotent orbits of the classical algebras are labeled by Jordan
type, a partition of the defining representation's dimension, subject to
the usual parity constraints (even parts of B/D partitions and odd parts
of C partitions occur with even multiplicity).  Very even D partitions
label two orbits, tagged I and II.

Real forms refine the label with row signs in the signed-Young-diagram
sense: a row of length i carries a leading sign, and a row starting with
+ contributes ceil(i/2) plus-boxes and floor(i/2) minus-boxes.  (p_i, q_i)
count the rows of length i by leading sign.  The quaternionic forms
(su*, so*, sp(2p,2q)) only meet complex orbits whose multiplicities are
all even; their row counts r_i are half the complex multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from .errors import DomainError
from .rootsystems import LieFamily, LieType, WeightedDynkinDiagram

SignTable = Tuple[Tuple[int, Tuple[int, int]], ...]

#: Real-form family tags accepted by the signed-data enumerator.
REALFORM_FAMILIES = ("su", "sl", "sustar", "so", "sostar", "spr", "sp")

#: Families whose row counts are half the complex Jordan multiplicities.
QUATERNIONIC_FAMILIES = ("sustar", "sostar", "sp")


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise DomainError("empty partition")
        if any(p < 1 for p in self.parts):
            raise DomainError(f"partition parts must be positive, got {self.parts}")
        ordered = tuple(sorted(self.parts, reverse=True))
        if ordered != self.parts:
            object.__setattr__(self, "parts", ordered)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse '2,2,1', exponent shorthand '2^2,1', or bracketed '[2^2,1]'."""
        body = text.strip().strip("[]").replace(" ", "")
        if not body:
            raise DomainError(f"cannot parse partition {text!r}")
        parts: List[int] = []
        for token in body.split(","):
            base, _, exp = token.partition("^")
            try:
                value = int(base)
                count = int(exp) if exp else 1
            except ValueError:
                raise DomainError(f"cannot parse partition token {token!r}") from None
            if count < 1:
                raise DomainError(f"nonpositive exponent in {token!r}")
            parts.extend([value] * count)
        return cls(tuple(parts))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def multiplicity(self, part: int) -> int:
        return self.parts.count(part)

    def multiplicities(self) -> Dict[int, int]:
        out: Dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    def dual(self) -> "Partition":
        return Partition(tuple(sum(1 for p in self.parts if p >= k)
                               for k in range(1, self.parts[0] + 1)))

    @property
    def very_even(self) -> bool:
        """All parts even; in type D this partition labels two orbits."""
        return all(p % 2 == 0 for p in self.parts)

    def __str__(self) -> str:
        pieces = []
        for part in sorted(set(self.parts), reverse=True):
            r = self.multiplicity(part)
            pieces.append(f"{part}^{r}" if r > 1 else f"{part}")
        return "[" + ",".join(pieces) + "]"


def partitions_of(n: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """All partitions of n in descending lexicographic order."""
    if n == 0:
        yield ()
        return
    cap = n if max_part is None else min(max_part, n)
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def _family_letter(t: Union[LieType, LieFamily, str]) -> str:
    if isinstance(t, LieType):
        return t.family.value
    if isinstance(t, LieFamily):
        return t.value
    return str(t)


def partition_fits_family(t: Union[LieType, LieFamily, str], p: Partition) -> bool:
    """Parity test: B/D need even parts with even multiplicity, C needs odd
    parts with even multiplicity, A is unconstrained."""
    fam = _family_letter(t)
    if fam == "A":
        return True
    if fam in ("B", "D"):
        return all(r % 2 == 0 for part, r in p.multiplicities().items() if part % 2 == 0)
    if fam == "C":
        return all(r % 2 == 0 for part, r in p.multiplicities().items() if part % 2 == 1)
    raise DomainError(f"no partition classification for family {fam}")


def enumerate_partitions(t: Union[LieType, LieFamily, str], n: int) -> List[Partition]:
    """All orbit partitions of n for the given classical family, descending.

    When t is a full LieType, n must be its defining-representation size.
    A bare family letter only needs n of the right parity (so that e.g.
    D-parity partitions of 4 are reachable even though D2 is not simple).
    """
    fam = _family_letter(t)
    if fam not in "ABCD":
        raise DomainError(f"no partition classification for family {fam}")
    if isinstance(t, LieType) and n != t.matrix_size:
        raise DomainError(f"{t.name} acts on dimension {t.matrix_size}, got n={n}")
    if fam == "B" and n % 2 == 0:
        raise DomainError(f"B-type needs odd n, got {n}")
    if fam in ("C", "D") and n % 2 == 1:
        raise DomainError(f"{fam}-type needs even n, got {n}")
    out = []
    for parts in partitions_of(n):
        cand = Partition(parts)
        if partition_fits_family(fam, cand):
            out.append(cand)
    return out


@dataclass(frozen=True)
class OrbitLabel:
    """A complex-orbit label: partition plus I/II tag for very even D pairs."""

    partition: Partition
    tag: str = ""

    def __post_init__(self) -> None:
        if self.tag not in ("", "I", "II"):
            raise DomainError(f"orbit tag must be '', 'I' or 'II', got {self.tag!r}")

    def __str__(self) -> str:
        return f"{self.partition}_{self.tag}" if self.tag else str(self.partition)

    @property
    def sort_key(self):
        return tuple(-p for p in self.partition.parts), self.tag


def enumerate_orbit_labels(t: Union[LieType, LieFamily, str], n: int) -> List[OrbitLabel]:
    """Orbit labels for the family, with very even D partitions doubled."""
    fam = _family_letter(t)
    labels: List[OrbitLabel] = []
    for p in enumerate_partitions(t, n):
        if fam == "D" and p.very_even:
            labels.append(OrbitLabel(p, "I"))
            labels.append(OrbitLabel(p, "II"))
        else:
            labels.append(OrbitLabel(p))
    return labels


def weighted_dynkin_from_partition(t: LieType, p: Partition) -> WeightedDynkinDiagram:
    """Weighted Dynkin diagram of the orbit with the given Jordan type.

    Each part i contributes the weight string (i-1, i-3, ..., 1-i); the
    dominant Cartan coordinates are the largest entries of the merged
    multiset, and labels evaluate the classical simple roots on them.
    Very even D partitions get the class-I diagram; class II swaps the
    last two labels (see very_even_partner_labels).
    """
    fam = t.family
    if not fam.is_classical:
        raise DomainError(f"{t.name} orbits are not labeled by partitions")
    if p.n != t.matrix_size:
        raise DomainError(f"{t.name} needs a partition of {t.matrix_size}, got {p.n}")
    if not partition_fits_family(t, p):
        raise DomainError(f"{p} violates the {fam.value}-type parity rule")
    weights: List[int] = []
    for part in p.parts:
        weights.extend(range(part - 1, -part, -2))
    weights.sort(reverse=True)
    rank = t.rank
    if fam is LieFamily.A:
        labels = [weights[k] - weights[k + 1] for k in range(rank)]
    else:
        h = weights[:rank]
        labels = [h[k] - h[k + 1] for k in range(rank - 1)]
        if fam is LieFamily.B:
            labels.append(h[-1])
        elif fam is LieFamily.C:
            labels.append(2 * h[-1])
        else:
            labels[-1] = h[-2] - h[-1]
            labels.append(h[-2] + h[-1])
    bad = [x for x in labels if x not in (0, 1, 2)]
    if bad:
        raise AssertionError(f"{t.name} {p}: labels {labels} leave {{0,1,2}}")
    return WeightedDynkinDiagram(lie_type=t, labels=tuple(labels))


def very_even_partner_labels(w: WeightedDynkinDiagram) -> WeightedDynkinDiagram:
    """Class-II diagram of a very even D orbit: swap the last two labels."""
    if w.lie_type.family is not LieFamily.D:
        raise DomainError("only D-type orbits come in very even pairs")
    swapped = w.labels[:-2] + (w.labels[-1], w.labels[-2])
    return WeightedDynkinDiagram(lie_type=w.lie_type, labels=swapped)


def plus_boxes(part: int, p_i: int, q_i: int) -> int:
    """Plus-box count of p_i rows starting + and q_i rows starting -."""
    return (part + 1) // 2 * p_i + part // 2 * q_i


@dataclass(frozen=True)
class SignedPartitionData:
    """A real nilpotent orbit label: partition plus leading-sign counts.

    signs holds (part, (p_i, q_i)) for exactly the parts whose rows carry
    an independent sign choice in the given family; forced splits (even
    rows of so(p,q), odd rows of sp(2n,R)) are materialized too so that
    downstream centralizer code never rederives them.  Families without
    sign decorations (sl, su*) have empty signs.
    """

    family: str
    params: Tuple[int, ...]
    partition: Partition
    signs: SignTable = ()

    def __post_init__(self) -> None:
        if self.family not in REALFORM_FAMILIES:
            raise DomainError(f"unknown real-form family {self.family!r}")
        for part, (a, b) in self.signs:
            if a < 0 or b < 0:
                raise DomainError(f"negative sign count on part {part}")
            if a + b != self.row_count(part):
                raise DomainError(
                    f"part {part}: signs {(a, b)} do not sum to r_i = {self.row_count(part)}"
                )

    def row_count(self, part: int) -> int:
        """r_i: rows of length part, in the family's own counting."""
        r = self.partition.multiplicity(part)
        return r // 2 if self.family in QUATERNIONIC_FAMILIES else r

    def sign_split(self, part: int) -> Optional[Tuple[int, int]]:
        for entry, pq in self.signs:
            if entry == part:
                return pq
        return None

    def __str__(self) -> str:
        if not self.signs:
            return str(self.partition)
        sgn = ",".join(f"{part}:({a},{b})" for part, (a, b) in self.signs)
        return f"{self.partition}{{{sgn}}}"


def _split_range(total: int):
    return ((a, total - a) for a in range(total, -1, -1))


def _product_of_splits(parts: Sequence[int], totals: Sequence[int]):
    if not parts:
        yield ()
        return
    for head in _split_range(totals[0]):
        for tail in _product_of_splits(parts[1:], totals[1:]):
            yield ((parts[0], head),) + tail


def enumerate_signed_data(
    family: str, params: Tuple[int, ...], p: Partition
) -> List[SignedPartitionData]:
    """All leading-sign assignments realizing the orbit inside the form.

    Returns [] when the partition does not meet the real form at all (wrong
    signature, or odd multiplicities for a quaternionic family).  Output is
    deterministic: plus-heavy splits first, larger parts varying slowest.
    """
    if family not in REALFORM_FAMILIES:
        raise DomainError(f"unknown real-form family {family!r}")
    mult = p.multiplicities()
    if family == "su":
        pp, qq = params
        if p.n != pp + qq:
            raise DomainError(f"su{params} needs a partition of {pp + qq}, got {p.n}")
        parts = sorted(mult, reverse=True)
        out = []
        for signs in _product_of_splits(parts, [mult[i] for i in parts]):
            if sum(plus_boxes(i, a, b) for i, (a, b) in signs) == pp:
                out.append(SignedPartitionData(family, params, p, signs))
        return out

    if family == "sl":
        (nn,) = params
        if p.n != nn:
            raise DomainError(f"sl({nn},R) needs a partition of {nn}, got {p.n}")
        return [SignedPartitionData(family, params, p)]

    if family == "sustar":
        (m,) = params
        if p.n != 2 * m:
            raise DomainError(f"su*({2 * m}) needs a partition of {2 * m}, got {p.n}")
        if any(r % 2 for r in mult.values()):
            return []
        return [SignedPartitionData(family, params, p)]

    if family == "so":
        pp, qq = params
        if p.n != pp + qq:
            raise DomainError(f"so{params} needs a partition of {pp + qq}, got {p.n}")
        if not partition_fits_family("B" if p.n % 2 else "D", p):
            return []
        odd_parts = sorted((i for i in mult if i % 2), reverse=True)
        forced = tuple((i, (mult[i] // 2, mult[i] // 2)) for i in sorted(mult, reverse=True)
                       if i % 2 == 0)
        base = sum(plus_boxes(i, a, b) for i, (a, b) in forced)
        out = []
        for choice in _product_of_splits(odd_parts, [mult[i] for i in odd_parts]):
            if base + sum(plus_boxes(i, a, b) for i, (a, b) in choice) == pp:
                merged = tuple(sorted(forced + choice, reverse=True))
                out.append(SignedPartitionData(family, params, p, merged))
        return out

    if family == "spr":
        (nn,) = params
        if p.n != 2 * nn:
            raise DomainError(f"sp({2 * nn},R) needs a partition of {2 * nn}, got {p.n}")
        if not partition_fits_family("C", p):
            return []
        even_parts = sorted((i for i in mult if i % 2 == 0), reverse=True)
        forced = tuple((i, (mult[i] // 2, mult[i] // 2)) for i in sorted(mult, reverse=True)
                       if i % 2 == 1)
        out = []
        for choice in _product_of_splits(even_parts, [mult[i] for i in even_parts]):
            merged = tuple(sorted(forced + choice, reverse=True))
            out.append(SignedPartitionData(family, params, p, merged))
        return out

    if family == "sostar":
        (m,) = params
        if p.n != 2 * m:
            raise DomainError(f"so*({2 * m}) needs a partition of {2 * m}, got {p.n}")
        if any(r % 2 for r in mult.values()):
            return []
        even_parts = sorted((i for i in mult if i % 2 == 0), reverse=True)
        out = []
        for choice in _product_of_splits(even_parts, [mult[i] // 2 for i in even_parts]):
            out.append(SignedPartitionData(family, params, p, choice))
        return out

    # sp(2p, 2q)
    pp, qq = params
    if p.n != 2 * (pp + qq):
        raise DomainError(f"sp(2p,2q) at {params} needs a partition of {2 * (pp + qq)}")
    if not partition_fits_family("C", p):
        return []
    if any(r % 2 for r in mult.values()):
        return []
    odd_parts = sorted((i for i in mult if i % 2), reverse=True)
    even_quota = sum((i // 2) * (mult[i] // 2) for i in mult if i % 2 == 0)
    out = []
    for choice in _product_of_splits(odd_parts, [mult[i] // 2 for i in odd_parts]):
        if even_quota + sum(plus_boxes(i, a, b) for i, (a, b) in choice) == pp:
            out.append(SignedPartitionData(family, params, p, choice))
    return out
