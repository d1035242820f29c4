"""Flag-domain configurations in the compact Hermitian symmetric spaces of
Sp(2n, R) and SU(p, q), and the longest-element test for generic
1-connectivity.

Each configuration packages: the root system, the Cayley involution moving
the base point to the wanted open orbit, the transported simple system it
induces, and a parabolic subset of that system cutting out the ambient
flag manifold.  A domain is generically 1-connected exactly when the
longest compact Weyl element moves phi_n_minus entirely off itself.

The five families:

  ci           Sp(2n,R) domain of signature (n-a, a) in the Lagrangian
               Grassmannian; the parabolic omits the transported long
               simple root.
  ci-fibered   two-step isotropic flags over the ci domain; the parabolic
               additionally omits the transported simple root at the
               inner dimension m.
  aiii         SU(p,q) domain of signature (p-a, a) in the Grassmannian
               of p-planes; the parabolic omits the transported simple
               root at the block split p.
  aiii-s       flags of isotropic subspaces of dimensions 1,2,..,a below
               the p-plane; `keep` selects a subsequence of those steps
               (index a+1 standing for the always-present p-plane).
  aiii-t       the mirrored variant with coisotropic steps of dimensions
               p+q-1,..,p+q-a above the p-plane, again with `keep`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import ClassVar, Iterable, Union

from .errors import ParameterError
from .parabolic import (
    ParabolicSubset,
    RootPartition,
    defect_witnesses,
    orbit_dimension_defect,
    partition,
)
from .rootcore import (
    Root,
    RootClass,
    RootSystem,
    SimpleSystem,
    build_root_system,
    classify_root,
    default_simple_system,
)
from .weyl import CayleySet, WeylElement, apply, cayley_involution, longest_element_K, transport

__all__ = [
    "CIHermitian",
    "CIFibered",
    "AIIIHermitian",
    "AIIIFiberedS",
    "AIIIFiberedT",
    "DomainSpec",
    "DomainData",
    "Prediction",
    "HERMITIAN_FAMILIES",
    "FAMILY_ORDER",
    "full_keep",
    "keep_bitmask",
    "spec_rank",
    "spec_sort_key",
    "build_domain",
    "connectivity_defect",
    "connectivity_witnesses",
    "is_generically_one_connected",
    "hermitian_shortcut_check",
    "closed_form_prediction",
]


@dataclass(frozen=True)
class CIHermitian:
    """Sp(2n,R) domain determined by the number a of sign flips."""

    family: ClassVar[str] = "ci"
    n: int
    a: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ParameterError(f"ci needs n >= 1, got n={self.n}")
        if not 0 <= self.a <= self.n:
            raise ParameterError(f"ci needs 0 <= a <= n, got a={self.a}, n={self.n}")


@dataclass(frozen=True)
class CIFibered:
    """Two-step isotropic flag domain over the ci domain, inner step m."""

    family: ClassVar[str] = "ci-fibered"
    n: int
    a: int
    m: int

    def __post_init__(self) -> None:
        if not 0 < self.m <= self.a < self.n:
            raise ParameterError(
                f"ci-fibered needs 0 < m <= a < n, got m={self.m}, a={self.a}, n={self.n}"
            )


@dataclass(frozen=True)
class AIIIHermitian:
    """SU(p,q) domain determined by the number a of Cayley-transformed lines."""

    family: ClassVar[str] = "aiii"
    p: int
    q: int
    a: int

    def __post_init__(self) -> None:
        if not 1 <= self.p <= self.q:
            raise ParameterError(f"aiii needs 1 <= p <= q, got p={self.p}, q={self.q}")
        if not 0 <= self.a <= self.p:
            raise ParameterError(f"aiii needs 0 <= a <= p, got a={self.a}, p={self.p}")


def _validate_keep(keep: frozenset[int], a: int, family: str) -> None:
    if not keep:
        raise ParameterError(f"{family} needs a nonempty keep subset")
    if not all(isinstance(i, int) and 1 <= i <= a + 1 for i in keep):
        raise ParameterError(
            f"{family} keep indices must lie in 1..{a + 1}, got {sorted(keep)}"
        )


@dataclass(frozen=True)
class AIIIFiberedS:
    """Flags of isotropic steps 1..a below the p-plane; keep subselects."""

    family: ClassVar[str] = "aiii-s"
    p: int
    q: int
    a: int
    keep: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not 1 <= self.p <= self.q:
            raise ParameterError(f"aiii-s needs 1 <= p <= q, got p={self.p}, q={self.q}")
        if not 0 <= self.a <= self.p:
            raise ParameterError(f"aiii-s needs 0 <= a <= p, got a={self.a}, p={self.p}")
        object.__setattr__(self, "keep", frozenset(self.keep))
        _validate_keep(self.keep, self.a, self.family)


@dataclass(frozen=True)
class AIIIFiberedT:
    """Flags of coisotropic steps p+q-1..p+q-a above the p-plane."""

    family: ClassVar[str] = "aiii-t"
    p: int
    q: int
    a: int
    keep: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if not 1 <= self.p <= self.q:
            raise ParameterError(f"aiii-t needs 1 <= p <= q, got p={self.p}, q={self.q}")
        if not 0 <= self.a <= self.p:
            raise ParameterError(f"aiii-t needs 0 <= a <= p, got a={self.a}, p={self.p}")
        object.__setattr__(self, "keep", frozenset(self.keep))
        _validate_keep(self.keep, self.a, self.family)


DomainSpec = Union[CIHermitian, CIFibered, AIIIHermitian, AIIIFiberedS, AIIIFiberedT]

HERMITIAN_FAMILIES = ("ci", "aiii")
FAMILY_ORDER = ("ci", "ci-fibered", "aiii", "aiii-s", "aiii-t")


def full_keep(a: int) -> frozenset[int]:
    """The keep set selecting the whole flag, steps 1..a plus the p-plane."""
    return frozenset(range(1, a + 2))


def keep_bitmask(keep: Iterable[int]) -> int:
    return sum(1 << (i - 1) for i in keep)


def spec_rank(spec: DomainSpec) -> int:
    """Lie-algebra rank: n for the ci families, p+q-1 for the aiii ones."""
    if isinstance(spec, (CIHermitian, CIFibered)):
        return spec.n
    return spec.p + spec.q - 1


def spec_sort_key(spec: DomainSpec) -> tuple[int, ...]:
    """Canonical ordering: family, then (n | p, q), a, m, keep bitmask."""
    fam = FAMILY_ORDER.index(spec.family)
    if isinstance(spec, CIHermitian):
        return (fam, spec.n, 0, spec.a, 0, 0)
    if isinstance(spec, CIFibered):
        return (fam, spec.n, 0, spec.a, spec.m, 0)
    if isinstance(spec, AIIIHermitian):
        return (fam, spec.p, spec.q, spec.a, 0, 0)
    return (fam, spec.p, spec.q, spec.a, 0, keep_bitmask(spec.keep))


@dataclass(frozen=True)
class DomainData:
    """The fully computed combinatorial package behind one domain spec."""

    spec: DomainSpec
    root_system: RootSystem
    transported_simples: SimpleSystem
    phi: ParabolicSubset
    partition: RootPartition
    w0k: WeylElement
    noncompact_negatives: frozenset[Root]


def _omitted_simple_indices(spec: DomainSpec) -> set[int]:
    # 1-based indices into the transported simple system.  The noncompact
    # simple root (index n, resp. p) is always omitted; the fibered
    # variants omit the extra flag steps.
    if isinstance(spec, CIHermitian):
        return {spec.n}
    if isinstance(spec, CIFibered):
        return {spec.m, spec.n}
    if isinstance(spec, AIIIHermitian):
        return {spec.p}
    if isinstance(spec, AIIIFiberedS):
        # step i of the flag has dimension i, so it is cut by simple root i
        return {spec.p} | {i for i in spec.keep if i <= spec.a}
    # step i of the mirrored flag has dimension p+q-i
    return {spec.p} | {spec.p + spec.q - i for i in spec.keep if i <= spec.a}


def build_domain(spec: DomainSpec) -> DomainData:
    """Assemble the root system, transported simples, parabolic subset,
    partition, and longest compact element for `spec`."""
    if isinstance(spec, (CIHermitian, CIFibered)):
        rs = build_root_system("C", n=spec.n)
    else:
        rs = build_root_system("A", p=spec.p, q=spec.q)
    canonical = default_simple_system(rs)
    mover = cayley_involution(rs, CayleySet(spec.a))
    simples = transport(canonical, mover)
    phi = ParabolicSubset.from_omitted(len(simples.simples), _omitted_simple_indices(spec))
    parts = partition(simples, phi)
    noncompact = frozenset(
        r for r in parts.phi_n_minus if classify_root(r, canonical) is not RootClass.COMPACT
    )
    return DomainData(
        spec=spec,
        root_system=rs,
        transported_simples=simples,
        phi=phi,
        partition=parts,
        w0k=longest_element_K(rs),
        noncompact_negatives=noncompact,
    )


def connectivity_defect(dd: DomainData) -> int:
    return orbit_dimension_defect(dd.w0k, dd.partition)


def connectivity_witnesses(dd: DomainData) -> tuple[Root, ...]:
    """Roots obstructing generic 1-connectivity; empty iff connected."""
    return defect_witnesses(dd.w0k, dd.partition)


def is_generically_one_connected(dd: DomainData) -> bool:
    """Whether the longest compact element moves phi_n_minus off itself."""
    return connectivity_defect(dd) == 0


def hermitian_shortcut_check(dd: DomainData) -> bool:
    """The noncompact-roots-only form of the connectivity test.

    Only valid for the Hermitian (unfibered) families, where the compact
    part of phi_n_minus automatically clears its own image.
    """
    if dd.spec.family not in HERMITIAN_FAMILIES:
        raise ParameterError(
            f"the shortcut applies to Hermitian specs only, not {dd.spec.family}"
        )
    noncompact = dd.noncompact_negatives
    return not ({apply(dd.w0k, r) for r in noncompact} & noncompact)


class Prediction(enum.Enum):
    """Closed-form answer, or not_covered where no closed form applies."""

    TRUE = "true"
    FALSE = "false"
    NOT_COVERED = "not_covered"


def closed_form_prediction(spec: DomainSpec) -> Prediction:
    """Closed-form connectivity per family: 2a = n for ci, p <= 2a <= q for
    aiii, always false for ci-fibered; the aiii fibered families are only
    covered under p <= 2a <= q, where they are true."""
    if isinstance(spec, CIHermitian):
        return Prediction.TRUE if 2 * spec.a == spec.n else Prediction.FALSE
    if isinstance(spec, CIFibered):
        return Prediction.FALSE
    if isinstance(spec, AIIIHermitian):
        return Prediction.TRUE if spec.p <= 2 * spec.a <= spec.q else Prediction.FALSE
    if spec.p <= 2 * spec.a <= spec.q:
        return Prediction.TRUE
    return Prediction.NOT_COVERED
