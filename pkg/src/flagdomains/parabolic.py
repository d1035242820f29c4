"""Parabolic subsets of a simple system and the induced root partitions.

A subset of the simples splits the root set into the subsystem it spans
(phi_r) and the remaining positive / negative roots (phi_n_plus /
phi_n_minus).  Positivity is always taken with respect to the simple
system actually passed in, which for transported systems is resolved by
pulling expansions back through the recorded transform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import ParameterError
from .rootcore import Root, SimpleSystem, simple_coefficients
from .weyl import WeylElement, apply

__all__ = [
    "ParabolicSubset",
    "RootPartition",
    "partition",
    "sigma_q",
    "orbit_dimension_defect",
    "defect_witnesses",
]


@dataclass(frozen=True)
class ParabolicSubset:
    """Membership flags over a simple system, index-aligned with it."""

    member_flags: tuple[bool, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "member_flags", tuple(bool(f) for f in self.member_flags))

    @classmethod
    def full(cls, size: int) -> ParabolicSubset:
        return cls((True,) * size)

    @classmethod
    def empty(cls, size: int) -> ParabolicSubset:
        return cls((False,) * size)

    @classmethod
    def from_omitted(cls, size: int, omitted: Iterable[int]) -> ParabolicSubset:
        """Everything but the given 1-based simple indices."""
        left_out = set(omitted)
        if not all(1 <= i <= size for i in left_out):
            raise ParameterError(f"omitted indices {sorted(left_out)} out of range 1..{size}")
        return cls(tuple(i + 1 not in left_out for i in range(size)))

    def included(self) -> tuple[int, ...]:
        """The 1-based indices of the member simples."""
        return tuple(i + 1 for i, f in enumerate(self.member_flags) if f)

    def omitted(self) -> tuple[int, ...]:
        return tuple(i + 1 for i, f in enumerate(self.member_flags) if not f)


@dataclass(frozen=True)
class RootPartition:
    """Disjoint split of the full root set induced by a parabolic subset."""

    phi_r: frozenset[Root]
    phi_n_plus: frozenset[Root]
    phi_n_minus: frozenset[Root]


def partition(ss: SimpleSystem, phi: ParabolicSubset) -> RootPartition:
    """Split every root by support and sign of its expansion over `ss`.

    phi_r collects the roots supported inside the subset; the rest land in
    phi_n_plus or phi_n_minus according to the sign of their coefficients.
    """
    if len(phi.member_flags) != len(ss.simples):
        raise ParameterError(
            f"parabolic subset has {len(phi.member_flags)} flags for "
            f"{len(ss.simples)} simple roots"
        )
    in_phi: list[Root] = []
    plus: list[Root] = []
    minus: list[Root] = []
    for root in ss.system.roots:
        coeffs = simple_coefficients(root, ss)
        if all(flag or c == 0 for flag, c in zip(phi.member_flags, coeffs)):
            in_phi.append(root)
        elif all(c >= 0 for c in coeffs):
            plus.append(root)
        else:
            minus.append(root)
    return RootPartition(frozenset(in_phi), frozenset(plus), frozenset(minus))


def sigma_q(ss: SimpleSystem, phi: ParabolicSubset) -> frozenset[Root]:
    """Roots of the parabolic subalgebra: phi_r together with phi_n_plus."""
    parts = partition(ss, phi)
    return parts.phi_r | parts.phi_n_plus


def orbit_dimension_defect(w: WeylElement, rp: RootPartition) -> int:
    """|phi_n_minus ∩ w(phi_n_minus)|: the codimension of the orbit through
    the w-translate of the base point inside the open orbit.  Zero exactly
    when that translate lies in the open orbit."""
    minus = rp.phi_n_minus
    if minus:
        probe = next(iter(minus))
        if len(probe) != w.dim:
            raise ParameterError(
                f"dimension mismatch: partition roots have {len(probe)} "
                f"coordinates, element acts on {w.dim}"
            )
    return sum(1 for r in minus if apply(w, r) in minus)


def defect_witnesses(w: WeylElement, rp: RootPartition) -> tuple[Root, ...]:
    """The roots in phi_n_minus ∩ w(phi_n_minus), sorted."""
    minus = rp.phi_n_minus
    return tuple(sorted({apply(w, r) for r in minus} & minus))
