"""Signed permutations: the Weyl groups of types A and C acting on roots.

Elements of W(C_n) are signed permutations of the basis indices; elements
coming from type A are plain permutations (all signs +1).  One action code
path covers both.  The module also provides the reflections, the Cayley
involutions (products of reflections in the strongly orthogonal noncompact
roots), and the closed-form longest elements of W and of the compact Weyl
group W_K.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

from .errors import CapacityError, ParameterError
from .rootcore import Root, RootKind, RootSystem, SimpleSystem

__all__ = [
    "WK_ENUMERATION_CAP",
    "WeylElement",
    "CayleySet",
    "identity",
    "apply",
    "compose",
    "inverse",
    "reflection",
    "cayley_involution",
    "longest_element_K",
    "longest_element_W",
    "real_rank",
    "wk_order",
    "weyl_group_order",
    "enumerate_WK",
    "transport",
]

WK_ENUMERATION_CAP = math.factorial(10)


@dataclass(frozen=True)
class WeylElement:
    """A signed permutation: e_i -> signs[i-1] * e_{images[i-1]} (1-based)."""

    images: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.images) != len(self.signs):
            raise ParameterError("images and signs must have equal length")
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ParameterError("images must be a permutation of 1..N")
        if any(s not in (1, -1) for s in self.signs):
            raise ParameterError("signs must be +1 or -1")

    @property
    def dim(self) -> int:
        return len(self.images)


@dataclass(frozen=True)
class CayleySet:
    """The first `a` members of the standard strongly orthogonal root set."""

    a: int

    def __post_init__(self) -> None:
        if self.a < 0:
            raise ParameterError("Cayley set size must be nonnegative")


def identity(dim: int) -> WeylElement:
    return WeylElement(tuple(range(1, dim + 1)), (1,) * dim)


def apply(w: WeylElement, root: Root) -> Root:
    """Image of a root; linear, so apply(w, -r) == -apply(w, r).

    >>> apply(WeylElement((2, 1), (1, 1)), (2, 0))
    (0, 2)
    """
    if len(root) != w.dim:
        raise ParameterError(
            f"dimension mismatch: root has {len(root)} coordinates, "
            f"element acts on {w.dim}"
        )
    out = [0] * w.dim
    for i, c in enumerate(root):
        if c:
            out[w.images[i] - 1] = w.signs[i] * c
    return tuple(out)


def compose(w1: WeylElement, w2: WeylElement) -> WeylElement:
    """The element acting as w1 after w2."""
    if w1.dim != w2.dim:
        raise ParameterError("cannot compose elements of different dimensions")
    images = tuple(w1.images[t - 1] for t in w2.images)
    signs = tuple(s * w1.signs[t - 1] for t, s in zip(w2.images, w2.signs))
    return WeylElement(images, signs)


def inverse(w: WeylElement) -> WeylElement:
    images = [0] * w.dim
    signs = [1] * w.dim
    for i, t in enumerate(w.images):
        images[t - 1] = i + 1
        signs[t - 1] = w.signs[i]
    return WeylElement(tuple(images), tuple(signs))


def reflection(root: Root) -> WeylElement:
    """The reflection in a root of shape +-e_i+-e_j or +-2e_i.

    >>> reflection((0, 2)).signs
    (1, -1)
    """
    support = [(i, c) for i, c in enumerate(root) if c]
    dim = len(root)
    if len(support) == 1:
        i, c = support[0]
        if abs(c) != 2:
            raise ParameterError(f"{root} is not a root of a supported type")
        signs = [1] * dim
        signs[i] = -1
        return WeylElement(tuple(range(1, dim + 1)), tuple(signs))
    if len(support) == 2:
        (i, ci), (j, cj) = support
        if abs(ci) != 1 or abs(cj) != 1:
            raise ParameterError(f"{root} is not a root of a supported type")
        images = list(range(1, dim + 1))
        images[i], images[j] = j + 1, i + 1
        signs = [1] * dim
        if ci == cj:
            # +-(e_i + e_j): the swap also negates both coordinates
            signs[i] = signs[j] = -1
        return WeylElement(tuple(images), tuple(signs))
    raise ParameterError(f"{root} is not a root of a supported type")


def real_rank(rs: RootSystem) -> int:
    """Size of the standard maximal strongly orthogonal set: n, resp. p."""
    if rs.kind is RootKind.TYPE_C:
        return rs.dim
    assert rs.p is not None
    return rs.p


def cayley_involution(rs: RootSystem, delta: CayleySet) -> WeylElement:
    """Product of the reflections in the first `delta.a` strongly
    orthogonal noncompact roots (2e_i for type C, e_i - e_{N+1-i} for
    type A).  Type C negates e_1..e_a; type A swaps i <-> N+1-i for
    i <= a.  Always an involution.
    """
    a = delta.a
    if a > real_rank(rs):
        raise ParameterError(f"Cayley set size {a} exceeds real rank {real_rank(rs)}")
    dim = rs.dim
    if rs.kind is RootKind.TYPE_C:
        signs = tuple(-1 if i < a else 1 for i in range(dim))
        return WeylElement(tuple(range(1, dim + 1)), signs)
    # a <= p <= q keeps the swapped pairs disjoint
    images = list(range(1, dim + 1))
    for i in range(1, a + 1):
        images[i - 1] = dim + 1 - i
        images[dim - i] = i
    return WeylElement(tuple(images), (1,) * dim)


def longest_element_K(rs: RootSystem) -> WeylElement:
    """Longest element of the compact Weyl group, in closed form.

    Type C: the full index reversal.  Type A: reversal within each of the
    two blocks 1..p and p+1..p+q.  Carries the compact positive roots of
    the canonical system onto the compact negatives.
    """
    dim = rs.dim
    if rs.kind is RootKind.TYPE_C:
        return WeylElement(tuple(range(dim, 0, -1)), (1,) * dim)
    assert rs.p is not None
    images = tuple(range(rs.p, 0, -1)) + tuple(range(dim, rs.p, -1))
    return WeylElement(images, (1,) * dim)


def longest_element_W(rs: RootSystem) -> WeylElement:
    """Longest element of the full Weyl group: -id for type C, the full
    index reversal for type A."""
    dim = rs.dim
    if rs.kind is RootKind.TYPE_C:
        return WeylElement(tuple(range(1, dim + 1)), (-1,) * dim)
    return WeylElement(tuple(range(dim, 0, -1)), (1,) * dim)


def wk_order(rs: RootSystem) -> int:
    if rs.kind is RootKind.TYPE_C:
        return math.factorial(rs.dim)
    assert rs.p is not None and rs.q is not None
    return math.factorial(rs.p) * math.factorial(rs.q)


def weyl_group_order(rs: RootSystem) -> int:
    if rs.kind is RootKind.TYPE_C:
        return 2 ** rs.dim * math.factorial(rs.dim)
    return math.factorial(rs.dim)


def enumerate_WK(rs: RootSystem, cap: int = WK_ENUMERATION_CAP) -> Iterator[WeylElement]:
    """Yield every element of the compact Weyl group exactly once.

    Order is lexicographic on the one-line notation, so runs are
    reproducible.  Raises CapacityError up front when |W_K| exceeds `cap`.
    """
    order = wk_order(rs)
    if order > cap:
        raise CapacityError(f"|W_K| = {order} exceeds the enumeration cap {cap}")
    dim = rs.dim
    ones = (1,) * dim
    if rs.kind is RootKind.TYPE_C:
        return (WeylElement(perm, ones) for perm in itertools.permutations(range(1, dim + 1)))
    assert rs.p is not None
    return (
        WeylElement(left + right, ones)
        for left in itertools.permutations(range(1, rs.p + 1))
        for right in itertools.permutations(range(rs.p + 1, dim + 1))
    )


def transport(ss: SimpleSystem, w: WeylElement) -> SimpleSystem:
    """Apply `w` to every simple root, keeping the noncompact marker."""
    if ss.transform is not None:
        raise ParameterError("only the canonical simple system can be transported")
    return SimpleSystem(
        simples=tuple(apply(w, s) for s in ss.simples),
        noncompact_index=ss.noncompact_index,
        system=ss.system,
        transform=w,
    )
