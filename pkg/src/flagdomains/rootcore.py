"""Exact integer models of the classical root systems A_{N-1} and C_N.

Roots are immutable integer coordinate tuples over the standard basis
e_1..e_N, and all set algebra is exact; no floating point anywhere.
Type A systems model su(p, q) and keep their block split (p, q); type C
systems model sp(2n, R).  Each system carries a canonical simple system
with a single distinguished noncompact simple root, which induces the
compact / noncompact classification of every root.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import TYPE_CHECKING

from .errors import ConsistencyError, DomainError, ParameterError

if TYPE_CHECKING:
    from .weyl import WeylElement

__all__ = [
    "Root",
    "RootKind",
    "RootClass",
    "RootSystem",
    "SimpleSystem",
    "negate",
    "build_root_system",
    "default_simple_system",
    "simple_coefficients",
    "is_positive_root",
    "classify_root",
]

# A root is an integer coordinate vector over e_1..e_N.
Root = tuple[int, ...]


class RootKind(enum.Enum):
    TYPE_A = "A"
    TYPE_C = "C"


class RootClass(enum.Enum):
    """Compactness of a root; the value is the noncompact simple coefficient."""

    COMPACT = 0
    NONCOMPACT_PLUS = 1
    NONCOMPACT_MINUS = -1


def negate(root: Root) -> Root:
    return tuple(-c for c in root)


@dataclass(frozen=True)
class RootSystem:
    """All roots of one system, sorted lexicographically.

    `dim` is the coordinate count N.  For TYPE_A the block sizes p, q
    (p + q = N) are kept because the compact subgroup depends on the
    split; they are None for TYPE_C.
    """

    kind: RootKind
    dim: int
    roots: tuple[Root, ...]
    p: int | None = None
    q: int | None = None

    @cached_property
    def root_set(self) -> frozenset[Root]:
        return frozenset(self.roots)


@dataclass(frozen=True)
class SimpleSystem:
    """An ordered simple system with its unique noncompact member marked.

    `noncompact_index` is 1-based, matching the e_i indexing everywhere
    else.  `transform` is None for the canonical system of the root
    system; a transported system records the Weyl element that carried
    the canonical simples onto it, so that expansions can be pulled back.
    Instances should come from `build` helpers, not be assembled by hand.
    """

    simples: tuple[Root, ...]
    noncompact_index: int
    system: RootSystem
    transform: WeylElement | None = None


def build_root_system(
    kind: RootKind | str,
    n: int | None = None,
    p: int | None = None,
    q: int | None = None,
) -> RootSystem:
    """Enumerate the full root set for the requested type and size.

    >>> rs = build_root_system("C", n=2)
    >>> len(rs.roots)
    8
    """
    kind = RootKind(kind)
    if kind is RootKind.TYPE_C:
        if n is None or n < 1:
            raise ParameterError(f"type C needs n >= 1, got n={n}")
        roots: set[Root] = set()
        for i in range(n):
            long = [0] * n
            long[i] = 2
            roots.add(tuple(long))
            roots.add(negate(tuple(long)))
            for j in range(i + 1, n):
                for si in (1, -1):
                    for sj in (1, -1):
                        v = [0] * n
                        v[i], v[j] = si, sj
                        roots.add(tuple(v))
        return RootSystem(kind, n, tuple(sorted(roots)))
    if p is None or q is None or p < 1 or q < 1 or p > q:
        raise ParameterError(f"type A needs 1 <= p <= q, got p={p}, q={q}")
    dim = p + q
    a_roots: set[Root] = set()
    for i in range(dim):
        for j in range(dim):
            if i != j:
                v = [0] * dim
                v[i], v[j] = 1, -1
                a_roots.add(tuple(v))
    return RootSystem(kind, dim, tuple(sorted(a_roots)), p=p, q=q)


def default_simple_system(rs: RootSystem) -> SimpleSystem:
    """The canonical simples: e_i - e_{i+1} (plus 2e_n in type C).

    The noncompact one sits at index n for type C and p for type A.
    """
    dim = rs.dim
    simples: list[Root] = []
    for i in range(dim - 1):
        v = [0] * dim
        v[i], v[i + 1] = 1, -1
        simples.append(tuple(v))
    if rs.kind is RootKind.TYPE_C:
        v = [0] * dim
        v[dim - 1] = 2
        simples.append(tuple(v))
        return SimpleSystem(tuple(simples), dim, rs)
    assert rs.p is not None
    return SimpleSystem(tuple(simples), rs.p, rs)


def _canonical_coefficients(root: Root, rs: RootSystem) -> tuple[int, ...]:
    # Forward substitution against the canonical simples; their matrix is
    # triangular in the coordinate order, so this is exact.
    coords = root
    dim = rs.dim
    if rs.kind is RootKind.TYPE_C:
        coeffs = [0] * dim
        for k in range(dim - 1):
            coeffs[k] = coords[k] + (coeffs[k - 1] if k else 0)
        tail = coords[dim - 1] + (coeffs[dim - 2] if dim > 1 else 0)
        if tail % 2:
            raise ConsistencyError(f"{root} is not in the span of the simples")
        coeffs[dim - 1] = tail // 2
    else:
        coeffs = [0] * (dim - 1)
        for k in range(dim - 1):
            coeffs[k] = coords[k] + (coeffs[k - 1] if k else 0)
        if coords[dim - 1] != -coeffs[dim - 2]:
            raise ConsistencyError(f"{root} is not in the span of the simples")
    if any(c > 0 for c in coeffs) and any(c < 0 for c in coeffs):
        raise ConsistencyError(f"{root} has mixed-sign simple coefficients")
    return tuple(coeffs)


def simple_coefficients(root: Root, ss: SimpleSystem) -> tuple[int, ...]:
    """Integer coefficients of `root` over `ss.simples`.

    All coefficients come out >= 0 or all <= 0.  For a transported system
    the expansion is pulled back through the inverse transform and solved
    over the canonical simples, which yields the same coefficients.

    >>> rs = build_root_system("C", n=2)
    >>> simple_coefficients((2, 0), default_simple_system(rs))
    (2, 1)
    """
    if root not in ss.system.root_set:
        raise DomainError(f"{root} is not a root of the system")
    if ss.transform is not None:
        from .weyl import apply, inverse  # deferred; weyl builds on this module

        root = apply(inverse(ss.transform), root)
    return _canonical_coefficients(root, ss.system)


def is_positive_root(root: Root, ss: SimpleSystem) -> bool:
    """Whether every simple coefficient of `root` is nonnegative."""
    return all(c >= 0 for c in simple_coefficients(root, ss))


def classify_root(root: Root, ss: SimpleSystem) -> RootClass:
    """Compact / noncompact-positive / noncompact-negative classification.

    Reads the coefficient at the noncompact simple root, which is 0 or +-1
    for the Hermitian types handled here.
    """
    eps = simple_coefficients(root, ss)[ss.noncompact_index - 1]
    try:
        return RootClass(eps)
    except ValueError:
        raise ConsistencyError(
            f"noncompact coefficient of {root} is {eps}, expected 0 or +-1"
        ) from None
