"""Exhaustive verification of the closed forms over parameter grids.

Every grid point is decided three ways when oracles are on: by the
longest-element criterion, by scanning the whole compact Weyl group for an
open-orbit representative, and by searching for a double-coset factoring
of the longest element.  Any disagreement is counted and reported; a
released grid must have none.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Sequence

from .domains import (
    AIIIFiberedS,
    AIIIFiberedT,
    AIIIHermitian,
    CIFibered,
    CIHermitian,
    DomainData,
    DomainSpec,
    Prediction,
    build_domain,
    closed_form_prediction,
    connectivity_defect,
    connectivity_witnesses,
    is_generically_one_connected,
)
from .errors import CapacityError, ParameterError
from .parabolic import orbit_dimension_defect
from .rootcore import Root
from .weyl import (
    WeylElement,
    apply,
    compose,
    enumerate_WK,
    identity,
    inverse,
    longest_element_W,
    reflection,
    weyl_group_order,
    wk_order,
)

__all__ = [
    "ORACLE_CAP_DEFAULT",
    "ORACLE_MODES",
    "GridEntry",
    "GridReport",
    "oracle_wk_scan",
    "oracle_double_coset",
    "generated_subgroup",
    "ci_grid",
    "aiii_grid",
    "fibered_grid",
    "run_grid",
    "verify_theorem_CI",
    "verify_theorem_AIII",
    "verify_fibered",
]

ORACLE_CAP_DEFAULT = 40320
ORACLE_MODES = ("off", "auto", "required")


@dataclass(frozen=True)
class GridEntry:
    spec: DomainSpec
    predicted: Prediction
    computed: bool
    defect: int
    witness_roots: tuple[Root, ...]
    oracle_wk: bool | None
    oracle_dc: bool | None

    @property
    def agrees(self) -> bool:
        if self.predicted is not Prediction.NOT_COVERED:
            if self.computed != (self.predicted is Prediction.TRUE):
                return False
        if self.oracle_wk is not None and self.oracle_wk != self.computed:
            return False
        if self.oracle_dc is not None and self.oracle_dc != self.computed:
            return False
        return True


@dataclass(frozen=True)
class GridReport:
    entries: tuple[GridEntry, ...]
    agreements: int
    disagreements: int
    elapsed_seconds: float

    def disagreeing(self) -> tuple[GridEntry, ...]:
        return tuple(e for e in self.entries if not e.agrees)


def oracle_wk_scan(dd: DomainData, wk_cap: int = ORACLE_CAP_DEFAULT) -> bool:
    """True iff some compact Weyl element sends the base point into the
    open orbit, found by scanning all of W_K for a zero defect."""
    minus = dd.partition.phi_n_minus
    for w in enumerate_WK(dd.root_system, wk_cap):
        if not any(apply(w, r) in minus for r in minus):
            return True
    return False


def generated_subgroup(generators: Sequence[WeylElement], dim: int) -> frozenset[WeylElement]:
    """Closure of the generators under multiplication, from the identity."""
    seen = {identity(dim)}
    frontier = list(seen)
    while frontier:
        new: list[WeylElement] = []
        for w in frontier:
            for g in generators:
                h = compose(g, w)
                if h not in seen:
                    seen.add(h)
                    new.append(h)
        frontier = new
    return frozenset(seen)


def oracle_double_coset(dd: DomainData, w_cap: int = ORACLE_CAP_DEFAULT) -> bool:
    """True iff w1 * w0K * w2 equals the longest element of W for some w1,
    w2 in the subgroup generated by the reflections in the parabolic's
    simples.  Independent of the defect computation."""
    rs = dd.root_system
    order = weyl_group_order(rs)
    if order > w_cap:
        raise CapacityError(f"|W| = {order} exceeds the enumeration cap {w_cap}")
    simples = dd.transported_simples.simples
    generators = [reflection(simples[i - 1]) for i in dd.phi.included()]
    subgroup = generated_subgroup(generators, rs.dim)
    w0 = longest_element_W(rs)
    for w2 in subgroup:
        if compose(w0, inverse(compose(dd.w0k, w2))) in subgroup:
            return True
    return False


def ci_grid(n_max: int) -> list[DomainSpec]:
    return [CIHermitian(n, a) for n in range(1, n_max + 1) for a in range(n + 1)]


def aiii_grid(sum_max: int) -> list[DomainSpec]:
    return [
        AIIIHermitian(p, q, a)
        for p in range(1, sum_max // 2 + 1)
        for q in range(p, sum_max - p + 1)
        for a in range(p + 1)
    ]


def _keep_subsets(a: int) -> list[frozenset[int]]:
    universe = range(1, a + 2)
    return [
        frozenset(i for i in universe if mask & (1 << (i - 1)))
        for mask in range(1, 1 << (a + 1))
    ]


def fibered_grid(n_max: int, sum_max: int) -> list[DomainSpec]:
    """All ci-fibered specs up to n_max, and both aiii fibered variants
    with p <= 2a <= q and every nonempty keep subset, up to p+q <= sum_max."""
    specs: list[DomainSpec] = [
        CIFibered(n, a, m)
        for n in range(2, n_max + 1)
        for a in range(1, n)
        for m in range(1, a + 1)
    ]
    aiii_points = [
        (p, q, a)
        for p in range(1, sum_max // 2 + 1)
        for q in range(p, sum_max - p + 1)
        for a in range(p + 1)
        if p <= 2 * a <= q
    ]
    for variant in (AIIIFiberedS, AIIIFiberedT):
        for p, q, a in aiii_points:
            for keep in _keep_subsets(a):
                specs.append(variant(p, q, a, keep))
    return specs


def _run_oracles(
    dd: DomainData, oracles: str, wk_cap: int, w_cap: int
) -> tuple[bool | None, bool | None]:
    if oracles == "off":
        return None, None
    try:
        wk = oracle_wk_scan(dd, wk_cap)
    except CapacityError:
        if oracles == "required":
            raise
        wk = None
    try:
        dc = oracle_double_coset(dd, w_cap)
    except CapacityError:
        if oracles == "required":
            raise
        dc = None
    return wk, dc


def run_grid(
    specs: Iterable[DomainSpec],
    oracles: str = "off",
    wk_cap: int = ORACLE_CAP_DEFAULT,
    w_cap: int = ORACLE_CAP_DEFAULT,
) -> GridReport:
    """Evaluate every spec and tally agreement with the closed forms."""
    if oracles not in ORACLE_MODES:
        raise ParameterError(f"oracles must be one of {ORACLE_MODES}, got {oracles!r}")
    start = time.perf_counter()
    entries: list[GridEntry] = []
    for spec in specs:
        dd = build_domain(spec)
        defect = connectivity_defect(dd)
        wk, dc = _run_oracles(dd, oracles, wk_cap, w_cap)
        entries.append(
            GridEntry(
                spec=spec,
                predicted=closed_form_prediction(spec),
                computed=defect == 0,
                defect=defect,
                witness_roots=connectivity_witnesses(dd),
                oracle_wk=wk,
                oracle_dc=dc,
            )
        )
    agreements = sum(1 for e in entries if e.agrees)
    return GridReport(
        entries=tuple(entries),
        agreements=agreements,
        disagreements=len(entries) - agreements,
        elapsed_seconds=time.perf_counter() - start,
    )


def verify_theorem_CI(
    n_max: int,
    oracles: str = "off",
    wk_cap: int = ORACLE_CAP_DEFAULT,
    w_cap: int = ORACLE_CAP_DEFAULT,
) -> GridReport:
    """Check computed connectivity against 2a = n for 1 <= n <= n_max."""
    if n_max < 1:
        raise ParameterError(f"n_max must be >= 1, got {n_max}")
    return run_grid(ci_grid(n_max), oracles, wk_cap, w_cap)


def verify_theorem_AIII(
    sum_max: int,
    oracles: str = "off",
    wk_cap: int = ORACLE_CAP_DEFAULT,
    w_cap: int = ORACLE_CAP_DEFAULT,
) -> GridReport:
    """Check computed connectivity against p <= 2a <= q for p+q <= sum_max."""
    if sum_max < 2:
        raise ParameterError(f"sum_max must be >= 2, got {sum_max}")
    return run_grid(aiii_grid(sum_max), oracles, wk_cap, w_cap)


def verify_fibered(
    n_max: int,
    sum_max: int,
    oracles: str = "off",
    wk_cap: int = ORACLE_CAP_DEFAULT,
    w_cap: int = ORACLE_CAP_DEFAULT,
) -> GridReport:
    """Check the fibered families: ci-fibered is never connected, and the
    aiii fibered variants are always connected on their covered range."""
    if n_max < 1 or sum_max < 1:
        raise ParameterError(f"bounds must be >= 1, got n_max={n_max}, sum_max={sum_max}")
    return run_grid(fibered_grid(n_max, sum_max), oracles, wk_cap, w_cap)
