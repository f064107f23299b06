"""Weyl-chamber faces, stabilizer codimensions, and codimension bounds.

A face class is indexed by a subset S of the simple roots; its vanishing
set is the set of positive roots lying in span(S), and its codimension
is the total multiplicity of the surviving roots.  One exact rational
witness vector is produced per face from the fundamental coweights.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExcludedSpaceError, ZeroVectorError
from .exact import Rat, primitive_integer, solve_unique
from .rootdata import (
    KTYPE_SO,
    KTYPE_SO_PAIR,
    Root,
    RootSystem,
    SpaceDescriptor,
    evaluate_root,
)


@functools.lru_cache(maxsize=None)
def simple_system(rootsys: RootSystem) -> tuple[Root, ...]:
    """The simple roots: positives that are not a sum of two positives."""
    coord_set = {r.coords for r in rootsys.positives}
    simples = []
    for root in rootsys.positives:
        decomposable = False
        for other in rootsys.positives:
            rest = tuple(a - b for a, b in zip(root.coords, other.coords))
            if any(rest) and rest in coord_set:
                decomposable = True
                break
        if not decomposable:
            simples.append(root)
    if len(simples) != rootsys.rank:
        raise RuntimeError("simple system size must equal the rank")
    return tuple(simples)


@functools.lru_cache(maxsize=None)
def fundamental_coweights(rootsys: RootSystem) -> tuple[tuple[Fraction, ...], ...]:
    """Exact dual basis to the simple roots inside the flat.

    For the A family the flat is the trace-zero hyperplane, so the
    defining system carries the extra trace equation.
    """
    simples = simple_system(rootsys)
    dim = rootsys.coord_dim
    rows = [list(s.coords) for s in simples]
    if rootsys.family == "A":
        rows.append([1] * dim)
    coweights = []
    for i in range(len(simples)):
        rhs = [0] * len(rows)
        rhs[i] = 1
        coweights.append(solve_unique(rows, rhs))
    return tuple(coweights)


@functools.lru_cache(maxsize=None)
def _simple_support_masks(rootsys: RootSystem) -> tuple[int, ...]:
    """Bitmask of simple-root coefficients for each positive root.

    A positive root lies in span(S) exactly when its support mask is
    contained in the mask of S.
    """
    simples = simple_system(rootsys)
    columns = [list(s.coords) for s in simples]
    rows = [[columns[j][i] for j in range(len(simples))] for i in range(rootsys.coord_dim)]
    masks = []
    for root in rootsys.positives:
        coeffs = solve_unique(rows, list(root.coords))
        mask = 0
        for j, c in enumerate(coeffs):
            if c:
                mask |= 1 << j
        masks.append(mask)
    return tuple(masks)


@dataclass(frozen=True)
class FaceClass:
    """One chamber face: vanishing simple subset, roots killed, witness."""

    simple_subset: tuple[int, ...]
    vanishing: tuple[Root, ...]
    codim: int
    witness: tuple[int, ...]

    @property
    def vanishing_count(self) -> int:
        return len(self.vanishing)


def enumerate_faces(space: SpaceDescriptor) -> list[FaceClass]:
    """All 2^rank face classes of one fixed simple system.

    The empty subset is the regular class; the full subset is the zero
    face (its witness is the zero vector).
    """
    rootsys = space.rootsys
    masks = _simple_support_masks(rootsys)
    coweights = fundamental_coweights(rootsys)
    total = rootsys.total_multiplicity
    rank = rootsys.rank
    faces = []
    for smask in range(1 << rank):
        subset = tuple(i for i in range(rank) if smask >> i & 1)
        vanishing = tuple(
            root
            for root, rmask in zip(rootsys.positives, masks)
            if rmask & ~smask == 0
        )
        codim = total - sum(r.multiplicity for r in vanishing)
        acc = [Fraction(0)] * rootsys.coord_dim
        for i in range(rank):
            if i not in subset:
                for k, x in enumerate(coweights[i]):
                    acc[k] += x
        faces.append(
            FaceClass(
                simple_subset=subset,
                vanishing=vanishing,
                codim=codim,
                witness=primitive_integer(acc),
            )
        )
    return faces


def stabilizer_codim(space: SpaceDescriptor, v: list[Rat] | tuple[Rat, ...]) -> int:
    """Total multiplicity of the positive roots not vanishing on ``v``.

    This equals dim K - dim K_v for the stabilizer K_v of the vector.
    """
    if not any(Fraction(x) != 0 for x in v):
        raise ZeroVectorError("stabilizer codimension needs a nonzero vector")
    return sum(
        root.multiplicity
        for root in space.rootsys.positives
        if evaluate_root(root, v) != 0
    )


@dataclass(frozen=True)
class FaceBound:
    simple_subset: tuple[int, ...]
    vanishing_count: int
    codim: int
    bound: int
    ok: bool
    attains_rank: bool


@dataclass(frozen=True)
class BoundReport:
    space: str
    ktype: str
    rank: int
    entries: tuple[FaceBound, ...]
    passed: bool
    min_codim: int | None

    @property
    def faces_at_rank(self) -> tuple[FaceBound, ...]:
        return tuple(e for e in self.entries if e.attains_rank)


def verify_codim_bounds(space: SpaceDescriptor) -> BoundReport:
    """Check the stabilizer codimension bound on every singular face.

    Faces with a zero witness (all simple roots vanishing) are skipped:
    their stabilizer is all of K, not the stabilizer of a nonzero
    vector.  The bound depends on the type of K: for SO(n+1) each
    codimension is either >= 2n-2 or exactly n; for SO(n) x SO(n+r) it
    is >= 2n-2+r; otherwise >= 2n-1.
    """
    if space.excluded:
        raise ExcludedSpaceError(f"{space.name} is excluded from the bound check")
    if space.rank < 2:
        raise ValueError("bound check needs rank >= 2")
    n = space.rank
    if space.ktype == KTYPE_SO_PAIR:
        bound = 2 * n - 2 + space.param("r")
    elif space.ktype == KTYPE_SO:
        bound = 2 * n - 2
    else:
        bound = 2 * n - 1

    entries = []
    full = tuple(range(n))
    for face in enumerate_faces(space):
        if not face.simple_subset or face.simple_subset == full:
            continue
        d = face.codim
        if space.ktype == KTYPE_SO:
            ok = d >= bound or d == n
        else:
            ok = d >= bound
        entries.append(
            FaceBound(
                simple_subset=face.simple_subset,
                vanishing_count=face.vanishing_count,
                codim=d,
                bound=bound,
                ok=ok,
                attains_rank=(d == n),
            )
        )
    codims = [e.codim for e in entries]
    return BoundReport(
        space=space.name,
        ktype=space.ktype,
        rank=n,
        entries=tuple(entries),
        passed=all(e.ok for e in entries),
        min_codim=min(codims) if codims else None,
    )
