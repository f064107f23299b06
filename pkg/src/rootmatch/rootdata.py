"""Restricted root systems with multiplicities and the space catalogue.

Roots are stored as exact integer coordinate vectors on the flat.  For
the A family the flat is the trace-zero hyperplane of R^(rank+1), so
coordinates there have length rank+1; for B/C/D/BC they have length
rank.  All dimension bookkeeping is validated against independently
entered dimension formulas, so a transcription error in either source
fails loudly at construction time.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import (
    DimensionMismatchError,
    InvalidParamsError,
    UnknownFamilyError,
    UnknownSpaceError,
)
from .exact import Rat

FAMILIES = ("A", "B", "C", "D", "BC")

KTYPE_SO = "so_n_plus_1"
KTYPE_SO_PAIR = "so_n_x_so_n_plus_r"
KTYPE_OTHER = "other"


@dataclass(frozen=True)
class Root:
    """A positive restricted root: integer coordinates plus multiplicity."""

    coords: tuple[int, ...]
    multiplicity: int

    def __post_init__(self):
        if not any(self.coords):
            raise InvalidParamsError("root coordinates must be nonzero")
        if self.multiplicity < 1:
            raise InvalidParamsError("root multiplicity must be >= 1")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, c in enumerate(self.coords) if c)


def _sort_key(coords: tuple[int, ...]):
    # Orders e1-e2 < e1-e3 < ... < e2-e3 < ..., i.e. by nonzero positions.
    return (tuple(i for i, c in enumerate(coords) if c), coords)


@dataclass(frozen=True)
class RootSystem:
    family: str
    rank: int
    positives: tuple[Root, ...]

    @property
    def coord_dim(self) -> int:
        return len(self.positives[0].coords)

    @property
    def total_multiplicity(self) -> int:
        return sum(r.multiplicity for r in self.positives)


def _unit(dim: int, i: int, value: int = 1) -> list[int]:
    v = [0] * dim
    v[i] = value
    return v


def build_root_system(
    family: str,
    rank: int,
    *,
    short_mult: int = 1,
    p: int | None = None,
    q: int | None = None,
) -> RootSystem:
    """Construct the complete positive system of a classical family.

    ``short_mult`` is the multiplicity of the short roots e_i (B family);
    ``p``, ``q`` select the SU(p,q) multiplicities for the BC family.
    """
    if family not in FAMILIES:
        raise UnknownFamilyError(f"unknown family {family!r}")
    if rank < 1:
        raise InvalidParamsError("rank must be >= 1")

    roots: list[Root] = []
    if family == "A":
        dim = rank + 1
        for i in range(dim):
            for j in range(i + 1, dim):
                coords = _unit(dim, i)
                coords[j] = -1
                roots.append(Root(tuple(coords), 1))
    elif family in ("B", "C", "D"):
        if family == "D" and rank < 2:
            raise InvalidParamsError("D family needs rank >= 2")
        if family != "B" and short_mult != 1:
            raise InvalidParamsError("short_mult applies to the B family only")
        if short_mult < 1:
            raise InvalidParamsError("short_mult must be >= 1")
        for i in range(rank):
            for j in range(i + 1, rank):
                minus = _unit(rank, i)
                minus[j] = -1
                plus = _unit(rank, i)
                plus[j] = 1
                roots.append(Root(tuple(minus), 1))
                roots.append(Root(tuple(plus), 1))
        if family == "B":
            for i in range(rank):
                roots.append(Root(tuple(_unit(rank, i)), short_mult))
        elif family == "C":
            for i in range(rank):
                roots.append(Root(tuple(_unit(rank, i, 2)), 1))
    else:  # BC, realized by SU(p,q)
        if p is None or q is None:
            raise InvalidParamsError("BC family needs p and q")
        if not (p >= q >= 1):
            raise InvalidParamsError("BC family needs p >= q >= 1")
        if rank != q:
            raise InvalidParamsError("BC rank must equal q")
        for i in range(rank):
            for j in range(i + 1, rank):
                minus = _unit(rank, i)
                minus[j] = -1
                plus = _unit(rank, i)
                plus[j] = 1
                roots.append(Root(tuple(minus), 2))
                roots.append(Root(tuple(plus), 2))
        if p > q:
            for i in range(rank):
                roots.append(Root(tuple(_unit(rank, i)), 2 * (p - q)))
        for i in range(rank):
            roots.append(Root(tuple(_unit(rank, i, 2)), 1))

    roots.sort(key=lambda r: _sort_key(r.coords))
    if len({r.coords for r in roots}) != len(roots):
        raise InvalidParamsError("duplicate root coordinates")
    return RootSystem(family, rank, tuple(roots))


def evaluate_root(root: Root, v: Sequence[Rat]) -> Rat:
    """Exact value of the root functional on a vector of the flat."""
    if len(v) != len(root.coords):
        raise DimensionMismatchError(
            f"vector has length {len(v)}, root expects {len(root.coords)}"
        )
    return sum(c * x for c, x in zip(root.coords, v) if c)


@dataclass(frozen=True)
class SpaceDescriptor:
    """One catalogued symmetric space with exact dimension data."""

    name: str
    rank: int
    rootsys: RootSystem
    dim_x: int
    dim_k: int
    dim_m: int
    ktype: str
    excluded: bool
    params: tuple[tuple[str, int], ...]

    @property
    def columns(self) -> int:
        """Number of selection-matrix columns: dim X - rank."""
        return self.dim_x - self.rank

    @property
    def coord_dim(self) -> int:
        return self.rootsys.coord_dim

    def param(self, key: str) -> int:
        return dict(self.params)[key]


def _descriptor(name, rootsys, dim_x, dim_k, dim_m, ktype, excluded, params):
    space = SpaceDescriptor(
        name=name,
        rank=rootsys.rank,
        rootsys=rootsys,
        dim_x=dim_x,
        dim_k=dim_k,
        dim_m=dim_m,
        ktype=ktype,
        excluded=excluded,
        params=tuple(sorted(params.items())),
    )
    total = rootsys.total_multiplicity
    if space.dim_x != space.rank + total:
        raise RuntimeError(f"{name}: dim X != rank + sum of multiplicities")
    if space.dim_k != space.dim_m + total:
        raise RuntimeError(f"{name}: dim K != dim M + sum of multiplicities")
    n = space.rank
    bound = n * (n + 1) // 2
    if space.columns < bound:
        raise RuntimeError(f"{name}: column count below n(n+1)/2")
    if (space.columns == bound) != name.startswith("SL("):
        raise RuntimeError(f"{name}: column-count equality must single out SL(n+1,R)")
    return space


# Catalogue extent.  Ranks are capped at 8 (the verification sweep range)
# and SU at p <= 6.  SO(2,2) and SO(3,3) are deliberately absent: the
# former splits into rank-one factors, the latter is SL(4,R) in disguise
# and would break the column-count equality marker.
_MAX_RANK = 8
_MAX_SU_P = 6


@functools.lru_cache(maxsize=1)
def catalogue() -> tuple[SpaceDescriptor, ...]:
    """All catalogued spaces, each validated by its dimension identities."""
    spaces: list[SpaceDescriptor] = []

    for n in range(2, _MAX_RANK + 1):
        m = n + 1
        spaces.append(
            _descriptor(
                f"SL({m},R)",
                build_root_system("A", n),
                dim_x=(m - 1) * (m + 2) // 2,
                dim_k=m * (m - 1) // 2,
                dim_m=0,
                ktype=KTYPE_SO,
                excluded=(m == 3),
                params={"m": m},
            )
        )

    for r in range(0, 4):
        start = 4 if r == 0 else 2
        for n in range(start, _MAX_RANK + 1):
            rootsys = (
                build_root_system("D", n)
                if r == 0
                else build_root_system("B", n, short_mult=r)
            )
            dim_so = lambda k: k * (k - 1) // 2
            spaces.append(
                _descriptor(
                    f"SO({n},{n + r})",
                    rootsys,
                    dim_x=dim_so(2 * n + r) - dim_so(n) - dim_so(n + r),
                    dim_k=dim_so(n) + dim_so(n + r),
                    dim_m=dim_so(r),
                    ktype=KTYPE_SO_PAIR,
                    excluded=False,
                    params={"n": n, "r": r},
                )
            )

    for n in range(2, _MAX_RANK + 1):
        spaces.append(
            _descriptor(
                f"Sp({2 * n},R)",
                build_root_system("C", n),
                dim_x=n * (n + 1),
                dim_k=n * n,
                dim_m=0,
                ktype=KTYPE_OTHER,
                excluded=False,
                params={"n": n},
            )
        )

    for qq in range(2, _MAX_SU_P + 1):
        for pp in range(qq, _MAX_SU_P + 1):
            spaces.append(
                _descriptor(
                    f"SU({pp},{qq})",
                    build_root_system("BC", qq, p=pp, q=qq),
                    dim_x=2 * pp * qq,
                    dim_k=pp * pp + qq * qq - 1,
                    dim_m=(pp - qq) ** 2 + qq - 1,
                    ktype=KTYPE_OTHER,
                    excluded=False,
                    params={"p": pp, "q": qq},
                )
            )

    return tuple(spaces)


@functools.lru_cache(maxsize=1)
def _space_map() -> Mapping[str, SpaceDescriptor]:
    return {s.name: s for s in catalogue()}


def space(name: str) -> SpaceDescriptor:
    """Look a space up by its catalogue name, e.g. ``"SL(4,R)"``."""
    try:
        return _space_map()[name]
    except KeyError:
        raise UnknownSpaceError(f"unknown space {name!r}") from None


def is_traceless(v: Sequence[Rat]) -> bool:
    return sum(Fraction(x) for x in v) == 0
