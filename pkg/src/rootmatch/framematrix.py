"""Selection matrices built from frames in the flat.

Row i of the matrix corresponds to the i-th frame vector, and there is
one column per multiplicity slot of each positive root, in a fixed
deterministic order.  An entry is 1 exactly when the root does not
vanish on the frame vector, decided in exact arithmetic.
"""

from __future__ import annotations

import functools
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatchError,
    EmptyFrameError,
    ExcludedSpaceError,
    FrameFileError,
    InvalidParamsError,
    NotInFlatError,
    ZeroVectorError,
)
from .exact import Rat, exact_rank
from .rootdata import (
    KTYPE_SO,
    Root,
    RootSystem,
    SpaceDescriptor,
    evaluate_root,
    is_traceless,
)

Vector = tuple[Rat, ...]


@dataclass(frozen=True)
class FrameSpec:
    """A frame of k <= rank exact vectors in the flat of a space."""

    vectors: tuple[Vector, ...]
    space: SpaceDescriptor
    spanning: bool


def make_frame(space: SpaceDescriptor, vectors: Iterable[Sequence[Rat]]) -> FrameSpec:
    vecs = tuple(tuple(v) for v in vectors)
    if not vecs:
        raise EmptyFrameError("a frame needs at least one vector")
    if len(vecs) > space.rank:
        raise InvalidParamsError(
            f"frame has {len(vecs)} vectors but the rank is {space.rank}"
        )
    for v in vecs:
        if len(v) != space.coord_dim:
            raise DimensionMismatchError(
                f"frame vector length {len(v)} != coordinate dimension {space.coord_dim}"
            )
        if not any(Fraction(x) != 0 for x in v):
            raise ZeroVectorError("frame vectors must be nonzero")
        if space.rootsys.family == "A" and not is_traceless(v):
            raise NotInFlatError("A-family frame vectors must have zero coordinate sum")
    spanning = exact_rank(vecs) == min(len(vecs), space.rank)
    return FrameSpec(vectors=vecs, space=space, spanning=spanning)


@dataclass(frozen=True)
class SelectionMatrix:
    """0/1 incidence of frame vectors against root multiplicity slots."""

    space: SpaceDescriptor
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]
    col_labels: tuple[tuple[Root, int], ...]
    row_labels: tuple[int, ...]

    @property
    def row_weights(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.entries)


@functools.lru_cache(maxsize=None)
def _root_arrays(rootsys: RootSystem):
    coords = np.array([r.coords for r in rootsys.positives], dtype=np.int64)
    mults = np.array([r.multiplicity for r in rootsys.positives], dtype=np.int64)
    return coords, mults


@functools.lru_cache(maxsize=None)
def column_labels(rootsys: RootSystem) -> tuple[tuple[Root, int], ...]:
    labels = []
    for root in rootsys.positives:
        for slot in range(1, root.multiplicity + 1):
            labels.append((root, slot))
    return tuple(labels)


def build_matrix(frame: FrameSpec) -> SelectionMatrix:
    """Build the selection matrix of a frame.

    Integer frames go through a vectorized integer product; rational
    frames fall back to per-root exact evaluation.  Both are exact.
    """
    space = frame.space
    rootsys = space.rootsys
    coords, mults = _root_arrays(rootsys)
    all_int = all(all(type(x) is int for x in v) for v in frame.vectors)
    # products of a root (entries <= 2) against a frame row must stay
    # inside int64 for the vectorized path to be exact
    small = all_int and max(abs(x) for v in frame.vectors for x in v) < 2**60
    if small:
        fmat = np.array(frame.vectors, dtype=np.int64)
        hits = (fmat @ coords.T) != 0
    else:
        hits = np.array(
            [
                [evaluate_root(root, v) != 0 for root in rootsys.positives]
                for v in frame.vectors
            ],
            dtype=bool,
        )
    expanded = np.repeat(hits.astype(np.int8), mults, axis=1)
    entries = tuple(tuple(int(x) for x in row) for row in expanded)
    return SelectionMatrix(
        space=space,
        rows=len(frame.vectors),
        cols=int(mults.sum()),
        entries=entries,
        col_labels=column_labels(rootsys),
        row_labels=tuple(range(len(frame.vectors))),
    )


@dataclass(frozen=True)
class PropertyReport:
    """Verdicts for the five structural properties of a selection matrix.

    1. every column contains a 1;
    2. every row weight is at least n;
    3. if K is not of SO(n+1) type, every row weight is at least 2n-2;
    4. equal rows have weight at least 2n-1;
    5. two rows of weight below 2n-2 share at most one column.
    """

    space: str
    verdicts: tuple[bool, bool, bool, bool, bool]
    witnesses: tuple[str, ...]
    equal_row_pairs: tuple[tuple[int, int], ...]

    @property
    def passed(self) -> bool:
        return all(self.verdicts)


def verify_properties(matrix: SelectionMatrix, space: SpaceDescriptor) -> PropertyReport:
    if space.excluded:
        raise ExcludedSpaceError(f"{space.name} is excluded from property checks")
    n = space.rank
    entries = matrix.entries
    weights = matrix.row_weights
    witnesses: list[str] = []

    empty_cols = [j for j in range(matrix.cols) if not any(row[j] for row in entries)]
    ok1 = not empty_cols
    if not ok1:
        witnesses.append(f"property 1: all-zero columns {empty_cols}")

    light = [i for i, w in enumerate(weights) if w < n]
    ok2 = not light
    if not ok2:
        witnesses.append(f"property 2: rows {light} have weight below {n}")

    ok3 = True
    if space.ktype != KTYPE_SO:
        low = [i for i, w in enumerate(weights) if w < 2 * n - 2]
        ok3 = not low
        if not ok3:
            witnesses.append(f"property 3: rows {low} have weight below {2 * n - 2}")

    ok4 = True
    equal_pairs = []
    for i in range(matrix.rows):
        for j in range(i + 1, matrix.rows):
            if entries[i] == entries[j]:
                equal_pairs.append((i, j))
                if weights[i] < 2 * n - 1:
                    ok4 = False
                    witnesses.append(
                        f"property 4: equal rows {(i, j)} have weight {weights[i]}"
                    )

    ok5 = True
    for i in range(matrix.rows):
        if weights[i] >= 2 * n - 2:
            continue
        for j in range(i + 1, matrix.rows):
            if weights[j] >= 2 * n - 2:
                continue
            shared = sum(a & b for a, b in zip(entries[i], entries[j]))
            if shared > 1:
                ok5 = False
                witnesses.append(
                    f"property 5: light rows {(i, j)} share {shared} columns"
                )

    return PropertyReport(
        space=space.name,
        verdicts=(ok1, ok2, ok3, ok4, ok5),
        witnesses=tuple(witnesses),
        equal_row_pairs=tuple(equal_pairs),
    )


# ---------------------------------------------------------------------------
# Random spanning frames for fuzzing.


@functools.lru_cache(maxsize=None)
def _integer_coweights(rootsys: RootSystem) -> tuple[tuple[int, ...], ...]:
    from .chamber import fundamental_coweights
    from .exact import primitive_integer

    return tuple(primitive_integer(w) for w in fundamental_coweights(rootsys))


def _detrace(v: list[int], dim: int) -> list[int]:
    s = sum(v)
    return [dim * x - s for x in v]


def _random_vector(space: SpaceDescriptor, rng: np.random.Generator) -> list[int]:
    dim = space.coord_dim
    family = space.rootsys.family
    while True:
        v = [int(x) for x in rng.integers(-9, 10, size=dim)]
        if rng.random() < 0.3 and dim >= 2:
            # Deliberately collide coordinates to land on or near walls.
            i, j = rng.choice(dim, size=2, replace=False)
            choice = rng.random()
            if family == "A" or choice < 0.5:
                v[j] = v[i]
            elif choice < 0.8:
                v[j] = -v[i]
            else:
                v[j] = 0
        if family == "A":
            v = _detrace(v, dim)
        if any(v):
            return v


def _random_face_vector(space: SpaceDescriptor, rng: np.random.Generator) -> list[int]:
    rank = space.rank
    coweights = _integer_coweights(space.rootsys)
    while True:
        smask = int(rng.integers(1, 1 << rank))  # nonempty, proper after filter
        outside = [i for i in range(rank) if not smask >> i & 1]
        if not outside:
            continue
        v = [0] * space.coord_dim
        for i in outside:
            c = int(rng.integers(1, 5))
            for k, x in enumerate(coweights[i]):
                v[k] += c * x
        if any(v):
            return v


def random_frames(
    space: SpaceDescriptor,
    count: int,
    seed: int,
    *,
    singular_fraction: float = 0.5,
    max_attempts: int = 200,
) -> list[FrameSpec]:
    """Deterministic spanning frames, a share of them snapped onto faces."""
    rng = np.random.default_rng(seed)
    frames = []
    k = space.rank
    for _ in range(count):
        for _attempt in range(max_attempts):
            n_singular = 0
            if rng.random() < singular_fraction:
                n_singular = int(rng.integers(1, k + 1))
            vectors = [_random_face_vector(space, rng) for _ in range(n_singular)]
            vectors += [_random_vector(space, rng) for _ in range(k - n_singular)]
            if exact_rank(vectors) == k:
                frames.append(
                    FrameSpec(
                        vectors=tuple(tuple(v) for v in vectors),
                        space=space,
                        spanning=True,
                    )
                )
                break
        else:
            raise RuntimeError(f"could not sample a spanning frame for {space.name}")
    return frames


# ---------------------------------------------------------------------------
# Frame files: JSON array of arrays of rational strings.


def parse_frame_vectors(text: str) -> list[tuple[Fraction, ...]]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FrameFileError(f"frame file is not valid JSON: {exc}") from exc
    if not isinstance(data, list) or not data:
        raise FrameFileError("frame file must be a nonempty JSON array of vectors")
    vectors = []
    for row in data:
        if not isinstance(row, list):
            raise FrameFileError("each frame vector must be a JSON array")
        try:
            vectors.append(tuple(Fraction(str(x)) for x in row))
        except (ValueError, ZeroDivisionError) as exc:
            raise FrameFileError(f"bad rational entry in frame file: {exc}") from exc
    return vectors


def load_frame(path: str, space: SpaceDescriptor) -> FrameSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise FrameFileError(f"cannot read frame file {path!r}: {exc}") from exc
    return make_frame(space, parse_frame_vectors(text))
