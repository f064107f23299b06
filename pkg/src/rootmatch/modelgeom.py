"""Explicit matrix model of the symmetric space SL(n,R)/SO(n).

Tangent vectors are traceless symmetric n x n matrices under the trace
form <X,Y> = tr(XY).  The flat is the diagonal subspace; its orthogonal
complement is spanned by the unit matrices b_ij = (E_ij + E_ji)/sqrt(2).
Rotations act by conjugation.  The two frame pipelines double a frame in
(or near) the flat into b-vectors selected by the greedy column
matching, and the sampling utilities estimate the angle-ratio constant
over Haar-random rotations.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np
from scipy.linalg import expm, helmert

from .errors import (
    BNotInQError,
    EpsilonTooLargeError,
    InvalidParamsError,
    MatchFailedError,
    NoMatchingError,
    NonOrthonormalBasisError,
    NotInFlatError,
    ZeroVectorError,
)
from .exact import Rat
from .framematrix import build_matrix, make_frame
from .matcher import AlgoTrace, MatchResult, greedy_match
from .rootdata import space as catalogue_space


def trace_inner(x: np.ndarray, y: np.ndarray) -> float:
    return float(np.einsum("ij,ji->", x, y))


class ModelSpace:
    """Bases and bookkeeping for one model size n."""

    def __init__(self, n: int):
        if n < 2:
            raise InvalidParamsError("model needs n >= 2")
        self.n = n
        self.rank = n - 1
        self.pairs: tuple[tuple[int, int], ...] = tuple(
            itertools.combinations(range(n), 2)
        )

    @property
    def epsilon_zero(self) -> float:
        return 1.0 / (self.rank + 1) ** 2

    def b_matrix(self, i: int, j: int) -> np.ndarray:
        m = np.zeros((self.n, self.n))
        m[i, j] = m[j, i] = 1.0 / np.sqrt(2.0)
        return m

    def k_matrix(self, i: int, j: int) -> np.ndarray:
        """Rotation generator E_ij - E_ji (unnormalized)."""
        m = np.zeros((self.n, self.n))
        m[i, j] = 1.0
        m[j, i] = -1.0
        return m

    def flat_basis(self) -> list[np.ndarray]:
        """Orthonormal basis of the diagonal traceless subspace."""
        return [np.diag(row) for row in helmert(self.n)]

    def fperp_basis(self) -> list[np.ndarray]:
        return [self.b_matrix(i, j) for i, j in self.pairs]

    def diag_matrix(self, vec: Sequence[float]) -> np.ndarray:
        return np.diag(np.asarray([float(x) for x in vec], dtype=float))


# ---------------------------------------------------------------------------
# Exact algebra helpers (used by the bracket-identity checks).


def exact_zero_matrix(n: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * n for _ in range(n)]


def rotation_generator_exact(n: int, i: int, j: int) -> list[list[Fraction]]:
    m = exact_zero_matrix(n)
    m[i][j] = Fraction(1)
    m[j][i] = Fraction(-1)
    return m


def symmetric_pair_exact(n: int, i: int, j: int) -> list[list[Fraction]]:
    m = exact_zero_matrix(n)
    m[i][j] = Fraction(1)
    m[j][i] = Fraction(1)
    return m


def diagonal_exact(t: Sequence[Rat]) -> list[list[Fraction]]:
    n = len(t)
    m = exact_zero_matrix(n)
    for i, x in enumerate(t):
        m[i][i] = Fraction(x)
    return m


def exact_commutator(a: Sequence[Sequence[Rat]], b: Sequence[Sequence[Rat]]):
    """[a, b] = ab - ba over exact rationals."""
    n = len(a)
    out = exact_zero_matrix(n)
    for i in range(n):
        for j in range(n):
            out[i][j] = sum(
                Fraction(a[i][k]) * Fraction(b[k][j])
                - Fraction(b[i][k]) * Fraction(a[k][j])
                for k in range(n)
            )
    return out


# ---------------------------------------------------------------------------
# Angles and Haar sampling.


def angle_to_subspace(v: np.ndarray, basis: Sequence[np.ndarray]) -> float:
    """Angle arccos(|proj| / |v|) between a vector and a subspace.

    ``basis`` must be orthonormal for the trace form to within 1e-10.
    """
    norm = np.sqrt(trace_inner(v, v))
    if norm < 1e-12:
        raise ZeroVectorError("angle of the zero vector is undefined")
    basis = list(basis)
    for a in range(len(basis)):
        for b in range(a, len(basis)):
            expected = 1.0 if a == b else 0.0
            if abs(trace_inner(basis[a], basis[b]) - expected) > 1e-10:
                raise NonOrthonormalBasisError(
                    f"basis Gram deviates at pair {(a, b)}"
                )
    proj_sq = sum(trace_inner(v, w) ** 2 for w in basis)
    ratio = min(1.0, np.sqrt(max(proj_sq, 0.0)) / norm)
    return float(np.arccos(ratio))


def _haar_batch(rng: np.random.Generator, n: int, count: int) -> np.ndarray:
    z = rng.standard_normal((count, n, n))
    q, r = np.linalg.qr(z)
    diag = np.einsum("bii->bi", r)
    signs = np.where(diag < 0, -1.0, 1.0)
    q = q * signs[:, None, :]
    flip = np.linalg.det(q) < 0
    q[flip, :, -1] *= -1.0
    return q


def haar_rotation(n: int, seed: int) -> np.ndarray:
    """One Haar-distributed rotation from SO(n), reproducible from the seed."""
    if n < 2:
        raise InvalidParamsError("rotations need n >= 2")
    return _haar_batch(np.random.default_rng(seed), n, 1)[0]


# ---------------------------------------------------------------------------
# Invariant complements and stabilizers of flat vectors.


def _exact_entries(v: Sequence[Rat], n: int) -> list[Fraction]:
    if len(v) != n:
        raise InvalidParamsError(f"vector length {len(v)} != model size {n}")
    fr = [Fraction(x) for x in v]
    if not any(fr):
        raise ZeroVectorError("need a nonzero vector in the flat")
    if sum(fr) != 0:
        raise NotInFlatError("flat vectors must have zero coordinate sum")
    return fr


def q_subspace(model: ModelSpace, v: Sequence[Rat]) -> list[np.ndarray]:
    """Orthonormal basis {b_ij : v_i != v_j} of the complement Q_v."""
    fr = _exact_entries(v, model.n)
    return [model.b_matrix(i, j) for i, j in model.pairs if fr[i] != fr[j]]


def stabilizer_generators(model: ModelSpace, v: Sequence[Rat]) -> list[np.ndarray]:
    """Rotation generators {k_ij : v_i = v_j} of the stabilizer of v."""
    fr = _exact_entries(v, model.n)
    return [model.k_matrix(i, j) for i, j in model.pairs if fr[i] == fr[j]]


def stabilizer_rotation(
    model: ModelSpace, v: Sequence[Rat], coefficients: Sequence[float]
) -> np.ndarray:
    """exp of a coefficient combination of the stabilizer generators."""
    gens = stabilizer_generators(model, v)
    if len(coefficients) != len(gens):
        raise InvalidParamsError("one coefficient per stabilizer generator")
    if not gens:
        return np.eye(model.n)
    return expm(sum(c * g for c, g in zip(coefficients, gens)))


# ---------------------------------------------------------------------------
# Angle-ratio sampling.


@dataclass(frozen=True)
class RatioEstimate:
    max_ratio: float
    zero_denominator_count: int
    samples: int
    seed: int


_CHUNK = 2000


def ratio_angles(
    num_mat: np.ndarray, den_mat: np.ndarray, rotations: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    """Angles (to Fperp for num, to F for den) after conjugating by each rotation.

    Both are arcsin of the complementary projection norm, which agrees
    with ``angle_to_subspace`` and stays accurate near zero.  Inputs must
    be unit for the trace form.
    """
    x = np.einsum("bij,jk,blk->bil", rotations, num_mat, rotations)
    y = np.einsum("bij,jk,blk->bil", rotations, den_mat, rotations)
    x_diag = np.einsum("bii->bi", x)
    y_diag = np.einsum("bii->bi", y)
    num = np.arcsin(np.clip(np.linalg.norm(x_diag, axis=1), 0.0, 1.0))
    den_proj = np.sqrt(
        np.clip(1.0 - np.einsum("bi,bi->b", y_diag, y_diag), 0.0, 1.0)
    )
    den = np.arcsin(den_proj)
    return num, den


def _batched_ratio(
    model: ModelSpace,
    numerator: np.ndarray,
    denominator: np.ndarray,
    samples: int,
    seed: int,
    floor: float = 1e-6,
) -> RatioEstimate:
    """Max over Haar rotations h of angle(h.num, Fperp) / angle(h.den, F).

    Chunks of fixed size keep the sample stream a prefix of any longer
    run on the same seed, so estimates are nondecreasing in the sample
    count.
    """
    rng = np.random.default_rng(seed)
    num_mat = numerator / np.sqrt(trace_inner(numerator, numerator))
    den_mat = denominator / np.sqrt(trace_inner(denominator, denominator))
    best = 0.0
    zeros = 0
    done = 0
    while done < samples:
        size = min(_CHUNK, samples - done)
        hs = _haar_batch(rng, model.n, size)
        num, den = ratio_angles(num_mat, den_mat, hs)
        keep = den >= floor
        zeros += int((~keep).sum())
        if keep.any():
            best = max(best, float((num[keep] / den[keep]).max()))
        done += size
    return RatioEstimate(best, zeros, samples, seed)


def sample_ratio(
    model: ModelSpace,
    v: Sequence[Rat],
    b: np.ndarray,
    samples: int,
    seed: int,
) -> RatioEstimate:
    """Sampled bound for angle(h.b, Fperp) <= C * angle(h.v, F).

    ``v`` is an exact flat vector and ``b`` must lie in Q_v (checked to
    1e-10).  Samples whose denominator angle falls below 1e-6 are
    excluded and counted separately.
    """
    q_basis = q_subspace(model, v)
    b_norm = np.sqrt(trace_inner(b, b))
    if b_norm < 1e-12:
        raise ZeroVectorError("b must be nonzero")
    unit = b / b_norm
    residual = unit - sum(trace_inner(unit, q) * q for q in q_basis)
    if np.sqrt(max(trace_inner(residual, residual), 0.0)) > 1e-10:
        raise BNotInQError("b has a component outside Q_v")
    v_mat = model.diag_matrix([float(Fraction(x)) for x in v])
    return _batched_ratio(model, unit, v_mat, samples, seed)


# ---------------------------------------------------------------------------
# Wall snapping.


@functools.lru_cache(maxsize=None)
def _set_partitions(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    out: list[tuple[tuple[int, ...], ...]] = []
    blocks: list[list[int]] = []

    def rec(i: int):
        if i == n:
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(i)
            rec(i + 1)
            b.pop()
        blocks.append([i])
        rec(i + 1)
        blocks.pop()

    rec(0)
    return tuple(out)


def snap_to_singular(
    model: ModelSpace, w_hat: Sequence[float], eps0: float | None = None
) -> np.ndarray:
    """Most singular unit vector within eps0 of a unit flat vector.

    Candidate faces are the coordinate-equality subspaces; among those
    whose distance to ``w_hat`` is at most eps0 the one killing the most
    roots wins, ties going to the closer face.  The result is the
    normalized projection; a regular vector away from all walls comes
    back unchanged.
    """
    w = np.asarray([float(x) for x in w_hat], dtype=float)
    radius = model.epsilon_zero if eps0 is None else eps0
    best_key = None
    best_proj = None
    for part in _set_partitions(model.n):
        proj = w.copy()
        for block in part:
            idx = list(block)
            proj[idx] = w[idx].mean()
        dist = float(np.linalg.norm(w - proj))
        if dist > radius:
            continue
        vanishing = sum(len(b) * (len(b) - 1) // 2 for b in part)
        key = (-vanishing, dist)
        if best_key is None or key < best_key:
            best_key = key
            best_proj = proj
    norm = float(np.linalg.norm(best_proj))
    if norm == 0.0:
        return w
    return best_proj / norm


# ---------------------------------------------------------------------------
# Frame pipelines.


@dataclass(frozen=True, eq=False)
class DoubledFrame:
    """2k near-orthonormal vectors, two per frame vector."""

    primed: tuple[np.ndarray, ...]
    double_primed: tuple[np.ndarray, ...]
    gram_deviation: float
    ratio_estimate: float | None
    match: MatchResult
    trace: AlgoTrace
    snapped_frame: tuple[tuple[Fraction, ...], ...]

    def members(self) -> list[np.ndarray]:
        out = []
        for a, b in zip(self.primed, self.double_primed):
            out.extend((a, b))
        return out


def _to_exact(x) -> Rat:
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (float, np.floating)):
        return Fraction(float(x))
    raise InvalidParamsError(f"cannot interpret {type(x).__name__} as an exact number")


def _gram_deviation(members: Sequence[np.ndarray]) -> float:
    worst = 0.0
    for a in range(len(members)):
        for b in range(a + 1, len(members)):
            worst = max(worst, abs(trace_inner(members[a], members[b])))
    return worst


def _sl_space(n: int):
    return catalogue_space(f"SL({n},R)")


def _column_b(model: ModelSpace, matrix, col: int) -> np.ndarray:
    root = matrix.col_labels[col][0]
    i, j = root.support
    return model.b_matrix(i, j)


def pipeline_flat(
    model: ModelSpace,
    frame: Sequence[Sequence[Rat]],
    *,
    ratio_samples: int = 0,
    seed: int = 1,
) -> DoubledFrame:
    """Double an exact spanning frame of the flat into b-vectors.

    Builds the selection matrix, runs the greedy matching, and maps the
    chosen columns to their b_ij matrices.  The members are exactly
    orthonormal and orthogonal to the flat.  ``ratio_samples > 0`` also
    estimates the angle-ratio constant over every (v_i, output) pair.
    """
    vectors = [tuple(_to_exact(x) for x in v) for v in frame]
    space = _sl_space(model.n)
    frame_spec = make_frame(space, vectors)
    if len(vectors) != model.rank or not frame_spec.spanning:
        raise InvalidParamsError("flat pipeline needs a spanning frame of rank vectors")
    matrix = build_matrix(frame_spec)
    try:
        result, trace = greedy_match(matrix)
    except NoMatchingError as exc:
        raise MatchFailedError(f"no column matching: {exc}") from exc
    primed = tuple(_column_b(model, matrix, j) for j, _ in result.pairs)
    double_primed = tuple(_column_b(model, matrix, k) for _, k in result.pairs)
    gram = _gram_deviation(list(primed) + list(double_primed))
    ratio = None
    if ratio_samples > 0:
        ratio = 0.0
        for i, v in enumerate(vectors):
            for out in (primed[i], double_primed[i]):
                est = sample_ratio(model, v, out, ratio_samples, seed)
                ratio = max(ratio, est.max_ratio)
    return DoubledFrame(
        primed=primed,
        double_primed=double_primed,
        gram_deviation=gram,
        ratio_estimate=ratio,
        match=result,
        trace=trace,
        snapped_frame=tuple(tuple(Fraction(x) for x in v) for v in vectors),
    )


def _rationalize_flat(vec: np.ndarray) -> tuple[Fraction, ...]:
    """Exact dyadic image of a float flat vector, re-centered to trace zero.

    Equal float coordinates stay equal, so the face structure of a
    snapped vector is preserved exactly.
    """
    fr = [Fraction(float(x)) for x in vec]
    total = sum(fr)
    n = len(fr)
    return tuple(x - total / n for x in fr)


def _align_rotation(v_mat: np.ndarray, target: Sequence[Fraction]) -> np.ndarray:
    """Orthogonal alignment of the eigenframe of v onto the coordinate axes.

    Eigenvalues are paired with the coordinates of the exact target
    vector in sorted order; within each block of equal target values the
    residual block rotation (an element of the target's stabilizer) is
    removed through its orthogonal polar factor, so the result is the
    rotation moving the flat to v with no stray stabilizer component.
    """
    n = len(target)
    _lam, vecs = np.linalg.eigh(v_mat)
    fr = [Fraction(x) for x in target]
    positions = sorted(range(n), key=lambda i: (fr[i], i))
    m = np.empty((n, n))
    for eig_index, pos in enumerate(positions):
        m[:, pos] = vecs[:, eig_index]
    rot = m.copy()
    for _value, group in itertools.groupby(positions, key=lambda i: fr[i]):
        block = sorted(group)
        sub = m[np.ix_(block, block)]
        u, _s, vt = np.linalg.svd(sub)
        q = u @ vt
        rot[:, block] = m[:, block] @ q.T
    return rot


def pipeline_perturbed(
    model: ModelSpace,
    frame: Sequence[Sequence[float]],
    u: np.ndarray,
    eps: float,
    *,
    ratio_samples: int = 0,
    seed: int = 1,
) -> DoubledFrame:
    """Double a frame conjugated off the flat by exp(eps * u).

    Each perturbed vector is projected back to the flat, snapped to the
    most singular direction in its eps0-ball, and doubled through the
    flat pipeline; the outputs are carried back by the aligning rotation
    of each perturbed vector.  The Gram deviation of the members scales
    linearly with eps.
    """
    if eps < 0:
        raise InvalidParamsError("eps must be nonnegative")
    if eps >= model.epsilon_zero:
        raise EpsilonTooLargeError(
            f"eps must be below 1/(rank+1)^2 = {model.epsilon_zero}"
        )
    u = np.asarray(u, dtype=float)
    if u.shape != (model.n, model.n):
        raise InvalidParamsError("u must be an n x n rotation generator")
    if np.abs(u + u.T).max() > 1e-8:
        raise InvalidParamsError("u must be skew-symmetric")
    norm_u = np.sqrt(trace_inner(u, u.T))
    if abs(norm_u - 1.0) > 1e-6:
        raise InvalidParamsError("u must have unit norm")

    flats = [np.asarray([float(x) for x in w], dtype=float) for w in frame]
    h = expm(eps * u) if eps > 0 else np.eye(model.n)
    v_mats = [h @ np.diag(w) @ h.T for w in flats]

    snapped_exact: list[tuple[Fraction, ...]] = []
    for vm in v_mats:
        d = np.einsum("ii->i", vm).copy()
        d -= d.mean()
        norm_d = float(np.linalg.norm(d))
        if norm_d < 1e-12:
            raise MatchFailedError("projection of a perturbed vector to the flat collapsed")
        snapped = snap_to_singular(model, d / norm_d)
        snapped_exact.append(_rationalize_flat(snapped))

    try:
        flat_frame = pipeline_flat(model, snapped_exact)
    except InvalidParamsError as exc:
        raise MatchFailedError(f"snapped frame degenerated: {exc}") from exc
    rotations = [
        _align_rotation(v_mats[i], snapped_exact[i]) for i in range(len(flats))
    ]
    primed = tuple(
        r @ w @ r.T for r, w in zip(rotations, flat_frame.primed)
    )
    double_primed = tuple(
        r @ w @ r.T for r, w in zip(rotations, flat_frame.double_primed)
    )
    gram = _gram_deviation(list(primed) + list(double_primed))
    ratio = None
    if ratio_samples > 0:
        ratio = 0.0
        for i in range(len(flats)):
            for out in (primed[i], double_primed[i]):
                est = _batched_ratio(model, out, v_mats[i], ratio_samples, seed)
                ratio = max(ratio, est.max_ratio)
    return DoubledFrame(
        primed=primed,
        double_primed=double_primed,
        gram_deviation=gram,
        ratio_estimate=ratio,
        match=flat_frame.match,
        trace=flat_frame.trace,
        snapped_frame=tuple(snapped_exact),
    )


def min_bracket_gain(model: ModelSpace, a: Sequence[Rat]) -> float:
    """Smallest stretch of u -> [u, diag(a)] off the stabilizer algebra.

    Measured as the least singular value of the bracket map restricted
    to the normalized generators k_ij/sqrt(2) with a_i != a_j.  Reported
    only; no bound is asserted.
    """
    fr = _exact_entries(a, model.n)
    cross = [(i, j) for i, j in model.pairs if fr[i] != fr[j]]
    if not cross:
        return 0.0
    a_mat = model.diag_matrix([float(x) for x in fr])
    cols = []
    for i, j in cross:
        k = model.k_matrix(i, j) / np.sqrt(2.0)
        cols.append((k @ a_mat - a_mat @ k).reshape(-1))
    stacked = np.stack(cols, axis=1)
    return float(np.linalg.svd(stacked, compute_uv=False).min())


def _stabilizer_projection(model: ModelSpace, v: Sequence[Fraction], u: np.ndarray) -> np.ndarray:
    """Component of a rotation generator inside the stabilizer algebra of v."""
    fr = [Fraction(x) for x in v]
    proj = np.zeros((model.n, model.n))
    for i, j in model.pairs:
        if fr[i] == fr[j]:
            khat = model.k_matrix(i, j) / np.sqrt(2.0)
            proj += float(np.sum(u * khat)) * khat
    return proj


def first_order_gram_coefficient(
    model: ModelSpace,
    frame: Sequence[Sequence[Rat]],
    u: np.ndarray,
) -> float:
    """Leading coefficient of the perturbed Gram deviation in eps.

    Each doubled member is carried by exp(eps * (u - P_i u)) with P_i
    the stabilizer projection of its row, so the derivative of a cross
    Gram entry at eps = 0 is -<[P_i u, x], y> - <x, [P_j u, y]>.  The
    maximum absolute derivative over cross pairs predicts whether the
    deviation scales linearly or degenerates to quadratic.
    """
    exact = [tuple(Fraction(_to_exact(x)) for x in v) for v in frame]
    flat = pipeline_flat(model, exact)
    k = len(exact)
    projections = [_stabilizer_projection(model, v, u) for v in exact]
    comm = lambda a, b: a @ b - b @ a
    worst = 0.0
    for i in range(k):
        for j in range(i + 1, k):
            for x in (flat.primed[i], flat.double_primed[i]):
                for y in (flat.primed[j], flat.double_primed[j]):
                    c = trace_inner(comm(projections[i], x), y) + trace_inner(
                        x, comm(projections[j], y)
                    )
                    worst = max(worst, abs(c))
    return worst


def random_perturbation_case(
    model: ModelSpace,
    seed: int,
    *,
    min_linear_coefficient: float = 0.02,
) -> tuple[tuple[np.ndarray, ...], np.ndarray]:
    """A seeded (frame, u) pair exercising the perturbed pipeline.

    The first frame vector sits exactly on a wall: two coordinates
    share one of n-1 jittered equispaced values, so after normalization
    every other wall stays several snap radii away.  The remaining
    vectors are completed orthonormally and u is a unit rotation
    generator.  Draws whose first-order Gram coefficient vanishes are
    rejected: a wall vector whose doubled members span a
    stabilizer-invariant plane sees no linear term, and a fully regular
    frame degenerates to quadratic, so such cases say nothing about
    linear scaling.
    """
    rng = np.random.default_rng(seed)
    n = model.n
    for _ in range(1000):
        values = np.arange(n - 1, dtype=float) + rng.uniform(-0.2, 0.2, size=n - 1)
        pair = rng.choice(n, size=2, replace=False)
        order = rng.permutation(n - 1)
        raw = np.empty(n)
        raw[pair[0]] = raw[pair[1]] = values[order[0]]
        rest = [c for c in range(n) if c not in pair]
        for slot, coord in enumerate(rest):
            raw[coord] = values[order[slot + 1]]
        raw -= raw.mean()
        first = raw / np.linalg.norm(raw)
        distinct = np.sort(np.unique(np.round(first, 12)))
        if len(distinct) != n - 1:
            continue
        if np.diff(distinct).min() <= 3.0 * model.epsilon_zero:
            continue
        basis = [first]
        ok = True
        for _k in range(model.rank - 1):
            for _try in range(50):
                cand = rng.standard_normal(n)
                cand -= cand.mean()
                for prev in basis:
                    cand -= np.dot(cand, prev) * prev
                norm = np.linalg.norm(cand)
                if norm > 1e-6:
                    basis.append(cand / norm)
                    break
            else:
                ok = False
                break
        if not ok:
            continue
        s = rng.standard_normal((n, n))
        u = (s - s.T) / 2.0
        u /= np.sqrt(trace_inner(u, u.T))
        exact = [_rationalize_flat(w) for w in basis]
        try:
            coefficient = first_order_gram_coefficient(model, exact, u)
        except (MatchFailedError, InvalidParamsError):
            continue
        if coefficient < min_linear_coefficient:
            continue
        return tuple(basis), u
    raise RuntimeError("could not sample a perturbation case")
