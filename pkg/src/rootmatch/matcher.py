"""Choosing two columns per row, all distinct.

Two independent routes certify the same statement.  ``greedy_match`` is
a staged greedy pass: rows are processed lightest first, the top row of
each stage takes its two leftmost live entries, and two repair moves
(one per phase) rescue the known failure modes by revising an earlier
choice.  ``oracle_match`` is a plain augmenting-path bipartite matching
over two copies of each row, exact and hypothesis free, used to
cross-check existence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Union

from .errors import MalformedMatrixError, NoMatchingError
from .framematrix import SelectionMatrix

MatrixLike = Union[SelectionMatrix, Sequence[Sequence[int]]]


def _rows_of(matrix: MatrixLike) -> list[tuple[int, ...]]:
    entries = matrix.entries if isinstance(matrix, SelectionMatrix) else matrix
    rows = [tuple(row) for row in entries]
    if not rows:
        raise MalformedMatrixError("matrix has no rows")
    width = len(rows[0])
    if width == 0:
        raise MalformedMatrixError("matrix has no columns")
    for row in rows:
        if len(row) != width:
            raise MalformedMatrixError("ragged matrix")
        if any(x not in (0, 1) for x in row):
            raise MalformedMatrixError("entries must be 0 or 1")
    return rows


@dataclass(frozen=True)
class MatchResult:
    """Per row a pair of distinct column indices, all 2n globally distinct."""

    pairs: tuple[tuple[int, int], ...]

    def columns(self) -> list[int]:
        return [c for pair in self.pairs for c in pair]


@dataclass(frozen=True)
class StageRecord:
    stage: int
    phase: int
    order: tuple[int, ...]
    top_row: int
    counts: tuple[tuple[int, int], ...]  # (row, live entries) at stage start
    chosen: tuple[int, int]


@dataclass(frozen=True)
class RepairRecord:
    kind: str  # "last_row_swap" or "put_back"
    stage: int
    failing_row: int
    donor_row: int
    column_restored: int
    column_taken: int


@dataclass(frozen=True)
class AlgoTrace:
    stages: tuple[StageRecord, ...]
    repairs: tuple[RepairRecord, ...]


def greedy_match(matrix: MatrixLike) -> tuple[MatchResult, AlgoTrace]:
    """Run the staged greedy selection, with both repairs, and trace it.

    Phase 1 processes the rows whose weight equals the number of rows;
    phase 2 continues with the remaining rows without resetting the
    stage counter.  Tie-breaks are deterministic: stages take the
    lightest surviving row (stable in the original row index) and the
    top row takes its two leftmost live entries.  On inputs violating
    the structural properties the run is best effort and may raise
    ``NoMatchingError``; it never loops.
    """
    rows = _rows_of(matrix)
    n = len(rows)
    m = len(rows[0])
    weights = [sum(r) for r in rows]
    surviving = [True] * m
    removed_ever = [False] * m
    assigned: dict[int, list[int]] = {}
    processed: list[int] = []
    stages: list[StageRecord] = []
    repairs: list[RepairRecord] = []
    repair_used = {1: False, 2: False}
    pending = {
        1: [i for i in range(n) if weights[i] == n],
        2: [i for i in range(n) if weights[i] != n],
    }

    def live_columns(i: int) -> list[int]:
        return [c for c in range(m) if rows[i][c] and surviving[c]]

    def fail(stage: int):
        trace = AlgoTrace(stages=tuple(stages), repairs=tuple(repairs))
        raise NoMatchingError(f"greedy selection failed at stage {stage}", trace=trace)

    def repair_last_row_swap(failing: int, stage: int) -> bool:
        # Revise the first phase-1 choice: hand the failing row back the
        # column it shared with that row, and let the donor take one of
        # its entries no other row uses.
        if repair_used[1]:
            return False
        phase1_done = [i for i in processed if weights[i] == n]
        if not phase1_done:
            return False
        donor = phase1_done[0]
        pair = assigned[donor]
        overlap = [c for c in pair if rows[failing][c]]
        if not overlap:
            return False
        restored = overlap[0]
        taken = None
        for c in range(m):
            if (
                rows[donor][c]
                and c not in pair
                and surviving[c]
                and all(not rows[i][c] for i in range(n) if i != donor)
            ):
                taken = c
                break
        if taken is None:
            return False
        pair.remove(restored)
        pair.append(taken)
        surviving[restored] = True
        surviving[taken] = False
        removed_ever[taken] = True
        repairs.append(
            RepairRecord("last_row_swap", stage, failing, donor, restored, taken)
        )
        repair_used[1] = True
        return True

    def repair_put_back(failing: int, stage: int) -> bool:
        # Take the lowest never-removed columns holding a 1 of an already
        # processed row (those rows can donate: they have a chosen pair),
        # hand them to their owners, and put back the higher-indexed
        # column of each donor pair.  Two such columns exist in the
        # analyzed failure mode; a single one still rescues a failing row
        # that kept one live entry.
        if repair_used[2]:
            return False
        fresh = [
            c
            for c in range(m)
            if not removed_ever[c] and any(rows[i][c] for i in processed)
        ]
        if not fresh:
            return False
        plan = []
        pair_copies = {i: list(assigned[i]) for i in processed}
        newly_taken: set[int] = set()
        for c in fresh[:2]:
            donor = next(i for i in processed if rows[i][c])
            options = [x for x in pair_copies[donor] if x not in newly_taken]
            if not options:
                return False
            put_back = max(options)
            pair_copies[donor].remove(put_back)
            pair_copies[donor].append(c)
            newly_taken.add(c)
            plan.append((donor, put_back, c))
        for donor, put_back, c in plan:
            assigned[donor].remove(put_back)
            assigned[donor].append(c)
            surviving[put_back] = True
            surviving[c] = False
            removed_ever[c] = True
            repairs.append(
                RepairRecord("put_back", stage, failing, donor, put_back, c)
            )
        repair_used[2] = True
        return True

    t = 1
    phase = 1 if pending[1] else 2
    while pending[1] or pending[2]:
        if phase == 1 and not pending[1]:
            phase = 2
        pool = pending[phase]
        counts = {i: len(live_columns(i)) for i in pool}
        order = sorted(pool, key=lambda i: (counts[i], i))
        top = order[0]
        candidates = live_columns(top)
        if len(candidates) < 2:
            if phase == 1:
                repaired = repair_last_row_swap(top, t)
            else:
                repaired = repair_put_back(top, t)
            if repaired:
                candidates = live_columns(top)
            if len(candidates) < 2:
                fail(t)
        chosen = (candidates[0], candidates[1])
        stages.append(
            StageRecord(
                stage=t,
                phase=phase,
                order=tuple(order),
                top_row=top,
                counts=tuple(sorted(counts.items())),
                chosen=chosen,
            )
        )
        assigned[top] = list(chosen)
        for c in chosen:
            surviving[c] = False
            removed_ever[c] = True
        pool.remove(top)
        processed.append(top)
        t += 1

    pairs = tuple((min(assigned[i]), max(assigned[i])) for i in range(n))
    trace = AlgoTrace(stages=tuple(stages), repairs=tuple(repairs))
    return MatchResult(pairs=pairs), trace


def oracle_match(matrix: MatrixLike) -> MatchResult | None:
    """Exact existence check via augmenting paths on doubled row nodes."""
    rows = _rows_of(matrix)
    n, m = len(rows), len(rows[0])
    adj = [[c for c in range(m) if rows[i][c]] for i in range(n)]
    match_col: dict[int, tuple[int, int]] = {}

    def augment(node: tuple[int, int], visited: set[int]) -> bool:
        for c in adj[node[0]]:
            if c in visited:
                continue
            visited.add(c)
            holder = match_col.get(c)
            if holder is None or augment(holder, visited):
                match_col[c] = node
                return True
        return False

    matched = 0
    for i in range(n):
        for copy in (0, 1):
            if augment((i, copy), set()):
                matched += 1
    if matched < 2 * n:
        return None
    cols_by_row: dict[int, list[int]] = {i: [] for i in range(n)}
    for c, (i, _copy) in match_col.items():
        cols_by_row[i].append(c)
    pairs = tuple(
        (min(cols_by_row[i]), max(cols_by_row[i])) for i in range(n)
    )
    return MatchResult(pairs=pairs)


def validate(matrix: MatrixLike, result: MatchResult) -> bool:
    """True iff the pairs hit 1-entries, are distinct per row, 2n overall."""
    rows = _rows_of(matrix)
    if len(result.pairs) != len(rows):
        return False
    seen: set[int] = set()
    for i, (j, k) in enumerate(result.pairs):
        if j == k:
            return False
        for c in (j, k):
            if not 0 <= c < len(rows[0]) or rows[i][c] != 1:
                return False
            seen.add(c)
    return len(seen) == 2 * len(rows)
