import itertools

import numpy as np
import pytest

from rootmatch.errors import MalformedMatrixError, NoMatchingError
from rootmatch.framematrix import build_matrix, make_frame
from rootmatch.matcher import greedy_match, oracle_match, validate
from rootmatch.rootdata import space

SL4 = space("SL(4,R)")
ALL_ONES = [[1] * 6 for _ in range(3)]
PIGEONHOLE = [[1, 1, 0], [1, 1, 0]]


def _wall_matrix():
    frame = make_frame(SL4, [(1, 1, 1, -3), (-3, 1, 1, 1), (1, -1, 1, -1)])
    return build_matrix(frame)


def brute_force_exists(rows):
    """Exhaustive search for two distinct columns per row, all distinct."""
    options = [
        list(itertools.combinations([c for c, x in enumerate(row) if x], 2))
        for row in rows
    ]
    if any(not opts for opts in options):
        return False
    for combo in itertools.product(*options):
        used = [c for pair in combo for c in pair]
        if len(set(used)) == 2 * len(rows):
            return True
    return False


def test_all_ones_canonical_pairs():
    result, trace = greedy_match(ALL_ONES)
    assert result.pairs == ((0, 1), (2, 3), (4, 5))
    assert trace.repairs == ()
    assert validate(ALL_ONES, result)


def test_wall_matrix_traced_run():
    m = _wall_matrix()
    result, trace = greedy_match(m)
    assert result.pairs == ((2, 4), (0, 1), (3, 5))
    assert [s.top_row for s in trace.stages] == [0, 1, 2]
    assert [s.chosen for s in trace.stages] == [(2, 4), (0, 1), (3, 5)]
    assert [s.phase for s in trace.stages] == [1, 1, 2]
    assert trace.repairs == ()
    labels = [
        ["".join(str(i + 1) for i in m.col_labels[c][0].support) for c in pair]
        for pair in result.pairs
    ]
    assert labels == [["14", "24"], ["12", "13"], ["23", "34"]]


def test_pigeonhole_no_matching():
    with pytest.raises(NoMatchingError) as err:
        greedy_match(PIGEONHOLE)
    assert err.value.trace is not None
    assert oracle_match(PIGEONHOLE) is None


def test_oracle_all_ones():
    result = oracle_match(ALL_ONES)
    assert result is not None
    assert validate(ALL_ONES, result)


def test_validate_examples():
    good, _ = greedy_match(ALL_ONES)
    assert validate(ALL_ONES, good)
    from rootmatch.matcher import MatchResult

    assert not validate(ALL_ONES, MatchResult(pairs=((0, 1), (0, 3), (4, 5))))
    assert not validate(ALL_ONES, MatchResult(pairs=((0, 0), (2, 3), (4, 5))))
    assert not validate(ALL_ONES, MatchResult(pairs=((0, 1), (2, 3))))
    assert not validate(ALL_ONES, MatchResult(pairs=((0, 9), (2, 3), (4, 5))))


def test_malformed_matrices():
    with pytest.raises(MalformedMatrixError):
        greedy_match([])
    with pytest.raises(MalformedMatrixError):
        greedy_match([[]])
    with pytest.raises(MalformedMatrixError):
        greedy_match([[1, 0], [1]])
    with pytest.raises(MalformedMatrixError):
        greedy_match([[1, 2], [0, 1]])


def test_phase1_last_row_swap_repair():
    frame = make_frame(SL4, [(-3, 1, 1, 1), (1, -3, 1, 1), (1, 1, -3, 1)])
    m = build_matrix(frame)
    result, trace = greedy_match(m)
    assert validate(m, result)
    assert len(trace.repairs) == 1
    repair = trace.repairs[0]
    assert repair.kind == "last_row_swap"
    assert repair.donor_row == 0
    assert repair.failing_row == 2
    # the donor hands back the overlapped column and takes a private one
    assert m.entries[repair.failing_row][repair.column_restored] == 1
    donors_with_taken = [
        i for i in range(m.rows) if m.entries[i][repair.column_taken]
    ]
    assert donors_with_taken == [repair.donor_row]


def test_phase2_put_back_repair():
    rows = [
        [1, 1, 0, 0, 1, 0, 1, 0, 0],
        [1, 0, 1, 1, 0, 0, 0, 0, 1],
        [1, 1, 1, 1, 0, 0, 0, 0, 0],
    ]
    result, trace = greedy_match(rows)
    assert validate(rows, result)
    kinds = [r.kind for r in trace.repairs]
    assert kinds == ["put_back", "put_back"]
    # repairs hand fresh columns to an already processed row
    for repair in trace.repairs:
        assert rows[repair.donor_row][repair.column_taken] == 1
        assert rows[repair.donor_row][repair.column_restored] == 1


def test_put_back_with_single_usable_fresh_column():
    # Tight case: six columns, one fresh column is exclusive to the
    # failing row, so only one donor swap is available and it suffices.
    frame = make_frame(SL4, [(12, -4, -4, -4), (13, -3, -5, -5), (-42, 26, -10, 26)])
    m = build_matrix(frame)
    result, trace = greedy_match(m)
    assert validate(m, result)
    assert [r.kind for r in trace.repairs] == ["put_back"]


def test_repair_fires_at_most_once_per_phase():
    # two identical heavy rows plus a row that cannot be rescued twice
    rows = [
        [1, 1, 0, 0],
        [1, 1, 0, 0],
        [1, 1, 0, 0],
    ]
    with pytest.raises(NoMatchingError):
        greedy_match(rows)


def test_determinism():
    m = _wall_matrix()
    a = greedy_match(m)
    b = greedy_match(m)
    assert a == b
    assert oracle_match(m) == oracle_match(m)


def test_trace_sanity_on_catalogue_matrix():
    m = _wall_matrix()
    _result, trace = greedy_match(m)
    assert len(trace.stages) <= m.rows
    n = m.rows
    weights = m.row_weights
    counts_by_stage = {s.stage: dict(s.counts) for s in trace.stages}
    # phase-1 rows lose at most one live entry per stage
    for stage in trace.stages:
        nxt = counts_by_stage.get(stage.stage + 1)
        if nxt is None:
            continue
        for row, count in stage.counts:
            if weights[row] == n and row in nxt:
                assert nxt[row] >= count - 1


def test_soundness_on_random_matrices():
    rng = np.random.default_rng(123)
    greedy_wins = 0
    for _ in range(300):
        n = int(rng.integers(2, 6))
        m = int(rng.integers(2, 16))
        rows = (rng.random((n, m)) < rng.uniform(0.2, 0.9)).astype(int).tolist()
        oracle = oracle_match(rows)
        if oracle is not None:
            assert validate(rows, oracle)
        try:
            result, _trace = greedy_match(rows)
        except NoMatchingError:
            continue
        greedy_wins += 1
        assert validate(rows, result)
        assert oracle is not None
    assert greedy_wins > 50


def test_oracle_against_brute_force():
    rng = np.random.default_rng(42)
    for _ in range(300):
        n = int(rng.integers(1, 4))
        m = int(rng.integers(2, 7))
        rows = (rng.random((n, m)) < 0.5).astype(int).tolist()
        oracle = oracle_match(rows)
        assert (oracle is not None) == brute_force_exists(rows)
        if oracle is not None:
            assert validate(rows, oracle)
