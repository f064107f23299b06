import pytest

from rootmatch.chamber import (
    enumerate_faces,
    fundamental_coweights,
    simple_system,
    stabilizer_codim,
    verify_codim_bounds,
)
from rootmatch.errors import ExcludedSpaceError, ZeroVectorError
from rootmatch.rootdata import catalogue, evaluate_root, space


def _face(space_, subset):
    return next(
        f for f in enumerate_faces(space_) if f.simple_subset == tuple(subset)
    )


def test_simple_systems():
    assert [r.coords for r in simple_system(space("SL(4,R)").rootsys)] == [
        (1, -1, 0, 0),
        (0, 1, -1, 0),
        (0, 0, 1, -1),
    ]
    assert [r.coords for r in simple_system(space("Sp(6,R)").rootsys)] == [
        (1, -1, 0),
        (0, 1, -1),
        (0, 0, 2),
    ]
    assert [r.coords for r in simple_system(space("SO(3,5)").rootsys)] == [
        (1, -1, 0),
        (0, 1, -1),
        (0, 0, 1),
    ]
    assert [r.coords for r in simple_system(space("SO(4,4)").rootsys)] == [
        (1, -1, 0, 0),
        (0, 1, -1, 0),
        (0, 0, 1, -1),
        (0, 0, 1, 1),
    ]
    # SU(p,p) has no short roots; the last simple root is long
    assert [r.coords for r in simple_system(space("SU(2,2)").rootsys)] == [
        (1, -1),
        (0, 2),
    ]
    assert [r.coords for r in simple_system(space("SU(3,2)").rootsys)] == [
        (1, -1),
        (0, 1),
    ]


def test_coweights_are_dual_to_simples():
    for name in ("SL(5,R)", "SO(3,5)", "Sp(8,R)", "SU(4,3)", "SO(5,5)"):
        rs = space(name).rootsys
        simples = simple_system(rs)
        for i, w in enumerate(fundamental_coweights(rs)):
            for j, s in enumerate(simples):
                value = evaluate_root(s, w)
                assert (value != 0) == (i == j)
            if rs.family == "A":
                assert sum(w) == 0


def test_sl4_regular_face():
    face = _face(space("SL(4,R)"), ())
    assert face.vanishing == ()
    assert face.codim == 6


def test_sl4_wall_face():
    face = _face(space("SL(4,R)"), (0, 1))
    assert {r.coords for r in face.vanishing} == {
        (1, -1, 0, 0),
        (0, 1, -1, 0),
        (1, 0, -1, 0),
    }
    assert face.codim == 3
    assert face.witness == (1, 1, 1, -3)


def test_sp6_c2_subwall():
    face = _face(space("Sp(6,R)"), (1, 2))
    assert face.codim == 5
    assert face.vanishing_count == 4


def test_face_count_and_distinct_vanishing():
    for name in ("SL(4,R)", "Sp(6,R)", "SO(3,5)", "SU(3,3)"):
        s = space(name)
        faces = enumerate_faces(s)
        assert len(faces) == 2 ** s.rank
        vanishing_sets = {tuple(r.coords for r in f.vanishing) for f in faces}
        assert len(vanishing_sets) == len(faces)


def test_witness_vanishing_pattern():
    for name in ("SL(5,R)", "Sp(6,R)", "SO(3,5)", "SU(4,2)", "SO(4,4)"):
        s = space(name)
        for face in enumerate_faces(s):
            vanish = {r.coords for r in face.vanishing}
            for root in s.rootsys.positives:
                value = evaluate_root(root, face.witness)
                assert (value == 0) == (root.coords in vanish), (name, face.simple_subset)


def test_witness_codim_agreement():
    # two code paths: mask arithmetic on the vanishing set vs direct
    # evaluation on the witness vector
    for name in ("SL(5,R)", "Sp(6,R)", "SO(3,5)", "SU(4,2)"):
        s = space(name)
        for face in enumerate_faces(s):
            if any(face.witness):
                assert stabilizer_codim(s, face.witness) == face.codim


def test_vanishing_sets_match_span_membership():
    # independent oracle: rational span membership by row reduction,
    # against the simple-coefficient masks used by enumerate_faces
    from rootmatch.exact import in_span

    for name in ("SL(4,R)", "Sp(6,R)", "SO(3,5)", "SU(3,2)"):
        s = space(name)
        simples = simple_system(s.rootsys)
        for face in enumerate_faces(s):
            span_basis = [simples[i].coords for i in face.simple_subset]
            expected = {
                r.coords
                for r in s.rootsys.positives
                if in_span(r.coords, span_basis)
            }
            assert {r.coords for r in face.vanishing} == expected


def test_monotonicity():
    s = space("SO(3,5)")
    faces = {f.simple_subset: f for f in enumerate_faces(s)}
    for small, f_small in faces.items():
        for large, f_large in faces.items():
            if set(small) <= set(large):
                v_small = {r.coords for r in f_small.vanishing}
                v_large = {r.coords for r in f_large.vanishing}
                assert v_small <= v_large
                assert f_small.codim >= f_large.codim


def test_regular_face_codim_is_columns():
    for s in catalogue():
        face = next(f for f in enumerate_faces(s) if f.simple_subset == ())
        assert face.codim == s.dim_x - s.rank


def test_stabilizer_codim_examples():
    assert stabilizer_codim(space("SL(4,R)"), (1, 1, 1, -3)) == 3
    assert stabilizer_codim(space("SO(4,4)"), (1, 0, 0, 0)) == 6
    assert stabilizer_codim(space("Sp(6,R)"), (1, 0, 0)) == 5
    with pytest.raises(ZeroVectorError):
        stabilizer_codim(space("SL(4,R)"), (0, 0, 0, 0))


def test_bounds_pass_all_spaces():
    for s in catalogue():
        if s.excluded:
            continue
        report = verify_codim_bounds(s)
        assert report.passed, (s.name, [e for e in report.entries if not e.ok])


def test_sl_faces_at_rank_are_the_two_maximal_walls():
    for m in range(4, 10):
        s = space(f"SL({m},R)")
        n = s.rank
        report = verify_codim_bounds(s)
        walls = {e.simple_subset for e in report.faces_at_rank}
        assert walls == {tuple(range(1, n)), tuple(range(n - 1))}
        for e in report.faces_at_rank:
            # a maximal wall kills a full A_(n-1) subsystem
            assert e.vanishing_count == n * (n - 1) // 2


def test_so_minimum_codim():
    for n in range(2, 9):
        for r in range(4):
            if (n, r) in ((2, 0), (3, 0)):
                continue
            report = verify_codim_bounds(space(f"SO({n},{n + r})"))
            assert report.min_codim == 2 * n - 2 + r, (n, r)


def test_sp_su_minimum_codim():
    for n in range(2, 9):
        report = verify_codim_bounds(space(f"Sp({2 * n},R)"))
        assert report.min_codim == 2 * n - 1
    for name in ("SU(2,2)", "SU(4,2)", "SU(3,3)", "SU(6,4)"):
        s = space(name)
        report = verify_codim_bounds(s)
        assert report.min_codim >= 2 * s.rank - 1


def test_excluded_space_rejected():
    with pytest.raises(ExcludedSpaceError):
        verify_codim_bounds(space("SL(3,R)"))


def test_sl4_example_report():
    report = verify_codim_bounds(space("SL(4,R)"))
    assert report.passed
    assert {e.simple_subset for e in report.faces_at_rank} == {(0, 1), (1, 2)}
