import itertools
from fractions import Fraction

import numpy as np
import pytest

from rootmatch.errors import (
    DimensionMismatchError,
    InvalidParamsError,
    UnknownFamilyError,
    UnknownSpaceError,
)
from rootmatch.rootdata import (
    KTYPE_OTHER,
    KTYPE_SO,
    KTYPE_SO_PAIR,
    Root,
    build_root_system,
    catalogue,
    evaluate_root,
    space,
)


def test_a3_positive_roots_enumeration():
    rs = build_root_system("A", 3)
    expected = set()
    for i, j in itertools.combinations(range(4), 2):
        v = [0, 0, 0, 0]
        v[i], v[j] = 1, -1
        expected.add(tuple(v))
    assert {r.coords for r in rs.positives} == expected
    assert len(rs.positives) == 6
    assert all(r.multiplicity == 1 for r in rs.positives)


def test_c2_positive_roots():
    rs = build_root_system("C", 2)
    assert {r.coords for r in rs.positives} == {(1, -1), (1, 1), (2, 0), (0, 2)}
    assert all(r.multiplicity == 1 for r in rs.positives)


def test_su31_bc_roots():
    rs = build_root_system("BC", 1, p=3, q=1)
    got = {(r.coords, r.multiplicity) for r in rs.positives}
    assert got == {((1,), 4), ((2,), 1)}
    # cross-check against dim SU(3,1)/S(U(3)xU(1)) = 6
    assert rs.rank + rs.total_multiplicity == 6


def test_b_family_short_multiplicity():
    rs = build_root_system("B", 3, short_mult=2)
    shorts = [r for r in rs.positives if sum(abs(c) for c in r.coords) == 1]
    assert len(shorts) == 3
    assert all(r.multiplicity == 2 for r in shorts)


def test_family_and_param_errors():
    with pytest.raises(UnknownFamilyError):
        build_root_system("E", 8)
    with pytest.raises(InvalidParamsError):
        build_root_system("A", 0)
    with pytest.raises(InvalidParamsError):
        build_root_system("BC", 2, p=1, q=2)
    with pytest.raises(InvalidParamsError):
        build_root_system("BC", 3, p=4, q=2)  # rank != q
    with pytest.raises(InvalidParamsError):
        build_root_system("C", 2, short_mult=3)
    with pytest.raises(InvalidParamsError):
        Root((0, 0), 1)
    with pytest.raises(InvalidParamsError):
        Root((1, 0), 0)


def test_evaluate_root_examples():
    a3 = build_root_system("A", 3)
    e12 = next(r for r in a3.positives if r.coords == (1, -1, 0, 0))
    e14 = next(r for r in a3.positives if r.coords == (1, 0, 0, -1))
    assert evaluate_root(e12, (1, 1, -1, -1)) == 0
    assert evaluate_root(e14, (1, 1, -1, -1)) == 2
    c2 = build_root_system("C", 2)
    long1 = next(r for r in c2.positives if r.coords == (2, 0))
    assert evaluate_root(long1, (Fraction(3, 2), 0)) == 3
    with pytest.raises(DimensionMismatchError):
        evaluate_root(e12, (1, 0, 0))


def test_catalogue_lookups():
    sl4 = space("SL(4,R)")
    assert (sl4.dim_x, sl4.dim_k, sl4.dim_m, sl4.rank) == (9, 6, 0, 3)
    sp4 = space("Sp(4,R)")
    assert (sp4.dim_x, sp4.dim_k, sp4.dim_m, sp4.rank) == (6, 4, 0, 2)
    su22 = space("SU(2,2)")
    assert (su22.dim_x, su22.dim_k, su22.dim_m, su22.rank) == (8, 7, 1, 2)
    with pytest.raises(UnknownSpaceError):
        space("SO(2,2)")
    with pytest.raises(UnknownSpaceError):
        space("E8")


def test_exclusion_marker():
    assert space("SL(3,R)").excluded
    assert sum(1 for s in catalogue() if s.excluded) == 1


def test_ktype_tags():
    assert space("SL(5,R)").ktype == KTYPE_SO
    assert space("SO(4,6)").ktype == KTYPE_SO_PAIR
    assert space("Sp(6,R)").ktype == KTYPE_OTHER
    assert space("SU(4,3)").ktype == KTYPE_OTHER


def test_catalogue_dimension_identities():
    for s in catalogue():
        total = s.rootsys.total_multiplicity
        assert s.dim_x == s.rank + total, s.name
        assert s.dim_k == s.dim_m + total, s.name


def test_column_bound_equality_only_for_sl():
    for s in catalogue():
        bound = s.rank * (s.rank + 1) // 2
        assert s.columns >= bound, s.name
        assert (s.columns == bound) == s.name.startswith("SL("), s.name


def test_catalogue_extent():
    names = {s.name for s in catalogue()}
    assert {"SL(3,R)", "SL(9,R)", "Sp(16,R)", "SO(8,11)", "SU(6,6)"} <= names
    for n, r in itertools.product(range(2, 9), range(4)):
        if (n, r) in ((2, 0), (3, 0)):
            assert f"SO({n},{n + r})" not in names
        else:
            assert f"SO({n},{n + r})" in names


def _signed_permutation_image(coords, perm, signs):
    return tuple(signs[j] * coords[perm[j]] for j in range(len(coords)))


def test_weyl_stability_sampled():
    rng = np.random.default_rng(7)
    for name in ("SL(5,R)", "SO(3,5)", "Sp(6,R)", "SU(4,2)", "SO(4,4)"):
        rs = space(name).rootsys
        pos = {r.coords for r in rs.positives}
        dim = rs.coord_dim
        for _ in range(20):
            perm = list(rng.permutation(dim))
            if rs.family == "A":
                signs = [1] * dim
            else:
                signs = [int(s) for s in rng.choice((-1, 1), size=dim)]
            image = {
                _signed_permutation_image(r.coords, perm, signs)
                for r in rs.positives
            }
            assert len(image) == len(pos)
            for w in image:
                neg = tuple(-x for x in w)
                assert w in pos or neg in pos
