import pytest

from finsetrep.arnold import arnold_module
from finsetrep.catcore import N, SetMap, enumerate_hom, lift
from finsetrep.exactla import Matrix, rank
from finsetrep.invariants import (
    barred_map, invariants_basis, monotonicity_check, replication_iso_check,
    replication_map,
)
from finsetrep.repmod import direct_sum
from finsetrep.simples import make_simple


def test_invariants_of_c2():
    C2 = make_simple("Ck", 5, k=2)
    ib = invariants_basis(C2, 4)
    assert ib.dim == 1
    assert ib.basis.col(0) == (1, 1, 1, 1, 1, 1)
    assert invariants_basis(C2, 1).dim == 0


def test_invariants_of_d1():
    D1 = make_simple("D1", 5)
    for n in range(1, 6):
        assert invariants_basis(D1, n).dim == 1


def test_projector_idempotent_and_fixed_by_transpositions():
    fixtures = (make_simple("Ck", 5, k=2), make_simple("D1", 5), arnold_module(1, 5))
    for module in fixtures:
        for n in range(1, 6):
            ib = invariants_basis(module, n)
            assert ib.projector * ib.projector == ib.projector
            for i in range(1, n):
                swap = tuple(i + 1 if x == i else i if x == i + 1 else x
                             for x in range(1, n + 1))
                mats = module.act(lift(SetMap(n, n, swap), "injection")) \
                    if module.category is N else module.act(SetMap(n, n, swap))
                assert mats * ib.basis == ib.basis


def test_invariants_match_coinvariants_dimension():
    # rank of the projector = dim invariants; corank of (I - P) = dim coinvariants
    for module in (make_simple("Ck", 5, k=2), arnold_module(1, 5)):
        for n in range(1, 6):
            p = invariants_basis(module, n).projector
            eye = Matrix.identity(p.rows)
            assert rank(p) == p.rows - rank(eye - p)


def test_barred_map_examples():
    C2 = make_simple("Ck", 5, k=2)
    mat = barred_map(C2, SetMap(2, 3, (1, 3)))
    assert mat.shape == (1, 1) and not mat.is_zero()
    mat = barred_map(C2, SetMap(2, 1, (1, 1)))
    assert mat.shape == (0, 1)
    D1 = make_simple("D1", 5)
    mat = barred_map(D1, SetMap(3, 2, (1, 2, 2)))
    assert mat.shape == (1, 1) and not mat.is_zero()


def test_barred_map_is_lift_independent_where_action_descends():
    C2 = make_simple("Ck", 4, k=2)
    for m in range(5):
        for n in range(5):
            groups = {}
            for f in enumerate_hom(N, m, n):
                groups.setdefault(f.map.values, []).append(f)
            for mors in groups.values():
                base = barred_map(C2, mors[0])
                for f in mors[1:]:
                    assert barred_map(C2, f) == base


def test_monotonicity_of_fixtures():
    report = monotonicity_check(make_simple("Ck", 6, k=3), range(1, 7))
    assert report.dims == (0, 0, 1, 1, 1, 1) and report.passed
    report = monotonicity_check(arnold_module(1, 6), range(1, 7))
    assert report.dims == (0, 1, 1, 1, 1, 1) and report.passed
    report = monotonicity_check(arnold_module(2, 6), range(1, 7))
    assert report.dims == (0, 0, 0, 0, 0, 0) and report.passed


def test_monotonicity_of_direct_sums():
    a = direct_sum(make_simple("Ck", 5, k=2), make_simple("Ck", 5, k=3))
    report = monotonicity_check(a, range(1, 6))
    assert report.passed and report.dims == (0, 1, 2, 2, 2)


def test_replication_map_shape():
    f = replication_map(2, 3)
    assert f.values == (1, 1, 1, 2, 2, 2)


def test_replication_pass_and_fail():
    C2 = make_simple("Ck", 6, k=2)
    for n, m in ((2, 2), (2, 3), (3, 2)):
        assert replication_iso_check(C2, n, m).passed
    control = replication_iso_check(make_simple("Ck", 6, k=3), 2, 2)
    assert not control.passed
    assert (control.source_dim, control.target_dim) == (1, 0)


def test_replication_value_on_plane_module():
    H1 = arnold_module(1, 6)
    report = replication_iso_check(H1, 2, 2)
    assert report.passed
    assert report.matrix == Matrix(1, 1, [[4]])


def test_replication_requires_room():
    with pytest.raises(ValueError):
        replication_iso_check(make_simple("Ck", 5, k=2), 3, 2)
