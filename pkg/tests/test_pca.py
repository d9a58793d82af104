from __future__ import annotations

import json

import numpy as np
import pytest

from helpers import (
    OILS_CENTER_CORR,
    OILS_CORR_HI,
    OILS_CORR_LO,
    OILS_SCORES_HI,
    OILS_SCORES_LO,
    align_to,
    aligned_interval_error,
    aligned_matrix_error,
)
from sympca import (
    DataError,
    Interval,
    IntervalMatrix,
    centers_matrix,
    clamp_correlations,
    flip_component,
    interval_scores_raw,
    pca_auto,
    pca_ztz,
    pca_zzt,
    random_interval_table,
    result_to_dict,
    result_to_json,
    standardize,
    vertex_extremes,
)


def _degenerate(table: IntervalMatrix) -> IntervalMatrix:
    mids = centers_matrix(table)
    return IntervalMatrix(table.rows, table.cols, mids, mids)


class TestCentersMatrix:
    def test_oils_midpoints(self, oils):
        mids = centers_matrix(oils)
        assert mids[0, 0] == pytest.approx(0.9325)   # Linseed GRA
        assert mids[0, 1] == pytest.approx(-22.5)    # Linseed FRE

    def test_degenerate_cell(self):
        t = IntervalMatrix(("r", "s"), ("a",), [[7.0], [1.0]], [[7.0], [2.0]])
        assert centers_matrix(t)[0, 0] == 7.0


class TestStandardize:
    def test_unit_norm_zero_mean_columns(self, oils):
        b = standardize(oils)
        norms = np.linalg.norm(b.z, axis=0)
        assert np.abs(norms - 1.0).max() <= 1e-10
        assert np.abs(b.z.mean(axis=0)).max() <= 1e-12
        assert np.all(b.col_stds > 0)

    def test_bounds_bracket_z(self, oils):
        b = standardize(oils)
        assert np.all(b.bounds.low <= b.z)
        assert np.all(b.z <= b.bounds.high)

    def test_degenerate_input_collapses_bounds(self, oils):
        b = standardize(_degenerate(oils))
        assert np.array_equal(b.bounds.low, b.z)
        assert np.array_equal(b.bounds.high, b.z)

    def test_population_std_convention(self, oils):
        b = standardize(oils)
        mids = centers_matrix(oils)
        assert b.col_stds == pytest.approx(mids.std(axis=0, ddof=0))

    def test_constant_column_named_in_error(self):
        t = IntervalMatrix(
            ("r", "s"), ("flat", "x"),
            [[1.0, 0.0], [1.0, 2.0]], [[1.0, 1.0], [1.0, 3.0]],
        )
        with pytest.raises(DataError, match="'flat'"):
            standardize(t)

    def test_needs_two_rows(self):
        t = IntervalMatrix(("r",), ("a",), [[0.0]], [[1.0]])
        with pytest.raises(DataError, match="at least 2 rows"):
            standardize(t)


class TestOilsGoldens:
    def test_correlations_match_reference(self, oils):
        res = pca_auto(oils)
        clamped = clamp_correlations(res.correlations)
        assert aligned_interval_error(clamped, OILS_CORR_LO, OILS_CORR_HI) <= 5e-3

    def test_center_correlations_match_reference(self, oils):
        res = pca_auto(oils)
        assert aligned_matrix_error(res.center_correlations, OILS_CENTER_CORR) <= 1e-5

    def test_scores_match_reference(self, oils):
        res = pca_auto(oils)
        assert aligned_interval_error(res.scores, OILS_SCORES_LO, OILS_SCORES_HI) <= 5e-3

    def test_raw_correlations_exceed_unit_ball(self, oils):
        # hypercube vertices may project beyond the unit circle; clamping
        # is a reporting step, the stored intervals stay raw
        res = pca_auto(oils)
        assert res.correlations.lo.min() < -1.0
        clamped = clamp_correlations(res.correlations)
        assert clamped.lo.min() >= -1.0 and clamped.hi.max() <= 1.0


class TestPcaStructure:
    def test_auto_dispatch(self, oils):
        assert pca_auto(oils).method_used == "ztz"          # m=8 > n=4
        rng = np.random.default_rng(0)
        wide = random_interval_table(3, 10, rng)
        assert pca_auto(wide).method_used == "zzt"          # m <= n

    def test_shapes_and_labels(self, oils):
        res = pca_ztz(oils)
        assert res.scores.rows == oils.rows
        assert res.correlations.rows == oils.cols
        assert res.scores.cols == ("PC1", "PC2", "PC3", "PC4")
        assert res.loadings_u.shape == (4, 4)
        assert res.axes_v.shape == (8, 4)
        assert res.center_scores.shape == (8, 4)

    def test_q_truncation(self, oils):
        res = pca_ztz(oils, q=2)
        assert res.eigenvalues.shape == (2,)
        assert res.scores.cols == ("PC1", "PC2")
        full = pca_ztz(oils)
        assert np.allclose(res.scores.lo, full.scores.lo[:, :2])

    @pytest.mark.parametrize("bad_q", [0, -1, 5])
    def test_q_out_of_range(self, oils, bad_q):
        with pytest.raises(DataError, match="out of range"):
            pca_ztz(oils, q=bad_q)

    def test_eigenvalue_sum_is_column_count(self, oils):
        res = pca_ztz(oils)
        assert res.eigenvalues.sum() == pytest.approx(4.0, abs=1e-9)

    def test_center_correlation_duality_identity(self, oils):
        # coordinates of variables on components equal sqrt(lam) * loadings
        for res in (pca_zzt(oils), pca_ztz(oils)):
            expect = res.loadings_u * np.sqrt(res.eigenvalues)
            assert np.abs(res.center_correlations - expect).max() <= 1e-9


class TestContainment:
    def test_oils(self, oils):
        res = pca_auto(oils)
        assert np.all(res.scores.lo <= res.center_scores)
        assert np.all(res.center_scores <= res.scores.hi)
        assert np.all(res.correlations.lo <= res.center_correlations)
        assert np.all(res.center_correlations <= res.correlations.hi)

    @pytest.mark.parametrize("seed", range(6))
    def test_random_tables(self, seed):
        rng = np.random.default_rng(400 + seed)
        table = random_interval_table(int(rng.integers(2, 9)), int(rng.integers(2, 9)), rng)
        res = pca_auto(table)
        assert np.all(res.scores.lo <= res.center_scores)
        assert np.all(res.center_scores <= res.scores.hi)
        assert np.all(res.correlations.lo <= res.center_correlations)
        assert np.all(res.center_correlations <= res.correlations.hi)


class TestPathEquivalence:
    def test_oils_all_fields(self, oils):
        a = pca_zzt(oils)
        b = align_to(pca_ztz(oils), a)
        assert a.method_used == "zzt" and b.method_used == "ztz"
        assert np.abs(a.eigenvalues - b.eigenvalues).max() <= 1e-9
        assert np.abs(a.loadings_u - b.loadings_u).max() <= 1e-9
        assert np.abs(a.axes_v - b.axes_v).max() <= 1e-9
        assert np.abs(a.scores.lo - b.scores.lo).max() <= 1e-9
        assert np.abs(a.scores.hi - b.scores.hi).max() <= 1e-9
        assert np.abs(a.correlations.lo - b.correlations.lo).max() <= 1e-9
        assert np.abs(a.correlations.hi - b.correlations.hi).max() <= 1e-9
        assert np.abs(a.center_scores - b.center_scores).max() <= 1e-9

    @pytest.mark.parametrize("seed", range(4))
    def test_random_tables(self, seed):
        rng = np.random.default_rng(777 + seed)
        table = random_interval_table(int(rng.integers(2, 11)), int(rng.integers(2, 11)), rng)
        a = pca_zzt(table)
        b = align_to(pca_ztz(table), a)
        assert np.abs(a.eigenvalues - b.eigenvalues).max() <= 1e-9
        assert np.abs(a.scores.lo - b.scores.lo).max() <= 1e-9
        assert np.abs(a.correlations.hi - b.correlations.hi).max() <= 1e-9


class TestVertexOracle:
    def test_oils_scores_and_correlations(self, oils):
        res = pca_ztz(oils)
        bundle = standardize(oils)
        m, n = oils.shape
        score_low = bundle.bounds.low * np.sqrt(m)
        score_high = bundle.bounds.high * np.sqrt(m)
        for i in range(m):
            row = [Interval(score_low[i, j], score_high[i, j]) for j in range(n)]
            for k in range(res.eigenvalues.size):
                expect = vertex_extremes(row, res.loadings_u[:, k])
                assert res.scores.lo[i, k] == pytest.approx(expect.lo, abs=1e-12)
                assert res.scores.hi[i, k] == pytest.approx(expect.hi, abs=1e-12)
        for j in range(n):
            col = [Interval(bundle.bounds.low[i, j], bundle.bounds.high[i, j])
                   for i in range(m)]
            for k in range(res.eigenvalues.size):
                expect = vertex_extremes(col, res.axes_v[:, k])
                assert res.correlations.lo[j, k] == pytest.approx(expect.lo, abs=1e-12)
                assert res.correlations.hi[j, k] == pytest.approx(expect.hi, abs=1e-12)


class TestDegenerateReduction:
    def test_outputs_degenerate_and_classical(self, oils):
        table = _degenerate(oils)
        res = pca_auto(table)
        assert np.array_equal(res.scores.lo, res.scores.hi)
        assert np.array_equal(res.correlations.lo, res.correlations.hi)
        # independent classical PCA of the midpoints via LAPACK
        mids = centers_matrix(oils)
        xs = (mids - mids.mean(axis=0)) / mids.std(axis=0)
        lam, u = np.linalg.eigh(xs.T @ xs / len(xs))
        order = np.argsort(lam)[::-1]
        scores = xs @ u[:, order]
        assert aligned_matrix_error(res.center_scores, scores) <= 1e-10
        assert aligned_matrix_error(res.scores.lo, scores) <= 1e-10


class TestIntervalScoresRaw:
    def test_matches_vertex_oracle_on_oils(self, oils):
        out = interval_scores_raw(oils)
        mids = centers_matrix(oils)
        means = mids.mean(axis=0)
        centered = mids - means
        lam, u = np.linalg.eigh(centered.T @ centered)
        order = np.argsort(lam)[::-1]
        u = u[:, order]
        m, n = oils.shape
        for i in range(m):
            row = [Interval(oils.lo[i, j] - means[j], oils.hi[i, j] - means[j])
                   for j in range(n)]
            for k in range(len(out.cols)):
                expect = vertex_extremes(row, u[:, k])
                lo, hi = sorted((expect.lo, expect.hi))
                # orientation-free comparison: same extremes up to sign
                got = sorted((out.lo[i, k], out.hi[i, k]))
                direct = max(abs(got[0] - lo), abs(got[1] - hi))
                flipped = max(abs(got[0] + hi), abs(got[1] + lo))
                assert min(direct, flipped) <= 1e-9

    def test_contains_center_projection(self, oils):
        out = interval_scores_raw(oils)
        mids = centers_matrix(oils)
        centered = mids - mids.mean(axis=0)
        # recompute with package eigensolver for exact orientation match
        from sympca import eigen_sym

        eig = eigen_sym(centered.T @ centered)
        proj = centered @ eig.vectors[:, : len(out.cols)]
        assert np.all(out.lo <= proj + 1e-12)
        assert np.all(proj <= out.hi + 1e-12)

    def test_degenerate_gives_classical_centered_pca(self, oils):
        table = _degenerate(oils)
        out = interval_scores_raw(table)
        assert np.array_equal(out.lo, out.hi)
        mids = centers_matrix(oils)
        centered = mids - mids.mean(axis=0)
        lam, u = np.linalg.eigh(centered.T @ centered)
        order = np.argsort(lam)[::-1]
        scores = centered @ u[:, order]
        assert aligned_matrix_error(out.lo, scores) <= 1e-10

    def test_constant_column_is_fine_here(self):
        t = IntervalMatrix(
            ("r", "s", "t"), ("flat", "x"),
            [[1.0, 0.0], [1.0, 2.0], [1.0, 4.0]],
            [[1.0, 1.0], [1.0, 3.0], [1.0, 5.0]],
        )
        out = interval_scores_raw(t)
        assert len(out.cols) >= 1


class TestSignFlip:
    def test_flip_component_covariance(self, oils):
        res = pca_ztz(oils)
        flipped = flip_component(res, 1)
        assert np.array_equal(flipped.loadings_u[:, 1], -res.loadings_u[:, 1])
        assert np.array_equal(flipped.axes_v[:, 1], -res.axes_v[:, 1])
        assert np.array_equal(flipped.scores.lo[:, 1], -res.scores.hi[:, 1])
        assert np.array_equal(flipped.scores.hi[:, 1], -res.scores.lo[:, 1])
        # untouched components stay identical
        assert np.array_equal(flipped.scores.lo[:, 0], res.scores.lo[:, 0])
        # clamped magnitudes unchanged
        a = clamp_correlations(res.correlations)
        b = clamp_correlations(flipped.correlations)
        assert np.allclose(np.abs(a.lo[:, 1]), np.abs(b.hi[:, 1]))

    def test_double_flip_is_identity(self, oils):
        res = pca_ztz(oils)
        back = flip_component(flip_component(res, 0), 0)
        assert np.array_equal(back.scores.lo, res.scores.lo)
        assert np.array_equal(back.loadings_u, res.loadings_u)

    def test_flip_out_of_range(self, oils):
        with pytest.raises(DataError, match="out of range"):
            flip_component(pca_ztz(oils), 4)


class TestSerialization:
    def test_dict_structure(self, oils):
        res = pca_auto(oils)
        doc = result_to_dict(res)
        assert doc["method_used"] == "ztz"
        assert len(doc["eigenvalues"]) == 4
        assert doc["scores"]["rows"] == list(oils.rows)
        assert doc["correlations"]["cols"] == ["PC1", "PC2", "PC3", "PC4"]
        assert doc["center_scores"]["values"][0][0] == res.center_scores[0, 0]

    def test_clamp_flag(self, oils):
        res = pca_auto(oils)
        clamped = result_to_dict(res, clamp=True)
        raw = result_to_dict(res, clamp=False)
        assert min(min(r) for r in clamped["correlations"]["lo"]) >= -1.0
        assert min(min(r) for r in raw["correlations"]["lo"]) < -1.0
        # scores are never clamped
        assert clamped["scores"] == raw["scores"]

    def test_json_round_trip_and_determinism(self, oils):
        res = pca_auto(oils)
        text = result_to_json(res)
        assert json.loads(text)["method_used"] == "ztz"
        assert text == result_to_json(res)
