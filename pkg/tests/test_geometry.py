import numpy as np
import pytest

from xstates.geometry import existence_grid, regions_grid, sc_map, separable_grid
from xstates.state import CorrelationVector


def _node(field, r):
    idx = tuple(int(np.argmin(np.abs(ax - v))) for ax, v in zip(field.axes, r))
    return field.values[idx]


def _tetrahedron(r1, r2, r3):
    """Half-spaces bounding the hull of (1,1,-1), (1,-1,1), (-1,1,1), (-1,-1,-1)."""
    tol = 1e-12
    return (
        (r1 + r2 + r3 <= 1 + tol) & (r1 - r2 - r3 <= 1 + tol)
        & (-r1 + r2 - r3 <= 1 + tol) & (-r1 - r2 + r3 <= 1 + tol)
    )


class TestExistence:
    def test_nodes(self):
        f = existence_grid(0, 0, 41)
        assert _node(f, (0, 0, 0)) and not _node(f, (1, 1, 1))

    def test_local_terms(self):
        f = existence_grid(0.5, 0.7, 21)
        assert not _node(f, (0, 0, 0))
        assert _node(f, (0, 0, 0.3))

    def test_tetrahedron(self):
        f = existence_grid(0, 0, 41)
        g = np.meshgrid(*f.axes, indexing="ij")
        np.testing.assert_array_equal(f.values, _tetrahedron(*g))

    def test_shrinks_along_rays(self):
        prev = existence_grid(0, 0, 21).values
        for t in (0.2, 0.4, 0.6):
            cur = existence_grid(t * 0.6, t * 0.8, 21).values
            assert not np.any(cur & ~prev)
            prev = cur

    def test_row_order(self):
        rows = list(existence_grid(0, 0, 3).rows())
        assert len(rows) == 27
        assert rows[0][:3] == (-1, -1, -1) and rows[1][:3] == (-1, -1, 0)

    def test_size(self):
        with pytest.raises(ValueError):
            existence_grid(0, 0, 1)


class TestSeparable:
    def test_bell_vertex(self):
        assert not _node(separable_grid(0, 0, 41), (1, -1, 1))

    def test_octahedron(self):
        f = separable_grid(0, 0, 41)
        r1, r2, r3 = np.meshgrid(*f.axes, indexing="ij")
        np.testing.assert_array_equal(f.values, np.abs(r1) + np.abs(r2) + np.abs(r3) <= 1 + 1e-12)

    @pytest.mark.parametrize("s, c", [(0.3, 0.2), (0.5, 0.7)])
    def test_subset_of_existence(self, s, c):
        assert not np.any(separable_grid(s, c, 21).values & ~existence_grid(s, c, 21).values)


class TestRegions:
    def test_codes(self):
        f = regions_grid(0.2, 0, 21)
        vals = f.values[~np.isnan(f.values)]
        assert set(np.unique(vals)) <= {1.0, 2.0, 3.0}
        assert np.array_equal(np.isnan(f.values), ~existence_grid(0.2, 0, 21).values)


class TestScMap:
    def test_coherence_constant(self):
        f = sc_map(CorrelationVector(-0.9, -0.08, 0), "C", 41)
        vals = f.values[~np.isnan(f.values)]
        assert vals.size and np.all(vals == 0.9)

    def test_discord_constant_along_c(self):
        f = sc_map(CorrelationVector(-0.9, -0.04, 0), "D", 41)
        for row in f.values:
            vals = row[~np.isnan(row)]
            assert np.all(vals == vals[0]) if vals.size else True

    def test_unphysical_is_nan(self):
        f = sc_map(CorrelationVector(-0.9, 0.0, 0), "E", 5)
        assert np.isnan(f.values[0, 0])

    def test_bad_measure(self):
        with pytest.raises(ValueError):
            sc_map(CorrelationVector(0, 0, 0), "Q", 5)
