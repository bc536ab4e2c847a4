import numpy as np
import pytest

from xstates.state import (
    CorrelationVector,
    DomainError,
    ShapeError,
    UnsupportedStateError,
    XStateParams,
    bd_from_r,
    existence_margins,
    is_physical,
    params_from_density,
    random_physical_state,
    x_block_eigenvalues,
    x_from_params,
)

PHI_PLUS = np.array([[0.5, 0, 0, 0.5], [0, 0, 0, 0], [0, 0, 0, 0], [0.5, 0, 0, 0.5]])


class TestConstruction:
    def test_maximally_mixed(self):
        np.testing.assert_allclose(bd_from_r(CorrelationVector(0, 0, 0)), np.eye(4) / 4, atol=1e-15)

    def test_bell_projector(self):
        np.testing.assert_allclose(bd_from_r(CorrelationVector(1, -1, 1)), PHI_PLUS, atol=1e-15)

    def test_bell_diagonal_entries(self):
        rho = bd_from_r(CorrelationVector(-0.3, 0.6, 0.4))
        assert rho[0, 0] == pytest.approx(0.35) and rho[3, 3] == pytest.approx(0.35)
        assert rho[1, 1] == pytest.approx(0.15) and rho[2, 2] == pytest.approx(0.15)
        assert rho[0, 3] == pytest.approx(-0.225)
        assert rho[1, 2] == pytest.approx(0.075)

    def test_x_state_diagonal_only(self):
        rho = x_from_params(XStateParams.of(0, 0, 0.3, 0.5, 0.7))
        np.testing.assert_allclose(np.diag(rho), [0.625, 0.125, 0.225, 0.025], atol=1e-15)
        assert rho[0, 3] == 0 and rho[1, 2] == 0

    def test_x_state_entries(self):
        rho = x_from_params(XStateParams.of(-0.6, 0.4, 0.3, 0.2, 0.3))
        np.testing.assert_allclose(np.diag(rho), [0.45, 0.15, 0.20, 0.20], atol=1e-15)
        assert rho[0, 3] == pytest.approx(-0.25)
        assert rho[1, 2] == pytest.approx(-0.05)

    @pytest.mark.parametrize("bad", [(1.2, 0, 0), (0, -1.01, 0), (0, 0, float("nan"))])
    def test_out_of_range(self, bad):
        with pytest.raises(DomainError):
            bd_from_r(bad)

    def test_out_of_range_local(self):
        with pytest.raises(DomainError):
            XStateParams.of(0, 0, 0, 1.5, 0)


class TestInversion:
    def test_identity(self):
        assert params_from_density(np.eye(4) / 4).as_tuple() == (0, 0, 0, 0, 0)

    def test_bell(self):
        assert params_from_density(PHI_PLUS).as_tuple() == pytest.approx((1, -1, 1, 0, 0))

    def test_round_trip(self):
        xp = XStateParams.of(-0.6, 0.4, 0.3, 0.2, 0.3)
        assert params_from_density(x_from_params(xp)).as_tuple() == pytest.approx(xp.as_tuple(), abs=1e-14)

    def test_not_x_shaped(self):
        rho = np.eye(4) / 4
        rho[0, 1] = rho[1, 0] = 0.01
        with pytest.raises(ShapeError):
            params_from_density(rho)

    def test_complex_anti_diagonal(self):
        rho = np.eye(4, dtype=complex) / 4
        rho[0, 3], rho[3, 0] = 0.1j, -0.1j
        with pytest.raises(UnsupportedStateError):
            params_from_density(rho)


class TestPhysicality:
    def test_outside_tetrahedron(self):
        assert not is_physical(XStateParams.of(1, 1, 1)).physical

    def test_bell_vertex_on_boundary(self):
        rep = is_physical(XStateParams.of(1, -1, 1))
        assert rep.physical
        # margin2 = sqrt((1 - r3)^2 - (s - c)^2) - |r1 + r2| = 0 - 0
        assert (rep.margin1, rep.margin2) == (0.0, 0.0)

    def test_margin_with_local_terms(self):
        rep = is_physical(XStateParams.of(0, 0, 0.3, 0.5, 0.7))
        assert rep.physical
        assert rep.margin1 == pytest.approx(0.5)

    def test_negative_root_argument_is_minus_inf(self):
        m1, _ = existence_margins(0, 0, -0.5, 0.5, 0.5)
        assert m1 == -np.inf

    @pytest.mark.parametrize("vertex", [(1, 1, -1), (1, -1, 1), (-1, 1, 1), (-1, -1, -1)])
    def test_tetrahedron_vertices(self, vertex):
        assert is_physical(XStateParams.of(*vertex)).physical
        assert not is_physical(XStateParams.of(*(-v for v in vertex))).physical

    def test_block_eigenvalues_match_eigh(self):
        rho = x_from_params(XStateParams.of(-0.6, 0.4, 0.3, 0.2, 0.3))
        np.testing.assert_allclose(x_block_eigenvalues(rho), np.linalg.eigvalsh(rho), atol=1e-14)


class TestSampling:
    def test_deterministic(self):
        assert random_physical_state(11) == random_physical_state(11)

    @pytest.mark.parametrize("seed", range(20))
    def test_physical(self, seed):
        assert is_physical(random_physical_state(seed)).physical

    def test_bell_family(self):
        xp = random_physical_state(3, "bell_diagonal")
        assert xp.s == 0 and xp.c == 0

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            random_physical_state(0, "werner")
