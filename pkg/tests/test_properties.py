"""Property-based checks of the invariants over random physical states."""

import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import physical_x_states
from xstates.channels import Channel, ChannelSpec, evolve_params
from xstates.dynamics import entanglement_death, locate_region_flips, region_thresholds, trajectory
from xstates.measures import Region, coherence, discord, entanglement, intermediate
from xstates.oracle import l1_coherence_matrix, wootters_concurrence
from xstates.relations import relation_D_of_C, relation_E_of_C
from xstates.state import XStateParams, is_physical, params_from_density, physical_mask, x_from_params

channels = st.sampled_from(list(Channel))
strengths = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
SETTINGS = settings(max_examples=300, deadline=None)


class TestStateProperties:
    @SETTINGS
    @given(physical_x_states())
    def test_round_trip(self, xp):
        back = params_from_density(x_from_params(xp))
        np.testing.assert_allclose(back.as_tuple(), xp.as_tuple(), atol=1e-14)

    @SETTINGS
    @given(physical_x_states())
    def test_valid_density_matrix(self, xp):
        rho = x_from_params(xp)
        assert np.linalg.eigvalsh(rho)[0] >= -1e-12
        assert abs(np.trace(rho) - 1) <= 1e-12
        assert is_physical(xp).physical


class TestMeasureProperties:
    @SETTINGS
    @given(physical_x_states())
    def test_bounds(self, xp):
        assert 0 <= entanglement(xp) <= 1
        assert 0 <= coherence(xp) <= 1
        assert 0 <= discord(xp) <= 0.5

    @SETTINGS
    @given(physical_x_states())
    def test_oracles(self, xp):
        rho = x_from_params(xp)
        assert abs(wootters_concurrence(rho) - entanglement(xp)) <= 1e-9
        assert abs(l1_coherence_matrix(rho) - coherence(xp)) <= 1e-12

    @SETTINGS
    @given(physical_x_states(bell_diagonal=True))
    def test_bell_diagonal_discord(self, xp):
        mid = intermediate(abs(xp.r1), abs(xp.r2), abs(xp.r3))
        assert abs(discord(xp) - mid / 2) <= 1e-12

    @SETTINGS
    @given(physical_x_states(), st.floats(min_value=-1.0, max_value=1.0))
    def test_discord_ignores_c(self, xp, c):
        other = XStateParams.of(xp.r1, xp.r2, xp.r3, xp.s, c)
        assume(physical_mask(*other.as_tuple(), tol=0.0))
        assert discord(other) == discord(xp)

    @SETTINGS
    @given(physical_x_states())
    def test_discord_transverse_swap(self, xp):
        swapped = XStateParams.of(xp.r2, xp.r1, xp.r3, xp.s, xp.c)
        assert discord(swapped) == discord(xp)

    @SETTINGS
    @given(physical_x_states())
    def test_incoherent_states_are_uncorrelated(self, xp):
        zero = XStateParams.of(0.0, 0.0, xp.r3, xp.s, xp.c)
        assert coherence(zero) == 0 and entanglement(zero) == 0 and discord(zero) == 0


class TestChannelProperties:
    @SETTINGS
    @given(physical_x_states(), channels, strengths)
    def test_stays_physical(self, xp, kind, p):
        assert is_physical(evolve_params(xp, ChannelSpec(kind, p))).physical

    @SETTINGS
    @given(physical_x_states(), strengths)
    def test_fixed_parameters(self, xp, p):
        pd = evolve_params(xp, ChannelSpec("pd", p))
        assert (pd.r3, pd.s, pd.c) == (xp.r3, xp.s, xp.c)
        assert evolve_params(xp, ChannelSpec("bf", p)).r1 == xp.r1


GRID = np.linspace(0.0, 1.0, 101)


class TestDynamicsProperties:
    @SETTINGS
    @given(physical_x_states(), channels)
    def test_coherence_non_increasing(self, xp, kind):
        C = np.array([pt.C for pt in trajectory(xp, kind, GRID)])
        assert np.all(np.diff(C) <= 1e-15)
        if kind is Channel.BIT_FLIP:
            assert np.all(C >= abs(xp.r1))

    @SETTINGS
    @given(physical_x_states())
    def test_phase_damping_regions_monotone(self, xp):
        order = {Region.R3: 0, Region.R2: 1, Region.R1: 2}
        ranks = [order[pt.region] for pt in trajectory(xp, "pd", GRID)]
        assert ranks == sorted(ranks)

    @SETTINGS
    @given(physical_x_states())
    def test_phase_damping_flips_at_thresholds(self, xp):
        th = region_thresholds(xp, "pd")
        targets = [v for v in (th.p1, th.p2) if v is not None]
        for p, _, _ in locate_region_flips(xp, "pd"):
            assert min(abs(p - t) for t in targets) <= 1e-9

    @SETTINGS
    @given(physical_x_states(), channels)
    def test_no_entanglement_revival(self, xp, kind):
        death = entanglement_death(xp, kind)
        assert death is not None
        for pt in trajectory(xp, kind, GRID):
            if pt.p >= death:
                assert pt.E == 0

    @SETTINGS
    @given(physical_x_states(), channels)
    def test_samples_on_relation_curves(self, xp, kind):
        ec, dc = relation_E_of_C(xp, kind), relation_D_of_C(xp, kind)
        for pt in trajectory(xp, kind, GRID):
            for curve, truth in ((ec, pt.E), (dc, pt.D)):
                seg = curve.locate(pt.p)
                if seg is not None and seg.is_relation:
                    assert abs(float(seg.evaluate(pt.C)) - truth) <= 1e-12
