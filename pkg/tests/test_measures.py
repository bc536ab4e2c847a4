import numpy as np
import pytest

from xstates.measures import (
    Region,
    canonical_transverse,
    coherence,
    discord,
    discord_region,
    discord_values,
    entanglement,
    intermediate,
)
from xstates.state import DomainError, XStateParams, physical_mask, sample_physical_states


class TestEntanglement:
    @pytest.mark.parametrize(
        "params, expected",
        [
            ((1, -1, 1), 1.0),
            ((-0.3, 0.6, 0.4), 0.15),
            ((-0.7, 0.5, 0.3), 0.25),
            ((0, 0, 0), 0.0),
        ],
    )
    def test_values(self, params, expected):
        assert entanglement(XStateParams.of(*params)) == pytest.approx(expected, abs=1e-15)

    def test_unphysical(self):
        with pytest.raises(DomainError):
            entanglement(XStateParams.of(1, 1, 1))


class TestCoherence:
    @pytest.mark.parametrize(
        "params, expected",
        [((-0.3, 0.6, 0.4), 0.6), ((0, 0, 0.9, 0.1, 0), 0.0), ((1, -1, 1), 1.0)],
    )
    def test_values(self, params, expected):
        assert coherence(XStateParams.of(*params)) == expected


class TestDiscord:
    @pytest.mark.parametrize(
        "params, expected",
        [
            ((-0.3, 0.6, 0.4), 0.2),
            ((-0.6, 0.4, 0.3, 0.2, 0.3), 0.5 * np.sqrt(0.0576 / 0.31)),
            ((0, 0, 0.5, 0.2, 0), 0.0),
            ((1, -1, 1), 0.5),
        ],
    )
    def test_values(self, params, expected):
        assert discord(XStateParams.of(*params)) == pytest.approx(expected, abs=1e-15)

    def test_swap_invariance(self):
        a = discord(XStateParams.of(-0.3, 0.6, 0.4, 0.2, 0.1))
        b = discord(XStateParams.of(0.6, -0.3, 0.4, 0.2, 0.1))
        assert a == b

    def test_degenerate_point_gives_half_r1(self):
        # |r1| = |r2| = |r3| with s = 0: numerator and denominator both vanish
        for t in (0.1, 0.2, 1 / 3):
            assert discord(XStateParams.of(t, t, -t)) == pytest.approx(t / 2, abs=1e-15)

    def test_delta_zero_uses_second_branch(self):
        # r3^2 = r1^2 + s^2 exactly; both branches give |r1|/2 there
        xp = XStateParams.of(0.3, 0.0, 0.5, 0.4, 0.0)
        assert discord(xp) == pytest.approx(0.15, abs=1e-15)

    def test_unphysical(self):
        with pytest.raises(DomainError):
            discord(XStateParams.of(1, 1, 1))


class TestRegion:
    @pytest.mark.parametrize(
        "params, region",
        [
            ((-0.6, 0.4, 0.3, 0.2), Region.R3),
            ((-0.6, 0.4, 0.7, 0.2), Region.R1),
            ((0.5, -0.2, 0.3, 0.2), Region.R2),
        ],
    )
    def test_examples(self, params, region):
        assert discord_region(XStateParams.of(*params)) is region

    def test_short_label(self):
        assert Region.R2.short == "R2"


class TestHelpers:
    def test_intermediate_with_ties(self):
        assert intermediate(0.2, 0.5, 0.2) == 0.2
        assert intermediate(0.4, 0.6, 0.3) == 0.4

    def test_canonical_transverse(self):
        a, b = canonical_transverse([-0.3, 0.5], [0.6, 0.1])
        np.testing.assert_array_equal(a, [0.6, 0.5])
        np.testing.assert_array_equal(b, [-0.3, 0.1])


class TestContinuity:
    def test_across_delta_surface(self):
        # place r3 just either side of r3^2 = r1^2 + s^2 and compare the branches
        rng = np.random.default_rng(3)
        checked = 0
        for xp in sample_physical_states(rng, 4000):
            r1, r2 = canonical_transverse(xp.r1, xp.r2)
            r3 = float(np.sqrt(r1**2 + xp.s**2))
            lo, hi = r3 - 4e-7, r3 + 4e-7
            if hi > 1 or not physical_mask(r1, r2, [lo, hi], xp.s, xp.c).all():
                continue
            below, above = discord_values(r1, r2, [lo, hi], xp.s)
            assert abs(below - above) < 1e-4
            checked += 1
        assert checked > 100


class TestZeroDiscordWithCoherence:
    """Zero discord does not force zero coherence: the axis states t e1 and t e2."""

    @pytest.mark.parametrize("t", [-0.9, -0.4, 0.2, 0.75, 1.0])
    def test_transverse_axis_states(self, t):
        for xp in (XStateParams.of(t, 0, 0), XStateParams.of(0, t, 0)):
            assert discord(xp) == 0.0
            assert coherence(xp) == abs(t)

