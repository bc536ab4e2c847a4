import math

import numpy as np
import pytest

from xstates.channels import Channel
from xstates.dynamics import trajectory
from xstates.relations import (
    PRINTED_RELATIONS,
    PUBLISHED,
    SegmentKind,
    relation_D_of_C,
    relation_E_of_C,
    verify_relations,
)
from xstates.state import DomainError, XStateParams
from xstates.verification import WORKED_CASES, check_relations

BF_BELL = XStateParams.of(-0.3, 0.6, 0.4)
PD_BELL = XStateParams.of(-0.7, 0.5, 0.3)
BF_X = XStateParams.of(-0.3, 0.6, 0.4, 0.2, 0.1)


class TestCurves:
    def test_bit_flip_entanglement_window(self):
        curve = relation_E_of_C(BF_BELL, "bf")
        (seg,) = curve.relation_segments()
        assert seg.kind is SegmentKind.LINEAR
        assert (seg.c_lo, seg.c_hi) == pytest.approx((0.3, 0.6))
        assert seg.p_hi == pytest.approx(1 - 1 / math.sqrt(2))
        assert curve.segments[-1].kind is SegmentKind.NONE

    def test_phase_damping_discord_has_three_pieces(self):
        curve = relation_D_of_C(PD_BELL, "pd")
        kinds = [seg.kind for seg in curve.segments]
        assert kinds == [SegmentKind.LINEAR, SegmentKind.CONSTANT, SegmentKind.LINEAR]

    def test_bit_flip_discord_pieces(self):
        # linear for C > 0.45, then constant at 0.15 until the window closes
        curve = relation_D_of_C(BF_BELL, "bf")
        lin, const = curve.relation_segments()
        assert lin.kind is SegmentKind.LINEAR and lin.c_lo == pytest.approx(0.45)
        assert const.kind is SegmentKind.CONSTANT
        assert float(const.evaluate(0.4)) == pytest.approx(0.15)

    @pytest.mark.parametrize("kind", list(Channel))
    def test_degenerate_state_is_empty(self, kind):
        xp = XStateParams.of(0, 0, 0.5, 0.2, 0)
        assert relation_E_of_C(xp, kind).segments == ()
        assert relation_D_of_C(xp, kind).segments == ()

    @pytest.mark.parametrize("values, kind", WORKED_CASES)
    def test_samples_lie_on_curve(self, values, kind):
        xp = XStateParams.of(*values)
        ec, dc = relation_E_of_C(xp, kind), relation_D_of_C(xp, kind)
        for pt in trajectory(xp, kind, np.linspace(0, 1, 201)):
            for curve, truth in ((ec, pt.E), (dc, pt.D)):
                seg = curve.locate(pt.p)
                if seg.is_relation:
                    assert float(seg.evaluate(pt.C)) == pytest.approx(truth, abs=1e-12)

    def test_unphysical(self):
        with pytest.raises(DomainError):
            relation_E_of_C(XStateParams.of(1, 1, 1), "pd")


class TestVerification:
    def test_phase_damping_bell_all_pass(self):
        report = verify_relations(PD_BELL, "pd", 1000, 1e-12)
        assert report.ok
        assert all(r.status == "pass" for r in report.rows)

    def test_bit_flip_window(self):
        report = verify_relations(BF_BELL, "bf")
        assert report.row("bf:bd_bf_E_of_C").status == "pass"
        assert report.row("bf:published crossover").status == "pass"

    def test_bit_flip_region3_formula_flagged(self):
        report = verify_relations(BF_X, "bf")
        row = report.row("bf:x_bf_D_of_C_region3")
        assert row.samples > 0
        assert row.status == "flagged"
        assert row.max_deviation > 1e-6
        assert report.ok

    def test_second_example_p1_flagged(self):
        report = verify_relations(XStateParams.of(0.5, -0.2, 0.3, 0.2, 0.3), "pd")
        row = report.row("pd:published p1")
        assert row.status == "flagged"
        assert "0.2254" in row.note
        assert report.row("pd:published p2").status == "pass"

    def test_every_worked_case(self):
        report = check_relations()
        assert report.ok, [r for r in report.rows if r.status == "fail"]

    def test_needs_two_points(self):
        with pytest.raises(ValueError):
            verify_relations(PD_BELL, "pd", 1)


class TestRegistry:
    def test_names_unique(self):
        names = [rel.name for rel in PRINTED_RELATIONS]
        assert len(names) == len(set(names))

    def test_every_channel_covered(self):
        assert {rel.channel for rel in PRINTED_RELATIONS} == set(Channel)

    def test_published_keys_are_worked_cases(self):
        cases = {(kind, values) for values, kind in WORKED_CASES}
        assert all(key in cases for key in PUBLISHED)
