"""Tests for comparison rows and theorem verdicts."""

from hmcat.verify.report import ComparisonRow, Hypothesis, RowStatus, TheoremReport, Verdict


def _report(*rows: ComparisonRow, **hypotheses: bool) -> TheoremReport:
    flags = {Hypothesis(k.replace("_", "-")): v for k, v in hypotheses.items()}
    return TheoremReport("t", "f", rows=list(rows), hypotheses=flags)


class TestComparisonRow:
    """Tests for ComparisonRow."""

    def test_dims_equal(self) -> None:
        """Test that equal dimensions hold."""
        row = ComparisonRow.dims("x", (1, 0), (1, 0))
        assert row.holds
        assert row.witness() is None

    def test_dims_witness(self) -> None:
        """Test that the first differing degree is the witness."""
        row = ComparisonRow.dims("x", (1, 2, 3), (1, 1, 1))
        assert not row.holds
        assert row.witness() == {"row": "x", "degree": 1, "left": 2, "right": 1}

    def test_inequality(self) -> None:
        """Test that <= rows compare degree by degree."""
        assert ComparisonRow.dims("x", (1, 1), (1, 2), relation="<=").holds
        assert not ComparisonRow.dims("x", (2, 1), (1, 2), relation="<=").holds

    def test_unequal_lengths_truncate(self) -> None:
        """Test that rows of different lengths compare the common prefix and are marked truncated."""
        row = ComparisonRow.dims("x", (1, 0, 0), (1, 0))
        assert row.holds
        assert row.truncated
        assert row.left == (1, 0)

    def test_check_row(self) -> None:
        """Test that check rows fail on any failure message."""
        row = ComparisonRow.check("maps", ["AB ≠ 1 in degree 0", "BA ≠ 1 in degree 0"])
        assert not row.holds
        assert row.witness() == {"row": "maps", "failure": "AB ≠ 1 in degree 0", "count": 2}
        assert row.to_dict()["failures"] == ["AB ≠ 1 in degree 0", "BA ≠ 1 in degree 0"]

    def test_status_not_applicable(self) -> None:
        """Test that rows with an unmet requirement are n/a."""
        row = ComparisonRow.dims("x", (1,), (2,), requires=(Hypothesis.FREE,))
        assert row.status({Hypothesis.FREE: False}) is RowStatus.NOT_APPLICABLE
        assert row.status({Hypothesis.FREE: True}) is RowStatus.DIFFERS


class TestVerdict:
    """Tests for TheoremReport.verdict."""

    def test_defaults(self) -> None:
        """Test that a bare report keeps its field name and gets fresh collections."""
        first = TheoremReport("t", "f", field="F5")
        second = TheoremReport("t", "f")
        first.add(ComparisonRow.dims("x", (1,), (1,)))
        assert first.field == "F5"
        assert second.rows == []
        assert second.hypotheses == {}
        assert second.routing == []

    def test_verified(self) -> None:
        """Test that holding rows with met hypotheses verify."""
        row = ComparisonRow.dims("x", (1,), (1,), requires=(Hypothesis.FREE,))
        assert _report(row, free=True).verdict is Verdict.VERIFIED

    def test_unconditioned_failure_wins(self) -> None:
        """Test that an unconditioned difference fails even with unmet hypotheses."""
        bad = ComparisonRow.dims("x", (1,), (2,))
        conditioned = ComparisonRow.dims("y", (1,), (1,), requires=(Hypothesis.ORDER_INVERTIBLE,))
        assert _report(bad, conditioned, order_invertible=False).verdict is Verdict.FAILED

    def test_hypothesis_not_met(self) -> None:
        """Test that an unmet hypothesis hides a conditioned difference."""
        row = ComparisonRow.dims("x", (1,), (2,), requires=(Hypothesis.ORDER_INVERTIBLE,))
        report = _report(row, order_invertible=False)
        assert report.verdict is Verdict.HYPOTHESIS_NOT_MET
        assert report.unmet() == [Hypothesis.ORDER_INVERTIBLE]
        assert report.witnesses() == []

    def test_conditioned_failure(self) -> None:
        """Test that a conditioned difference fails once its hypothesis holds."""
        row = ComparisonRow.dims("x", (1,), (2,), requires=(Hypothesis.FREE,))
        report = _report(row, free=True)
        assert report.verdict is Verdict.FAILED
        assert report.to_dict()["witnesses"] == [{"row": "x", "degree": 0, "left": 1, "right": 2}]

    def test_error_and_forced(self) -> None:
        """Test that errors fail and forced verdicts override the rows."""
        assert TheoremReport("t", "f", error="boom").verdict is Verdict.FAILED
        forced = TheoremReport("t", "f", forced=Verdict.HYPOTHESIS_NOT_MET)
        assert forced.verdict is Verdict.HYPOTHESIS_NOT_MET

    def test_required_hypotheses(self) -> None:
        """Test that report-level requirements count as unmet."""
        report = TheoremReport("t", "f", hypotheses={Hypothesis.FREE: False}, required=(Hypothesis.FREE,))
        assert report.verdict is Verdict.HYPOTHESIS_NOT_MET
        assert report.to_dict()["required"] == ["free"]
