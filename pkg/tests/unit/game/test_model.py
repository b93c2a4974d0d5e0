from fractions import Fraction

import pytest

from epigame.core import ValidationError
from epigame.game import (
    Strategy,
    StrategyProfile,
    UtilityEntry,
    UtilityKind,
    UtilityTable,
    parse_profile,
)


class TestStrategy:
    """Test suite for Strategy and StrategyProfile."""

    def test_label(self):
        assert Strategy(0, ("3", "4")).label == "3|4"

    def test_with_action(self):
        strategy = Strategy(0, ("3", "4"))
        assert strategy.with_action(1, "3") == Strategy(0, ("3", "3"))
        assert strategy.with_action(1, "3").is_constant()

    def test_profile_order(self):
        """Test that a profile must list strategies in player order."""
        with pytest.raises(ValidationError, match="player order"):
            StrategyProfile((Strategy(1, ("a",)), Strategy(0, ("b",))))

    def test_replace_and_assemble(self):
        profile = StrategyProfile((Strategy(0, ("a",)), Strategy(1, ("b",)), Strategy(2, ("c",))))
        swapped = profile.replace(Strategy(1, ("x",)))
        assert swapped.labels() == ("a", "x", "c")
        assert StrategyProfile.assemble(Strategy(1, ("b",)), profile.others(1)) == profile

    def test_key(self):
        profile = StrategyProfile((Strategy(0, ("h", "t")),))
        assert profile.key() == (("h", "t"),)


class TestEpistemicGame:
    """Test suite for EpistemicGame."""

    def test_strategy_count(self, crossing, prisoners_dilemma):
        assert crossing.strategy_count(0) == 4
        assert prisoners_dilemma.strategy_count(1) == 2

    def test_consequence(self, crossing):
        """Test that the realized action follows the cell of the state."""
        profile = parse_profile(crossing, ["3|4", "2|1"])
        assert [crossing.consequence(profile, s) for s in crossing.space] == [
            ("3", "2"), ("3", "1"), ("4", "2"), ("4", "1"),
        ]

    def test_utility(self, prisoners_dilemma):
        profile = parse_profile(prisoners_dilemma, ["deny", "confess"])
        assert prisoners_dilemma.utility(0, 0, profile) == -5
        assert prisoners_dilemma.utility(1, 0, profile) == 0

    def test_strategy_kind_utility(self, angels_demons):
        """Test that strategy-kind utilities read the whole strategy."""
        profile = parse_profile(angels_demons, ["honest|honest"])
        assert angels_demons.utility(0, 0, profile) == 1
        assert angels_demons.utility(0, 1, profile) == 0

    def test_common_prior(self, crossing, distinct_priors):
        assert crossing.common_prior() == crossing.players[0].prior
        assert distinct_priors.common_prior() is None

    def test_player_index(self, prisoners_dilemma):
        assert prisoners_dilemma.player_index("P2") == 1
        with pytest.raises(ValidationError, match="Unknown player"):
            prisoners_dilemma.player_index("P3")

    def test_unknown_action(self, prisoners_dilemma):
        with pytest.raises(ValidationError, match="Unknown action"):
            prisoners_dilemma.players[0].action_index("defect")


class TestUtilityTable:
    """Test suite for UtilityTable."""

    def test_state_entry_overrides_wildcard(self):
        table = UtilityTable(UtilityKind.ACTION, (
            UtilityEntry(0, None, ("a",), Fraction(1)),
            UtilityEntry(0, 1, ("a",), Fraction(7)),
        ))
        assert table.value(0, 0, ("a",)) == 1
        assert table.value(0, 1, ("a",)) == 7
        assert not table.is_state_independent(0)

    def test_duplicate_entry(self):
        entry = UtilityEntry(0, None, ("a",), Fraction(1))
        with pytest.raises(ValidationError, match="Duplicate utility entry"):
            UtilityTable(UtilityKind.ACTION, (entry, entry))

    def test_missing_entry(self):
        table = UtilityTable(UtilityKind.ACTION, ())
        with pytest.raises(ValidationError, match="Missing utility entry"):
            table.value(0, 0, ("a",))

    def test_invalid_kind(self):
        with pytest.raises(ValueError, match="Invalid utility kind"):
            UtilityTable("mixed", ())

    def test_rescaled(self, prisoners_dilemma):
        """Test a positive affine transform of one player's utilities."""
        table = prisoners_dilemma.utilities.rescaled(0, Fraction(2), Fraction(10))
        assert table.value(0, 0, ("deny", "deny")) == 8
        assert table.value(1, 0, ("deny", "deny")) == -1
        with pytest.raises(ValueError, match="scale must be positive"):
            prisoners_dilemma.utilities.rescaled(0, Fraction(0), Fraction(0))
