import pytest

from helpers import farey_triangles_to_depth
from legknot.bypass import (
    ConfigKind,
    DestabilizationFound,
    DestabilizingMove,
    Move,
    MoveTag,
    NormalizationOutcome,
    OutcomeKind,
    apply_move,
    config_tb,
    destabilizing_moves,
    find_destabilization,
    legal_moves,
    make_config,
    monodromy_config,
    normalize,
    type_i,
    type_ii,
    type_iii,
)
from legknot.errors import (
    IllegalMove,
    NonTermination,
    NotAnEdge,
    NotATriangle,
    ParityError,
    TaxonomyError,
    Unsupported,
)
from legknot.lattice import monodromy_apply, parse_slope


def S(text):
    return parse_slope(text)


TIGHT = "III:1,2,inf"
OVERTWISTED = "III:0,1,inf"


class TestConstruction:
    def test_valid_triangle(self):
        c = make_config("III:1x1,2x1,infx1")
        assert c.kind is ConfigKind.III
        assert c == make_config(TIGHT)

    def test_not_a_triangle(self):
        with pytest.raises(NotATriangle):
            make_config("III:1/3,2/3,inf")

    def test_parity_rules(self):
        with pytest.raises(ParityError):
            type_iii((S("1"), S("2"), S("inf")), (1, 2, 1))
        with pytest.raises(ParityError):
            type_ii((S("1"), S("inf")), (2, 3))
        with pytest.raises(ParityError):
            type_i(S("inf"), 4, 1)
        with pytest.raises(ParityError):
            type_i(S("inf"), 3, 2)  # arcs + closed must be even

    def test_taxonomy_rules(self):
        with pytest.raises(TaxonomyError):
            type_i(S("inf"), 3, 0)
        with pytest.raises(NotAnEdge):
            type_ii((S("1/3"), S("2/3")), (2, 2))
        with pytest.raises(TaxonomyError):
            make_config("IV:1,2")

    def test_spec_strings(self):
        assert make_config("I:infx5+1c").arcs() == 5
        assert make_config("II:1x2,infx2").arcs() == 4
        assert str(make_config("I:infx5+1c")) == "I:infx5+1c"
        assert str(make_config(TIGHT)) == "III:1x1,2x1,infx1"

    def test_config_tb(self):
        assert config_tb(make_config(TIGHT)) == -3
        assert config_tb(make_config("II:1x2,infx2")) == -4
        assert config_tb(make_config("I:1x5+1c")) == -5


class TestMonodromyAction:
    def test_quoted_orbit_values(self):
        shifted = monodromy_config(make_config(TIGHT), 1)
        assert {str(s) for s in shifted.slopes} == {"2/3", "3/4", "1"}
        shifted_ot = monodromy_config(make_config(OVERTWISTED), 1)
        assert {str(s) for s in shifted_ot.slopes} == {"1/2", "2/3", "1"}

    def test_inverse(self):
        for spec in (TIGHT, OVERTWISTED, "I:infx5+1c", "II:1x2,infx2"):
            c = make_config(spec)
            for k in (-3, -1, 1, 2):
                assert monodromy_config(monodromy_config(c, k), -k) == c


class TestMoves:
    def test_terminal_states_have_no_moves(self):
        assert legal_moves(make_config(TIGHT)) == []
        assert legal_moves(make_config(OVERTWISTED)) == []

    def test_case_one_moves(self):
        c = make_config("III:3,7/2,4")
        moves = legal_moves(c)
        tags = {m.tag for m in moves}
        assert MoveTag.COLLAPSE_TO_I in tags
        assert tags & {MoveTag.FIRST_KIND, MoveTag.SECOND_KIND}
        flip = next(m for m in moves if m.tag is not MoveTag.COLLAPSE_TO_I)
        result = apply_move(c, flip)
        assert {str(s) for s in result.slopes} == {"3", "4", "inf"}

    def test_collapse_and_expand(self):
        c = make_config("III:3,7/2,4")
        collapse = next(m for m in legal_moves(c) if m.tag is MoveTag.COLLAPSE_TO_I)
        collapsed = apply_move(c, collapse)
        assert collapsed.kind is ConfigKind.I
        assert collapsed.arcs() == 3 and collapsed.closed == 1
        expand = legal_moves(collapsed)
        assert [m.tag for m in expand] == [MoveTag.EXPAND_FROM_I]
        expanded = apply_move(collapsed, expand[0])
        assert expanded.kind is ConfigKind.III
        assert expanded.arcs() == 3

    def test_gateway_case_three(self):
        c = make_config("III:0,1/2,1")
        moves = legal_moves(c)
        assert [m.tag for m in moves] == [MoveTag.CASE_THREE_B]
        result = apply_move(c, moves[0])
        assert {str(s) for s in result.slopes} == {"1/2", "2/3", "1"}

    def test_illegal_move_rejected(self):
        c = make_config(TIGHT)
        with pytest.raises(IllegalMove):
            apply_move(c, Move(MoveTag.FIRST_KIND, S("1")))
        with pytest.raises(IllegalMove):
            apply_move(make_config("III:3,7/2,4"), Move(MoveTag.CASE_THREE_B, S("3")))

    def test_arc_conservation(self):
        for tri in farey_triangles_to_depth(3):
            c = type_iii(tri, (1, 1, 1))
            for move in legal_moves(c):
                result = apply_move(c, move)
                assert result.arcs() == 3
                if result.kind is ConfigKind.III:
                    type_iii(result.slopes, result.mults)  # still a Farey triangle

    def test_monodromy_equivariance(self):
        for tri in farey_triangles_to_depth(3):
            c = type_iii(tri, (1, 1, 1))
            for move in legal_moves(c):
                result = apply_move(c, move)
                for k in (-2, 1, 3):
                    conjugated = Move(move.tag, monodromy_apply(move.annulus_slope, k))
                    assert apply_move(monodromy_config(c, k), conjugated) == monodromy_config(result, k)

    def test_destabilizing_moves_listed_separately(self):
        two_class = make_config("II:1x2,infx2")
        assert legal_moves(two_class) == []
        moves = destabilizing_moves(two_class)
        assert len(moves) >= 1
        found = apply_move(two_class, moves[0])
        assert isinstance(found, DestabilizationFound)
        assert found.arcs_before - found.arcs_after == 2
        with pytest.raises(IllegalMove):
            apply_move(make_config(TIGHT), DestabilizingMove(S("1"), "nope"))


class TestNormalize:
    def test_standard_tight(self):
        out = normalize(make_config(TIGHT))
        assert out.kind is OutcomeKind.STANDARD_TIGHT
        assert out.trace == () and out.steps == 0

    def test_overtwisted(self):
        out = normalize(make_config(OVERTWISTED))
        assert out.kind is OutcomeKind.OVERTWISTED
        assert out.trace == ()

    def test_shifted_starts(self):
        assert normalize(monodromy_config(make_config(TIGHT), 3)).kind is OutcomeKind.STANDARD_TIGHT
        assert normalize(monodromy_config(make_config(OVERTWISTED), -2)).kind is OutcomeKind.OVERTWISTED

    def test_above_staircase_trace(self):
        out = normalize(make_config("III:5/3,7/4,2"))
        assert out.kind is OutcomeKind.STANDARD_TIGHT
        assert out.steps == 3
        assert out.trace[-1].endswith("->1,2,inf")

    def test_below_side_goes_overtwisted(self):
        out = normalize(make_config("III:1/4,2/7,1/3"))
        assert out.kind is OutcomeKind.OVERTWISTED
        assert any("CaseThreeB" in line for line in out.trace)

    def test_one_class_starts(self):
        assert normalize(make_config("I:1x3+1c")).kind is OutcomeKind.STANDARD_TIGHT
        assert normalize(make_config("I:infx3+1c")).kind is OutcomeKind.STANDARD_TIGHT
        assert normalize(make_config("I:0x3+1c")).kind is OutcomeKind.OVERTWISTED
        assert normalize(make_config("I:1/2x3+1c")).kind is OutcomeKind.OVERTWISTED

    def test_closed_curves_absorbed(self):
        out = normalize(make_config("I:1x3+3c"))
        assert out.kind is OutcomeKind.STANDARD_TIGHT
        assert out.trace[0].startswith("ReduceClosed")

    def test_more_than_three_arcs_destabilizes(self):
        assert normalize(make_config("II:1x2,infx2")).kind is OutcomeKind.DESTABILIZES
        assert normalize(make_config("I:infx5+1c")).kind is OutcomeKind.DESTABILIZES
        assert normalize(make_config("III:1x1,2x1,infx3")).kind is OutcomeKind.DESTABILIZES

    def test_one_arc_unsupported(self):
        with pytest.raises(Unsupported):
            normalize(make_config("I:infx1+1c"))

    def test_step_limit_raises(self):
        with pytest.raises(NonTermination):
            normalize(make_config("III:1/4,2/7,1/3"), step_limit=2)

    def test_deterministic_trace(self):
        a = normalize(make_config("III:5/3,7/4,2"))
        b = normalize(make_config("III:5/3,7/4,2"))
        assert a == b == NormalizationOutcome(a.kind, a.trace, a.steps)


class TestFindDestabilization:
    def test_examples(self):
        assert find_destabilization(make_config("I:infx5+1c")).kind is OutcomeKind.DESTABILIZES
        assert find_destabilization(make_config("II:1x2,infx2")).kind is OutcomeKind.DESTABILIZES
        assert find_destabilization(make_config("III:1x1,2x1,infx3")).kind is OutcomeKind.DESTABILIZES

    def test_requires_more_than_three_arcs(self):
        with pytest.raises(Unsupported):
            find_destabilization(make_config(TIGHT))
