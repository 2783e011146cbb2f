import random

import pytest

from helpers import (
    RIGHT_TREFOIL_PEAK_WORD,
    STABILIZED_UNKNOT_WORD,
    TREFOIL_WORD,
    random_hints,
    random_valid_diagrams,
    three_colorings,
)
from legknot.classify import Sign, torus, unknot
from legknot.errors import FrontSyntaxError, MultiComponent, NoSuchStrand
from legknot.front import (
    FrontDiagram,
    FrontEvent,
    bennequin_compatible,
    invariants,
    parse_front,
    stabilize_diagram,
    writhe,
)


class TestParsing:
    def test_minimal_unknot(self):
        d = parse_front("L 1\nR 1")
        assert len(d.events) == 2

    def test_comments_blanks_and_bytes(self):
        d = parse_front(b"# flying saucer\n\nL 1\n  R 1  # close\n")
        assert len(d.events) == 2

    def test_single_component_tracing(self):
        d = parse_front("L 1\nL 2\nR 1\nR 1")
        assert len(d.events) == 4

    def test_two_components_rejected(self):
        with pytest.raises(MultiComponent):
            parse_front("L 1\nL 2\nR 2\nR 1")

    def test_syntax_error_carries_line(self):
        with pytest.raises(FrontSyntaxError) as err:
            parse_front("L 1\nQ 2\nR 1")
        assert err.value.line == 2

    def test_level_out_of_bounds(self):
        with pytest.raises(FrontSyntaxError):
            parse_front("L 3\nR 1")
        with pytest.raises(FrontSyntaxError):
            parse_front("L 1\nX 2\nR 1")  # crossing level bounded by 1..n-1

    def test_kink_word_is_valid(self):
        inv = invariants(parse_front("L 1\nX 1\nR 1"))
        assert inv.tb == inv.writhe - 1

    def test_unclosed_diagram(self):
        with pytest.raises(FrontSyntaxError):
            parse_front("L 1\nL 1")
        with pytest.raises(FrontSyntaxError):
            parse_front("")


class TestInvariants:
    def test_maximal_unknot(self):
        inv = invariants(parse_front("L 1\nR 1"))
        assert (inv.tb, inv.rot) == (-1, 0)

    def test_stabilized_unknot(self):
        inv = invariants(parse_front(STABILIZED_UNKNOT_WORD))
        assert (inv.tb, inv.rot) == (-2, -1)

    def test_right_trefoil_peak(self):
        inv = invariants(parse_front(RIGHT_TREFOIL_PEAK_WORD))
        assert (inv.tb, inv.rot) == (1, 0)
        assert inv.writhe == 3

    def test_left_trefoil(self):
        d = parse_front(TREFOIL_WORD)
        inv = invariants(d)
        assert (inv.tb, inv.rot) == (-6, 1)
        # independent identification: 3 crossings and 9 Fox 3-colorings
        # single out the trefoil among <=3-crossing knots
        assert three_colorings(d) == 9

    def test_writhe_calibration_and_mirror(self):
        assert writhe(parse_front(RIGHT_TREFOIL_PEAK_WORD)) == 3
        mirror = parse_front("L 1\nL 2\nX 2\nX 2\nX 2\nR 1\nR 1")
        assert writhe(mirror) == -3

    def test_orientation_reversal(self):
        for word in (STABILIZED_UNKNOT_WORD, TREFOIL_WORD, RIGHT_TREFOIL_PEAK_WORD):
            d = parse_front(word)
            fwd = invariants(d)
            rev = invariants(d, reverse_orientation=True)
            assert (fwd.tb, fwd.writhe) == (rev.tb, rev.writhe)
            assert fwd.rot == -rev.rot

    def test_structural_identities(self):
        for d in random_valid_diagrams(40):
            inv = invariants(d)
            assert (inv.tb + inv.rot) % 2 == 1
            assert inv.down_cusps + inv.up_cusps == 2 * inv.right_cusps
            left = sum(1 for e in d.events if e.kind == "L")
            assert left == inv.right_cusps
            assert inv.tb == inv.writhe - inv.right_cusps
            assert 2 * inv.rot == inv.down_cusps - inv.up_cusps


class TestStabilization:
    def test_negative_on_maximal_unknot(self):
        d = stabilize_diagram(parse_front("L 1\nR 1"), Sign.MINUS, 1, 1)
        inv = invariants(d)
        assert (inv.tb, inv.rot) == (-2, -1)

    def test_positive_on_trefoil_peak(self):
        d = stabilize_diagram(parse_front(RIGHT_TREFOIL_PEAK_WORD), Sign.PLUS, 1, 1)
        inv = invariants(d)
        assert (inv.tb, inv.rot) == (0, 1)

    def test_commutation_and_deltas(self):
        rng = random.Random(7)
        for d in random_valid_diagrams(25, seed=99):
            base = invariants(d)
            gap, level = random_hints(d, rng)
            plus = stabilize_diagram(d, Sign.PLUS, gap, level)
            minus = stabilize_diagram(d, Sign.MINUS, gap, level)
            assert invariants(plus).tb == base.tb - 1
            assert invariants(plus).rot == base.rot + 1
            assert invariants(minus).rot == base.rot - 1
            pm = invariants(stabilize_diagram(plus, Sign.MINUS, *random_hints(plus, rng)))
            mp = invariants(stabilize_diagram(minus, Sign.PLUS, *random_hints(minus, rng)))
            assert (pm.tb, pm.rot) == (mp.tb, mp.rot) == (base.tb - 2, base.rot)

    def test_bad_hints(self):
        d = parse_front("L 1\nR 1")
        with pytest.raises(NoSuchStrand):
            stabilize_diagram(d, Sign.PLUS, 0, 1)  # no strands before first event
        with pytest.raises(NoSuchStrand):
            stabilize_diagram(d, Sign.PLUS, 1, 3)
        with pytest.raises(NoSuchStrand):
            stabilize_diagram(d, Sign.PLUS, 9, 1)


class TestBennequinCheck:
    def test_trefoil_against_its_type(self):
        inv = invariants(parse_front(TREFOIL_WORD))
        assert bennequin_compatible(inv, torus(-3, 2))

    def test_peak_word_cannot_be_an_unknot(self):
        inv = invariants(parse_front(RIGHT_TREFOIL_PEAK_WORD))
        assert not bennequin_compatible(inv, unknot())

    def test_events_render(self):
        assert str(FrontEvent("L", 2)) == "L 2"
        d = FrontDiagram([FrontEvent("L", 1), FrontEvent("R", 1)])
        assert invariants(d).tb == -1
