"""Definitions, pairs, pivots and the text notation."""

import pytest
from hypothesis import given, strategies as st

from skolemwind import sequences as sq
from skolemwind.search import iter_sequences

S4 = sq.SkolemSeq((1, 1, 4, 2, 3, 2, 4, 3), sq.SKOLEM)
HS2 = sq.SkolemSeq((1, 1, 2, 0, 2), sq.HOOKED_SKOLEM)
HS7 = sq.SkolemSeq((7, 4, 6, 3, 5, 4, 3, 7, 6, 5, 1, 1, 2, 0, 2), sq.HOOKED_SKOLEM)
L23 = sq.SkolemSeq((4, 2, 3, 2, 4, 3), sq.LANGFORD, defect=2)


class TestValidate:
    def test_order_four(self):
        assert sq.validate(S4).ok

    def test_hooked_order_two(self):
        assert sq.validate(HS2).ok

    def test_gap_violation_names_symbol(self):
        report = sq.validate(sq.SkolemSeq((1, 1, 2, 2), sq.SKOLEM))
        assert not report.ok
        assert any("symbol 2" in v and "1" in v for v in report.violations)

    def test_langford_defect_two(self):
        assert sq.validate(L23).ok

    def test_hook_out_of_place(self):
        report = sq.validate(sq.SkolemSeq((1, 1, 0, 2, 2), sq.HOOKED_SKOLEM))
        assert not report.ok

    def test_missing_symbol_reported(self):
        report = sq.validate(sq.SkolemSeq((1, 1, 3, 4, 3, 5, 4, 5), sq.SKOLEM))
        assert not report.ok
        assert any("symbol 2" in v for v in report.violations)

    def test_p_extended_hook_anywhere(self):
        els = sq.SkolemSeq((2, 3, 2, 0, 3), sq.P_EXTENDED_LANGFORD, defect=2)
        assert sq.validate(els).ok
        assert els.hook == 4


class TestPairs:
    def test_order_four(self):
        assert sq.pairs(S4).pairs == {1: (1, 2), 2: (4, 6), 3: (5, 8), 4: (3, 7)}

    def test_hooked_order_seven(self):
        assert sq.pairs(HS7).pairs == {
            1: (11, 12), 2: (13, 15), 3: (4, 7), 4: (2, 6),
            5: (5, 10), 6: (3, 9), 7: (1, 8),
        }

    def test_smallest(self):
        assert sq.pairs(sq.SkolemSeq((1, 1), sq.SKOLEM)).pairs == {1: (1, 2)}

    def test_invalid_raises(self):
        with pytest.raises(sq.SequenceError):
            sq.pairs(sq.SkolemSeq((1, 1, 2, 2), sq.SKOLEM))

    def test_agrees_with_position_scan_for_all_small_orders(self):
        # oracle: the raw two-pass index scan over every enumerated sequence
        checked = 0
        for kind, orders in ((sq.SKOLEM, (1, 4, 5, 8)), (sq.HOOKED_SKOLEM, (2, 3, 6, 7))):
            for n in orders:
                for seq in iter_sequences(kind, n):
                    assert sq.pairs(seq).pairs == sq.position_pairs(seq.entries)
                    checked += 1
        assert checked > 500


class TestPivots:
    def test_hooked_seven_literal_inequality(self):
        # the worked example names 1, 4, 7; the defining inequality also
        # admits 3, 5 and 6, and the literal evaluation is binding
        assert sq.pivots(HS7) == [1, 3, 4, 5, 6, 7]
        assert {1, 4, 7} <= set(sq.pivots(HS7))

    def test_order_four(self):
        assert sq.pivots(S4) == [1, 2]

    def test_table_row_contains_declared(self):
        row = sq.parse("4857411568723263", sq.SKOLEM)
        assert {1, 2, 4} <= set(sq.pivots(row))

    def test_wrong_kind(self):
        with pytest.raises(sq.SequenceError):
            sq.pivots(L23)

    def test_matches_literal_inequality_everywhere(self):
        for kind, n in ((sq.SKOLEM, 5), (sq.HOOKED_SKOLEM, 6)):
            for seq in iter_sequences(kind, n):
                expected = []
                for i, (_, b) in sq.pairs(seq).items():
                    top = 2 * n if kind == sq.SKOLEM else 2 * n + 1
                    if b + i <= top and (kind == sq.SKOLEM or b + i != 2 * n):
                        expected.append(i)
                assert sq.pivots(seq) == sorted(expected)


class TestText:
    def test_parse_letters(self):
        seq = sq.parse("A853113598A7426249706", sq.HOOKED_SKOLEM)
        assert seq.order == 10
        assert seq.entries[0] == 10
        assert sq.validate(seq).ok

    def test_zero_outside_hook_rejected(self):
        with pytest.raises(sq.SequenceError):
            sq.parse("1142324300", sq.SKOLEM)

    def test_print_order_four(self):
        assert sq.to_text(S4) == "11423243"

    def test_round_trip(self):
        for text, kind in (("11423243", sq.SKOLEM), ("746354376511202", sq.HOOKED_SKOLEM)):
            assert sq.to_text(sq.parse(text, kind)) == text

    def test_bad_character(self):
        with pytest.raises(sq.SequenceError):
            sq.parse("11!2", sq.SKOLEM)

    def test_symbol_out_of_range(self):
        with pytest.raises(sq.SequenceError):
            sq.parse("5115", sq.SKOLEM)

    def test_decimal_form_beyond_letters(self):
        # symbols above 35 have no compact character; the comma form kicks in
        entries = (36, 36) + (1,) * 70
        seq = sq.SkolemSeq(entries, sq.SKOLEM)
        text = sq.to_text(seq)
        assert "," in text
        assert sq.parse(text, sq.SKOLEM).entries == entries

    def test_kind_required_not_inferred(self):
        # the same text reads as hooked Langford or p-extended Langford
        text = "4232430"
        as_hooked = sq.parse(text, sq.HOOKED_LANGFORD, defect=2)
        as_extended = sq.parse(text, sq.P_EXTENDED_LANGFORD, defect=2)
        assert as_hooked.kind != as_extended.kind
        assert as_hooked.entries == as_extended.entries


@given(st.sampled_from([sq.SKOLEM, sq.HOOKED_SKOLEM]), st.data())
def test_text_round_trip_on_enumerated(kind, data):
    order = data.draw(st.sampled_from((1, 4, 5) if kind == sq.SKOLEM else (2, 3, 6)))
    pool = list(iter_sequences(kind, order))
    seq = data.draw(st.sampled_from(pool))
    assert sq.parse(sq.to_text(seq), kind) == seq
