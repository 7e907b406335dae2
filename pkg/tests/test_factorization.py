"""Move engine: single moves, certificates, text formats."""

import pytest
from hypothesis import given, settings, strategies as st

from hurwitz.errors import FormatError, MoveRangeError, PreconditionError
from hurwitz.factorization import (
    Direction,
    Factorization,
    HurwitzMove,
    apply_certificate,
    apply_move,
    conjugate_factor,
    format_certificate,
    format_factorization,
    forward,
    inverse,
    invert_certificate,
    parse_certificate,
    parse_factorization,
)


@st.composite
def factorizations(draw, min_len=0, max_len=10):
    n = draw(st.integers(min_value=2, max_value=8))
    pairs = [(a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1)]
    factors = draw(
        st.lists(
            st.one_of(st.none(), st.sampled_from(pairs)),
            min_size=min_len,
            max_size=max_len,
        )
    )
    return Factorization(n, factors)


@st.composite
def factorization_with_moves(draw, max_moves=30):
    f = draw(factorizations(min_len=2))
    m = len(f)
    raw = draw(
        st.lists(
            st.tuples(st.sampled_from([Direction.FORWARD, Direction.INVERSE]),
                      st.integers(0, m - 2)),
            max_size=max_moves,
        )
    )
    return f, [HurwitzMove(d, k) for d, k in raw]


class TestFactorizationType:
    def test_normalizes_and_validates(self):
        f = Factorization(4, [(3, 1), None, (2, 4)])
        assert f.factors == ((1, 3), None, (2, 4))
        assert len(f) == 3
        assert f.identity_factor_count() == 1

    def test_rejects_out_of_range(self):
        with pytest.raises(PreconditionError):
            Factorization(3, [(1, 4)])
        with pytest.raises(PreconditionError):
            Factorization(3, [(0, 2)])

    def test_rejects_degenerate_pair(self):
        with pytest.raises(PreconditionError):
            Factorization(3, [(2, 2)])

    def test_product(self):
        f = Factorization(3, [(1, 2), (2, 3)])
        assert f.product().images == (3, 1, 2)
        assert not f.is_identity_factorization()
        assert Factorization(3, [(1, 2), (1, 2)]).is_identity_factorization()
        assert Factorization(3, []).is_identity_factorization()


class TestConjugation:
    def test_shared_point(self):
        assert conjugate_factor((1, 2), (2, 3)) == (1, 3)
        assert conjugate_factor((2, 3), (1, 2)) == (1, 3)

    def test_disjoint_fixes(self):
        assert conjugate_factor((1, 2), (3, 4)) == (3, 4)

    def test_self_fixes(self):
        assert conjugate_factor((1, 2), (1, 2)) == (1, 2)

    def test_identity_cases(self):
        assert conjugate_factor(None, (1, 2)) == (1, 2)
        assert conjugate_factor((1, 2), None) is None


class TestApplyMove:
    # transposition conjugation cases, one per shape
    def test_forward_shared(self):
        f = Factorization(3, [(1, 2), (2, 3)])
        assert apply_move(f, forward(0)).factors == ((1, 3), (1, 2))

    def test_inverse_shared(self):
        f = Factorization(3, [(1, 2), (2, 3)])
        assert apply_move(f, inverse(0)).factors == ((2, 3), (1, 3))

    def test_forward_disjoint_swaps(self):
        f = Factorization(4, [(1, 2), (3, 4)])
        assert apply_move(f, forward(0)).factors == ((3, 4), (1, 2))

    def test_forward_equal_fixes(self):
        f = Factorization(3, [(1, 2), (1, 2)])
        assert apply_move(f, forward(0)).factors == ((1, 2), (1, 2))

    def test_identity_factor_swaps(self):
        f = Factorization(3, [(1, 2), None])
        assert apply_move(f, forward(0)).factors == (None, (1, 2))
        assert apply_move(f, inverse(0)).factors == (None, (1, 2))

    def test_position_out_of_range(self):
        f = Factorization(3, [(1, 2), (2, 3)])
        with pytest.raises(MoveRangeError):
            apply_move(f, forward(1))
        with pytest.raises(MoveRangeError):
            apply_move(f, forward(-1))
        with pytest.raises(MoveRangeError):
            apply_move(Factorization(3, [(1, 2)]), forward(0))

    @given(factorization_with_moves(max_moves=1))
    def test_product_and_length_preserved(self, fm):
        f, moves = fm
        if not moves:
            return
        g = apply_move(f, moves[0])
        assert len(g) == len(f)
        assert g.product() == f.product()

    @given(factorizations(min_len=2), st.data())
    def test_forward_inverse_cancel(self, f, data):
        k = data.draw(st.integers(0, len(f) - 2))
        assert apply_move(apply_move(f, forward(k)), inverse(k)) == f
        assert apply_move(apply_move(f, inverse(k)), forward(k)) == f

    @given(factorization_with_moves())
    def test_factor_kinds_preserved(self, fm):
        f, moves = fm
        g = apply_certificate(f, moves)
        assert g.identity_factor_count() == f.identity_factor_count()


class TestCertificates:
    def test_empty_certificate_is_noop(self):
        f = Factorization(3, [(1, 2), (2, 3)])
        assert apply_certificate(f, []) == f

    def test_forward_cubed_cycles_back(self):
        f = Factorization(3, [(1, 2), (2, 3)])
        assert apply_certificate(f, [forward(0)] * 3) == f

    def test_error_names_offending_move(self):
        f = Factorization(3, [(1, 2), (2, 3)])
        with pytest.raises(MoveRangeError, match=r"move 1 "):
            apply_certificate(f, [forward(0), forward(5)])

    def test_invert_examples(self):
        assert invert_certificate([]) == ()
        assert invert_certificate([forward(0)]) == (inverse(0),)
        assert invert_certificate([forward(1), inverse(0)]) == (forward(0), inverse(1))

    @given(factorization_with_moves())
    @settings(max_examples=60)
    def test_invert_round_trips(self, fm):
        f, moves = fm
        there = apply_certificate(f, moves)
        assert apply_certificate(there, invert_certificate(moves)) == f

    @given(factorization_with_moves())
    @settings(max_examples=60)
    def test_certificate_equals_iterated_moves(self, fm):
        f, moves = fm
        g = f
        for mv in moves:
            g = apply_move(g, mv)
        assert apply_certificate(f, moves) == g


class TestFactorizationText:
    def test_worked_example_round_trip(self):
        text = "n=6; [(2,6),(1,4),(1,5),(3,6),(4,5),(1,5),(2,3),(3,6)]"
        f = parse_factorization(text)
        assert f.degree == 6 and len(f) == 8
        assert format_factorization(f) == text

    def test_empty_list(self):
        f = parse_factorization("n=3; []")
        assert f.factors == ()
        assert format_factorization(f) == "n=3; []"

    def test_normalization_and_identity(self):
        f = parse_factorization("n=3; [(3,1), e]")
        assert f.factors == ((1, 3), None)

    def test_whitespace_insensitive(self):
        f = parse_factorization("  n = 6 ;  [ ( 2 , 6 ) , e ,( 1,4 ) ]  ")
        assert f.factors == ((2, 6), None, (1, 4))

    @pytest.mark.parametrize(
        "bad",
        [
            "",
            "n=; []",
            "[(1,2)]",
            "n=3 [(1,2)]",
            "n=3; [(1,2)",
            "n=3; [(1,2),]",
            "n=3; [(1,2) (1,3)]",
            "n=3; [(2,2)]",
            "n=3; [(1,4)]",
            "n=3; [x]",
            "n=3; [(1,2)] trailing",
        ],
    )
    def test_malformed_raises_with_position(self, bad):
        with pytest.raises(FormatError, match=r"at position \d+"):
            parse_factorization(bad)

    @given(factorizations())
    @settings(max_examples=80)
    def test_round_trip(self, f):
        assert parse_factorization(format_factorization(f)) == f


class TestCertificateText:
    def test_round_trip(self):
        moves = [forward(0), inverse(3), forward(12)]
        assert parse_certificate(format_certificate(moves)) == moves

    def test_comments_and_blanks_skipped(self):
        text = "\n# preamble\nF@0\n\n  I@2  \n# done\n"
        assert parse_certificate(text) == [forward(0), inverse(2)]

    def test_malformed_line_reports_number(self):
        with pytest.raises(FormatError, match="line 2"):
            parse_certificate("F@0\nG@1\n")

    def test_empty_text(self):
        assert parse_certificate("") == []
        assert format_certificate([]) == ""
