"""Constraint parsing, normalization, and edge translation."""

import pytest
from hypothesis import given, strategies as st

from utvpi import (
    CONTRADICTION,
    TAUTOLOGY,
    DiffEdge,
    Normal,
    ParseError,
    UtvpiConstraint,
    VarTable,
    edges_of,
    normalize,
    parse_constraint,
)
from utvpi.constraints import MAX_BOUND, parse_lines, minus, plus

from helpers import c1, c2, mkvars


class TestParse:
    def test_two_terms(self):
        t = VarTable()
        c = parse_constraint("+x -y <= 2", t)
        assert (c.a, c.x.name, c.b, c.y.name, c.d) == (1, "x", -1, "y", 2)

    def test_single_term(self):
        t = VarTable()
        c = parse_constraint("-x <= -4", t)
        assert (c.a, c.x.name, c.b, c.y, c.d) == (-1, "x", 0, None, -4)

    def test_no_terms(self):
        t = VarTable()
        c = parse_constraint("<= -1", t)
        assert (c.a, c.x, c.b, c.y, c.d) == (0, None, 0, None, -1)

    def test_indices_follow_first_sight(self):
        t = VarTable()
        parse_constraint("+b -a <= 0", t)
        parse_constraint("+c -a <= 0", t)
        assert [v.name for v in t.variables()] == ["b", "a", "c"]
        assert [v.index for v in t.variables()] == [0, 1, 2]

    def test_comments_and_whitespace(self):
        t = VarTable()
        c = parse_constraint("  +x   -y   <=   7  # trailing note", t)
        assert (c.a, c.b, c.d) == (1, -1, 7)

    def test_same_variable_accepted(self):
        t = VarTable()
        c = parse_constraint("+x +x <= 5", t)
        assert c.x == c.y and c.a == c.b == 1

    @pytest.mark.parametrize(
        "line",
        [
            "x - y <= 2",      # unsigned terms
            "+2x <= 3",         # coefficient syntax
            "+x -y < 2",        # wrong operator
            "+x -y <=",         # missing bound
            "+x -y <= two",     # non-integer bound
            "+x +y +z <= 0",    # too many terms
            "+x <= 1 <= 2",     # trailing junk
        ],
    )
    def test_rejects_malformed(self, line):
        with pytest.raises(ParseError):
            parse_constraint(line, VarTable())

    def test_bound_magnitude_rejected(self):
        with pytest.raises(ParseError):
            parse_constraint(f"+x <= {MAX_BOUND + 1}", VarTable())

    def test_parse_lines_skips_blanks_and_reports_line_numbers(self):
        text = ["# header", "", "+x -y <= 2", "   ", "-x <= 0"]
        t = VarTable()
        parsed = list(parse_lines(text, t))
        assert [lineno for lineno, _ in parsed] == [3, 5]
        with pytest.raises(ParseError, match="line 2"):
            list(parse_lines(["+x <= 0", "junk"], VarTable()))


class TestNormalize:
    def test_zero_literals(self):
        assert normalize(UtvpiConstraint(0, None, 0, None, -1)) is CONTRADICTION
        assert normalize(UtvpiConstraint(0, None, 0, None, 0)) is TAUTOLOGY

    def test_same_variable_tightens(self):
        (x,) = mkvars(1)
        res = normalize(c2(1, x, 1, x, 5))
        assert isinstance(res, Normal)
        assert (res.constraint.a, res.constraint.x, res.constraint.b) == (1, x, 0)
        assert res.constraint.d == 2  # floor(5/2)
        res = normalize(c2(-1, x, -1, x, -3))
        assert res.constraint.d == -2  # floor toward minus infinity

    def test_opposed_same_variable(self):
        (x,) = mkvars(1)
        assert normalize(c2(1, x, -1, x, 0)) is TAUTOLOGY
        assert normalize(c2(1, x, -1, x, -2)) is CONTRADICTION

    def test_canonical_order(self):
        x, y = mkvars(2)
        res = normalize(c2(1, y, 1, x, 3))
        assert (res.constraint.x, res.constraint.y) == (x, y)
        already = c2(1, x, -1, y, 2)
        assert normalize(already) == Normal(already)

    @given(st.data())
    def test_idempotent(self, data):
        vs = mkvars(3)
        a = data.draw(st.sampled_from([-1, 1]))
        b = data.draw(st.sampled_from([-1, 0, 1]))
        x = data.draw(st.sampled_from(vs))
        y = data.draw(st.sampled_from(vs)) if b != 0 else None
        d = data.draw(st.integers(-50, 50))
        res = normalize(UtvpiConstraint(a, x, b, y, d))
        if isinstance(res, Normal):
            assert normalize(res.constraint) == res


class TestEdges:
    def test_difference_row(self):
        x, y = mkvars(2)
        assert edges_of(c2(1, x, -1, y, 2)) == (
            DiffEdge(plus(y), plus(x), 2),
            DiffEdge(minus(x), minus(y), 2),
        )

    def test_negative_sum_row(self):
        x, y = mkvars(2)
        e = edges_of(c2(-1, x, -1, y, -4))
        assert [(str(d.src), str(d.dst), d.weight) for d in e] == [
            ("y+", "x-", -4),
            ("x+", "y-", -4),
        ]

    def test_single_variable_doubles(self):
        (x,) = mkvars(1)
        e = edges_of(c1(1, x, 0))
        assert [(str(d.src), str(d.dst), d.weight) for d in e] == [("x-", "x+", 0)]
        e = edges_of(c1(-1, x, 3))
        assert [(str(d.src), str(d.dst), d.weight) for d in e] == [("x+", "x-", 6)]

    def test_swapped_difference_row(self):
        x, y = mkvars(2)
        e = edges_of(c2(-1, x, 1, y, 3))  # y - x <= 3
        assert [(str(d.src), str(d.dst), d.weight) for d in e] == [
            ("x+", "y+", 3),
            ("y-", "x-", 3),
        ]

    def test_zero_literal_rejected(self):
        with pytest.raises(ValueError):
            edges_of(UtvpiConstraint(0, None, 0, None, 1))

    def test_unnormalized_same_variable_rejected(self):
        (x,) = mkvars(1)
        with pytest.raises(ValueError):
            edges_of(c2(1, x, 1, x, 4))

    @given(st.data())
    def test_counter_edge_symmetry_and_no_self_loops(self, data):
        vs = mkvars(4)
        a = data.draw(st.sampled_from([-1, 1]))
        b = data.draw(st.sampled_from([-1, 0, 1]))
        i = data.draw(st.integers(0, 3))
        j = data.draw(st.integers(0, 3))
        d = data.draw(st.integers(-30, 30))
        if b != 0 and i == j:
            j = (j + 1) % 4
        c = UtvpiConstraint(a, vs[i], b, vs[j] if b else None, d)
        res = normalize(c)
        edges = edges_of(res.constraint)
        for e in edges:
            assert e.src != e.dst
        if len(edges) == 2:
            e, mirror = edges
            assert mirror.src == -e.dst and mirror.dst == -e.src
            assert mirror.weight == e.weight
        else:
            (e,) = edges
            assert -e.dst == e.src  # its own counter-edge


class TestSignedVertex:
    def test_negation_involution(self):
        (x,) = mkvars(1)
        v = plus(x)
        assert -(-v) == v
        assert (-v).vid == v.vid ^ 1

    def test_vertex_ids_dense(self):
        x, y = mkvars(2)
        assert [plus(x).vid, minus(x).vid, plus(y).vid, minus(y).vid] == [0, 1, 2, 3]

    def test_constructor_validation(self):
        (x,) = mkvars(1)
        with pytest.raises(ValueError):
            UtvpiConstraint(2, x, 0, None, 0)
        with pytest.raises(ValueError):
            UtvpiConstraint(0, None, 1, x, 0)
        with pytest.raises(ValueError):
            UtvpiConstraint(1, x, 0, None, MAX_BOUND + 1)
