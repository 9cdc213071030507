"""Instance-file parsing, diagnostics, and round-trip serialization."""

import pytest

from socle.modules import is_isomorphic

from socle.instancefile import (
    ParseError,
    parse_instance,
    parse_poly,
    poly_str,
    serialize_instance,
)

AGP_TEXT = """\
# four variables, seven quadrics
[ring]
field = GF(101)
vars = x1 x2 x3 x4
rel = x1^2
rel = x1*x2 - x3*x4
rel = x1*x2 - x4^2
rel = x1*x3 - x2*x4
rel = x1*x4 - x2^2
rel = x1*x4 - x2*x3
rel = x1*x4 - x3^2
[module M]
row = x3, x1
row = x4, x2
"""


def test_parse_poly_basic():
    p = parse_poly("2*x^2 - x*y + 3", ["x", "y"])
    assert p == {(2, 0): 2, (1, 1): -1, (0, 0): 3}


def test_parse_poly_merges_and_cancels():
    assert parse_poly("x + x", ["x"]) == {(1,): 2}
    assert parse_poly("x - x", ["x"]) == {(0,): 0}


def test_parse_poly_errors_carry_position():
    with pytest.raises(ParseError) as ei:
        parse_poly("x + ", ["x"], line=7)
    assert ei.value.line == 7
    with pytest.raises(ParseError) as ei:
        parse_poly("x * * y", ["x", "y"])
    assert ei.value.col == 5
    with pytest.raises(ParseError):
        parse_poly("z", ["x", "y"])
    with pytest.raises(ParseError):
        parse_poly("x^", ["x"])


def test_poly_str_round_trip():
    for src in ["x^2 - 3*x*y + y^2", "- x + 2", "0", "x1*x2^3"]:
        names = ["x1", "x2"] if "x1" in src else ["x", "y"]
        p = parse_poly(src, names)
        assert parse_poly(poly_str(p, names), names) == p


def test_parse_instance_agp():
    ring, mods = parse_instance(AGP_TEXT)
    assert ring.hilbert == [1, 4, 3]
    assert set(mods) == {"M"}
    assert mods["M"].min_gens() == 2
    assert mods["M"].dim == 8


def test_serialize_round_trip():
    ring, mods = parse_instance(AGP_TEXT)
    text = serialize_instance(ring, mods)
    ring2, mods2 = parse_instance(text)
    assert ring2.hilbert == ring.hilbert
    assert serialize_instance(ring2, mods2) == text
    assert is_isomorphic(mods["M"], mods2["M"])


def test_section_errors():
    with pytest.raises(ParseError):
        parse_instance("rel = x^2\n")  # content before header
    with pytest.raises(ParseError):
        parse_instance("[ring]\nvars = x\n[ring]\nvars = x\n")
    with pytest.raises(ParseError):
        parse_instance("[module M]\nrow = x\n")  # no ring section
    with pytest.raises(ParseError):
        parse_instance("[ring]\nvars = x\nrel = x^2\n[module]\n")
    with pytest.raises(ParseError) as ei:
        parse_instance(
            "[ring]\nvars = x\nrel = x^3\n[module M]\n[module M]\n"
        )
    assert ei.value.line == 5


def test_ragged_rows_rejected():
    with pytest.raises(ParseError):
        parse_instance(
            "[ring]\nvars = x\nrel = x^3\n[module M]\nrow = x, 0\nrow = x\n"
        )


def test_field_specs():
    base = "[ring]\nfield = {}\nvars = x\nrel = x^2\n"
    ring, _ = parse_instance(base.format("GF(7)"))
    assert ring.field.p == 7
    ring, _ = parse_instance(base.format("Q"))
    assert ring.field.p is None
    with pytest.raises(ParseError):
        parse_instance(base.format("GF(6)"))
    with pytest.raises(ParseError):
        parse_instance(base.format("R"))


def test_coefficients_reduced_mod_p():
    text = "[ring]\nfield = GF(5)\nvars = x\nrel = x^2\n[module M]\nrow = 7*x\n"
    ring, mods = parse_instance(text)
    # 7*x == 2*x over GF(5); the module is R/(x), of length 1
    assert mods["M"].dim == 1
