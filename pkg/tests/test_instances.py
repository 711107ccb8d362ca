from fractions import Fraction

import pytest

from epa.graphs import Graph, unit_weights
from epa.instances import ParseError, parse_instance, serialize_instance
from epa.generator import GeneratorSpec, generate, random_weights
from conftest import corpus


def test_parse_minimal():
    g, w = parse_instance("p epa 2 1\ne 1 2\n")
    assert g == Graph(2, [(0, 1)]) and w == unit_weights(2)


def test_parse_weights_and_comments():
    text = "c hello\np epa 3 1\nv 1 3/2\ne 1 2\n"
    g, w = parse_instance(text)
    assert w == (Fraction(3, 2), Fraction(1), Fraction(1))


def test_roundtrip_corpus():
    for i, g in enumerate(corpus(30, 0, 10, seed0=7000)):
        w = random_weights(g.n, 7000 + i)
        text = serialize_instance(g, w, comments=["corpus"])
        g2, w2 = parse_instance(text)
        assert g2 == g and w2 == w
        assert serialize_instance(g2, w2, comments=["corpus"]) == text


def test_roundtrip_generated():
    g, _ = generate(GeneratorSpec("split", 9, 2, Fraction(1, 2), 7100))
    text = serialize_instance(g)
    g2, _ = parse_instance(text)
    assert g2 == g


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("e 1 2\n", "before problem line"),
        ("p epa 2 1\ne 1 1\n", "self-loop"),
        ("p epa 2 2\ne 1 2\ne 2 1\n", "duplicate edge"),
        ("p epa 2 1\ne 1 3\n", "out of range"),
        ("p epa 2 1\nv 1 -3\ne 1 2\n", "negative weight"),
        ("p epa 2 1\nv 1 1/0\ne 1 2\n", "bad weight"),
        ("p epa 2 2\ne 1 2\n", "declared 2 edges"),
        ("p epa 2 1\nx 1 2\n", "unknown line kind"),
        ("p epa 2 1\np epa 2 1\ne 1 2\n", "duplicate problem"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(ParseError) as err:
        parse_instance(text)
    assert fragment in str(err.value)


def test_error_carries_line_number():
    with pytest.raises(ParseError) as err:
        parse_instance("p epa 2 1\nc ok\ne 1 1\n")
    assert err.value.line == 3
