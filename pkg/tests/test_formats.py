"""Network document round-trips, canonical form, and trace rendering."""

import json
import random

import pytest

import ahnep as A
import helpers


def test_word_syntax():
    assert A.format_word(()) == "."
    assert A.format_word(("X0", "a")) == "X0,a"
    assert A.parse_word(".") == ()
    assert A.parse_word("X0,a") == ("X0", "a")
    with pytest.raises(A.ParseError):
        A.parse_word("a,,b")
    with pytest.raises(A.ParseError):
        A.parse_word("a, b")


def test_gamma1_round_trip(gamma1):
    doc = A.serialize_network(gamma1)
    assert doc.splitlines()[0] == "format 1"
    parsed = A.parse_network(doc)
    assert parsed == gamma1
    # canonical: serializing the parse reproduces the document byte for byte
    assert A.serialize_network(parsed) == doc


def test_round_trip_of_generated_networks():
    rng = random.Random(21)
    nets = [helpers.random_complete_net(rng) for _ in range(10)]
    nets += [A.to_star(n) for n in nets[:3]]
    nets += [A.to_grid(n) for n in nets[:3]]
    nets += [A.prune_to_degree3(A.to_grid(nets[3]))]
    nets.append(A.build_sat_network(A.CnfFormula(2, ((1, -2, 2),)))[0])
    for net in nets:
        doc = A.serialize_network(net)
        assert A.parse_network(doc) == net
        assert A.serialize_network(A.parse_network(doc)) == doc


def test_parse_reports_unknown_symbol_with_line():
    doc = ("format 1\nnetwork t\ninput-alphabet a\nalphabet a b\n"
           "node x\n  mode any\n  beta weak\n  rule a -> q\n"
           "input x\noutput x\n")
    with pytest.raises(A.ParseError) as err:
        A.parse_network(doc)
    assert "line 8" in str(err.value) and "'q'" in str(err.value)


def test_parse_requires_output():
    doc = ("format 1\nnetwork t\ninput-alphabet a\nalphabet a\n"
           "node x\ninput x\n")
    with pytest.raises(A.ParseError) as err:
        A.parse_network(doc)
    assert "output" in str(err.value)


def test_parse_requires_format_header():
    with pytest.raises(A.ParseError):
        A.parse_network("network t\n")
    with pytest.raises(A.ParseError):
        A.parse_network("format 2\nnetwork t\n")


def test_parse_rejects_validation_violations():
    doc = ("format 1\nnetwork t\ninput-alphabet a\nalphabet a\n"
           "node x\n  pi a\n  fi a\ninput x\noutput x\n")
    with pytest.raises(A.ParseError) as err:
        A.parse_network(doc)
    assert "disjoint" in str(err.value)


def test_parse_handles_comments_and_defaults():
    doc = ("# a comment\nformat 1\nnetwork t  # trailing\n"
           "input-alphabet a\nalphabet a\nnode x\ninput x\noutput x\n")
    net = A.parse_network(doc)
    assert net.processors["x"].mode is A.Mode.ANY
    assert net.processors["x"].beta is A.Strength.WEAK


def test_parse_edge_endpoint_check():
    doc = ("format 1\nnetwork t\ninput-alphabet a\nalphabet a\n"
           "node x\nedge x ghost\ninput x\noutput x\n")
    with pytest.raises(A.ParseError) as err:
        A.parse_network(doc)
    assert "ghost" in str(err.value)


def test_trace_serialization(gamma1):
    _, trace = A.run(gamma1, ("a",), want_trace=True)
    text = A.serialize_trace(trace, "text")
    assert text == ("step 1 evolution\n"
                    "  x1: b\n"
                    "step 2 communication\n"
                    "  C: b\n")
    lines = A.serialize_trace(trace, "jsonl").splitlines()
    assert len(lines) == 2
    first = json.loads(lines[0])
    assert first == {"step": 1, "kind": "evolution",
                     "nodes": {"C": [], "x1": ["b"]}}
    with pytest.raises(ValueError):
        A.serialize_trace(trace, "xml")


def test_empty_word_in_traces():
    net = A.Network(
        name="eps", input_alphabet=("a",), network_alphabet=("a", "z"),
        graph=A.Graph.build(["x", "o"], [("x", "o")]),
        processors={"x": A.make_processor(rules=[A.Rule("a", "")]),
                    "o": A.make_processor(pi=["z"])},
        input_node="x", output_node="o")
    _, trace = A.run(net, ("a",), limits=A.RunLimits(max_steps=4),
                     want_trace=True)
    text = A.serialize_trace(trace, "text")
    assert "  x: ." in text
