"""Line-oriented text format for networks, and trace rendering.

Network documents look like::

    format 1
    network gamma1
    input-alphabet a
    alphabet a b
    node C
      mode any
      beta weak
    node x1
      mode any
      beta weak
      rule a -> b
      po b
    edge C x1
    input x1
    output C

``#`` starts a comment; the ``format 1`` header is required.  The token
``.`` denotes the empty word in rules, so ``rule . -> Y`` is an insertion
and ``rule a -> .`` a deletion.  Empty filter sets are omitted.  Words (on
the command line and in traces) are comma-separated symbol tokens, with
``.`` for the empty word: symbol names may be several characters long, so
plain concatenation would be ambiguous.

Serialization is canonical: nodes in id order, rules sorted, filter symbols
in network-alphabet order, edges sorted.  Equal networks produce
byte-identical documents, and ``parse_network(serialize_network(net))``
reproduces ``net`` exactly (the non-semantic ``meta`` field excepted).
"""

from __future__ import annotations

import json

from .engine import Trace
from .model import (Graph, Mode, Network, Rule, Strength, Word, make_processor,
                    symbol_error, validate_network)

FORMAT_VERSION = 1


class ParseError(ValueError):
    pass


def format_word(w: Word) -> str:
    return ",".join(w) if w else "."


def parse_word(text: str) -> Word:
    if text == ".":
        return ()
    symbols = tuple(text.split(","))
    for s in symbols:
        err = symbol_error(s)
        if err is not None:
            raise ParseError(f"bad word {text!r}: {err}")
    return symbols


def serialize_network(net: Network) -> str:
    lines = [f"format {FORMAT_VERSION}", f"network {net.name}"]
    lines.append("input-alphabet " + " ".join(net.input_alphabet))
    lines.append("alphabet " + " ".join(net.network_alphabet))
    position = {s: k for k, s in enumerate(net.network_alphabet)}

    def by_alphabet(s):
        return (position.get(s, len(position)), s)

    for x in net.graph.nodes:
        proc = net.processors[x]
        lines.append(f"node {x}")
        lines.append(f"  mode {proc.mode.value}")
        lines.append(f"  beta {proc.beta.value}")
        for rule in sorted(proc.rules, key=lambda r: (r.lhs, r.rhs)):
            lines.append(f"  rule {rule.lhs or '.'} -> {rule.rhs or '.'}")
        f = proc.filters
        for label, syms in (("pi", f.pi), ("fi", f.fi), ("po", f.po), ("fo", f.fo)):
            if syms:
                lines.append(f"  {label} " + " ".join(sorted(syms, key=by_alphabet)))
    for a, b in sorted(net.graph.edges):
        lines.append(f"edge {a} {b}")
    lines.append(f"input {net.input_node}")
    lines.append(f"output {net.output_node}")
    return "\n".join(lines) + "\n"


def parse_network(text: str) -> Network:
    """Parse a network document; validation violations are parse errors."""
    name = None
    input_alpha = None
    alpha = None
    node_props: dict = {}
    node_order: list = []
    edges: list = []
    edge_lines: list = []
    input_node = None
    output_node = None
    current = None
    saw_format = False

    def fail(lineno, msg):
        raise ParseError(f"line {lineno}: {msg}")

    def need_symbol(lineno, sym):
        if alpha is None:
            fail(lineno, "alphabet must be declared before nodes")
        if sym not in alpha:
            fail(lineno, f"unknown symbol {sym!r}")
        return sym

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        parts = line.split()
        key, args = parts[0], parts[1:]
        if not saw_format:
            if key == "format":
                if args != [str(FORMAT_VERSION)]:
                    fail(lineno, f"unsupported format version {' '.join(args)!r}")
                saw_format = True
                continue
            fail(lineno, "expected 'format 1' header first")
        if key == "network":
            if len(args) != 1:
                fail(lineno, "network takes exactly one name token")
            if name is not None:
                fail(lineno, "duplicate network line")
            name = args[0]
        elif key == "input-alphabet":
            if input_alpha is not None:
                fail(lineno, "duplicate input-alphabet line")
            input_alpha = tuple(args)
        elif key == "alphabet":
            if alpha is not None:
                fail(lineno, "duplicate alphabet line")
            alpha = tuple(args)
        elif key == "node":
            if len(args) != 1:
                fail(lineno, "node takes exactly one id")
            if args[0] in node_props:
                fail(lineno, f"duplicate node {args[0]!r}")
            current = args[0]
            node_order.append(current)
            node_props[current] = {"mode": None, "beta": None,
                                   "rules": [], "pi": None, "fi": None,
                                   "po": None, "fo": None}
        elif key in ("mode", "beta", "rule", "pi", "fi", "po", "fo"):
            if current is None:
                fail(lineno, f"{key} line outside a node section")
            props = node_props[current]
            if key == "mode":
                if props["mode"] is not None:
                    fail(lineno, "duplicate mode line")
                try:
                    props["mode"] = Mode(args[0]) if args else None
                except ValueError:
                    props["mode"] = None
                if props["mode"] is None:
                    fail(lineno, "mode must be any, left or right")
            elif key == "beta":
                if props["beta"] is not None:
                    fail(lineno, "duplicate beta line")
                try:
                    props["beta"] = Strength(args[0]) if args else None
                except ValueError:
                    props["beta"] = None
                if props["beta"] is None:
                    fail(lineno, "beta must be weak or strong")
            elif key == "rule":
                if len(args) != 3 or args[1] != "->":
                    fail(lineno, "rule syntax is: rule <lhs> -> <rhs>")
                lhs = "" if args[0] == "." else need_symbol(lineno, args[0])
                rhs = "" if args[2] == "." else need_symbol(lineno, args[2])
                if not lhs and not rhs:
                    fail(lineno, "rule cannot be . -> .")
                props["rules"].append(Rule(lhs, rhs))
            else:
                if props[key] is not None:
                    fail(lineno, f"duplicate {key} line")
                props[key] = frozenset(need_symbol(lineno, s) for s in args)
        elif key == "edge":
            if len(args) != 2:
                fail(lineno, "edge takes exactly two node ids")
            edges.append((args[0], args[1]))
            edge_lines.append(lineno)
        elif key == "input":
            if len(args) != 1 or input_node is not None:
                fail(lineno, "input takes exactly one node id, once")
            input_node = args[0]
        elif key == "output":
            if len(args) != 1 or output_node is not None:
                fail(lineno, "output takes exactly one node id, once")
            output_node = args[0]
        else:
            fail(lineno, f"unknown directive {key!r}")

    for field, value in (("network", name), ("input-alphabet", input_alpha),
                         ("alphabet", alpha), ("input", input_node),
                         ("output", output_node)):
        if value is None:
            raise ParseError(f"missing required {field} line")
    known = set(node_order)
    for (a, b), lineno in zip(edges, edge_lines):
        for end in (a, b):
            if end not in known:
                raise ParseError(f"line {lineno}: edge endpoint {end!r} "
                                 "is not a declared node")

    processors = {}
    for x in node_order:
        props = node_props[x]
        processors[x] = make_processor(
            rules=props["rules"],
            mode=props["mode"] or Mode.ANY,
            beta=props["beta"] or Strength.WEAK,
            pi=props["pi"] or (), fi=props["fi"] or (),
            po=props["po"] or (), fo=props["fo"] or ())
    net = Network(
        name=name,
        input_alphabet=input_alpha,
        network_alphabet=alpha,
        graph=Graph.build(node_order, edges),
        processors=processors,
        input_node=input_node,
        output_node=output_node,
    )
    violations = validate_network(net)
    if violations:
        raise ParseError("invalid network:\n" + "\n".join(violations))
    return net


def _sorted_words(words) -> list:
    return [format_word(w) for w in sorted(words, key=lambda w: (len(w), w))]


def serialize_trace(trace: Trace, fmt: str = "text") -> str:
    """Render a trace as human-readable text or one JSON object per step."""
    if fmt == "jsonl":
        lines = []
        for e in trace.entries:
            record = {"step": e.step, "kind": e.kind.value,
                      "nodes": {x: _sorted_words(ws)
                                for x, ws in sorted(e.config.items())}}
            lines.append(json.dumps(record, sort_keys=True))
        return "\n".join(lines) + ("\n" if lines else "")
    if fmt == "text":
        lines = []
        for e in trace.entries:
            lines.append(f"step {e.step} {e.kind.value}")
            for x, ws in sorted(e.config.items()):
                if ws:
                    lines.append(f"  {x}: " + " ".join(_sorted_words(ws)))
        return "\n".join(lines) + ("\n" if lines else "")
    raise ValueError(f"unknown trace format {fmt!r}")
