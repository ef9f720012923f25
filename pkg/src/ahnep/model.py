"""Core data model for accepting hybrid networks of evolutionary processors.

An AHNEP is an undirected graph (self-loops allowed) whose nodes each carry
an evolutionary processor: a homogeneous set of rewriting rules (all
substitutions, all deletions, or all insertions), an action mode saying
where deletion/insertion rules apply, a filter strength, and four
random-context filter sets that gate which words may enter or leave the
node.  Words move through the network in alternating evolutionary and
communication steps; the network accepts an input word as soon as any word
appears in the output node.

Symbols are plain interned strings and a word is a tuple of symbols.  Words
are tuples rather than concatenated text because symbol names may be longer
than one character ("X0", "T1"), which would make plain string
concatenation ambiguous.

All types here are immutable values after construction and safe to share
across threads.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

Symbol = str
Word = tuple  # tuple[Symbol, ...]

EMPTY_WORD: Word = ()


def intern_symbol(name: str) -> Symbol:
    """Validate and intern a symbol name; equal names yield equal symbols."""
    err = symbol_error(name)
    if err is not None:
        raise ValueError(err)
    return sys.intern(name)


def symbol_error(name: str) -> str | None:
    """Return a description of why ``name`` is not a usable symbol, or None.

    Besides being nonempty and whitespace-free, names must not collide with
    the serialization syntax: "," separates symbols within a word, "." alone
    denotes the empty word, and "#" starts a comment.
    """
    if not isinstance(name, str) or not name:
        return "symbol names must be nonempty strings"
    if any(ch.isspace() for ch in name):
        return f"symbol name {name!r} contains whitespace"
    if "," in name or "#" in name:
        return f"symbol name {name!r} contains a reserved character (',' or '#')"
    if name == ".":
        return "symbol name '.' is reserved for the empty word"
    return None


def word(symbols: Iterable[Symbol]) -> Word:
    """Build a word (tuple of interned symbols) from an iterable of names."""
    return tuple(sys.intern(s) for s in symbols)


def alph(w: Word) -> frozenset:
    """The set of distinct symbols occurring in ``w``."""
    return frozenset(w)


class RuleKind(Enum):
    SUBSTITUTION = "substitution"
    DELETION = "deletion"
    INSERTION = "insertion"


class Mode(Enum):
    """Where a deletion/insertion rule applies: anywhere, left end, right end."""

    ANY = "any"
    LEFT = "left"
    RIGHT = "right"


class Strength(Enum):
    """Filter strength: strong needs all permitting symbols, weak at least one."""

    STRONG = "strong"
    WEAK = "weak"


class HaltingMode(Enum):
    """How rejection is detected.

    PAPER compares each configuration only with the one produced two steps
    earlier by the same kind of step.  CYCLE rejects as soon as the current
    configuration equals any earlier configuration of the same parity; it
    never changes which words are accepted, it only rejects loops earlier.
    """

    PAPER = "paper"
    CYCLE = "cycle"


@dataclass(frozen=True)
class Rule:
    """A rewriting rule ``lhs -> rhs`` where ``""`` stands for the empty word.

    Both sides nonempty: substitution.  Only lhs: deletion.  Only rhs:
    insertion.  ``"" -> ""`` is not a rule.
    """

    lhs: Symbol
    rhs: Symbol

    def __post_init__(self):
        if not self.lhs and not self.rhs:
            raise ValueError("a rule must have a nonempty left or right side")

    @property
    def kind(self) -> RuleKind:
        if self.lhs and self.rhs:
            return RuleKind.SUBSTITUTION
        if self.lhs:
            return RuleKind.DELETION
        return RuleKind.INSERTION

    def __str__(self) -> str:
        return f"{self.lhs or '.'} -> {self.rhs or '.'}"


@dataclass(frozen=True)
class FilterSpec:
    """The four random-context filter sets of a processor.

    pi/fi are the input permitting/forbidding sets, po/fo the output ones.
    Permitting and forbidding sets on the same side must be disjoint.
    """

    pi: frozenset = frozenset()
    fi: frozenset = frozenset()
    po: frozenset = frozenset()
    fo: frozenset = frozenset()


@dataclass(frozen=True)
class Processor:
    """One network node's behavior: rules, action mode, filter strength, filters."""

    rules: frozenset
    mode: Mode = Mode.ANY
    beta: Strength = Strength.WEAK
    filters: FilterSpec = FilterSpec()

    @property
    def kind(self) -> RuleKind | None:
        """The shared kind of this processor's rules, or None if it has none."""
        for rule in self.rules:
            return rule.kind
        return None


def make_processor(rules=(), mode=Mode.ANY, beta=Strength.WEAK,
                   pi=(), fi=(), po=(), fo=()) -> Processor:
    """Convenience constructor taking plain iterables."""
    return Processor(
        rules=frozenset(rules),
        mode=mode,
        beta=beta,
        filters=FilterSpec(pi=frozenset(pi), fi=frozenset(fi),
                           po=frozenset(po), fo=frozenset(fo)),
    )


def edge_key(a: str, b: str) -> tuple:
    """Canonical form of an undirected edge; loops are (a, a)."""
    return (a, b) if a <= b else (b, a)


@dataclass(frozen=True)
class Graph:
    """An undirected graph with optional self-loops.

    ``nodes`` is kept sorted; where a construction needs "node number i",
    it is the 1-based position in this tuple.  ``edges`` holds canonical
    pairs as produced by :func:`edge_key`.
    """

    nodes: tuple
    edges: frozenset

    @classmethod
    def build(cls, nodes: Iterable[str], edges: Iterable[tuple]) -> "Graph":
        node_tuple = tuple(sorted(set(nodes)))
        edge_set = frozenset(edge_key(a, b) for a, b in edges)
        return cls(nodes=node_tuple, edges=edge_set)

    def has_edge(self, a: str, b: str) -> bool:
        return edge_key(a, b) in self.edges

    def neighbors(self, x: str) -> list:
        """Sorted neighbors of ``x``; includes ``x`` itself when a loop exists."""
        out = []
        for a, b in self.edges:
            if a == x:
                out.append(b)
            elif b == x:
                out.append(a)
        return sorted(out)

    def degree(self, x: str) -> int:
        """Incident edge count; a loop counts as one communication channel."""
        return sum(1 for a, b in self.edges if a == x or b == x)


@dataclass(frozen=True)
class Network:
    """A complete AHNEP: alphabets, graph, processors, input/output nodes.

    ``input_alphabet`` must be a subset of ``network_alphabet``; input words
    are written over the input alphabet only, while rules and filters may
    use the whole network alphabet.  ``meta`` carries non-semantic
    annotations (e.g. symbol rename maps from transformations) and is
    excluded from equality.
    """

    name: str
    input_alphabet: tuple
    network_alphabet: tuple
    graph: Graph
    processors: Mapping[str, Processor]
    input_node: str
    output_node: str
    meta: Mapping = field(default_factory=dict, compare=False, repr=False)


# A configuration maps every node id to a finite set of words (set
# semantics: duplicates collapse).
Configuration = dict


@dataclass(frozen=True)
class RunLimits:
    """Resource bounds for a run.

    Insertion rules make configurations unbounded, so the engine enforces
    these limits; see the engine module for how each limit is reported.
    """

    max_steps: int = 10_000
    max_word_len: int = 256
    max_words_per_node: int = 100_000
    halting: HaltingMode = HaltingMode.PAPER

    def __post_init__(self):
        for name in ("max_steps", "max_word_len", "max_words_per_node"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")


class Verdict(Enum):
    ACCEPTED = "accepted"
    REJECTED = "rejected"
    LIMIT = "limit"


class RejectReason(Enum):
    EVOLUTION_REPEAT = "evolution-repeat"
    COMMUNICATION_REPEAT = "communication-repeat"
    CYCLE_AT_PARITY = "cycle-at-parity"


@dataclass(frozen=True)
class RunOutcome:
    """Result of running a network on one input word.

    ``steps`` counts configuration transitions, i.e. the index of the final
    configuration in the run's sequence.
    """

    verdict: Verdict
    steps: int
    reason: RejectReason | None = None
    limit: str | None = None

    @property
    def accepted(self) -> bool:
        return self.verdict is Verdict.ACCEPTED

    @classmethod
    def accept(cls, steps: int) -> "RunOutcome":
        return cls(Verdict.ACCEPTED, steps)

    @classmethod
    def reject(cls, steps: int, reason: RejectReason) -> "RunOutcome":
        return cls(Verdict.REJECTED, steps, reason=reason)

    @classmethod
    def limit_hit(cls, which: str, steps: int) -> "RunOutcome":
        return cls(Verdict.LIMIT, steps, limit=which)

    def __str__(self) -> str:
        if self.verdict is Verdict.ACCEPTED:
            return f"accepted in {self.steps} steps"
        if self.verdict is Verdict.REJECTED:
            return f"rejected in {self.steps} steps ({self.reason.value})"
        return f"limit {self.limit} hit at {self.steps} steps"


def _check_alphabet(label: str, symbols: tuple, report: list) -> None:
    if not symbols:
        report.append(f"{label}: alphabet must be nonempty")
    seen = set()
    for s in symbols:
        err = symbol_error(s)
        if err is not None:
            report.append(f"{label}: {err}")
        if s in seen:
            report.append(f"{label}: duplicate symbol {s!r}")
        seen.add(s)


def validate_network(net: Network) -> list:
    """Check every structural invariant; returns a list of violations.

    An empty report means the network is valid.  Violations are data, not
    exceptions: each entry names the offending node or field.
    """
    report: list = []
    _check_alphabet("input-alphabet", net.input_alphabet, report)
    _check_alphabet("alphabet", net.network_alphabet, report)
    u = set(net.network_alphabet)
    missing = [s for s in net.input_alphabet if s not in u]
    if missing:
        report.append(
            "input-alphabet: symbols not in network alphabet: "
            + " ".join(sorted(missing)))

    nodes = set(net.graph.nodes)
    for a, b in sorted(net.graph.edges):
        for end in (a, b):
            if end not in nodes:
                report.append(f"edge ({a},{b}): endpoint {end!r} is not a node")

    for which, x in (("input", net.input_node), ("output", net.output_node)):
        if x not in nodes:
            report.append(f"{which} node {x!r} is not a node of the graph")

    proc_ids = set(net.processors)
    for x in sorted(nodes - proc_ids):
        report.append(f"node {x}: no processor defined")
    for x in sorted(proc_ids - nodes):
        report.append(f"node {x}: processor defined but node not in graph")

    for x in sorted(nodes & proc_ids):
        proc = net.processors[x]
        kinds = {r.kind for r in proc.rules}
        if len(kinds) > 1:
            report.append(
                f"node {x}: rules mix kinds "
                + "/".join(sorted(k.value for k in kinds)))
        elif kinds == {RuleKind.SUBSTITUTION} and proc.mode is not Mode.ANY:
            report.append(
                f"node {x}: substitution rules require mode any, "
                f"got {proc.mode.value}")
        for rule in sorted(proc.rules, key=lambda r: (r.lhs, r.rhs)):
            for side in (rule.lhs, rule.rhs):
                if side and side not in u:
                    report.append(
                        f"node {x}: rule {rule} uses unknown symbol {side!r}")
        f = proc.filters
        for label, syms in (("pi", f.pi), ("fi", f.fi), ("po", f.po), ("fo", f.fo)):
            unknown = sorted(s for s in syms if s not in u)
            if unknown:
                report.append(
                    f"node {x}: filter {label} uses unknown symbols: "
                    + " ".join(unknown))
        for one, two, s1, s2 in (("pi", "fi", f.pi, f.fi), ("po", "fo", f.po, f.fo)):
            overlap = sorted(s1 & s2)
            if overlap:
                report.append(
                    f"node {x}: filters {one} and {two} must be disjoint, "
                    "share: " + " ".join(overlap))
    return report
