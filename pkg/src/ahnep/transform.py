"""Topology transformations that preserve the accepted language, plus a
bounded differential-equivalence checker.

``to_star`` and ``to_grid`` both require a complete graph with loops.  The
star transform routes all communication through one fresh pass-through hub,
at most doubling the step count.  The grid transform rebuilds the network
as a 4-row grid: row 3 holds the original processors (guarded against
marker-carrying words), row 4 tags departing words with Y markers and
ferries them to column 1, where rows 3/2/1 of column 1 normalize the word
and row 1 walks it to its destination column; dropping into row 2 strips
the markers and re-enters row 3.  ``prune_to_degree3`` removes the
horizontal edges of rows 2 and 3, which the ferry routes never use,
bringing the maximum degree down to 3.

Language preservation is checked, not proven: ``check_equivalence`` runs
two networks over a word list and reports acceptance disagreements, words
where either side hit a resource limit (inconclusive), and the worst
accepted-step ratio.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Optional

from .engine import run
from .model import (FilterSpec, Graph, Network, Processor, Rule, RunLimits,
                    Verdict, Word, edge_key, make_processor)
from .topology import build_grid, grid_node, is_complete_with_loops

_GRID_ID = re.compile(r"^r(\d+)c(\d+)$")


class TransformError(ValueError):
    pass


def _fresh_name(base: str, taken: set) -> str:
    name = base
    while name in taken:
        name += "~"
    return name


def to_star(net: Network) -> Network:
    """Replace the complete-with-loops topology by a star through a fresh hub.

    All original processors are kept bit-identical; the hub has no rules and
    four empty weak filters, so it forwards every word unchanged.  Any word
    accepted by the original is accepted here in at most twice the steps.
    """
    if not is_complete_with_loops(net.graph):
        raise TransformError("to_star requires a complete graph with loops")
    hub = _fresh_name("C", set(net.graph.nodes))
    processors = dict(net.processors)
    processors[hub] = make_processor()
    graph = Graph.build(list(net.graph.nodes) + [hub],
                        [(x, hub) for x in net.graph.nodes])
    return Network(
        name=net.name + "-star",
        input_alphabet=net.input_alphabet,
        network_alphabet=net.network_alphabet,
        graph=graph,
        processors=processors,
        input_node=net.input_node,
        output_node=net.output_node,
        meta={"hub": hub},
    )


def to_grid(net: Network) -> Network:
    """Rebuild an n-node complete-with-loops network as a 4-by-(n+1) grid.

    Original node number i (1-based position in the sorted node tuple)
    becomes node (3, i+1).  Fresh marker symbols X0..Xn, X0'..Xn', Y and Y'
    extend the network alphabet; if the original alphabet already uses one
    of these names the marker gets "~" suffixes until free, and the rename
    map is recorded under ``meta["renamed_markers"]``.  The input alphabet
    is unchanged.
    """
    if not is_complete_with_loops(net.graph):
        raise TransformError("to_grid requires a complete graph with loops")
    originals = net.graph.nodes
    n = len(originals)
    taken = set(net.network_alphabet)
    renames = {}

    def fresh(base):
        name = _fresh_name(base, taken)
        if name != base:
            renames[base] = name
        taken.add(name)
        return name

    xs = [fresh(f"X{i}") for i in range(n + 1)]
    xps = [fresh(f"X{i}'") for i in range(n + 1)]
    y = fresh("Y")
    yp = fresh("Y'")

    procs = {}
    # row 1: walk the X marker rightwards, or prime it to drop down
    procs[grid_node(1, 1)] = make_processor(rules=[Rule(xs[0], xs[1])], pi=[xs[0]])
    for i in range(1, n):
        procs[grid_node(1, i + 1)] = make_processor(
            rules=[Rule(xs[i], xs[i + 1]), Rule(xs[i], xps[i])], pi=[xs[i]])
    procs[grid_node(1, n + 1)] = make_processor(
        rules=[Rule(xs[n], xps[n])], pi=[xs[n]])
    # row 2: erase the primed marker; column 1 erases the accumulated Ys
    procs[grid_node(2, 1)] = make_processor(
        rules=[Rule(y, "")], pi=[xs[0]], fo=[y])
    for i in range(1, n + 1):
        procs[grid_node(2, i + 1)] = make_processor(
            rules=[Rule(xps[i], "")], pi=[xps[i]])
    # row 3: original processors, refusing words that still carry Y or X0
    procs[grid_node(3, 1)] = make_processor(rules=[Rule(yp, xs[0])], pi=[yp])
    for i in range(1, n + 1):
        orig = net.processors[originals[i - 1]]
        f = orig.filters
        procs[grid_node(3, i + 1)] = Processor(
            rules=orig.rules, mode=orig.mode, beta=orig.beta,
            filters=FilterSpec(pi=f.pi, fi=f.fi | {y, xs[0]},
                               po=f.po, fo=f.fo))
    # row 4: insert Ys so departing words can only travel this row
    procs[grid_node(4, 1)] = make_processor(rules=[Rule(y, yp)], pi=[y])
    for i in range(1, n + 1):
        procs[grid_node(4, i + 1)] = make_processor(rules=[Rule("", y)], fi=[yp])

    index = {x: k + 1 for k, x in enumerate(originals)}
    meta = {"renamed_markers": renames} if renames else {}
    return Network(
        name=net.name + "-grid",
        input_alphabet=net.input_alphabet,
        network_alphabet=net.network_alphabet + tuple(xs) + tuple(xps) + (y, yp),
        graph=build_grid(4, n + 1),
        processors=procs,
        input_node=grid_node(3, index[net.input_node] + 1),
        output_node=grid_node(3, index[net.output_node] + 1),
        meta=meta,
    )


def prune_to_degree3(net: Network) -> Network:
    """Drop the horizontal edges inside rows 2 and 3 of a ``to_grid`` output.

    The remaining edges are exactly the ones the ferry routes use, and the
    maximum node degree drops to 3.  Nodes and processors are untouched.
    """
    coords = {}
    for x in net.graph.nodes:
        m = _GRID_ID.match(x)
        if not m:
            raise TransformError(f"node {x!r} is not named like a grid node")
        coords[x] = (int(m.group(1)), int(m.group(2)))
    rows = {i for i, _ in coords.values()}
    cols = {j for _, j in coords.values()}
    ncols = len(cols)
    if rows != {1, 2, 3, 4} or cols != set(range(1, ncols + 1)) \
            or len(coords) != 4 * ncols:
        raise TransformError("node set is not a full 4-row grid")
    if net.graph != build_grid(4, ncols):
        raise TransformError("edge set is not the 4-row grid over these nodes")
    removed = {edge_key(grid_node(r, j), grid_node(r, j + 1))
               for r in (2, 3) for j in range(1, ncols)}
    return Network(
        name=net.name + "-deg3",
        input_alphabet=net.input_alphabet,
        network_alphabet=net.network_alphabet,
        graph=Graph(nodes=net.graph.nodes, edges=net.graph.edges - removed),
        processors=dict(net.processors),
        input_node=net.input_node,
        output_node=net.output_node,
        meta=dict(net.meta),
    )


def enumerate_words(alphabet: Iterable[str], max_len: int) -> list:
    """All words over ``alphabet`` up to ``max_len``, in shortlex order."""
    syms = tuple(alphabet)
    words: list = [()]
    for length in range(1, max_len + 1):
        words.extend(product(syms, repeat=length))
    return words


def _fmt_word(w: Word) -> str:
    return ",".join(w) if w else "."


@dataclass(frozen=True)
class EquivReport:
    """Desk-scale evidence for (or against) two networks accepting alike.

    ``disagreements`` holds (word, outcome_a, outcome_b) triples where the
    two sides settled on different accept/reject answers; ``inconclusive``
    holds words where either side hit a resource limit.  ``step_ratio_max``
    is the largest steps_b/steps_a over words both sides accepted (None if
    there were none with steps_a > 0).
    """

    words_tested: int
    agreements: int
    disagreements: tuple
    inconclusive: tuple
    step_ratio_max: Optional[Fraction]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def render(self) -> str:
        lines = [
            f"words tested: {self.words_tested}",
            f"agreements: {self.agreements}",
            f"disagreements: {len(self.disagreements)}",
        ]
        for w, a, b in self.disagreements:
            lines.append(f"  {_fmt_word(w)}: A {a} | B {b}")
        lines.append(f"inconclusive: {len(self.inconclusive)}")
        for w in self.inconclusive:
            lines.append(f"  {_fmt_word(w)}")
        if self.step_ratio_max is None:
            lines.append("max step ratio: n/a")
        else:
            lines.append(f"max step ratio: {self.step_ratio_max}")
        return "\n".join(lines) + "\n"


def check_equivalence(net_a: Network, net_b: Network, words: Iterable[Word],
                      limits: RunLimits | None = None,
                      threads: int = 1) -> EquivReport:
    """Run both networks on every distinct word and compare acceptance."""
    if set(net_a.input_alphabet) != set(net_b.input_alphabet):
        raise ValueError("networks must share an input alphabet")
    uniq = sorted({tuple(w) for w in words}, key=lambda w: (len(w), w))
    agreements = 0
    disagreements = []
    inconclusive = []
    ratio: Optional[Fraction] = None
    for w in uniq:
        out_a, _ = run(net_a, w, limits=limits, threads=threads)
        out_b, _ = run(net_b, w, limits=limits, threads=threads)
        if out_a.verdict is Verdict.LIMIT or out_b.verdict is Verdict.LIMIT:
            inconclusive.append(w)
            continue
        if out_a.accepted != out_b.accepted:
            disagreements.append((w, out_a, out_b))
            continue
        agreements += 1
        if out_a.accepted and out_a.steps > 0:
            r = Fraction(out_b.steps, out_a.steps)
            if ratio is None or r > ratio:
                ratio = r
    return EquivReport(
        words_tested=len(uniq),
        agreements=agreements,
        disagreements=tuple(disagreements),
        inconclusive=tuple(inconclusive),
        step_ratio_max=ratio,
    )
