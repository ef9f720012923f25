"""3CNF satisfiability decided by a ring-shaped network, with a brute-force
oracle for verification.

``build_sat_network`` compiles a formula with n variables and m clauses
into a ring of n+m+1 nodes around a center output node:

* a pass-through start node holds the input word v1..vn (its input filter
  admits nothing, so nothing ever re-enters it);
* assignment node i substitutes vi by Ti or Fi; set semantics keeps both
  branches alive, so all 2^n assignment words coexist after the chain.  The
  node's output filter forbids vi (complete rewriting before departure),
  its input filter requires a truth symbol of variable i-1 and forbids
  those of variable i, which together with the ring shape forces strictly
  forward motion;
* clause node j admits a word exactly when the assignment satisfies clause
  j (weak input filter listing the clause's literal symbols), appends the
  progress marker cj, and forbids entry to any word already carrying cj or
  a later marker;
* the center output node admits only words carrying the last marker cm.

Unsatisfying assignment words are lost at the first clause they fail, so
the configuration empties and a repeat rejects; a satisfying word walks the
whole ring and accepts after 2(n+m+1) steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .model import (Graph, Mode, Network, Rule, RunLimits, Verdict, Word,
                    make_processor)
from .engine import run


class DimacsError(ValueError):
    pass


class SatLimitError(RuntimeError):
    """The network run hit a resource limit; no boolean answer available."""


@dataclass(frozen=True)
class CnfFormula:
    """A 3CNF formula: clauses are triples of nonzero literals (+v / -v).

    Clauses may repeat variables; narrower input clauses are padded up to
    width 3 by literal repetition, which is logically neutral.
    """

    num_vars: int
    clauses: tuple

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def parse_dimacs(text: str) -> CnfFormula:
    """Parse DIMACS CNF text with clause width at most 3.

    Comment lines (``c``/``%``) are ignored; clauses narrower than 3 are
    padded by repeating their first literal; width above 3, variables out
    of range, empty clauses and malformed headers are errors.
    """
    num_vars = None
    tokens: list = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "c%":
            continue
        if line.startswith("p"):
            parts = line.split()
            if num_vars is not None:
                raise DimacsError(f"line {lineno}: duplicate header")
            if len(parts) != 4 or parts[1] != "cnf":
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            try:
                num_vars, declared = int(parts[2]), int(parts[3])
            except ValueError:
                raise DimacsError(f"line {lineno}: malformed header {line!r}")
            if num_vars < 0 or declared < 0:
                raise DimacsError(f"line {lineno}: negative counts in header")
            continue
        if num_vars is None:
            raise DimacsError(f"line {lineno}: clause data before header")
        for tok in line.split():
            try:
                tokens.append((lineno, int(tok)))
            except ValueError:
                raise DimacsError(f"line {lineno}: bad literal {tok!r}")
    if num_vars is None:
        raise DimacsError("missing 'p cnf' header")
    clauses = []
    current: list = []
    for lineno, lit in tokens:
        if lit == 0:
            if not current:
                raise DimacsError(f"line {lineno}: empty clause")
            if len(current) > 3:
                raise DimacsError(f"line {lineno}: clause wider than 3 literals")
            while len(current) < 3:
                current.append(current[0])
            clauses.append(tuple(current))
            current = []
        else:
            if abs(lit) > num_vars:
                raise DimacsError(
                    f"line {lineno}: variable {abs(lit)} out of range "
                    f"(n={num_vars})")
            current.append(lit)
    if current:
        raise DimacsError("unterminated clause (missing trailing 0)")
    return CnfFormula(num_vars=num_vars, clauses=tuple(clauses))


def brute_force_sat(f: CnfFormula, guard: int = 24) -> bool:
    """Exhaustive satisfiability check over all 2^n assignments."""
    if f.num_vars > guard:
        raise ValueError(f"brute force refused for n={f.num_vars} > {guard}")
    if not f.clauses:
        return True
    for bits in product((False, True), repeat=f.num_vars):
        if all(any(bits[abs(lit) - 1] == (lit > 0) for lit in clause)
               for clause in f.clauses):
            return True
    return False


def _truth_symbol(lit: int) -> str:
    return f"T{lit}" if lit > 0 else f"F{-lit}"


def build_sat_network(f: CnfFormula):
    """Compile the formula into a ring network; returns (network, input word).

    Running the network on the returned word accepts iff the formula is
    satisfiable.
    """
    n, m = f.num_vars, f.num_clauses
    if n < 1 or m < 1:
        raise ValueError("need at least one variable and one clause")
    vs = [f"v{i}" for i in range(1, n + 1)]
    ts = [f"T{i}" for i in range(1, n + 1)]
    fs = [f"F{i}" for i in range(1, n + 1)]
    cs = [f"c{j}" for j in range(1, m + 1)]
    blocker = "nil"  # never occurs in any word: makes a filter reject all

    ring = ["in"] + [f"a{i}" for i in range(1, n + 1)] \
                  + [f"k{j}" for j in range(1, m + 1)]
    edges = [(ring[i], ring[(i + 1) % len(ring)]) for i in range(len(ring))]
    edges += [(x, "out") for x in ring]

    procs = {"in": make_processor(pi=[blocker]),
             "out": make_processor(pi=[cs[-1]])}
    for i in range(1, n + 1):
        entry = [vs[0]] if i == 1 else [ts[i - 2], fs[i - 2]]
        procs[f"a{i}"] = make_processor(
            rules=[Rule(vs[i - 1], ts[i - 1]), Rule(vs[i - 1], fs[i - 1])],
            pi=entry, fi=[ts[i - 1], fs[i - 1]], fo=[vs[i - 1]])
    for j, clause in enumerate(f.clauses, 1):
        procs[f"k{j}"] = make_processor(
            rules=[Rule("", cs[j - 1])], mode=Mode.RIGHT,
            pi=sorted({_truth_symbol(lit) for lit in clause}),
            fi=cs[j - 1:])

    net = Network(
        name=f"sat-n{n}-m{m}",
        input_alphabet=tuple(vs),
        network_alphabet=tuple(vs + ts + fs + cs + [blocker]),
        graph=Graph.build(ring + ["out"], edges),
        processors=procs,
        input_node="in",
        output_node="out",
    )
    return net, tuple(vs)


def solve(f: CnfFormula, limits: RunLimits | None = None) -> bool:
    """Decide satisfiability by running the compiled network.

    Raises :class:`SatLimitError` if the run hits a resource limit; a
    boolean is only returned for a definitive accept/reject.
    """
    net, w = build_sat_network(f)
    outcome, _ = run(net, w, limits=limits)
    if outcome.verdict is Verdict.ACCEPTED:
        return True
    if outcome.verdict is Verdict.REJECTED:
        return False
    raise SatLimitError(str(outcome))
