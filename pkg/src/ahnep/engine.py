"""Synchronous computation engine: stepping, halting detection, runs, traces.

A computation is the configuration sequence C0, C1, C2, ... where C0 places
the input word in the input node, even-to-odd transitions are evolutionary
steps and odd-to-even transitions are communication steps.  After every
configuration (including C0) the engine checks:

* acceptance: the output node holds at least one word;
* rejection: the current configuration repeats an earlier one.  In PAPER
  halting mode only the configuration two steps back (same step kind) is
  compared; in CYCLE mode any earlier configuration of the same parity
  counts, which rejects loops no later than PAPER mode and never changes
  accepted words.

Resource limits: words growing beyond ``max_word_len`` are discarded the
moment they are created, with a running drop count.  Discarding words can
only hide acceptance paths, never invent them, so a run that dropped words
and would end rejected is reported as a ``max_word_len`` limit instead;
accepted verdicts are sound regardless.  ``max_words_per_node`` and
``max_steps`` trip a limit outcome directly.

The engine may evaluate the per-node evolution of one step concurrently
(``threads`` > 1); steps are global barriers and results are merged in node
order, so the outcome and trace are identical for any thread count.
"""

from __future__ import annotations

import hashlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .model import (Configuration, HaltingMode, Network, RejectReason,
                    RunLimits, RunOutcome, Word, validate_network)
from .semantics import apply_ruleset_language, passes_input, passes_output


class StepKind(Enum):
    EVOLUTION = "evolution"
    COMMUNICATION = "communication"


@dataclass(frozen=True)
class TraceEntry:
    """One step of a run: index (from 1), kind, and the configuration it produced."""

    step: int
    kind: StepKind
    config: Configuration


@dataclass(frozen=True)
class Trace:
    entries: tuple

    def __len__(self) -> int:
        return len(self.entries)


class NetworkValidationError(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("invalid network:\n" + "\n".join(self.violations))


class InputWordError(ValueError):
    pass


def initial_configuration(net: Network, w: Word) -> Configuration:
    """C0: the input word alone in the input node, all other nodes empty."""
    w = tuple(w)
    bad = sorted(set(w) - set(net.input_alphabet))
    if bad:
        raise InputWordError(
            "input word uses symbols outside the input alphabet: "
            + " ".join(bad))
    return {x: frozenset((w,)) if x == net.input_node else frozenset()
            for x in net.graph.nodes}


def evolutionary_step(net: Network, config: Configuration,
                      executor: Optional[ThreadPoolExecutor] = None) -> Configuration:
    """Apply every node's rule set to its own words, all nodes at once."""

    def evolve(x):
        proc = net.processors[x]
        return apply_ruleset_language(proc.rules, proc.mode, config[x])

    nodes = net.graph.nodes
    if executor is None:
        return {x: evolve(x) for x in nodes}
    return dict(zip(nodes, executor.map(evolve, nodes)))


def communication_step(net: Network, config: Configuration) -> Configuration:
    """Move words along edges through the output/input filters.

    A word passing its node's output filter leaves the node and is copied
    to every neighbor whose input filter admits it (a self-loop makes the
    node its own neighbor); if no neighbor admits it, it is lost.  Words
    failing the output filter stay put.
    """
    leaving = {}
    for x in net.graph.nodes:
        proc = net.processors[x]
        leaving[x] = frozenset(w for w in config[x] if passes_output(proc, w))
    new = {}
    for x in net.graph.nodes:
        proc = net.processors[x]
        gathered = set(config[x] - leaving[x])
        for y in net.graph.neighbors(x):
            gathered.update(w for w in leaving[y] if passes_input(proc, w))
        new[x] = frozenset(gathered)
    return new


def check_halt(history, net: Network,
               mode: HaltingMode = HaltingMode.PAPER) -> Optional[RunOutcome]:
    """Judge the latest configuration of ``history`` (C0..Ck); None = keep going.

    C0 participates in acceptance and, in CYCLE mode, in parity comparisons;
    PAPER mode never compares against C0 since it was not produced by a step.
    """
    if not history:
        raise ValueError("history must be nonempty")
    k = len(history) - 1
    last = history[k]
    if last[net.output_node]:
        return RunOutcome.accept(k)
    if mode is HaltingMode.PAPER:
        if k >= 3 and history[k - 2] == last:
            reason = (RejectReason.EVOLUTION_REPEAT if k % 2 == 1
                      else RejectReason.COMMUNICATION_REPEAT)
            return RunOutcome.reject(k, reason)
        return None
    for j in range(k - 2, -1, -2):
        if history[j] == last:
            return RunOutcome.reject(k, RejectReason.CYCLE_AT_PARITY)
    return None


def _config_digest(config: Configuration, nodes) -> bytes:
    h = hashlib.blake2b(digest_size=16)
    for x in nodes:
        h.update(repr((x, tuple(sorted(config[x])))).encode())
    return h.digest()


def _cap_word_len(config: Configuration, cap: int):
    dropped = 0
    out = {}
    for x, words in config.items():
        keep = frozenset(w for w in words if len(w) <= cap)
        dropped += len(words) - len(keep)
        out[x] = keep
    return out, dropped


def run(net: Network, w: Word, limits: RunLimits | None = None,
        want_trace: bool = False, threads: int = 1):
    """Run the network on one input word.

    Returns ``(outcome, trace)`` where ``trace`` is None unless requested.
    Raises :class:`NetworkValidationError` / :class:`InputWordError` on bad
    inputs.  Identical inputs always produce identical outcomes and traces.
    """
    limits = limits or RunLimits()
    violations = validate_network(net)
    if violations:
        raise NetworkValidationError(violations)
    config = initial_configuration(net, w)
    nodes = net.graph.nodes
    entries: list = []
    drops = 0
    steps = 0

    def finish(outcome):
        trace = Trace(tuple(entries)) if want_trace else None
        return outcome, trace

    def rejected(reason):
        # Dropped words make a rejection unreliable: the dropped word might
        # have reached the output node.  Accepted verdicts are unaffected.
        if drops:
            return RunOutcome.limit_hit("max_word_len", steps)
        return RunOutcome.reject(steps, reason)

    if config[net.output_node]:
        return finish(RunOutcome.accept(0))

    cycle_mode = limits.halting is HaltingMode.CYCLE
    seen = {(0, _config_digest(config, nodes)): 0} if cycle_mode else None
    prev2: Configuration | None = None
    prev1 = config
    executor = ThreadPoolExecutor(max_workers=threads) if threads > 1 else None
    try:
        while steps < limits.max_steps:
            if steps % 2 == 0:
                kind = StepKind.EVOLUTION
                nxt = evolutionary_step(net, prev1, executor)
                nxt, d = _cap_word_len(nxt, limits.max_word_len)
                drops += d
            else:
                kind = StepKind.COMMUNICATION
                nxt = communication_step(net, prev1)
            steps += 1
            if want_trace:
                entries.append(TraceEntry(steps, kind, nxt))

            if nxt[net.output_node]:
                return finish(RunOutcome.accept(steps))
            if cycle_mode:
                key = (steps % 2, _config_digest(nxt, nodes))
                if key in seen:
                    return finish(rejected(RejectReason.CYCLE_AT_PARITY))
                seen[key] = steps
            elif steps >= 3 and nxt == prev2:
                reason = (RejectReason.EVOLUTION_REPEAT
                          if kind is StepKind.EVOLUTION
                          else RejectReason.COMMUNICATION_REPEAT)
                return finish(rejected(reason))
            if any(len(s) > limits.max_words_per_node for s in nxt.values()):
                return finish(RunOutcome.limit_hit("max_words_per_node", steps))
            prev2, prev1 = prev1, nxt
    finally:
        if executor is not None:
            executor.shutdown()
    return finish(RunOutcome.limit_hit("max_steps", steps))


def accepts_all(net: Network, words: Iterable[Word],
                limits: RunLimits | None = None, threads: int = 1) -> dict:
    """Run the network independently on each distinct word; word -> outcome."""
    out: dict = {}
    for w in words:
        w = tuple(w)
        if w in out:
            continue
        out[w], _ = run(net, w, limits=limits, threads=threads)
    return out
