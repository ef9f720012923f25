"""Shared builders for the test suite: hand networks and the random harness.

The random-network distribution below is the one the differential harnesses
run on: complete graphs with loops, 2-4 nodes, network alphabet up to 4
symbols, up to 2 rules per node with kind weights 0.50 substitution / 0.30
deletion / 0.15 insertion (insertion-heavy nets mostly grow forever and
make runs inconclusive, which the harness budget caps), and each filter set
empty with probability 0.55, otherwise 1-2 random symbols.
"""

from __future__ import annotations

import random

import ahnep as A

SYMBOL_POOL = ("a", "b", "c", "d")

# Differential-harness limits.  The step budgets are fixed by the harness
# contracts; the word-length and words-per-node caps only shorten runs that
# are already doomed to be inconclusive (unbounded insertion growth), and
# cycle halting rejects oscillating runs that the two-back comparison of
# paper halting can never catch.
STAR_LIMITS = A.RunLimits(max_steps=400, max_word_len=24,
                          max_words_per_node=4000,
                          halting=A.HaltingMode.CYCLE)
GRID_LIMITS = A.RunLimits(max_steps=5000, max_word_len=12,
                          max_words_per_node=8000,
                          halting=A.HaltingMode.CYCLE)
# for single hand-picked grid runs where the full ferry traffic must be
# allowed to play out
ROOMY_GRID_LIMITS = A.RunLimits(max_steps=5000, max_word_len=16,
                                max_words_per_node=200_000)


def gamma1(input_alphabet=("a",), network_alphabet=("a", "b")) -> A.Network:
    """1-star: x1 rewrites a->b and exports only b-words to the output hub C."""
    return A.Network(
        name="gamma1",
        input_alphabet=tuple(input_alphabet),
        network_alphabet=tuple(network_alphabet),
        graph=A.build_star(1),
        processors={
            "x1": A.make_processor(rules=[A.Rule("a", "b")], po=["b"]),
            "C": A.make_processor(),
        },
        input_node="x1",
        output_node="C",
    )


def two_node_route_net() -> A.Network:
    """Complete-with-loops net whose accepting run needs two evolution rounds.

    x1 turns a into b and b into c; only c-words may enter the output x2.
    The word therefore loops through x1 once before the final hop, which in
    the grid rebuild exercises the whole ferry route.
    """
    return A.Network(
        name="route",
        input_alphabet=("a",),
        network_alphabet=("a", "b", "c"),
        graph=A.build_complete_with_loops(2),
        processors={
            "x1": A.make_processor(rules=[A.Rule("a", "b"), A.Rule("b", "c")]),
            "x2": A.make_processor(pi=["c"]),
        },
        input_node="x1",
        output_node="x2",
    )


def random_complete_net(rng: random.Random, n_nodes: int | None = None,
                        n_syms: int | None = None) -> A.Network:
    """One harness network: random processors on a complete graph with loops."""
    if n_nodes is None:
        n_nodes = rng.randint(2, 4)
    if n_syms is None:
        n_syms = rng.randint(2, 4)
    pool = SYMBOL_POOL[:n_syms]
    u = tuple(pool)
    v = tuple(pool[:rng.randint(1, min(2, n_syms))])
    graph = A.build_complete_with_loops(n_nodes)
    procs = {}
    for x in graph.nodes:
        kind = rng.choices(("sub", "del", "ins"), weights=(0.50, 0.30, 0.15))[0]
        rules = set()
        for _ in range(rng.randint(0, 2)):
            if kind == "sub":
                rules.add(A.Rule(rng.choice(u), rng.choice(u)))
            elif kind == "del":
                rules.add(A.Rule(rng.choice(u), ""))
            else:
                rules.add(A.Rule("", rng.choice(u)))
        mode = (A.Mode.ANY if kind == "sub"
                else rng.choice((A.Mode.ANY, A.Mode.LEFT, A.Mode.RIGHT)))
        beta = rng.choices((A.Strength.WEAK, A.Strength.STRONG),
                           weights=(0.7, 0.3))[0]

        def filter_set():
            if rng.random() < 0.55:
                return frozenset()
            return frozenset(rng.sample(u, rng.randint(1, 2)))

        pi, po = filter_set(), filter_set()
        fi = filter_set() - pi
        fo = filter_set() - po
        procs[x] = A.Processor(frozenset(rules), mode, beta,
                               A.FilterSpec(pi, fi, po, fo))
    nodes = list(graph.nodes)
    input_node = rng.choice(nodes)
    output_node = rng.choice([x for x in nodes if x != input_node])
    return A.Network(name="rnd", input_alphabet=v, network_alphabet=u,
                     graph=graph, processors=procs,
                     input_node=input_node, output_node=output_node)


def star_harness_nets(count=50, seed=2026):
    """The criterion-level star harness: seeded random nets plus their stars."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        net = random_complete_net(rng)
        out.append((net, A.to_star(net)))
    return out


def grid_harness_nets(count=20, seed=777):
    """The criterion-level grid harness: seeded 2-3 node nets plus their grids."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        net = random_complete_net(rng, n_nodes=rng.randint(2, 3))
        out.append((net, A.to_grid(net)))
    return out


def harness_words(net: A.Network, max_len: int):
    return A.enumerate_words(net.input_alphabet, max_len)


# --- independent rule-action oracle ----------------------------------------
# Enumerates (u, v) split pairs literally instead of scanning occurrence
# indexes; used to cross-check apply_rule exhaustively.

def oracle_apply(rule: A.Rule, mode: A.Mode, word: tuple) -> frozenset:
    a, b = rule.lhs, rule.rhs
    n = len(word)
    if rule.kind is A.RuleKind.SUBSTITUTION:
        out = {word[:i] + (b,) + word[i + 1:]
               for i in range(n) if word[i] == a}
        return frozenset(out) if out else frozenset((word,))
    if rule.kind is A.RuleKind.DELETION:
        if mode is A.Mode.ANY:
            out = {word[:i] + word[i + 1:] for i in range(n) if word[i] == a}
            return frozenset(out) if out else frozenset((word,))
        if mode is A.Mode.RIGHT:
            if n and word[n - 1] == a:
                return frozenset((word[:n - 1],))
            return frozenset((word,))
        if n and word[0] == a:
            return frozenset((word[1:],))
        return frozenset((word,))
    if mode is A.Mode.ANY:
        return frozenset(word[:i] + (b,) + word[i:] for i in range(n + 1))
    if mode is A.Mode.RIGHT:
        return frozenset((word + (b,),))
    return frozenset(((b,) + word,))


def all_words(alphabet, max_len):
    from itertools import product
    out = [()]
    for k in range(1, max_len + 1):
        out.extend(product(alphabet, repeat=k))
    return out


def all_rule_mode_pairs(alphabet):
    pairs = []
    for a in alphabet:
        for b in alphabet:
            pairs.append((A.Rule(a, b), A.Mode.ANY))
        for mode in (A.Mode.ANY, A.Mode.LEFT, A.Mode.RIGHT):
            pairs.append((A.Rule(a, ""), mode))
            pairs.append((A.Rule("", a), mode))
    return pairs
