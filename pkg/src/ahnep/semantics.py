"""Rule actions on words and languages, and the random-context predicates.

Action semantics, for a rule ``a -> b`` applied to a word ``w``:

* substitution, mode any: every word obtained by replacing one occurrence
  of ``a`` with ``b``; if ``a`` does not occur, ``{w}``.
* deletion, mode any: every word obtained by removing one occurrence of
  ``a``; if ``a`` does not occur, ``{w}``.
* deletion, mode right/left: strip a single trailing/leading ``a``.  When
  ``w`` contains ``a`` but not at that end the result is ``{w}``: the rule
  is simply not applicable there, so the word is unchanged.  This keeps the
  edge actions total (the classical case split omits this case).
* insertion, mode any: ``b`` inserted at each of the ``|w|+1`` positions.
* insertion, mode right/left: ``b`` appended/prepended.

Substitutions only support mode any; the edge modes are undefined for them
and requesting one raises :class:`IllegalModeError`.

The action of a rule *set* is the union of the individual actions, except
that the empty rule set acts as the identity: a node with no rules passes
its words through unchanged instead of destroying them (pass-through hub
nodes rely on this).
"""

from __future__ import annotations

from typing import Iterable

from .model import Mode, Processor, Rule, RuleKind, Strength, Word, alph


class IllegalModeError(ValueError):
    """Raised for a rule kind / action mode pairing that has no definition."""


def apply_rule(rule: Rule, mode: Mode, w: Word) -> frozenset:
    """The set of words produced by one application of ``rule`` to ``w``."""
    kind = rule.kind
    if kind is RuleKind.SUBSTITUTION:
        if mode is not Mode.ANY:
            raise IllegalModeError(
                f"substitution rules only support mode any, got {mode.value}")
        a, b = rule.lhs, rule.rhs
        out = {w[:i] + (b,) + w[i + 1:] for i, s in enumerate(w) if s == a}
        return frozenset(out) if out else frozenset((w,))

    if kind is RuleKind.DELETION:
        a = rule.lhs
        if mode is Mode.ANY:
            out = {w[:i] + w[i + 1:] for i, s in enumerate(w) if s == a}
            return frozenset(out) if out else frozenset((w,))
        if mode is Mode.RIGHT:
            return frozenset((w[:-1] if w and w[-1] == a else w,))
        return frozenset((w[1:] if w and w[0] == a else w,))

    b = rule.rhs
    if mode is Mode.ANY:
        return frozenset(w[:i] + (b,) + w[i:] for i in range(len(w) + 1))
    if mode is Mode.RIGHT:
        return frozenset((w + (b,),))
    return frozenset(((b,) + w,))


def apply_ruleset(rules: Iterable[Rule], mode: Mode, w: Word) -> frozenset:
    """Union of the rule actions on ``w``; the empty set acts as identity."""
    rules = tuple(rules)
    if not rules:
        return frozenset((w,))
    kinds = {r.kind for r in rules}
    if len(kinds) > 1:
        raise ValueError("rule sets must be homogeneous in kind")
    out = set()
    for rule in rules:
        out |= apply_rule(rule, mode, w)
    return frozenset(out)


def apply_ruleset_language(rules: Iterable[Rule], mode: Mode,
                           words: Iterable[Word]) -> frozenset:
    """Pointwise union of :func:`apply_ruleset` over a set of words."""
    rules = tuple(rules)
    out = set()
    for w in words:
        out |= apply_ruleset(rules, mode, w)
    return frozenset(out)


def strong_predicate(w: Word, p: frozenset, f: frozenset) -> bool:
    """True iff every permitting symbol occurs in ``w`` and no forbidding one does."""
    letters = alph(w)
    return p <= letters and not (f & letters)


def weak_predicate(w: Word, p: frozenset, f: frozenset) -> bool:
    """Like the strong predicate, but one permitting symbol suffices.

    An empty permitting set imposes no requirement at all.
    """
    letters = alph(w)
    return (not p or bool(p & letters)) and not (f & letters)


def check_predicate(beta: Strength, w: Word, p: frozenset, f: frozenset) -> bool:
    if beta is Strength.STRONG:
        return strong_predicate(w, p, f)
    return weak_predicate(w, p, f)


def passes_input(proc: Processor, w: Word) -> bool:
    """Whether ``w`` may enter the node (predicate over pi/fi)."""
    return check_predicate(proc.beta, w, proc.filters.pi, proc.filters.fi)


def passes_output(proc: Processor, w: Word) -> bool:
    """Whether ``w`` may leave the node (predicate over po/fo)."""
    return check_predicate(proc.beta, w, proc.filters.po, proc.filters.fo)
