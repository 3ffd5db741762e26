"""
Backward cut-free proof search.

Search is depth-first over the one-step expansions of each goal, in a
fixed rule order with preorder occurrence enumeration, so the first proof
found for a sequent is always the same one. A branch-local visited set
stops the associativity and commutativity cycles that SeqExt introduces
under L, NLP and LP.
"""

import functools
import logging
from dataclasses import dataclass

from django.conf import settings

from categories.exceptions import SearchBudgetError

from .dertree import Der, Rule, Sequent
from .inference import DEFAULT_RULE_ORDER, expand_rule, expansions

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchOptions:
    max_depth: int | None = None
    max_solutions: int = 1
    rule_order: tuple[Rule, ...] = DEFAULT_RULE_ORDER
    loop_check: bool = True
    memoize_failures: bool = False
    expansion_budget: int | None = 1_000_000

    def __post_init__(self):
        order = tuple(Rule(r) for r in self.rule_order)
        if sorted(order) != sorted(DEFAULT_RULE_ORDER):
            raise ValueError(
                'rule_order must be a permutation of ' + ', '.join(DEFAULT_RULE_ORDER))
        object.__setattr__(self, 'rule_order', order)
        if self.max_solutions < 1:
            raise ValueError('max_solutions must be at least 1')
        if self.max_depth is not None and self.max_depth < 1:
            raise ValueError('max_depth must be at least 1')

    @classmethod
    def from_settings(cls, **overrides):
        """Defaults from the LAMBEK_* settings; None overrides are ignored"""
        values = {
            'max_depth': settings.LAMBEK_MAX_DEPTH,
            'max_solutions': settings.LAMBEK_MAX_SOLUTIONS,
            'expansion_budget': settings.LAMBEK_EXPANSION_BUDGET,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


class _Replayable:
    """Caches a generator so it can be iterated more than once"""

    def __init__(self, iterator):
        self._iterator = iterator
        self._seen = []
        self._done = False

    def __iter__(self):
        index = 0
        while True:
            if index < len(self._seen):
                yield self._seen[index]
            elif self._done:
                return
            else:
                try:
                    item = next(self._iterator)
                except StopIteration:
                    self._done = True
                    return
                self._seen.append(item)
                yield item
            index += 1

    def nonempty(self):
        for _ in self:
            return True
        return False


def _product(streams):
    if not streams:
        yield ()
        return
    for first in streams[0]:
        for rest in _product(streams[1:]):
            yield (first, *rest)


class ProofSearch:
    """
    One search run. `expanded` counts the expansion nodes tried, which the
    budget is checked against.

    memoize_failures records in `failed` the sequents whose search produced
    nothing without meeting the visited set or the depth bound anywhere
    below them, and skips them afterwards. Such a failure holds in every
    context, so the memo loses no proofs.
    """

    def __init__(self, options: SearchOptions | None = None):
        self.options = options or SearchOptions()
        self.expanded = 0
        self.failed = set()
        self._pruned = 0

    def solutions(self, s: Sequent):
        if not s.ext.ext_sub:
            logger.warning(
                'extension %s may drop formulas; the sub-formula property is not guaranteed', s.ext.name)
        yield from self._solve(s, frozenset(), 1)

    def _tick(self):
        self.expanded += 1
        budget = self.options.expansion_budget
        if budget is not None and self.expanded > budget:
            raise SearchBudgetError(f'search exceeded {budget} expansions')

    def _solve(self, seq, visited, depth):
        opts = self.options
        if opts.max_depth is not None and depth > opts.max_depth:
            self._pruned += 1
            return
        if opts.loop_check:
            if seq in visited:
                self._pruned += 1
                return
            visited = visited | {seq}
        if opts.memoize_failures and seq in self.failed:
            return
        # a failing goal never yields, so every prune counted from here on lies below it
        pruned_before = self._pruned
        found = False
        for rule in opts.rule_order:
            for node in expand_rule(seq, rule):
                self._tick()
                streams = [_Replayable(self._solve(c.seq, visited, depth + 1)) for c in node.children]
                if not all(stream.nonempty() for stream in streams):
                    continue
                for children in _product(streams):
                    found = True
                    yield Der(seq, node.rule, children)
        if not found and opts.memoize_failures and self._pruned == pruned_before:
            self.failed.add(seq)


def prove(s: Sequent, options: SearchOptions | None = None) -> Der | None:
    search = ProofSearch(options)
    proof = next(search.solutions(s), None)
    logger.info('%s: %s after %d expansions', s, 'proved' if proof else 'no proof', search.expanded)
    return proof


def prove_all(s: Sequent, options: SearchOptions | None = None) -> list[Der]:
    search = ProofSearch(options)
    found = []
    for proof in search.solutions(s):
        if proof not in found:
            found.append(proof)
            if len(found) >= search.options.max_solutions:
                break
    logger.info('%s: %d proofs after %d expansions', s, len(found), search.expanded)
    return found


def oracle_provable(s: Sequent, depth: int) -> bool:
    """
    Exhaustive check for a complete cut-free tree of at most `depth` rule
    layers. Shares no code path with ProofSearch beyond the expansions
    themselves; results are memoized per (sequent, remaining depth).
    """

    @functools.cache
    def provable(seq, remaining):
        if remaining < 1:
            return False
        return any(all(provable(c.seq, remaining - 1) for c in node.children)
                   for node in expansions(seq))

    return provable(s, depth)
