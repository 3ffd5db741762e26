"""
Sentence parsing by proof search.

A bracketing is a binary tree over word indices: an int leaf or a pair
(left, right). Every bracketing and every choice of lexical categories
gives a candidate sequent; the candidates are proved one by one in
canonical order.
"""

from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass, replace

from categories.exceptions import SearchBudgetError
from categories.forms import Form
from categories.terms import Comma, OneForm, Term
from sequents.dertree import Der, Sequent
from sequents.extensions import Extension
from sequents.search import SearchOptions, prove

from .lexicon import Lexicon

logger = logging.getLogger(__name__)

Bracketing = int | tuple


def bracketings(n: int) -> list[Bracketing]:
    """All binary trees over 0..n-1, the right-branching one first"""
    if n < 1:
        raise ValueError('need at least one word')
    return list(_spans(0, n))


@functools.cache
def _spans(start, stop):
    if stop - start == 1:
        return (start,)
    return tuple(
        (left, right)
        for split in range(start + 1, stop)
        for left in _spans(start, split)
        for right in _spans(split, stop)
    )


def bracketing_term(b: Bracketing, assignment) -> Term:
    if isinstance(b, int):
        return OneForm(assignment[b])
    left, right = b
    return Comma(bracketing_term(left, assignment), bracketing_term(right, assignment))


def render_bracketing(b: Bracketing, words) -> str:
    """(cosa (guarda passare))"""
    if isinstance(b, int):
        return words[b]
    left, right = b
    return f'({render_bracketing(left, words)} {render_bracketing(right, words)})'


@dataclass(frozen=True)
class ParseResult:
    bracketing: Bracketing
    assignment: tuple[Form, ...]
    term: Term
    proof: Der

    def to_dict(self, words):
        return {
            'bracketing': render_bracketing(self.bracketing, words),
            'assignment': {w: str(f) for w, f in zip(words, self.assignment)},
            'proof': self.proof.to_dict(),
        }


def parse(words, goal: Form, lex: Lexicon, ext: Extension,
          opts: SearchOptions | None = None) -> list[ParseResult]:
    """
    Proof-carrying parses of `words` as `goal`, at most opts.max_solutions
    of them, ordered by bracketing and then by lexicon order of the
    chosen categories.
    """
    words = list(words)
    if not words:
        raise ValueError('nothing to parse')
    lex.check_words(words)
    opts = opts or SearchOptions.from_settings()
    # one proof per candidate; max_solutions bounds the number of parses
    per_candidate = replace(opts, max_solutions=1)

    results = []
    examined = 0
    choices = [lex.categories(w) for w in words]
    for b in bracketings(len(words)):
        for assignment in itertools.product(*choices):
            examined += 1
            term = bracketing_term(b, assignment)
            try:
                proof = prove(Sequent(ext, term, goal), per_candidate)
            except SearchBudgetError as exc:
                logger.warning('%s: %s', render_bracketing(b, words), exc)
                proof = None
            if proof is not None:
                results.append(ParseResult(b, assignment, term, proof))
                if len(results) >= opts.max_solutions:
                    logger.info('examined %d candidates, %d parses', examined, len(results))
                    return results
    logger.info('examined %d candidates, %d parses', examined, len(results))
    return results
