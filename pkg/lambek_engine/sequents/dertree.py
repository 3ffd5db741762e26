"""
Sequent-calculus proof trees.

A Dertree is either a finished inference Der(seq, rule, children) or an
unfinished leaf Unf(seq). Trees are immutable; validity is a separate
question answered by sequents.inference.
"""

from __future__ import annotations

import enum
from collections.abc import Iterator
from dataclasses import dataclass

from categories.exceptions import UnfinishedProofError
from categories.forms import Form, degree_formula, render_category
from categories.terms import OneForm, Term, render_term

from .extensions import Extension


@dataclass(frozen=True)
class Sequent:
    ext: Extension
    antecedent: Term
    succedent: Form

    def __str__(self):
        return f'{render_term(self.antecedent)} |- {render_category(self.succedent)}'

    def with_ext(self, ext):
        return Sequent(ext, self.antecedent, self.succedent)

    def to_dict(self):
        return {
            'ext': self.ext.name,
            'ante': render_term(self.antecedent),
            'succ': render_category(self.succedent),
        }


class Rule(enum.StrEnum):
    SEQ_AXIOM = 'SeqAxiom'
    RIGHT_SLASH = 'RightSlash'
    RIGHT_BACKSLASH = 'RightBackslash'
    RIGHT_DOT = 'RightDot'
    LEFT_SLASH = 'LeftSlash'
    LEFT_BACKSLASH = 'LeftBackslash'
    LEFT_DOT = 'LeftDot'
    CUT_RULE = 'CutRule'
    SEQ_EXT = 'SeqExt'


ARITY = {
    Rule.SEQ_AXIOM: 0,
    Rule.RIGHT_SLASH: 1,
    Rule.RIGHT_BACKSLASH: 1,
    Rule.LEFT_DOT: 1,
    Rule.SEQ_EXT: 1,
    Rule.RIGHT_DOT: 2,
    Rule.LEFT_SLASH: 2,
    Rule.LEFT_BACKSLASH: 2,
    Rule.CUT_RULE: 2,
}


@dataclass(frozen=True)
class Der:
    seq: Sequent
    rule: Rule
    children: tuple[Dertree, ...] = ()

    def to_dict(self):
        return {'der': {
            'seq': self.seq.to_dict(),
            'rule': str(self.rule),
            'children': [c.to_dict() for c in self.children],
        }}


@dataclass(frozen=True)
class Unf:
    seq: Sequent

    def to_dict(self):
        return {'unf': {'seq': self.seq.to_dict()}}


Dertree = Der | Unf


def head(d: Dertree) -> Sequent:
    return d.seq


def concl(d: Dertree) -> Form:
    return d.seq.succedent


def prems(d: Dertree) -> Term:
    return d.seq.antecedent


def exten(d: Dertree) -> Extension:
    return d.seq.ext


def axiom(ext: Extension, a: Form) -> Der:
    return Der(Sequent(ext, OneForm(a), a), Rule.SEQ_AXIOM)


def is_complete(d: Dertree) -> bool:
    match d:
        case Unf():
            return False
        case Der(_, _, children):
            return all(is_complete(c) for c in children)
    raise TypeError(f'not a proof tree: {d!r}')


def degree_proof(d: Dertree) -> int:
    match d:
        case Unf(seq):
            raise UnfinishedProofError(f'unfinished leaf {seq}')
        case Der(_, Rule.CUT_RULE, children) if children:
            # cut formula: conclusion of the Δ ⊢ A premise
            return max(degree_formula(concl(children[-1])),
                       *(degree_proof(c) for c in children))
        case Der(_, _, children):
            return max((degree_proof(c) for c in children), default=0)
    raise TypeError(f'not a proof tree: {d!r}')


def is_cut_free(d: Dertree) -> bool:
    return degree_proof(d) == 0


def subtrees(d: Dertree) -> Iterator[tuple[tuple[int, ...], Dertree]]:
    """(tree path, subtree) pairs, preorder"""
    stack = [((), d)]
    while stack:
        where, node = stack.pop()
        yield where, node
        if isinstance(node, Der):
            stack.extend(reversed([(where + (i,), c) for i, c in enumerate(node.children)]))


def size(d: Dertree) -> int:
    return sum(1 for _ in subtrees(d))


def height(d: Dertree) -> int:
    if isinstance(d, Der) and d.children:
        return 1 + max(height(c) for c in d.children)
    return 1


def rule_counts(d: Dertree) -> dict[str, int]:
    counts = {}
    for _, node in subtrees(d):
        if isinstance(node, Der):
            counts[str(node.rule)] = counts.get(str(node.rule), 0) + 1
    return counts
