"""
Structural extensions.

A gentzen extension is a named, finite set of rewrite rules over terms;
a ground pair (D, D') is related when some rule's left side matches D
and its right side matches D' under one substitution. Arrow extensions
are the same thing over forms.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property

from categories.exceptions import ExtensionError
from categories.forms import Form
from categories.replace import replace_at, subterms
from categories.terms import Path, Term

from .patterns import (
    FormPattern,
    TermPattern,
    form_variables,
    instantiate_form,
    instantiate_term,
    match_form,
    match_term,
    parse_form_pattern,
    parse_term_pattern,
    render_form_pattern,
    render_term_pattern,
    subsumes_form,
    subsumes_term,
    term_pattern_leaves,
    term_variables,
    variable_sorts,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class StructRule:
    name: str
    lhs: TermPattern
    rhs: TermPattern

    def __post_init__(self):
        sorts = variable_sorts(self.lhs)
        for name, sort in variable_sorts(self.rhs).items():
            if sorts.setdefault(name, sort) != sort:
                raise ExtensionError(
                    f'rule {self.name}: metavariable {name} is used both as a term and as a form')

    @classmethod
    def from_text(cls, name, lhs, rhs):
        return cls(name, parse_term_pattern(lhs), parse_term_pattern(rhs))

    @property
    def forward_ok(self):
        """rhs can be instantiated from a match of lhs"""
        return term_variables(self.rhs) <= term_variables(self.lhs)

    @property
    def backward_ok(self):
        return term_variables(self.lhs) <= term_variables(self.rhs)

    def to_dict(self):
        return {
            'name': self.name,
            'lhs': render_term_pattern(self.lhs),
            'rhs': render_term_pattern(self.rhs),
        }


@dataclass(frozen=True, eq=False)
class Extension:
    name: str
    rules: tuple[StructRule, ...] = ()
    cond_cut: bool = False
    _key: tuple = field(init=False, repr=False)

    def __post_init__(self):
        pairs = frozenset((rule.lhs, rule.rhs) for rule in self.rules)
        object.__setattr__(self, '_key', (self.name, pairs))

    def __eq__(self, other):
        if not isinstance(other, Extension):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __str__(self):
        return self.name

    @cached_property
    def ext_sub(self) -> bool:
        return extension_sub_ok(self)

    def rule(self, name):
        for rule in self.rules:
            if rule.name == name:
                return rule
        raise ExtensionError(f'extension {self.name} has no rule {name}')

    def to_dict(self):
        return {
            'name': self.name,
            'cond_cut': self.cond_cut,
            'rules': [rule.to_dict() for rule in self.rules],
        }


NL = Extension('NL', (), cond_cut=True)
L = Extension('L', (
    StructRule.from_text('assocL', '(A, (B, C))', '((A, B), C)'),
    StructRule.from_text('assocR', '((A, B), C)', '(A, (B, C))'),
), cond_cut=True)
NLP = Extension('NLP', (
    StructRule.from_text('comm', '(A, B)', '(B, A)'),
), cond_cut=True)


def ext_relating_rule(e: Extension, d1: Term, d2: Term) -> str | None:
    """Name of the first rule relating (d1, d2), if any"""
    for rule in e.rules:
        sigma = match_term(rule.lhs, d1)
        if sigma is not None and match_term(rule.rhs, d2, sigma) is not None:
            return rule.name
    return None


def ext_relates(e: Extension, d1: Term, d2: Term) -> bool:
    return ext_relating_rule(e, d1, d2) is not None


def ext_rewrites(e: Extension, t: Term) -> list[tuple[Term, Path, str]]:
    """Every t' obtained by rewriting one subterm D of t to D' with E D D'"""
    return _rewrite(e, t, forward=True)


def ext_rewrites_backward(e: Extension, t: Term) -> list[tuple[Term, Path, str]]:
    """Every t' such that rewriting one subterm of t' yields t; the SeqExt premises of t"""
    return _rewrite(e, t, forward=False)


def _rewrite(e, t, forward):
    seen = set()
    found = []
    for path, sub in subterms(t):
        for rule in e.rules:
            source, target = (rule.lhs, rule.rhs) if forward else (rule.rhs, rule.lhs)
            if not (rule.forward_ok if forward else rule.backward_ok):
                logger.debug('rule %s of %s cannot be enumerated in this direction', rule.name, e.name)
                continue
            sigma = match_term(source, sub)
            if sigma is None:
                continue
            rewritten = replace_at(t, path, instantiate_term(target, sigma))
            if rewritten not in seen:
                seen.add(rewritten)
                found.append((rewritten, path, rule.name))
    return found


def _rule_subsumed(specific: StructRule, general: StructRule) -> bool:
    sigma = subsumes_term(general.lhs, specific.lhs, {})
    return sigma is not None and subsumes_term(general.rhs, specific.rhs, sigma) is not None


def extends_ext(e1: Extension, e2: Extension) -> bool:
    """Every rule of e1 is an instance of some rule of e2"""
    return all(any(_rule_subsumed(r1, r2) for r2 in e2.rules) for r1 in e1.rules)


def add_extension(e1: Extension, e2: Extension, name: str | None = None) -> Extension:
    rules = list(e1.rules)
    pairs = {(rule.lhs, rule.rhs) for rule in rules}
    for rule in e2.rules:
        if (rule.lhs, rule.rhs) not in pairs:
            pairs.add((rule.lhs, rule.rhs))
            rules.append(rule)
    return Extension(
        name or f'{e1.name}+{e2.name}',
        tuple(rules),
        cond_cut=e1.cond_cut and e2.cond_cut,
    )


def extension_sub_ok(e: Extension) -> bool:
    """
    Sufficient check that E D D' keeps every form leaf of D in D': each
    metavariable and each concrete form leaf on the left also occurs on
    the right.
    """
    for rule in e.rules:
        right = set(term_pattern_leaves(rule.rhs))
        if any(leaf not in right for leaf in term_pattern_leaves(rule.lhs)):
            return False
    return True


LP = add_extension(NLP, L, name='LP')

BUILTIN_EXTENSIONS = {ext.name: ext for ext in (NL, L, NLP, LP)}


# -- arrow extensions --------------------------------------------------------

@dataclass(frozen=True)
class ArrowRule:
    name: str
    source: FormPattern
    target: FormPattern

    @classmethod
    def from_text(cls, name, source, target):
        return cls(name, parse_form_pattern(source), parse_form_pattern(target))

    @property
    def forward_ok(self):
        return form_variables(self.target) <= form_variables(self.source)

    def to_dict(self):
        return {
            'name': self.name,
            'source': render_form_pattern(self.source),
            'target': render_form_pattern(self.target),
        }


@dataclass(frozen=True)
class ArrowExtension:
    name: str
    rules: tuple[ArrowRule, ...] = ()

    def __str__(self):
        return self.name


def arrow_relating_rule(x: ArrowExtension, a: Form, b: Form) -> str | None:
    for rule in x.rules:
        sigma = match_form(rule.source, a)
        if sigma is not None and match_form(rule.target, b, sigma) is not None:
            return rule.name
    return None


def arrow_rewrites(x: ArrowExtension, f: Form) -> list[tuple[Form, str]]:
    """Targets b with X f b, one per applicable rule"""
    found = []
    for rule in x.rules:
        if not rule.forward_ok:
            continue
        sigma = match_form(rule.source, f)
        if sigma is not None:
            target = instantiate_form(rule.target, sigma)
            if all(target != seen for seen, _ in found):
                found.append((target, rule.name))
    return found


def _arrow_rules_subsumed(specific: ArrowRule, general: ArrowRule) -> bool:
    sigma = subsumes_form(general.source, specific.source, {})
    return sigma is not None and subsumes_form(general.target, specific.target, sigma) is not None


def arrow_extends(x1: ArrowExtension, x2: ArrowExtension) -> bool:
    return all(any(_arrow_rules_subsumed(r1, r2) for r2 in x2.rules) for r1 in x1.rules)


ARROW_NL = ArrowExtension('NL')
ARROW_L = ArrowExtension('L', (
    ArrowRule.from_text('assocL', 'A.(B.C)', 'A.B.C'),
    ArrowRule.from_text('assocR', 'A.B.C', 'A.(B.C)'),
))
ARROW_NLP = ArrowExtension('NLP', (
    ArrowRule.from_text('comm', 'A.B', 'B.A'),
))
ARROW_LP = ArrowExtension('LP', ARROW_NLP.rules + ARROW_L.rules)

BUILTIN_ARROW_EXTENSIONS = {x.name: x for x in (ARROW_NL, ARROW_L, ARROW_NLP, ARROW_LP)}
