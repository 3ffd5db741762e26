"""
First-order patterns over forms and terms, used by structural rules.

In rule text an uppercase letter (optionally followed by digits or
primes) is a metavariable. At term level it binds a whole subterm
(MetaVar); under a connective it binds a form (FVar). Other tokens are
literal atoms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from categories.exceptions import ExtensionError
from categories.forms import At, Backslash, Dot, Form, Slash
from categories.terms import Comma, OneForm, Term
from categories.text import parse_with

METAVARIABLE = re.compile(r"[A-Z][0-9']*")


@dataclass(frozen=True)
class FVar:
    name: str


@dataclass(frozen=True)
class FAt:
    name: str


@dataclass(frozen=True)
class FSlash:
    num: FormPattern
    den: FormPattern


@dataclass(frozen=True)
class FBackslash:
    den: FormPattern
    num: FormPattern


@dataclass(frozen=True)
class FDot:
    left: FormPattern
    right: FormPattern


FormPattern = FVar | FAt | FSlash | FBackslash | FDot


@dataclass(frozen=True)
class MetaVar:
    name: str


@dataclass(frozen=True)
class OneFormPat:
    form: FormPattern


@dataclass(frozen=True)
class CommaPat:
    left: TermPattern
    right: TermPattern


TermPattern = MetaVar | OneFormPat | CommaPat


# -- matching ground values -------------------------------------------------

def _bind(sigma, name, value):
    if name in sigma:
        return sigma if sigma[name] == value else None
    return {**sigma, name: value}


def match_form(p: FormPattern, f: Form, sigma: dict | None = None) -> dict | None:
    sigma = {} if sigma is None else sigma
    match p, f:
        case FVar(name), _:
            return _bind(sigma, name, f)
        case FAt(name), At(atom):
            return sigma if name == atom else None
        case (FSlash(pn, pd), Slash(n, d)) | (FBackslash(pd, pn), Backslash(d, n)):
            sigma = match_form(pn, n, sigma)
            return None if sigma is None else match_form(pd, d, sigma)
        case FDot(pl, pr), Dot(l, r):
            sigma = match_form(pl, l, sigma)
            return None if sigma is None else match_form(pr, r, sigma)
    return None


def match_term(p: TermPattern, t: Term, sigma: dict | None = None) -> dict | None:
    sigma = {} if sigma is None else sigma
    match p, t:
        case MetaVar(name), _:
            return _bind(sigma, name, t)
        case OneFormPat(fp), OneForm(f):
            return match_form(fp, f, sigma)
        case CommaPat(pl, pr), Comma(l, r):
            sigma = match_term(pl, l, sigma)
            return None if sigma is None else match_term(pr, r, sigma)
    return None


def instantiate_form(p: FormPattern, sigma: dict) -> Form:
    match p:
        case FVar(name):
            return _lookup(sigma, name)
        case FAt(name):
            return At(name)
        case FSlash(n, d):
            return Slash(instantiate_form(n, sigma), instantiate_form(d, sigma))
        case FBackslash(d, n):
            return Backslash(instantiate_form(d, sigma), instantiate_form(n, sigma))
        case FDot(l, r):
            return Dot(instantiate_form(l, sigma), instantiate_form(r, sigma))
    raise TypeError(f'not a form pattern: {p!r}')


def instantiate_term(p: TermPattern, sigma: dict) -> Term:
    match p:
        case MetaVar(name):
            return _lookup(sigma, name)
        case OneFormPat(fp):
            return OneForm(instantiate_form(fp, sigma))
        case CommaPat(l, r):
            return Comma(instantiate_term(l, sigma), instantiate_term(r, sigma))
    raise TypeError(f'not a term pattern: {p!r}')


def _lookup(sigma, name):
    try:
        return sigma[name]
    except KeyError:
        raise ExtensionError(f'metavariable {name} is unbound') from None


# -- pattern against pattern (rule subsumption) -----------------------------

def subsumes_form(general: FormPattern, specific: FormPattern, sigma: dict) -> dict | None:
    """Match general against specific, treating specific's variables as rigid"""
    match general, specific:
        case FVar(name), _:
            return _bind(sigma, name, specific)
        case FAt(a), FAt(b):
            return sigma if a == b else None
        case (FSlash(gn, gd), FSlash(sn, sd)) | (FBackslash(gd, gn), FBackslash(sd, sn)):
            sigma = subsumes_form(gn, sn, sigma)
            return None if sigma is None else subsumes_form(gd, sd, sigma)
        case FDot(gl, gr), FDot(sl, sr):
            sigma = subsumes_form(gl, sl, sigma)
            return None if sigma is None else subsumes_form(gr, sr, sigma)
    return None


def subsumes_term(general: TermPattern, specific: TermPattern, sigma: dict) -> dict | None:
    match general, specific:
        case MetaVar(name), _:
            return _bind(sigma, name, specific)
        case OneFormPat(g), OneFormPat(s):
            return subsumes_form(g, s, sigma)
        case CommaPat(gl, gr), CommaPat(sl, sr):
            sigma = subsumes_term(gl, sl, sigma)
            return None if sigma is None else subsumes_term(gr, sr, sigma)
    return None


# -- variables and leaves ---------------------------------------------------

def form_variables(p: FormPattern) -> set[str]:
    match p:
        case FVar(name):
            return {name}
        case FAt():
            return set()
        case FSlash(a, b) | FBackslash(a, b) | FDot(a, b):
            return form_variables(a) | form_variables(b)
    raise TypeError(f'not a form pattern: {p!r}')


def term_variables(p: TermPattern) -> set[str]:
    match p:
        case MetaVar(name):
            return {name}
        case OneFormPat(fp):
            return form_variables(fp)
        case CommaPat(l, r):
            return term_variables(l) | term_variables(r)
    raise TypeError(f'not a term pattern: {p!r}')


def term_pattern_leaves(p: TermPattern) -> list[TermPattern]:
    """MetaVar and OneFormPat leaves, left to right"""
    match p:
        case CommaPat(l, r):
            return term_pattern_leaves(l) + term_pattern_leaves(r)
    return [p]


def variable_sorts(p: TermPattern) -> dict[str, str]:
    sorts = {}
    _collect_sorts(p, sorts)
    return sorts


def _collect_sorts(p, sorts):
    match p:
        case MetaVar(name):
            _record_sort(sorts, name, 'term')
        case OneFormPat(fp):
            for name in form_variables(fp):
                _record_sort(sorts, name, 'form')
        case CommaPat(l, r):
            _collect_sorts(l, sorts)
            _collect_sorts(r, sorts)


def _record_sort(sorts, name, sort):
    if sorts.setdefault(name, sort) != sort:
        raise ExtensionError(f'metavariable {name} is used both as a term and as a form')


def term_pattern_to_form(p: TermPattern) -> FormPattern:
    """delta_translation lifted to patterns: term variables become form variables"""
    match p:
        case MetaVar(name):
            return FVar(name)
        case OneFormPat(fp):
            return fp
        case CommaPat(l, r):
            return FDot(term_pattern_to_form(l), term_pattern_to_form(r))
    raise TypeError(f'not a term pattern: {p!r}')


# -- text -------------------------------------------------------------------

class PatternBuilder:
    """Builds patterns with the category grammar"""

    def atom(self, name, pos):
        if METAVARIABLE.fullmatch(name):
            return MetaVar(name)
        return FAt(name)

    def connective(self, op, left, right):
        left, right = self._as_form(left), self._as_form(right)
        if op == '/':
            return FSlash(left, right)
        if op == '\\':
            return FBackslash(left, right)
        return FDot(left, right)

    def comma(self, left, right):
        return CommaPat(self.as_term(left), self.as_term(right))

    def is_structure(self, node):
        return isinstance(node, CommaPat)

    def as_term(self, node):
        if isinstance(node, (MetaVar, CommaPat)):
            return node
        return OneFormPat(node)

    def as_form(self, node):
        if isinstance(node, CommaPat):
            raise ExtensionError('expected a form pattern, found a bracketed term')
        return self._as_form(node)

    def _as_form(self, node):
        return FVar(node.name) if isinstance(node, MetaVar) else node


def parse_term_pattern(text: str) -> TermPattern:
    builder = PatternBuilder()
    return builder.as_term(parse_with(text, builder))


def parse_form_pattern(text: str) -> FormPattern:
    builder = PatternBuilder()
    return builder.as_form(parse_with(text, builder))


def render_form_pattern(p: FormPattern) -> str:
    return _render_form(p)


def _render_form(p):
    match p:
        case FVar(name) | FAt(name):
            return name
        case FDot(l, r):
            return f'{_render_form(l)}.{_wrap(r, FDot)}'
        case FSlash(n, d):
            return f'{_wrap(n, FDot)}/{_wrap(d, FDot, FSlash)}'
        case FBackslash(d, n):
            return f'{_wrap(d, FDot, FSlash, FBackslash)}\\{_wrap(n, FDot, FSlash)}'
    raise TypeError(f'not a form pattern: {p!r}')


def _wrap(p, *needs_parens):
    text = _render_form(p)
    return f'({text})' if isinstance(p, needs_parens) else text


def render_term_pattern(p: TermPattern) -> str:
    match p:
        case MetaVar(name):
            return name
        case OneFormPat(fp):
            return _render_form(fp)
        case CommaPat(l, r):
            return f'({render_term_pattern(l)}, {render_term_pattern(r)})'
    raise TypeError(f'not a term pattern: {p!r}')
