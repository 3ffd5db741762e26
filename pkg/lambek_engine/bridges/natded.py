"""
Natural deduction proofs.

Elimination nodes carry the form they eliminate through (`form`, the B of
SlashElim and BackslashElim) and DotElim/NatExt carry the path of the
replaced occurrence, so every node can be checked locally.

    NatAxiom        A ⊢ A
    SlashIntro      (Γ, B) ⊢ A                  gives  Γ ⊢ A/B
    BackslashIntro  (B, Γ) ⊢ A                  gives  Γ ⊢ B\\A
    DotIntro        Γ ⊢ A,  Δ ⊢ B               gives  (Γ, Δ) ⊢ A.B
    SlashElim       Γ ⊢ A/B,  Δ ⊢ B             gives  (Γ, Δ) ⊢ A
    BackslashElim   Γ ⊢ B,  Δ ⊢ B\\A            gives  (Γ, Δ) ⊢ A
    DotElim         Δ ⊢ A.B,  Γ[(A, B)] ⊢ C     gives  Γ[Δ] ⊢ C
    NatExt          Γ[Δ] ⊢ C                    gives  Γ[Δ'] ⊢ C  when E relates Δ to Δ'
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from categories.exceptions import InvalidPathError, ProofCheckError
from categories.forms import Backslash, Dot, Form, Slash
from categories.replace import replace_at, subterm_at, subterms
from categories.terms import Comma, OneForm, Path, Term, path_to_text, render_term
from sequents.extensions import Extension, ext_relating_rule
from sequents.render import render_tree


class NatRule(enum.StrEnum):
    NAT_AXIOM = 'NatAxiom'
    SLASH_INTRO = 'SlashIntro'
    BACKSLASH_INTRO = 'BackslashIntro'
    DOT_INTRO = 'DotIntro'
    SLASH_ELIM = 'SlashElim'
    BACKSLASH_ELIM = 'BackslashElim'
    DOT_ELIM = 'DotElim'
    NAT_EXT = 'NatExt'


NAT_ARITY = {
    NatRule.NAT_AXIOM: 0,
    NatRule.SLASH_INTRO: 1,
    NatRule.BACKSLASH_INTRO: 1,
    NatRule.NAT_EXT: 1,
    NatRule.DOT_INTRO: 2,
    NatRule.SLASH_ELIM: 2,
    NatRule.BACKSLASH_ELIM: 2,
    NatRule.DOT_ELIM: 2,
}


@dataclass(frozen=True)
class NatDed:
    rule: NatRule
    antecedent: Term
    succedent: Form
    children: tuple[NatDed, ...] = ()
    form: Form | None = None
    path: Path | None = None

    def __str__(self):
        return f'{render_term(self.antecedent)} |- {self.succedent}'

    def to_dict(self):
        return {
            'rule': str(self.rule),
            'ante': render_term(self.antecedent),
            'succ': str(self.succedent),
            'form': None if self.form is None else str(self.form),
            'path': None if self.path is None else path_to_text(self.path),
            'children': [c.to_dict() for c in self.children],
        }


@dataclass(frozen=True)
class NatDedProof:
    ext: Extension
    root: NatDed

    def to_dict(self):
        return {'ext': self.ext.name, 'root': self.root.to_dict()}


class _Mismatch(Exception):
    pass


def _require(condition, reason):
    if not condition:
        raise _Mismatch(reason)


def _check(ext, n):
    ante, succ = n.antecedent, n.succedent
    match n.rule:
        case NatRule.NAT_AXIOM:
            _require(ante == OneForm(succ), 'antecedent is not the succedent alone')
        case NatRule.SLASH_INTRO:
            (c,) = n.children
            _require(isinstance(succ, Slash), 'succedent is not A/B')
            _require(c.antecedent == Comma(ante, OneForm(succ.den)), 'premise antecedent is not (Γ, B)')
            _require(c.succedent == succ.num, 'premise succedent is not A')
        case NatRule.BACKSLASH_INTRO:
            (c,) = n.children
            _require(isinstance(succ, Backslash), 'succedent is not B\\A')
            _require(c.antecedent == Comma(OneForm(succ.den), ante), 'premise antecedent is not (B, Γ)')
            _require(c.succedent == succ.num, 'premise succedent is not A')
        case NatRule.DOT_INTRO:
            left, right = n.children
            _require(isinstance(succ, Dot), 'succedent is not A.B')
            _require(ante == Comma(left.antecedent, right.antecedent), 'antecedent is not (Γ, Δ)')
            _require(left.succedent == succ.left and right.succedent == succ.right,
                     'premises do not prove A and B')
        case NatRule.SLASH_ELIM:
            fun, arg = n.children
            _require(n.form is None or n.form == arg.succedent, 'eliminated form differs from the argument')
            _require(fun.succedent == Slash(succ, arg.succedent), 'first premise is not Γ ⊢ A/B')
            _require(ante == Comma(fun.antecedent, arg.antecedent), 'antecedent is not (Γ, Δ)')
        case NatRule.BACKSLASH_ELIM:
            arg, fun = n.children
            _require(n.form is None or n.form == arg.succedent, 'eliminated form differs from the argument')
            _require(fun.succedent == Backslash(arg.succedent, succ), 'second premise is not Δ ⊢ B\\A')
            _require(ante == Comma(arg.antecedent, fun.antecedent), 'antecedent is not (Γ, Δ)')
        case NatRule.DOT_ELIM:
            prod, main = n.children
            _require(isinstance(prod.succedent, Dot), 'first premise is not Δ ⊢ A.B')
            _require(main.succedent == succ, 'second premise succedent differs from C')
            pair = Comma(OneForm(prod.succedent.left), OneForm(prod.succedent.right))
            _require(dot_elim_path(n) is not None, f'no occurrence of {render_term(pair)} fits')
        case NatRule.NAT_EXT:
            (c,) = n.children
            _require(c.succedent == succ, 'premise succedent differs from C')
            _require(nat_ext_witness(ext, n) is not None,
                     f'no rule of {ext.name} relates the premise to the conclusion')


def _candidate_paths(n, term):
    if n.path is not None:
        return [n.path]
    return [p for p, _ in subterms(term)]


def dot_elim_path(n: NatDed) -> Path | None:
    """Path of (A, B) in the second premise that yields the conclusion"""
    prod, main = n.children
    pair = Comma(OneForm(prod.succedent.left), OneForm(prod.succedent.right))
    for path in _candidate_paths(n, main.antecedent):
        try:
            if (subterm_at(main.antecedent, path) == pair
                    and replace_at(main.antecedent, path, prod.antecedent) == n.antecedent):
                return path
        except InvalidPathError:
            continue
    return None


def nat_ext_witness(ext: Extension, n: NatDed) -> tuple[Path, Term, str] | None:
    """(path, Δ', rule name) of the rewritten occurrence"""
    (c,) = n.children
    for path in _candidate_paths(n, n.antecedent):
        try:
            delta_prime = subterm_at(n.antecedent, path)
            delta = subterm_at(c.antecedent, path)
        except InvalidPathError:
            continue
        if replace_at(n.antecedent, path, delta) != c.antecedent:
            continue
        name = ext_relating_rule(ext, delta, delta_prime)
        if name is not None:
            return path, delta_prime, name
    return None


def check_natded_node(ext: Extension, n: NatDed) -> None:
    try:
        rule = NatRule(n.rule)
    except ValueError:
        raise ProofCheckError(n.rule, 'unknown natural deduction rule') from None
    if len(n.children) != NAT_ARITY[rule]:
        raise ProofCheckError(rule, f'expected {NAT_ARITY[rule]} premises, found {len(n.children)}')
    try:
        _check(ext, n)
    except _Mismatch as exc:
        raise ProofCheckError(rule, str(exc)) from None


def check_natded_proof(p: NatDedProof) -> None:
    """Raises ProofCheckError for the first invalid node, preorder"""
    _check_tree(p.ext, p.root, ())


def _check_tree(ext, n, where):
    try:
        check_natded_node(ext, n)
    except ProofCheckError as exc:
        raise ProofCheckError(exc.rule, exc.reason, where) from None
    for i, child in enumerate(n.children):
        _check_tree(ext, child, where + (i,))


def render_natded_proof(p: NatDedProof) -> str:
    def label(n):
        extra = f' {n.form}' if n.form is not None else ''
        return f'{n}   [{n.rule}{extra}]'
    return render_tree(p.root, label, lambda n: n.children)
