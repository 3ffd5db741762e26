"""
The nine gentzen rules, read in both directions.

check_node verifies that a Der node instantiates its rule, given only the
head sequents of its children. expansions enumerates the one-step
backward expansions of an unfinished sequent. Rules with existential
content (which occurrence, which Δ) have it recovered by a preorder search
over paths.

Premise order follows the rule definitions:
    LeftSlash / LeftBackslash   [Γ[A] ⊢ C, Δ ⊢ B]
    CutRule                     [Γ[A] ⊢ C, Δ ⊢ A]
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from categories.exceptions import InvalidPathError, ProofCheckError
from categories.forms import Backslash, Dot, Form, Slash
from categories.replace import positions, replace_at, subterm_at, subterms
from categories.terms import Comma, OneForm, Path, Term

from .dertree import ARITY, Der, Dertree, Rule, Sequent, Unf, head
from .extensions import ext_relating_rule, ext_rewrites_backward


@dataclass(frozen=True)
class RuleWitness:
    rule: Rule
    path: Path | None = None
    a: Form | None = None
    b: Form | None = None
    delta: Term | None = None
    delta_prime: Term | None = None
    ext_rule: str | None = None


class _Mismatch(Exception):
    pass


def check_node(d: Dertree) -> RuleWitness:
    if not isinstance(d, Der):
        raise ProofCheckError('Unf', 'not a finished inference')
    try:
        rule = Rule(d.rule)
    except ValueError:
        raise ProofCheckError(d.rule, 'unknown rule name') from None
    if len(d.children) != ARITY[rule]:
        raise ProofCheckError(
            rule, f'expected {ARITY[rule]} premises, found {len(d.children)}')
    premises = [head(c) for c in d.children]
    for premise in premises:
        if premise.ext != d.seq.ext:
            raise ProofCheckError(
                rule, f'extension mismatch: {premise.ext.name} under {d.seq.ext.name}')
    try:
        return _CHECKS[rule](d.seq, premises)
    except _Mismatch as exc:
        raise ProofCheckError(rule, str(exc)) from None


def check_proof(d: Dertree) -> list[RuleWitness]:
    """Witnesses of every node, preorder; raises on the first invalid node"""
    witnesses = []
    _check_tree(d, (), witnesses)
    return witnesses


def _check_tree(d, where, witnesses):
    if isinstance(d, Unf):
        raise ProofCheckError('Unf', f'unfinished leaf {d.seq}', where)
    try:
        witnesses.append(check_node(d))
    except ProofCheckError as exc:
        raise ProofCheckError(exc.rule, exc.reason, where) from None
    for i, child in enumerate(d.children):
        _check_tree(child, where + (i,), witnesses)


def _require(condition, reason):
    if not condition:
        raise _Mismatch(reason)


def _check_axiom(seq, premises):
    _require(seq.antecedent == OneForm(seq.succedent), 'antecedent is not the succedent alone')
    return RuleWitness(Rule.SEQ_AXIOM)


def _check_right_slash(seq, premises):
    (p,) = premises
    _require(isinstance(seq.succedent, Slash), 'succedent is not A/B')
    a, b = seq.succedent.num, seq.succedent.den
    _require(p.antecedent == Comma(seq.antecedent, OneForm(b)), 'premise antecedent is not (Γ, B)')
    _require(p.succedent == a, 'premise succedent is not A')
    return RuleWitness(Rule.RIGHT_SLASH, a=a, b=b)


def _check_right_backslash(seq, premises):
    (p,) = premises
    _require(isinstance(seq.succedent, Backslash), 'succedent is not B\\A')
    b, a = seq.succedent.den, seq.succedent.num
    _require(p.antecedent == Comma(OneForm(b), seq.antecedent), 'premise antecedent is not (B, Γ)')
    _require(p.succedent == a, 'premise succedent is not A')
    return RuleWitness(Rule.RIGHT_BACKSLASH, a=a, b=b)


def _check_right_dot(seq, premises):
    left, right = premises
    _require(isinstance(seq.antecedent, Comma), 'antecedent is not (Γ, Δ)')
    _require(isinstance(seq.succedent, Dot), 'succedent is not A.B')
    _require(left.antecedent == seq.antecedent.left and left.succedent == seq.succedent.left,
             'first premise is not Γ ⊢ A')
    _require(right.antecedent == seq.antecedent.right and right.succedent == seq.succedent.right,
             'second premise is not Δ ⊢ B')
    return RuleWitness(Rule.RIGHT_DOT, a=seq.succedent.left, b=seq.succedent.right)


def _check_left_slash(seq, premises):
    main, arg = premises
    _require(main.succedent == seq.succedent, 'first premise succedent differs from C')
    for path, sub in subterms(seq.antecedent):
        match sub:
            case Comma(OneForm(Slash(a, b)), delta) if b == arg.succedent and delta == arg.antecedent:
                if replace_at(seq.antecedent, path, OneForm(a)) == main.antecedent:
                    return RuleWitness(Rule.LEFT_SLASH, path, a, b, delta)
    raise _Mismatch('no occurrence of (A/B, Δ) fits the premises')


def _check_left_backslash(seq, premises):
    main, arg = premises
    _require(main.succedent == seq.succedent, 'first premise succedent differs from C')
    for path, sub in subterms(seq.antecedent):
        match sub:
            case Comma(delta, OneForm(Backslash(b, a))) if b == arg.succedent and delta == arg.antecedent:
                if replace_at(seq.antecedent, path, OneForm(a)) == main.antecedent:
                    return RuleWitness(Rule.LEFT_BACKSLASH, path, a, b, delta)
    raise _Mismatch('no occurrence of (Δ, B\\A) fits the premises')


def _check_left_dot(seq, premises):
    (p,) = premises
    _require(p.succedent == seq.succedent, 'premise succedent differs from C')
    for path, sub in subterms(seq.antecedent):
        match sub:
            case OneForm(Dot(a, b)):
                if replace_at(seq.antecedent, path, Comma(OneForm(a), OneForm(b))) == p.antecedent:
                    return RuleWitness(Rule.LEFT_DOT, path, a, b)
    raise _Mismatch('no occurrence of A.B fits the premise')


def _check_cut(seq, premises):
    main, cut = premises
    _require(main.succedent == seq.succedent, 'first premise succedent differs from C')
    a = cut.succedent
    for path, sub in subterms(seq.antecedent):
        if sub == cut.antecedent and replace_at(seq.antecedent, path, OneForm(a)) == main.antecedent:
            return RuleWitness(Rule.CUT_RULE, path, a, delta=cut.antecedent)
    raise _Mismatch('no occurrence of Δ fits the premises')


def _check_seq_ext(seq, premises):
    (p,) = premises
    _require(p.succedent == seq.succedent, 'premise succedent differs from C')
    for path, delta_prime in subterms(seq.antecedent):
        try:
            delta = subterm_at(p.antecedent, path)
        except InvalidPathError:
            continue
        if replace_at(seq.antecedent, path, delta) != p.antecedent:
            continue
        name = ext_relating_rule(seq.ext, delta, delta_prime)
        if name is not None:
            return RuleWitness(Rule.SEQ_EXT, path, delta=delta, delta_prime=delta_prime, ext_rule=name)
    raise _Mismatch(f'no rule of {seq.ext.name} relates the premise to the conclusion')


_CHECKS = {
    Rule.SEQ_AXIOM: _check_axiom,
    Rule.RIGHT_SLASH: _check_right_slash,
    Rule.RIGHT_BACKSLASH: _check_right_backslash,
    Rule.RIGHT_DOT: _check_right_dot,
    Rule.LEFT_SLASH: _check_left_slash,
    Rule.LEFT_BACKSLASH: _check_left_backslash,
    Rule.LEFT_DOT: _check_left_dot,
    Rule.CUT_RULE: _check_cut,
    Rule.SEQ_EXT: _check_seq_ext,
}


# -- backward expansion -------------------------------------------------------

DEFAULT_RULE_ORDER = (
    Rule.SEQ_AXIOM,
    Rule.RIGHT_SLASH,
    Rule.RIGHT_BACKSLASH,
    Rule.RIGHT_DOT,
    Rule.LEFT_SLASH,
    Rule.LEFT_BACKSLASH,
    Rule.LEFT_DOT,
    Rule.SEQ_EXT,
)


def _node(seq, rule, *premises):
    return Der(seq, rule, tuple(Unf(Sequent(seq.ext, ante, succ)) for ante, succ in premises))


def expand_rule(s: Sequent, rule: Rule, cut_candidates: Iterable[Form] = ()) -> Iterator[Der]:
    """Backward expansions of Unf(s) by one rule, preorder over occurrences"""
    ante, succ = s.antecedent, s.succedent
    match rule:
        case Rule.SEQ_AXIOM:
            if ante == OneForm(succ):
                yield Der(s, rule)
        case Rule.RIGHT_SLASH:
            if isinstance(succ, Slash):
                yield _node(s, rule, (Comma(ante, OneForm(succ.den)), succ.num))
        case Rule.RIGHT_BACKSLASH:
            if isinstance(succ, Backslash):
                yield _node(s, rule, (Comma(OneForm(succ.den), ante), succ.num))
        case Rule.RIGHT_DOT:
            if isinstance(ante, Comma) and isinstance(succ, Dot):
                yield _node(s, rule, (ante.left, succ.left), (ante.right, succ.right))
        case Rule.LEFT_SLASH:
            for path, sub in subterms(ante):
                match sub:
                    case Comma(OneForm(Slash(a, b)), delta):
                        yield _node(s, rule, (replace_at(ante, path, OneForm(a)), succ), (delta, b))
        case Rule.LEFT_BACKSLASH:
            for path, sub in subterms(ante):
                match sub:
                    case Comma(delta, OneForm(Backslash(b, a))):
                        yield _node(s, rule, (replace_at(ante, path, OneForm(a)), succ), (delta, b))
        case Rule.LEFT_DOT:
            for path, sub in subterms(ante):
                match sub:
                    case OneForm(Dot(a, b)):
                        yield _node(s, rule, (replace_at(ante, path, Comma(OneForm(a), OneForm(b))), succ))
        case Rule.SEQ_EXT:
            for premise, _, _ in ext_rewrites_backward(s.ext, ante):
                yield _node(s, rule, (premise, succ))
        case Rule.CUT_RULE:
            candidates = list(cut_candidates)
            for path in positions(ante):
                delta = subterm_at(ante, path)
                for a in candidates:
                    yield _node(s, rule, (replace_at(ante, path, OneForm(a)), succ), (delta, a))


def expansions(s: Sequent, allow_cut: bool = False, cut_candidates: Iterable[Form] = ()) -> list[Der]:
    found = []
    for rule in DEFAULT_RULE_ORDER:
        found.extend(expand_rule(s, rule))
    if allow_cut:
        found.extend(expand_rule(s, Rule.CUT_RULE, cut_candidates))
    return found
