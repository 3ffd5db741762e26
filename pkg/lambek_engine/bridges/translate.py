"""
Translations between the gentzen, arrow and natural-deduction systems.

gentzen_to_arrow reads a gentzen proof of Γ ⊢ C as an arrow proof of
δΓ -> C; Left rules and cuts act inside the antecedent, so their local
arrows are lifted into place with mono_context. arrow_to_gentzen and
natded_to_gentzen go the other way and may produce CutRule nodes.
"""

import logging

from categories.exceptions import ExtensionObligationError
from categories.forms import Backslash, Slash
from categories.terms import Comma, OneForm, Step, delta_translation
from sequents.derived import (
    axiom_generalized,
    cut_at,
    cut_simpl,
    left_backslash_simpl,
    left_dot_at,
    left_dot_simpl,
    left_slash_simpl,
    seq_ext_at,
)
from sequents.dertree import Der, Dertree, Rule, Sequent, axiom
from sequents.extensions import ArrowExtension, ArrowRule, Extension
from sequents.inference import check_node
from sequents.patterns import term_pattern_to_form
from sequents.search import SearchOptions, prove

from .arrow import (
    ArrowKind,
    ArrowProof,
    apply_backslash,
    apply_slash,
    beta,
    comp,
    ext_leaf,
    gamma,
    mono_context,
    mono_dot,
    one,
)
from .natded import NatDed, NatDedProof, NatRule, check_natded_proof, dot_elim_path, nat_ext_witness

logger = logging.getLogger(__name__)


def to_arrow_ext(e: Extension) -> ArrowExtension:
    """Each rule lhs => rhs becomes the arrow rule δ(rhs) -> δ(lhs)"""
    return ArrowExtension(e.name, tuple(
        ArrowRule(rule.name, term_pattern_to_form(rule.rhs), term_pattern_to_form(rule.lhs))
        for rule in e.rules
    ))


# -- gentzen to arrow -----------------------------------------------------------

def gentzen_to_arrow(d: Dertree) -> ArrowProof:
    """Arrow proof of δ(prems d) -> concl d, valid over to_arrow_ext(exten d)"""
    witness = check_node(d)
    source = delta_translation(d.seq.antecedent)
    children = [gentzen_to_arrow(c) for c in d.children]
    match d.rule:
        case Rule.SEQ_AXIOM:
            return one(d.seq.succedent)
        case Rule.RIGHT_SLASH:
            return beta(children[0])
        case Rule.RIGHT_BACKSLASH:
            return gamma(children[0])
        case Rule.RIGHT_DOT:
            return mono_dot(children[0], children[1])
        case Rule.LEFT_DOT:
            return children[0]
        case Rule.LEFT_SLASH:
            main, arg = children
            local = apply_slash(Slash(witness.a, witness.b), arg)
            return comp(mono_context(source, witness.path, local), main)
        case Rule.LEFT_BACKSLASH:
            main, arg = children
            local = apply_backslash(Backslash(witness.b, witness.a), arg)
            return comp(mono_context(source, witness.path, local), main)
        case Rule.CUT_RULE:
            main, cut = children
            return comp(mono_context(source, witness.path, cut), main)
        case Rule.SEQ_EXT:
            (main,) = children
            leaf = ext_leaf(witness.ext_rule,
                            delta_translation(witness.delta_prime),
                            delta_translation(witness.delta))
            return comp(mono_context(source, witness.path, leaf), main)
    raise ValueError(f'unexpected rule {d.rule}')


# -- arrow to gentzen -----------------------------------------------------------

def extension_obligations(p: ArrowProof) -> list[tuple]:
    """(A, B) of every Ext leaf, preorder, without repeats"""
    found = []
    stack = [p]
    while stack:
        node = stack.pop()
        if node.kind == ArrowKind.EXT and (node.source, node.target) not in found:
            found.append((node.source, node.target))
        stack.extend(reversed(node.children))
    return found


def arrow_to_gentzen(p: ArrowProof, e: Extension, proofs: dict | None = None,
                     options: SearchOptions | None = None) -> Dertree:
    """
    Gentzen proof of OneForm(source) ⊢ target. Each Ext leaf A -> B is
    discharged by proofs[(A, B)] when given, otherwise by searching for a
    proof of A ⊢ B under e.
    """
    discharged = {}
    missing = []
    for a, b in extension_obligations(p):
        supplied = (proofs or {}).get((a, b))
        found = supplied or prove(Sequent(e, OneForm(a), b), options)
        if found is None:
            missing.append((a, b))
        else:
            discharged[(a, b)] = found
    if missing:
        raise ExtensionObligationError(missing)
    return _to_gentzen(p, e, discharged)


def _to_gentzen(p, e, discharged):
    children = [_to_gentzen(c, e, discharged) for c in p.children]
    match p.kind:
        case ArrowKind.ONE:
            return axiom(e, p.source)
        case ArrowKind.BETA | ArrowKind.GAMMA:
            child = p.children[0]
            pair = Comma(OneForm(child.source.left), OneForm(child.source.right))
            premise = cut_at(axiom_generalized(e, pair), children[0], ())
            rule = Rule.RIGHT_SLASH if p.kind == ArrowKind.BETA else Rule.RIGHT_BACKSLASH
            node = Der(Sequent(e, OneForm(p.source), p.target), rule, (premise,))
            check_node(node)
            return node
        case ArrowKind.BETA_INV:
            applied = left_slash_simpl(axiom(e, p.source.right), axiom(e, p.target))
            return left_dot_simpl(cut_at(children[0], applied, (Step.LEFT,)))
        case ArrowKind.GAMMA_INV:
            applied = left_backslash_simpl(axiom(e, p.source.left), axiom(e, p.target))
            return left_dot_simpl(cut_at(children[0], applied, (Step.RIGHT,)))
        case ArrowKind.COMP:
            return cut_simpl(children[0], children[1])
        case ArrowKind.EXT:
            return discharged[(p.source, p.target)]
    raise ValueError(f'unexpected arrow rule {p.kind}')


# -- natural deduction to gentzen -------------------------------------------------

def natded_to_gentzen(p: NatDedProof) -> Dertree:
    check_natded_proof(p)
    return _from_natded(p.ext, p.root)


def _from_natded(e, n: NatDed):
    seq = Sequent(e, n.antecedent, n.succedent)
    children = [_from_natded(e, c) for c in n.children]
    match n.rule:
        case NatRule.NAT_AXIOM:
            return axiom(e, n.succedent)
        case NatRule.SLASH_INTRO:
            return _checked(Der(seq, Rule.RIGHT_SLASH, tuple(children)))
        case NatRule.BACKSLASH_INTRO:
            return _checked(Der(seq, Rule.RIGHT_BACKSLASH, tuple(children)))
        case NatRule.DOT_INTRO:
            return _checked(Der(seq, Rule.RIGHT_DOT, tuple(children)))
        case NatRule.SLASH_ELIM:
            fun, _ = n.children
            d_fun, d_arg = children
            applied = left_slash_simpl(d_arg, axiom(e, n.succedent))
            if fun.antecedent == OneForm(fun.succedent):
                return applied
            return cut_at(d_fun, applied, (Step.LEFT,))
        case NatRule.BACKSLASH_ELIM:
            _, fun = n.children
            d_arg, d_fun = children
            applied = left_backslash_simpl(d_arg, axiom(e, n.succedent))
            if fun.antecedent == OneForm(fun.succedent):
                return applied
            return cut_at(d_fun, applied, (Step.RIGHT,))
        case NatRule.DOT_ELIM:
            prod, _ = n.children
            d_prod, d_main = children
            path = dot_elim_path(n)
            collapsed = left_dot_at(d_main, path)
            if prod.antecedent == OneForm(prod.succedent):
                return collapsed
            return cut_at(d_prod, collapsed, path)
        case NatRule.NAT_EXT:
            path, delta_prime, _ = nat_ext_witness(e, n)
            return seq_ext_at(children[0], path, delta_prime)
    raise ValueError(f'unexpected natural deduction rule {n.rule}')


def _checked(d):
    check_node(d)
    return d

