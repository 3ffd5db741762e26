"""
Derived rules as proof builders.

Each builder assembles one or more inferences from existing proofs and
re-checks the new node, so a misuse fails with ProofCheckError at the
point of construction instead of producing an invalid tree.
"""

from categories.forms import Backslash, Dot, Slash
from categories.replace import positions, replace_at, subterm_at
from categories.terms import Comma, OneForm, Path, Term, delta_translation

from .dertree import Der, Dertree, Rule, Sequent, axiom, concl, exten, prems
from .extensions import Extension
from .inference import check_node


def _checked(d: Der) -> Der:
    check_node(d)
    return d


def axiom_generalized(ext: Extension, gamma: Term) -> Dertree:
    """Γ ⊢ δΓ from SeqAxiom and RightDot"""
    match gamma:
        case OneForm(f):
            return axiom(ext, f)
        case Comma(left, right):
            return Der(Sequent(ext, gamma, delta_translation(gamma)), Rule.RIGHT_DOT,
                       (axiom_generalized(ext, left), axiom_generalized(ext, right)))
    raise TypeError(f'not a term: {gamma!r}')


def left_dot_at(d: Dertree, path: Path) -> Der:
    """Γ[(A, B)] ⊢ C  gives  Γ[A.B] ⊢ C"""
    sub = subterm_at(prems(d), path)
    if not (isinstance(sub, Comma) and isinstance(sub.left, OneForm) and isinstance(sub.right, OneForm)):
        raise ValueError(f'no (A, B) pair at {path!r} in {prems(d)}')
    collapsed = OneForm(Dot(sub.left.form, sub.right.form))
    seq = Sequent(exten(d), replace_at(prems(d), path, collapsed), concl(d))
    return _checked(Der(seq, Rule.LEFT_DOT, (d,)))


def left_dot_simpl(d: Dertree) -> Der:
    return left_dot_at(d, ())


def term_to_form(d: Dertree) -> Dertree:
    """Γ ⊢ C  gives  δΓ ⊢ C, collapsing innermost pairs first"""
    while isinstance(prems(d), Comma):
        for path in positions(prems(d)):
            match subterm_at(prems(d), path):
                case Comma(OneForm(), OneForm()):
                    d = left_dot_at(d, path)
                    break
    return d


def cut_at(d_delta: Dertree, d_main: Dertree, path: Path) -> Der:
    """Δ ⊢ A and Γ[A] ⊢ C (A at path) give Γ[Δ] ⊢ C"""
    if subterm_at(prems(d_main), path) != OneForm(concl(d_delta)):
        raise ValueError(f'{concl(d_delta)} does not occur at {path!r} in {prems(d_main)}')
    seq = Sequent(exten(d_main), replace_at(prems(d_main), path, prems(d_delta)), concl(d_main))
    return _checked(Der(seq, Rule.CUT_RULE, (d_main, d_delta)))


def cut_simpl(d1: Dertree, d2: Dertree) -> Der:
    """Γ ⊢ A and A ⊢ C give Γ ⊢ C"""
    return cut_at(d1, d2, ())


def left_slash_simpl(d1: Dertree, d2: Dertree) -> Der:
    """Γ ⊢ B and A ⊢ C give (A/B, Γ) ⊢ C"""
    a = _single_form(d2)
    ante = Comma(OneForm(Slash(a, concl(d1))), prems(d1))
    return _checked(Der(Sequent(exten(d1), ante, concl(d2)), Rule.LEFT_SLASH, (d2, d1)))


def left_backslash_simpl(d1: Dertree, d2: Dertree) -> Der:
    """Γ ⊢ B and A ⊢ C give (Γ, B\\A) ⊢ C"""
    a = _single_form(d2)
    ante = Comma(prems(d1), OneForm(Backslash(concl(d1), a)))
    return _checked(Der(Sequent(exten(d1), ante, concl(d2)), Rule.LEFT_BACKSLASH, (d2, d1)))


def _single_form(d):
    if not isinstance(prems(d), OneForm):
        raise ValueError(f'expected a single-form antecedent, found {prems(d)}')
    return prems(d).form


def seq_ext_at(d: Dertree, path: Path, replacement: Term) -> Der:
    """Γ[Δ] ⊢ C gives Γ[Δ'] ⊢ C when the extension relates Δ to Δ'"""
    seq = Sequent(exten(d), replace_at(prems(d), path, replacement), concl(d))
    return _checked(Der(seq, Rule.SEQ_EXT, (d,)))


def seq_ext_simpl(d: Dertree, replacement: Term) -> Der:
    return seq_ext_at(d, (), replacement)
