"""
Relations between proof trees: refinement (one tree grows into another by
expanding unfinished leaves), sub-proofs, and the sub-formula property.
"""

from categories.exceptions import ExtensionError, PreconditionError, ProofCheckError
from categories.forms import is_sub_formula, sub_formulas
from categories.terms import is_sub_form_term, term_sub_formulas

from .dertree import Der, Dertree, Unf, concl, exten, head, is_cut_free, prems
from .extensions import Extension, extends_ext, extension_sub_ok
from .inference import check_node


def refines(d1: Dertree, d2: Dertree) -> bool:
    """
    d2 is reachable from d1 by expanding unfinished leaves one inference at
    a time. Finished nodes of d1 must reappear unchanged in d2; every Unf(s)
    of d1 must become a subtree with head s built from valid inferences.
    """
    match d1:
        case Unf(seq):
            return head(d2) == seq and _grown_validly(d2)
        case Der(seq, rule, children):
            return (isinstance(d2, Der) and d2.seq == seq and d2.rule == rule
                    and len(d2.children) == len(children)
                    and all(refines(c1, c2) for c1, c2 in zip(children, d2.children)))
    return False


def _grown_validly(d):
    if isinstance(d, Unf):
        return True
    try:
        check_node(d)
    except ProofCheckError:
        return False
    return all(_grown_validly(c) for c in d.children)


def is_subproof_one(q: Dertree, p: Dertree) -> bool:
    if not isinstance(p, Der) or q not in p.children:
        return False
    try:
        check_node(p)
    except ProofCheckError:
        return False
    return True


def is_subproof(q: Dertree, p: Dertree) -> bool:
    if q == p:
        return True
    return isinstance(p, Der) and any(
        is_subproof_one(c, p) and is_subproof(q, c) for c in p.children)


def check_subformula_property(q: Dertree, p: Dertree) -> bool:
    """Every formula of q's end-sequent is a sub-formula of p's end-sequent"""
    if not is_subproof(q, p):
        raise PreconditionError('is_subproof', 'q is not a sub-proof of p')
    if not extension_sub_ok(exten(p)):
        raise PreconditionError(
            'extension_sub_ok', f'extension {exten(p).name} may drop formulas')
    if not is_cut_free(p):
        raise PreconditionError('is_cut_free', 'p contains a CutRule inference')
    candidates = term_sub_formulas(prems(q)) + sub_formulas(concl(q))
    return all(is_sub_form_term(x, prems(p)) or is_sub_formula(x, concl(p)) for x in candidates)


def lift_extension(d: Dertree, ext: Extension) -> Dertree:
    """The same proof read under a larger extension"""
    if not extends_ext(exten(d), ext):
        raise ExtensionError(f'{exten(d).name} is not included in {ext.name}')
    return _relabel(d, ext)


def _relabel(d, ext):
    match d:
        case Unf(seq):
            return Unf(seq.with_ext(ext))
        case Der(seq, rule, children):
            return Der(seq.with_ext(ext), rule, tuple(_relabel(c, ext) for c in children))
    raise TypeError(f'not a proof tree: {d!r}')
