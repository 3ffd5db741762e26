"""
Positional term surgery.

`replace Γ Γ' Δ Δ'` ("Γ' is Γ with one occurrence of Δ replaced by Δ'")
is decided through paths: some path p addresses Δ in Γ and rewriting p
to Δ' yields Γ'. Occurrences are always enumerated in preorder.
"""

from collections.abc import Iterator

from .exceptions import InvalidPathError
from .forms import Dot
from .terms import Comma, OneForm, Path, Step, Term, delta_translation


def subterm_at(t: Term, p: Path) -> Term:
    for index, step in enumerate(p):
        if not isinstance(t, Comma):
            raise InvalidPathError(index, step)
        t = t.left if step == Step.LEFT else t.right
    return t


def replace_at(t: Term, p: Path, new: Term) -> Term:
    return _replace_from(t, p, 0, new)


def _replace_from(t, p, index, new):
    if index == len(p):
        return new
    if not isinstance(t, Comma):
        raise InvalidPathError(index, p[index])
    if p[index] == Step.LEFT:
        return Comma(_replace_from(t.left, p, index + 1, new), t.right)
    return Comma(t.left, _replace_from(t.right, p, index + 1, new))


def positions(t: Term, prefix: Path = ()) -> Iterator[Path]:
    """Every path of t, preorder (root, left, right)"""
    yield prefix
    if isinstance(t, Comma):
        yield from positions(t.left, prefix + (Step.LEFT,))
        yield from positions(t.right, prefix + (Step.RIGHT,))


def subterms(t: Term) -> Iterator[tuple[Path, Term]]:
    for p in positions(t):
        yield p, subterm_at(t, p)


def occurrences(t: Term, sub: Term) -> list[Path]:
    return [p for p, s in subterms(t) if s == sub]


def holds_replace(t1: Term, t2: Term, t3: Term, t4: Term) -> bool:
    return any(replace_at(t1, p, t4) == t2 for p in occurrences(t1, t3))


def decide_replace_comma_dot(t1: Term, t2: Term) -> bool:
    """
    Is t2 reachable from t1 by collapsing Comma(OneForm A, OneForm B) into
    OneForm(A.B), any number of times?

    Equivalent to: t2 is t1 with a set of disjoint subtrees each fully
    collapsed to OneForm(delta_translation(subtree)).
    """
    if t1 == t2:
        return True
    if isinstance(t2, OneForm) and t2.form == delta_translation(t1):
        return True
    if isinstance(t1, Comma) and isinstance(t2, Comma):
        return (decide_replace_comma_dot(t1.left, t2.left)
                and decide_replace_comma_dot(t1.right, t2.right))
    return False


def comma_dot_successors(t: Term) -> list[Term]:
    """One-step collapses of t, preorder"""
    found = []
    for p, s in subterms(t):
        match s:
            case Comma(OneForm(a), OneForm(b)):
                found.append(replace_at(t, p, OneForm(Dot(a, b))))
    return found
