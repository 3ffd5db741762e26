"""
Antecedent terms: binary-bracketed sequences of forms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .forms import Dot, Form, is_sub_formula, render_category, sub_formulas


@dataclass(frozen=True)
class OneForm:
    form: Form

    def __str__(self):
        return render_term(self)


@dataclass(frozen=True)
class Comma:
    left: Term
    right: Term

    def __str__(self):
        return render_term(self)


Term = OneForm | Comma


class Step(enum.StrEnum):
    LEFT = 'L'
    RIGHT = 'R'


Path = tuple[Step, ...]


def path_from_text(text: str) -> Path:
    return tuple(Step(ch) for ch in text)


def path_to_text(path: Path) -> str:
    return ''.join(step.value for step in path)


def delta_translation(t: Term) -> Form:
    match t:
        case OneForm(f):
            return f
        case Comma(left, right):
            return Dot(delta_translation(left), delta_translation(right))
    raise TypeError(f'not a term: {t!r}')


def leaves(t: Term) -> list[Form]:
    """Form leaves, left to right"""
    match t:
        case OneForm(f):
            return [f]
        case Comma(left, right):
            return leaves(left) + leaves(right)
    raise TypeError(f'not a term: {t!r}')


def leaf_count(t: Term) -> int:
    return len(leaves(t))


def is_sub_form_term(a: Form, t: Term) -> bool:
    return any(is_sub_formula(a, f) for f in leaves(t))


def term_sub_formulas(t: Term) -> list[Form]:
    found = {}
    for f in leaves(t):
        for g in sub_formulas(f):
            found.setdefault(g, None)
    return list(found)


def render_term(t: Term) -> str:
    match t:
        case OneForm(f):
            return render_category(f)
        case Comma(left, right):
            return f'({render_term(left)}, {render_term(right)})'
    raise TypeError(f'not a term: {t!r}')
