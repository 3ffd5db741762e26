"""
Syntactic categories.

A Form is an atom or a binary connective node: Slash (num over den),
Backslash (den under num) or Dot (product). All nodes are frozen
dataclasses, so forms compare and hash structurally.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class At:
    name: str

    def __str__(self):
        return render_category(self)


@dataclass(frozen=True)
class Slash:
    """num/den"""

    num: Form
    den: Form

    def __str__(self):
        return render_category(self)


@dataclass(frozen=True)
class Backslash:
    """den\\num"""

    den: Form
    num: Form

    def __str__(self):
        return render_category(self)


@dataclass(frozen=True)
class Dot:
    left: Form
    right: Form

    def __str__(self):
        return render_category(self)


Form = At | Slash | Backslash | Dot


def degree_formula(f: Form) -> int:
    match f:
        case At():
            return 1
        case Slash(a, b) | Backslash(a, b) | Dot(a, b):
            return 1 + max(degree_formula(a), degree_formula(b))
    raise TypeError(f'not a form: {f!r}')


def is_sub_formula(a: Form, b: Form) -> bool:
    """True iff a occurs as a subtree of b (reflexive)"""
    if a == b:
        return True
    match b:
        case Slash(x, y) | Backslash(x, y) | Dot(x, y):
            return is_sub_formula(a, x) or is_sub_formula(a, y)
    return False


def sub_formulas(f: Form) -> list[Form]:
    """All sub-formulas of f, preorder, without repeats"""
    seen = {}
    stack = [f]
    while stack:
        g = stack.pop()
        if g in seen:
            continue
        seen[g] = None
        match g:
            case Slash(x, y) | Backslash(x, y) | Dot(x, y):
                stack.extend((y, x))
    return list(seen)


def atoms(f: Form) -> set[str]:
    return {g.name for g in sub_formulas(f) if isinstance(g, At)}


def connective_count(f: Form) -> int:
    match f:
        case At():
            return 0
        case Slash(a, b) | Backslash(a, b) | Dot(a, b):
            return 1 + connective_count(a) + connective_count(b)
    raise TypeError(f'not a form: {f!r}')


# Precedence, loosest first: "." then "/" then "\".
# "." and "/" associate to the left, "\" to the right.

def render_category(f: Form) -> str:
    match f:
        case At(name):
            return name
        case Dot(left, right):
            return f'{render_category(left)}.{_wrap(right, Dot)}'
        case Slash(num, den):
            return f'{_wrap(num, Dot)}/{_wrap(den, Dot, Slash)}'
        case Backslash(den, num):
            return f'{_wrap(den, Dot, Slash, Backslash)}\\{_wrap(num, Dot, Slash)}'
    raise TypeError(f'not a form: {f!r}')


def _wrap(f: Form, *needs_parens: type) -> str:
    text = render_category(f)
    if isinstance(f, needs_parens):
        return f'({text})'
    return text


def forms_up_to(max_degree: int, atom_names) -> list[Form]:
    """Every form of degree at most max_degree over the atoms, by degree"""
    layers = [[At(name) for name in atom_names]]
    for _ in range(max_degree - 1):
        smaller = [f for layer in layers for f in layer]
        previous = set(layers[-1])
        layer = []
        for left in smaller:
            for right in smaller:
                if left in previous or right in previous:
                    layer.extend((Slash(left, right), Backslash(left, right), Dot(left, right)))
        layers.append(layer)
    return [f for layer in layers for f in layer]
