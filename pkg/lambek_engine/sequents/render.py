"""
Proof tree rendering: indented ASCII for every proof kind, bussproofs
LaTeX for gentzen trees.
"""

import logging
from collections.abc import Callable, Sequence

from categories.terms import render_term

from .dertree import Der, Dertree, Sequent

logger = logging.getLogger(__name__)


def render_tree(node, label: Callable, children: Callable[[object], Sequence]) -> str:
    """
    Generic indented layout; `label` gives one line per node, `children`
    its subtrees in order.
    """
    lines = [label(node)]
    _render_children(node, label, children, '', lines)
    return '\n'.join(lines)


def _render_children(node, label, children, indent, lines):
    kids = list(children(node))
    for i, kid in enumerate(kids):
        last = i == len(kids) - 1
        lines.append(f'{indent}{"`-- " if last else "|-- "}{label(kid)}')
        _render_children(kid, label, children, indent + ('    ' if last else '|   '), lines)


def _dertree_label(d):
    if isinstance(d, Der):
        return f'{d.seq}   [{d.rule}]'
    return f'{d.seq}   [?]'


def render_dertree(d: Dertree) -> str:
    return render_tree(d, _dertree_label, lambda n: n.children if isinstance(n, Der) else ())


# -- LaTeX --------------------------------------------------------------------

_LATEX = str.maketrans({
    '\\': r'\backslash ',
    '.': r'\cdot ',
    '_': r'\_',
    '&': r'\&',
    '%': r'\%',
    '#': r'\#',
    '$': r'\$',
    '{': r'\{',
    '}': r'\}',
    '^': r'\mbox{\textasciicircum}',
    '~': r'\mbox{\textasciitilde}',
})


def latex_sequent(s: Sequent) -> str:
    ante = render_term(s.antecedent).translate(_LATEX)
    succ = str(s.succedent).translate(_LATEX)
    return f'{ante} \\vdash {succ}'


def _latex_lines(d, lines):
    if not isinstance(d, Der):
        lines.append(f'\\AxiomC{{${latex_sequent(d.seq)}$}}')
        return
    for child in d.children:
        _latex_lines(child, lines)
    if not d.children:
        lines.append('\\AxiomC{}')
    lines.append(f'\\RightLabel{{\\scriptsize {d.rule}}}')
    inference = 'BinaryInfC' if len(d.children) == 2 else 'UnaryInfC'
    lines.append(f'\\{inference}{{${latex_sequent(d.seq)}$}}')


def latex_dertree(d: Dertree) -> str:
    """A bussproofs prooftree environment; unfinished leaves become bare axioms"""
    lines = ['\\begin{prooftree}']
    _latex_lines(d, lines)
    lines.append('\\end{prooftree}')
    logger.debug('rendered %d LaTeX lines', len(lines))
    return '\n'.join(lines)
