"""
Axiomatic arrow calculus as checkable proof objects.

An ArrowProof node claims `source -> target` and is one of the seven
primitive rules:

    One        A -> A
    Beta       (A.B) -> C   gives  A -> C/B
    BetaInv    A -> C/B     gives  (A.B) -> C
    Gamma      (A.B) -> C   gives  B -> A\\C
    GammaInv   B -> A\\C    gives  (A.B) -> C
    Comp       A -> M, M -> C  gives  A -> C     (M stored as `mid`)
    Ext        A -> B when the arrow extension relates A to B

The monotonicity combinators and the bounded search below only ever
assemble these seven, so anything they build passes check_arrow_proof.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass

from categories.exceptions import InvalidPathError, ProofCheckError
from categories.forms import Backslash, Dot, Form, Slash
from categories.terms import Path, Step
from sequents.extensions import ArrowExtension, arrow_relating_rule, arrow_rewrites
from sequents.render import render_tree

logger = logging.getLogger(__name__)


class ArrowKind(enum.StrEnum):
    ONE = 'One'
    BETA = 'Beta'
    BETA_INV = 'BetaInv'
    GAMMA = 'Gamma'
    GAMMA_INV = 'GammaInv'
    COMP = 'Comp'
    EXT = 'Ext'


ARROW_ARITY = {
    ArrowKind.ONE: 0,
    ArrowKind.EXT: 0,
    ArrowKind.BETA: 1,
    ArrowKind.BETA_INV: 1,
    ArrowKind.GAMMA: 1,
    ArrowKind.GAMMA_INV: 1,
    ArrowKind.COMP: 2,
}


@dataclass(frozen=True)
class ArrowProof:
    kind: ArrowKind
    source: Form
    target: Form
    children: tuple[ArrowProof, ...] = ()
    mid: Form | None = None
    rule: str | None = None

    def __str__(self):
        return f'{self.source} -> {self.target}'

    def to_dict(self):
        return {
            'kind': str(self.kind),
            'source': str(self.source),
            'target': str(self.target),
            'children': [c.to_dict() for c in self.children],
            'mid': None if self.mid is None else str(self.mid),
            'rule': self.rule,
        }


# -- primitive constructors ---------------------------------------------------

def one(a: Form) -> ArrowProof:
    return ArrowProof(ArrowKind.ONE, a, a)


def beta(p: ArrowProof) -> ArrowProof:
    """(A.B) -> C  gives  A -> C/B"""
    if not isinstance(p.source, Dot):
        raise ValueError(f'beta needs a product source, got {p.source}')
    return ArrowProof(ArrowKind.BETA, p.source.left, Slash(p.target, p.source.right), (p,))


def beta_inv(p: ArrowProof) -> ArrowProof:
    """A -> C/B  gives  (A.B) -> C"""
    if not isinstance(p.target, Slash):
        raise ValueError(f'beta_inv needs a slash target, got {p.target}')
    return ArrowProof(ArrowKind.BETA_INV, Dot(p.source, p.target.den), p.target.num, (p,))


def gamma(p: ArrowProof) -> ArrowProof:
    """(A.B) -> C  gives  B -> A\\C"""
    if not isinstance(p.source, Dot):
        raise ValueError(f'gamma needs a product source, got {p.source}')
    return ArrowProof(ArrowKind.GAMMA, p.source.right, Backslash(p.source.left, p.target), (p,))


def gamma_inv(p: ArrowProof) -> ArrowProof:
    """B -> A\\C  gives  (A.B) -> C"""
    if not isinstance(p.target, Backslash):
        raise ValueError(f'gamma_inv needs a backslash target, got {p.target}')
    return ArrowProof(ArrowKind.GAMMA_INV, Dot(p.target.den, p.source), p.target.num, (p,))


def comp(p: ArrowProof, q: ArrowProof) -> ArrowProof:
    if p.target != q.source:
        raise ValueError(f'cannot compose {p} with {q}')
    return ArrowProof(ArrowKind.COMP, p.source, q.target, (p, q), mid=p.target)


def ext_leaf(rule: str | None, a: Form, b: Form) -> ArrowProof:
    return ArrowProof(ArrowKind.EXT, a, b, rule=rule)


# -- checking -----------------------------------------------------------------

class _Mismatch(Exception):
    pass


def _require(condition, reason):
    if not condition:
        raise _Mismatch(reason)


def check_arrow_node(x: ArrowExtension, p: ArrowProof) -> None:
    try:
        kind = ArrowKind(p.kind)
    except ValueError:
        raise ProofCheckError(p.kind, 'unknown arrow rule') from None
    if len(p.children) != ARROW_ARITY[kind]:
        raise ProofCheckError(kind, f'expected {ARROW_ARITY[kind]} premises, found {len(p.children)}')
    try:
        _check_kind(x, kind, p)
    except _Mismatch as exc:
        raise ProofCheckError(kind, str(exc)) from None


def _check_kind(x, kind, p):
    src, tgt = p.source, p.target
    match kind:
        case ArrowKind.ONE:
            _require(src == tgt, 'source and target differ')
        case ArrowKind.BETA:
            (c,) = p.children
            _require(isinstance(tgt, Slash), 'target is not C/B')
            _require(c.source == Dot(src, tgt.den), 'premise source is not A.B')
            _require(c.target == tgt.num, 'premise target is not C')
        case ArrowKind.BETA_INV:
            (c,) = p.children
            _require(isinstance(src, Dot), 'source is not A.B')
            _require(c.source == src.left, 'premise source is not A')
            _require(c.target == Slash(tgt, src.right), 'premise target is not C/B')
        case ArrowKind.GAMMA:
            (c,) = p.children
            _require(isinstance(tgt, Backslash), 'target is not A\\C')
            _require(c.source == Dot(tgt.den, src), 'premise source is not A.B')
            _require(c.target == tgt.num, 'premise target is not C')
        case ArrowKind.GAMMA_INV:
            (c,) = p.children
            _require(isinstance(src, Dot), 'source is not A.B')
            _require(c.source == src.right, 'premise source is not B')
            _require(c.target == Backslash(src.left, tgt), 'premise target is not A\\C')
        case ArrowKind.COMP:
            first, second = p.children
            _require(p.mid is not None, 'composition without an intermediate form')
            _require(first.source == src and first.target == p.mid, 'first premise is not A -> mid')
            _require(second.source == p.mid and second.target == tgt, 'second premise is not mid -> C')
        case ArrowKind.EXT:
            _require(arrow_relating_rule(x, src, tgt) is not None,
                     f'no rule of {x.name} relates {src} to {tgt}')


def check_arrow_proof(x: ArrowExtension, p: ArrowProof) -> None:
    """Raises ProofCheckError for the first invalid node, preorder"""
    _check_tree(x, p, ())


def _check_tree(x, p, where):
    try:
        check_arrow_node(x, p)
    except ProofCheckError as exc:
        raise ProofCheckError(exc.rule, exc.reason, where) from None
    for i, child in enumerate(p.children):
        _check_tree(x, child, where + (i,))


# -- form positions -------------------------------------------------------------

def form_at(f: Form, path: Path) -> Form:
    for index, step in enumerate(path):
        if not isinstance(f, Dot):
            raise InvalidPathError(index, step)
        f = f.left if step == Step.LEFT else f.right
    return f


def replace_form_at(f: Form, path: Path, new: Form) -> Form:
    if not path:
        return new
    if not isinstance(f, Dot):
        raise InvalidPathError(0, path[0])
    if path[0] == Step.LEFT:
        return Dot(replace_form_at(f.left, path[1:], new), f.right)
    return Dot(f.left, replace_form_at(f.right, path[1:], new))


def dot_positions(f: Form, prefix: Path = ()):
    """Paths through the product structure of f, preorder"""
    yield prefix, f
    if isinstance(f, Dot):
        yield from dot_positions(f.left, prefix + (Step.LEFT,))
        yield from dot_positions(f.right, prefix + (Step.RIGHT,))


# -- monotonicity combinators ---------------------------------------------------

def mono_dot(left: ArrowProof, right: ArrowProof) -> ArrowProof:
    """A -> C and B -> D give A.B -> C.D"""
    cd = Dot(left.target, right.target)
    into_slash = comp(left, beta(one(cd)))
    into_backslash = comp(right, gamma(beta_inv(into_slash)))
    return gamma_inv(into_backslash)


def mono_slash_left(p: ArrowProof, b: Form) -> ArrowProof:
    """C' -> C gives C'/B -> C/B"""
    return beta(comp(beta_inv(one(Slash(p.source, b))), p))


def antimono_slash_right(p: ArrowProof, c: Form) -> ArrowProof:
    """B' -> B gives C/B -> C/B'"""
    f = Slash(c, p.target)
    return beta(comp(mono_dot(one(f), p), beta_inv(one(f))))


def antimono_backslash_left(p: ArrowProof, c: Form) -> ArrowProof:
    """A -> A' gives A'\\C -> A\\C"""
    f = Backslash(p.target, c)
    return gamma(comp(mono_dot(p, one(f)), gamma_inv(one(f))))


def mono_backslash_right(p: ArrowProof, a: Form) -> ArrowProof:
    """C' -> C gives A\\C' -> A\\C"""
    return gamma(comp(gamma_inv(one(Backslash(a, p.source))), p))


def mono_context(f: Form, path: Path, q: ArrowProof) -> ArrowProof:
    """f with q.source at path  ->  f with q.target at path"""
    if not path:
        if f != q.source:
            raise ValueError(f'{q.source} is not the subform of {f} at the given path')
        return q
    if not isinstance(f, Dot):
        raise InvalidPathError(0, path[0])
    if path[0] == Step.LEFT:
        return mono_dot(mono_context(f.left, path[1:], q), one(f.right))
    return mono_dot(one(f.left), mono_context(f.right, path[1:], q))


def apply_slash(f: Slash, q: ArrowProof) -> ArrowProof:
    """Δ -> B gives (C/B).Δ -> C"""
    return comp(mono_dot(one(f), q), beta_inv(one(f)))


def apply_backslash(f: Backslash, q: ArrowProof) -> ArrowProof:
    """Δ -> B gives Δ.(B\\C) -> C"""
    return comp(mono_dot(q, one(f)), gamma_inv(one(f)))


# -- bounded search -------------------------------------------------------------

def arrow_search(x: ArrowExtension, source: Form, target: Form, depth: int = 6) -> ArrowProof | None:
    """
    First arrow proof of source -> target found within `depth` search
    steps. Products in the source act as structure: the Left steps and
    extension rewrites reach inside them through mono_context.
    """
    memo = {}

    def search(src, tgt, d):
        if d < 1:
            return None
        key = (src, tgt, d)
        if key not in memo:
            memo[key] = attempt(src, tgt, d)
        return memo[key]

    def attempt(src, tgt, d):
        if src == tgt:
            return one(src)
        match tgt:
            case Slash(c, b):
                p = search(Dot(src, b), c, d - 1)
                if p:
                    return beta(p)
            case Backslash(a, c):
                p = search(Dot(a, src), c, d - 1)
                if p:
                    return gamma(p)
            case Dot(c, e) if isinstance(src, Dot):
                left = search(src.left, c, d - 1)
                right = left and search(src.right, e, d - 1)
                if right:
                    return mono_dot(left, right)
        for path, sub in dot_positions(src):
            match sub:
                case Dot(Slash(c, b) as f, delta):
                    local = lambda q, f=f: apply_slash(f, q)
                    found = _left_step(search, src, tgt, d, path, delta, b, c, local)
                    if found:
                        return found
        for path, sub in dot_positions(src):
            match sub:
                case Dot(delta, Backslash(b, c) as f):
                    local = lambda q, f=f: apply_backslash(f, q)
                    found = _left_step(search, src, tgt, d, path, delta, b, c, local)
                    if found:
                        return found
        for path, sub in dot_positions(src):
            for rewritten, name in arrow_rewrites(x, sub):
                rest = search(replace_form_at(src, path, rewritten), tgt, d - 1)
                if rest:
                    return comp(mono_context(src, path, ext_leaf(name, sub, rewritten)), rest)
        return None

    proof = search(source, target, depth)
    logger.debug('arrow search %s -> %s at depth %d: %s (%d subgoals)',
                 source, target, depth, 'found' if proof else 'none', len(memo))
    return proof


def _left_step(search, src, tgt, d, path, delta, b, c, local):
    q = search(delta, b, d - 1)
    if not q:
        return None
    rest = search(replace_form_at(src, path, c), tgt, d - 1)
    if not rest:
        return None
    return comp(mono_context(src, path, local(q)), rest)


def render_arrow_proof(p: ArrowProof) -> str:
    def label(node):
        extra = f' via {node.mid}' if node.mid is not None else ''
        if node.rule:
            extra += f' ({node.rule})'
        return f'{node}   [{node.kind}{extra}]'
    return render_tree(p, label, lambda node: node.children)
