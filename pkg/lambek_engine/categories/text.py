"""
Text syntax for categories, terms and sequents.

    expr       := dotterm ("," dotterm)*      comma, left-assoc (terms only)
    dotterm    := slashterm ("." slashterm)*  left-assoc
    slashterm  := bslashterm ("/" bslashterm)*  left-assoc
    bslashterm := atomterm ("\\" bslashterm)?   right-assoc
    atomterm   := ATOM | "(" expr ")"

The parser is generic over a builder, so the same grammar reads ground
categories here and rule patterns in sequents.patterns.
"""

import re

from .exceptions import CategorySyntaxError
from .forms import At, Backslash, Dot, Form, Slash
from .terms import Comma, OneForm, Term

TURNSTILE = '|-'

_TOKEN = re.compile(r'\s*(?:(?P<punct>[()/\\.,])|(?P<atom>[^\s()/\\.,]+))')


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise CategorySyntaxError('unexpected character', text, pos)
            break
        kind = 'atom' if m.group('atom') else m.group('punct')
        value = m.group('atom') or m.group('punct')
        tokens.append((kind, value, m.start(kind if kind == 'atom' else 'punct')))
        pos = m.end()
    return tokens


class CategoryBuilder:
    """Builds ground Forms and Terms"""

    def atom(self, name, pos):
        return At(name)

    def connective(self, op, left, right):
        if op == '/':
            return Slash(left, right)
        if op == '\\':
            return Backslash(left, right)
        return Dot(left, right)

    def comma(self, left, right):
        return Comma(self.as_term(left), self.as_term(right))

    def is_structure(self, node):
        return isinstance(node, Comma)

    def as_term(self, node):
        return node if isinstance(node, Comma) else OneForm(node)


class _Parser:

    def __init__(self, text, builder):
        self.text = text
        self.builder = builder
        self.tokens = tokenize(text)
        self.index = 0

    def peek(self):
        if self.index < len(self.tokens):
            return self.tokens[self.index]
        return ('end', '', len(self.text))

    def take(self, kind):
        token = self.peek()
        if token[0] != kind:
            expected = 'a category' if kind == 'atom' else repr(kind)
            found = 'end of input' if token[0] == 'end' else repr(token[1])
            raise CategorySyntaxError(f'expected {expected}, found {found}', self.text, token[2])
        self.index += 1
        return token

    def parse(self):
        node = self.expr()
        token = self.peek()
        if token[0] != 'end':
            raise CategorySyntaxError(f'unexpected {token[1]!r}', self.text, token[2])
        return node

    def expr(self):
        node = self.dotterm()
        while self.peek()[0] == ',':
            self.take(',')
            node = self.builder.comma(node, self.dotterm())
        return node

    def operand(self, node, pos):
        if self.builder.is_structure(node):
            raise CategorySyntaxError('bracketed term used inside a category', self.text, pos)
        return node

    def dotterm(self):
        pos = self.peek()[2]
        node = self.slashterm()
        while self.peek()[0] == '.':
            _, _, op_pos = self.take('.')
            right = self.slashterm()
            node = self.builder.connective('.', self.operand(node, pos), self.operand(right, op_pos + 1))
        return node

    def slashterm(self):
        pos = self.peek()[2]
        node = self.bslashterm()
        while self.peek()[0] == '/':
            _, _, op_pos = self.take('/')
            right = self.bslashterm()
            node = self.builder.connective('/', self.operand(node, pos), self.operand(right, op_pos + 1))
        return node

    def bslashterm(self):
        pos = self.peek()[2]
        node = self.atomterm()
        if self.peek()[0] == '\\':
            _, _, op_pos = self.take('\\')
            right = self.bslashterm()
            node = self.builder.connective('\\', self.operand(node, pos), self.operand(right, op_pos + 1))
        return node

    def atomterm(self):
        kind, value, pos = self.peek()
        if kind == '(':
            self.take('(')
            node = self.expr()
            self.take(')')
            return node
        self.take('atom')
        return self.builder.atom(value, pos)


def parse_with(text, builder):
    return _Parser(text, builder).parse()


def parse_category(text: str) -> Form:
    node = parse_with(text, CategoryBuilder())
    if isinstance(node, Comma):
        raise CategorySyntaxError('expected a category, found a bracketed term', text, 0)
    return node


def parse_term(text: str) -> Term:
    builder = CategoryBuilder()
    return builder.as_term(parse_with(text, builder))


def parse_sequent_text(text: str) -> tuple[Term, Form]:
    """Split "TERM |- FORM" into its antecedent and succedent"""
    ante, sep, succ = text.rpartition(TURNSTILE)
    if not sep:
        raise CategorySyntaxError(f'missing {TURNSTILE!r}', text, len(text))
    return parse_term(ante), parse_category(succ)
