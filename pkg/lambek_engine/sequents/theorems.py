"""
Catalogue of derived theorems.

Each entry is a schema `A |- B` over metavariables A, B, C, ... with the
weakest built-in extension that proves it. Conditional theorems (those
with premises) appear as ground instances whose premises hold, written
over lowercase atoms.
"""

import itertools
from collections.abc import Iterator
from dataclasses import dataclass

from categories.forms import At, Form
from categories.terms import OneForm
from categories.text import TURNSTILE

from .dertree import Sequent
from .extensions import BUILTIN_EXTENSIONS
from .patterns import FormPattern, form_variables, instantiate_form, parse_form_pattern


@dataclass(frozen=True)
class Theorem:
    name: str
    antecedent: FormPattern
    succedent: FormPattern
    ext_name: str
    group: str

    @classmethod
    def from_text(cls, name, text, ext_name, group):
        ante, _, succ = text.rpartition(TURNSTILE)
        return cls(name, parse_form_pattern(ante), parse_form_pattern(succ), ext_name, group)

    @property
    def variables(self):
        return sorted(form_variables(self.antecedent) | form_variables(self.succedent))

    @property
    def extension(self):
        return BUILTIN_EXTENSIONS[self.ext_name]


def instantiate(theorem: Theorem, forms: dict[str, Form] | None = None) -> Sequent:
    """Ground sequent; unassigned metavariables become their lowercase atom"""
    sigma = {v: At(v.lower()) for v in theorem.variables}
    sigma.update(forms or {})
    return Sequent(theorem.extension,
                   OneForm(instantiate_form(theorem.antecedent, sigma)),
                   instantiate_form(theorem.succedent, sigma))


def instances(theorem: Theorem, atoms: list[str]) -> Iterator[Sequent]:
    """One sequent per assignment of the given atoms to the metavariables"""
    names = theorem.variables
    for choice in itertools.product(atoms, repeat=len(names)):
        yield instantiate(theorem, {v: At(a) for v, a in zip(names, choice)})


_CATALOGUE = [
    # any extension
    ('application', 'A/B.B |- A', 'NL', 'general'),
    ("application'", 'B.(B\\A) |- A', 'NL', 'general'),
    ('coApplication', 'A |- (A.B)/B', 'NL', 'general'),
    ("coApplication'", 'A |- B\\(B.A)', 'NL', 'general'),
    ('lifting', 'A |- B/(A\\B)', 'NL', 'general'),
    ("lifting'", 'A |- (B/A)\\B', 'NL', 'general'),
    ('RightSlashDot', 'a.b |- (a.b.c)/c', 'NL', 'general'),
    ('RightBackslashDot', 'b.c |- a\\(a.(b.c))', 'NL', 'general'),
    ('monotonicity', '((a/b).b).c |- a.c', 'NL', 'general'),
    ('isotonicity', '((a/b).b)/c |- a/c', 'NL', 'general'),
    ("isotonicity'", 'c\\((a/b).b) |- c\\a', 'NL', 'general'),
    ('antitonicity', 'c/a |- c/((a/b).b)', 'NL', 'general'),
    ("antitonicity'", 'a\\c |- ((a/b).b)\\c', 'NL', 'general'),
    # associative
    ('mainGeach', 'A/B |- (A/C)/(B/C)', 'L', 'L'),
    ("mainGeach'", 'B\\A |- (C\\B)\\(C\\A)', 'L', 'L'),
    ('secondaryGeach', 'B/C |- (A/B)\\(A/C)', 'L', 'L'),
    ("secondaryGeach'", 'C\\B |- (C\\A)/(B\\A)', 'L', 'L'),
    ('composition', '(A/B).(B/C) |- A/C', 'L', 'L'),
    ("composition'", '(C\\B).(B\\A) |- C\\A', 'L', 'L'),
    ('restructuring', '(A\\B)/C |- A\\(B/C)', 'L', 'L'),
    ("restructuring'", 'A\\(B/C) |- (A\\B)/C', 'L', 'L'),
    ('currying', 'A/(B.C) |- (A/C)/B', 'L', 'L'),
    ("currying'", '(A/C)/B |- A/(B.C)', 'L', 'L'),
    ('decurrying', '(A.B)\\C |- B\\(A\\C)', 'L', 'L'),
    ("decurrying'", 'B\\(A\\C) |- (A.B)\\C', 'L', 'L'),
    # commutative
    ('exchange', 'A/B |- B\\A', 'NLP', 'NLP'),
    ("exchange'", 'B\\A |- A/B', 'NLP', 'NLP'),
    ('preposing', 'A |- B/(B/A)', 'NLP', 'NLP'),
    ('postposing', 'A |- (A\\B)\\B', 'NLP', 'NLP'),
    ('permutation', 'b |- (b\\c)\\c', 'NLP', 'NLP'),
    # associative and commutative
    ('mixedComposition', '(A/B).(C\\B) |- C\\A', 'LP', 'LP'),
    ("mixedComposition'", '(B/C).(B\\A) |- A/C', 'LP', 'LP'),
    # associative arrow calculus
    ('L_a', 'X |- X', 'NL', 'arrow'),
    ('L_b', 'X.Y.Z |- X.(Y.Z)', 'L', 'arrow'),
    ("L_b'", 'X.(Y.Z) |- X.Y.Z', 'L', 'arrow'),
    ('L_c', 'x |- (x.y)/y', 'NL', 'arrow'),
    ("L_c'", 'y |- x\\(x.y)', 'NL', 'arrow'),
    ('L_d', '(z/y).y |- z', 'NL', 'arrow'),
    ("L_d'", 'x.(x\\z) |- z', 'NL', 'arrow'),
    ('L_e', '(x/y).y |- (x.z)/z', 'NL', 'arrow'),
    ('L_f', 'X |- (X.Y)/Y', 'NL', 'arrow'),
    ('L_g', '(Z/Y).Y |- Z', 'NL', 'arrow'),
    ('L_h', 'Y |- (Z/Y)\\Z', 'NL', 'arrow'),
    ('L_i', '(Z/Y).(Y/X) |- Z/X', 'L', 'arrow'),
    ('L_j', 'Z/Y |- (Z/X)/(Y/X)', 'L', 'arrow'),
    ('L_k', '(X\\Y)/Z |- X\\(Y/Z)', 'L', 'arrow'),
    ("L_k'", 'X\\(Y/Z) |- (X\\Y)/Z', 'L', 'arrow'),
    ('L_l', '(X/Y)/Z |- X/(Z.Y)', 'L', 'arrow'),
    ("L_l'", 'X/(Z.Y) |- (X/Y)/Z', 'L', 'arrow'),
    ('L_m', '((a/b).b).((c/d).d) |- a.c', 'NL', 'arrow'),
    ('L_n', '((a/b).b)/c |- a/((c/d).d)', 'NL', 'arrow'),
]

CATALOGUE = [Theorem.from_text(*row) for row in _CATALOGUE]
THEOREMS = {t.name: t for t in CATALOGUE}
