"""
Engine error hierarchy.

Every error raised on bad input or a failed check derives from LambekError,
so management commands can map the whole family onto exit codes.
"""


class LambekError(Exception):
    """Base class for engine errors"""


class CategorySyntaxError(LambekError, ValueError):
    """Malformed category, term, sequent or rule text"""

    def __init__(self, message, text='', position=0):
        self.text = text
        self.position = position
        super().__init__(f'{message} at position {position}: {text!r}')


class InvalidPathError(LambekError):
    """A path step leaves the term it addresses"""

    def __init__(self, step_index, step):
        self.step_index = step_index
        self.step = step
        super().__init__(f'invalid path: step {step_index} ({step}) leaves the term')


class ExtensionError(LambekError):
    """Unknown, malformed or inapplicable structural extension"""


class UnfinishedProofError(LambekError):
    """Operation requires a proof without Unf leaves"""


class ProofCheckError(LambekError):
    """A proof node does not instantiate its rule"""

    def __init__(self, rule, reason, tree_path=()):
        self.rule = rule
        self.reason = reason
        self.tree_path = tuple(tree_path)
        super().__init__(self.describe())

    def describe(self):
        where = '/'.join(str(i) for i in self.tree_path) or 'root'
        return f'{self.rule} at {where}: {self.reason}'

    def at(self, index):
        """Same error, one level further from the root"""
        return ProofCheckError(self.rule, self.reason, (index, *self.tree_path))


class PreconditionError(LambekError):
    """A documented precondition does not hold"""

    def __init__(self, precondition, message=''):
        self.precondition = precondition
        super().__init__(message or f'precondition violated: {precondition}')


class SearchBudgetError(LambekError):
    """Proof search exceeded its expansion budget"""


class ExtensionObligationError(LambekError):
    """Arrow extension leaves with no gentzen proof"""

    def __init__(self, pairs):
        self.pairs = list(pairs)
        listed = '; '.join(f'{a} -> {b}' for a, b in self.pairs)
        super().__init__(f'unsatisfied extension obligations: {listed}')


class UnknownWordError(LambekError):
    """Sentence words missing from the lexicon"""

    def __init__(self, words):
        self.words = list(words)
        super().__init__(f'unknown words: {", ".join(self.words)}')


class LexiconSyntaxError(LambekError):
    """Malformed lexicon line"""

    def __init__(self, line, message):
        self.line = line
        super().__init__(message if line is None else f'line {line}: {message}')
