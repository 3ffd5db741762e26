"""
Categorial lexicons.

Text format, one entry per line:

    # comment
    cosa	S/(S/np)
    guarda	S/inf
    passare	inf/np

The word and its categories are separated by a tab (or, failing that,
the first run of whitespace); several categories are separated by commas.
Repeated words merge their categories in order. A source whose first
non-blank character is `{` is read as JSON {"word": ["cat", ...]}.
"""

import json
import logging

from rest_framework import serializers

from categories.exceptions import CategorySyntaxError, LexiconSyntaxError, UnknownWordError
from categories.forms import Form
from categories.text import parse_category

logger = logging.getLogger(__name__)


class Lexicon:
    """Word to ordered, non-empty tuple of categories"""

    def __init__(self, entries=None):
        self._entries: dict[str, tuple[Form, ...]] = {}
        for word, forms in (entries or {}).items():
            self.add(word, forms)

    def add(self, word: str, forms) -> None:
        merged = list(self._entries.get(word, ()))
        merged.extend(f for f in forms if f not in merged)
        if not merged:
            raise ValueError(f'no categories for {word!r}')
        self._entries[word] = tuple(merged)

    def categories(self, word: str) -> tuple[Form, ...]:
        try:
            return self._entries[word]
        except KeyError:
            raise UnknownWordError([word]) from None

    def check_words(self, words) -> None:
        unknown = [w for w in dict.fromkeys(words) if w not in self._entries]
        if unknown:
            raise UnknownWordError(unknown)

    @property
    def words(self) -> list[str]:
        return list(self._entries)

    def __contains__(self, word):
        return word in self._entries

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        return isinstance(other, Lexicon) and self._entries == other._entries

    def __repr__(self):
        return f'Lexicon({len(self)} words)'

    def to_dict(self):
        return {word: [str(f) for f in forms] for word, forms in self._entries.items()}


class LexiconSerializer(serializers.Serializer):
    entries = serializers.DictField(
        child=serializers.ListField(child=serializers.CharField(), allow_empty=False)
    )


def load_lexicon(source: str) -> Lexicon:
    if source.lstrip().startswith('{'):
        return _load_json(source)
    lexicon = Lexicon()
    for number, raw in enumerate(source.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        separator = '\t' if '\t' in line else None
        word, rest = (line.split(separator, 1) + [''])[:2]
        word, rest = word.strip(), rest.strip()
        if not rest:
            raise LexiconSyntaxError(number, f'no category given for {word!r}')
        lexicon.add(word, [_category(text, number) for text in rest.split(',')])
    logger.debug('lexicon with %d words', len(lexicon))
    return lexicon


def _load_json(source):
    try:
        data = json.loads(source)
    except json.JSONDecodeError as exc:
        raise LexiconSyntaxError(exc.lineno, exc.msg) from None
    serializer = LexiconSerializer(data={'entries': data})
    if not serializer.is_valid():
        raise LexiconSyntaxError(None, f'bad JSON lexicon: {serializer.errors["entries"]}')
    lexicon = Lexicon()
    for word, texts in serializer.validated_data['entries'].items():
        lexicon.add(word, [_category(text, None) for text in texts])
    return lexicon


def _category(text, line):
    try:
        return parse_category(text.strip())
    except CategorySyntaxError as exc:
        raise LexiconSyntaxError(line, str(exc)) from None


def load_lexicon_file(path) -> Lexicon:
    with open(path, encoding='utf-8') as f:
        lexicon = load_lexicon(f.read())
    logger.info('loaded %d words from %s', len(lexicon), path)
    return lexicon
