"""
JSON formats for extensions and gentzen proof trees
"""

import json
import logging
from pathlib import Path

from rest_framework import serializers

from categories.exceptions import ExtensionError
from categories.text import parse_category, parse_term

from .dertree import Der, Dertree, Rule, Sequent, Unf
from .extensions import BUILTIN_EXTENSIONS, Extension, StructRule

logger = logging.getLogger(__name__)


class StructRuleSerializer(serializers.Serializer):
    """One rewrite rule of an extension file"""
    name = serializers.CharField()
    lhs = serializers.CharField()
    rhs = serializers.CharField()


class ExtensionSerializer(serializers.Serializer):
    """Extension file: {"name", "cond_cut", "rules": [...]}"""
    name = serializers.CharField()
    cond_cut = serializers.BooleanField(default=False)
    rules = StructRuleSerializer(many=True)

    def validate_rules(self, value):
        names = [rule['name'] for rule in value]
        if len(names) != len(set(names)):
            raise serializers.ValidationError('rule names must be unique')
        return value


class SequentSerializer(serializers.Serializer):
    ext = serializers.CharField()
    ante = serializers.CharField()
    succ = serializers.CharField()


class DerSerializer(serializers.Serializer):
    seq = SequentSerializer()
    rule = serializers.ChoiceField(choices=[rule.value for rule in Rule])
    children = serializers.ListField(child=serializers.DictField(), default=list)


class UnfSerializer(serializers.Serializer):
    seq = SequentSerializer()


class DertreeSerializer(serializers.Serializer):
    """Exactly one of "der" or "unf" """
    der = DerSerializer(required=False)
    unf = UnfSerializer(required=False)

    def validate(self, attrs):
        if len(attrs) != 1:
            raise serializers.ValidationError('a proof node needs exactly one of "der" or "unf"')
        return attrs


def extension_from_dict(data: dict) -> Extension:
    serializer = ExtensionSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    values = serializer.validated_data
    rules = tuple(StructRule.from_text(r['name'], r['lhs'], r['rhs']) for r in values['rules'])
    return Extension(values['name'], rules, cond_cut=values['cond_cut'])


def load_extension_file(path) -> Extension:
    try:
        with open(path, encoding='utf-8') as f:
            data = json.load(f)
    except (OSError, ValueError) as exc:
        raise ExtensionError(f'cannot read extension file {path}: {exc}') from exc
    try:
        ext = extension_from_dict(data)
    except serializers.ValidationError as exc:
        raise ExtensionError(f'invalid extension file {path}: {exc.detail}') from exc
    logger.info('loaded extension %s with %d rules from %s', ext.name, len(ext.rules), path)
    return ext


def resolve_extension(name: str, known: dict[str, Extension] | None = None) -> Extension:
    """A built-in name, a name from `known`, or @path to an extension file"""
    if name.startswith('@'):
        return load_extension_file(Path(name[1:]))
    if known and name in known:
        return known[name]
    try:
        return BUILTIN_EXTENSIONS[name]
    except KeyError:
        choices = ', '.join(BUILTIN_EXTENSIONS)
        raise ExtensionError(f'unknown extension {name!r}; use one of {choices} or @file.json') from None


def sequent_from_dict(data: dict, known: dict[str, Extension] | None = None) -> Sequent:
    serializer = SequentSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    values = serializer.validated_data
    return Sequent(resolve_extension(values['ext'], known),
                   parse_term(values['ante']),
                   parse_category(values['succ']))


def dertree_from_dict(data: dict, known: dict[str, Extension] | None = None) -> Dertree:
    """
    Rebuild a Dertree from its JSON form. Extension names are looked up in
    `known` first, then among the built-ins; the tree is not checked.
    """
    serializer = DertreeSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    values = serializer.validated_data
    if 'unf' in values:
        return Unf(sequent_from_dict(data['unf']['seq'], known))
    node = values['der']
    return Der(sequent_from_dict(data['der']['seq'], known),
               Rule(node['rule']),
               tuple(dertree_from_dict(child, known) for child in node['children']))
