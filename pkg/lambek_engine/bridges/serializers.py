"""
JSON formats for arrow and natural deduction proofs
"""

from dataclasses import dataclass, field

from rest_framework import serializers

from categories.exceptions import ExtensionError
from categories.terms import path_from_text
from categories.text import parse_category, parse_term
from sequents.extensions import BUILTIN_ARROW_EXTENSIONS, ArrowExtension, Extension
from sequents.serializers import load_extension_file, resolve_extension

from .arrow import ArrowKind, ArrowProof
from .natded import NatDed, NatDedProof, NatRule
from .translate import to_arrow_ext


class ArrowNodeSerializer(serializers.Serializer):
    kind = serializers.ChoiceField(choices=[k.value for k in ArrowKind])
    source = serializers.CharField()
    target = serializers.CharField()
    children = serializers.ListField(child=serializers.DictField(), default=list)
    mid = serializers.CharField(required=False, allow_null=True, default=None)
    rule = serializers.CharField(required=False, allow_null=True, default=None)


class ArrowDocumentSerializer(serializers.Serializer):
    """{"ext": name, "root": node}"""
    ext = serializers.CharField()
    root = serializers.DictField()


class NatDedNodeSerializer(serializers.Serializer):
    rule = serializers.ChoiceField(choices=[r.value for r in NatRule])
    ante = serializers.CharField()
    succ = serializers.CharField()
    form = serializers.CharField(required=False, allow_null=True, default=None)
    path = serializers.RegexField(r'^[LR]*$', required=False, allow_null=True, allow_blank=True, default=None)
    children = serializers.ListField(child=serializers.DictField(), default=list)


class NatDedProofSerializer(serializers.Serializer):
    ext = serializers.CharField()
    root = serializers.DictField()


@dataclass(frozen=True)
class ArrowDocument:
    ext: ArrowExtension
    root: ArrowProof
    # set when the arrow extension was read from a gentzen extension file
    gentzen_ext: Extension | None = field(default=None, compare=False)

    def gentzen_extension(self) -> Extension:
        return self.gentzen_ext or resolve_extension(self.ext.name)

    def to_dict(self):
        return {'ext': self.ext.name, 'root': self.root.to_dict()}


def resolve_arrow_extension(name: str) -> ArrowExtension:
    """A built-in arrow extension, or @path to a gentzen extension file read through to_arrow_ext"""
    if name.startswith('@'):
        return to_arrow_ext(load_extension_file(name[1:]))
    try:
        return BUILTIN_ARROW_EXTENSIONS[name]
    except KeyError:
        choices = ', '.join(BUILTIN_ARROW_EXTENSIONS)
        raise ExtensionError(f'unknown arrow extension {name!r}; use one of {choices} or @file.json') from None


def arrow_proof_from_dict(data: dict) -> ArrowProof:
    serializer = ArrowNodeSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    values = serializer.validated_data
    return ArrowProof(
        ArrowKind(values['kind']),
        parse_category(values['source']),
        parse_category(values['target']),
        tuple(arrow_proof_from_dict(c) for c in values['children']),
        mid=None if values['mid'] is None else parse_category(values['mid']),
        rule=values['rule'],
    )


def arrow_document_from_dict(data: dict, known: dict[str, Extension] | None = None) -> ArrowDocument:
    """`known` maps names to gentzen extensions already loaded, e.g. from --ext @file"""
    serializer = ArrowDocumentSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    values = serializer.validated_data
    name = values['ext']
    root = arrow_proof_from_dict(values['root'])
    if name.startswith('@'):
        gentzen = load_extension_file(name[1:])
        return ArrowDocument(to_arrow_ext(gentzen), root, gentzen)
    if known and name in known:
        return ArrowDocument(to_arrow_ext(known[name]), root, known[name])
    return ArrowDocument(resolve_arrow_extension(name), root)


def natded_from_dict(data: dict) -> NatDed:
    serializer = NatDedNodeSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    values = serializer.validated_data
    return NatDed(
        NatRule(values['rule']),
        parse_term(values['ante']),
        parse_category(values['succ']),
        tuple(natded_from_dict(c) for c in values['children']),
        form=None if values['form'] is None else parse_category(values['form']),
        path=None if values['path'] is None else path_from_text(values['path']),
    )


def natded_proof_from_dict(data: dict) -> NatDedProof:
    serializer = NatDedProofSerializer(data=data)
    serializer.is_valid(raise_exception=True)
    values = serializer.validated_data
    return NatDedProof(resolve_extension(values['ext']), natded_from_dict(values['root']))
