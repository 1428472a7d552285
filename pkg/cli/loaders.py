"""
Reading algebra specs, generator files and maps for the ``tracepi`` command.

A file argument is a path, a name under ``DATA_DIR`` (``algebras/`` or
``generators/``) or an inline JSON document.
"""
import json
import logging
from pathlib import Path

from django.conf import settings
from rest_framework import serializers

from core.exceptions import DimensionMismatchError, InvalidAlgebraError, MultilinearityError
from exactlinalg.matrix import Matrix
from ideals.generators import GeneratorSet, NamedGenerator
from cli.serializers import AlgebraSpecSerializer, GeneratorEntrySerializer, RationalField

logger = logging.getLogger(__name__)


def resolve_path(reference, folder):
    path = Path(reference)
    if path.exists():
        return path
    shipped = Path(settings.DATA_DIR) / folder / reference
    if shipped.exists():
        return shipped
    raise FileNotFoundError(f'no such file: {reference}')


def read_document(reference, folder):
    """Parsed JSON from a path, a shipped data file name or inline JSON text."""
    if reference.lstrip().startswith(('{', '[')):
        return json.loads(reference)
    path = resolve_path(reference, folder)
    logger.debug('reading %s', path)
    with open(path, encoding='utf-8') as handle:
        return json.load(handle)


def load_algebra(reference, sampler):
    """TraceAlgebra from a spec; every failure is reported as InvalidAlgebraError."""
    try:
        document = read_document(reference, 'algebras')
    except (OSError, ValueError) as exc:
        raise InvalidAlgebraError(f'cannot read algebra spec {reference}: {exc}') from exc
    if not isinstance(document, dict):
        raise InvalidAlgebraError(f'algebra spec {reference} must be a JSON object')
    serializer = AlgebraSpecSerializer(data=document, context={'sampler': sampler})
    if not serializer.is_valid():
        raise InvalidAlgebraError(f'invalid algebra spec {reference}: {json.dumps(serializer.errors)}')
    algebra = serializer.save()
    logger.info('loaded %s (dimension %d) from %s', algebra.name, algebra.dim, reference)
    return algebra


def load_generators(reference):
    """GeneratorSet from a JSON list of ``{"name", "polynomial"}`` entries."""
    document = read_document(reference, 'generators')
    if not isinstance(document, list) or not document:
        raise serializers.ValidationError('a generator file is a non-empty JSON list')
    serializer = GeneratorEntrySerializer(data=document, many=True)
    serializer.is_valid(raise_exception=True)
    try:
        generators = [NamedGenerator(e['name'], e['polynomial']) for e in serializer.validated_data]
    except MultilinearityError as exc:
        raise serializers.ValidationError(str(exc)) from exc
    return GeneratorSet(tuple(generators))


def load_map(reference, source, target):
    """Matrix whose row i is the image of source basis element i."""
    document = read_document(reference, 'maps')
    field = serializers.ListField(child=serializers.ListField(child=RationalField()))
    rows = field.run_validation(document)
    if len(rows) != source.dim or any(len(row) != target.dim for row in rows):
        raise DimensionMismatchError(
            f'a map {source.name} -> {target.name} needs {source.dim} rows of {target.dim} entries'
        )
    return Matrix.from_rows(rows, target.dim)
