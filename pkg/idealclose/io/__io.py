# -*- coding: utf-8 -*-
from __future__ import absolute_import
from __future__ import division
from __future__ import print_function
from __future__ import unicode_literals

range = getattr(__builtins__, 'xrange', range)
# end of py2 compatability boilerplate

__all__ = [
    'to_json',
    'from_json',
    'to_jsonl',
    'from_jsonl',
    'to_disk',
    'from_disk',
]

import json
from fractions import Fraction

import numpy as np

from idealclose import core


# Supported file extensions
SUPPORTED_EXTS = set([
    'json',
    'jsonl',
])

# Supported file formats
SUPPORTED_FORMATS = set([
    'json',
    'jsonl',
])


def JSONSerializer(obj):
    """
    Default JSON serializer for numpy values, fractions and the algebraic
    objects that appear in reports (written by their printed form).
    """
    if type(obj).__module__ == np.__name__:
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        else:
            return obj.item()

    if isinstance(obj, Fraction):
        return str(obj)

    if isinstance(obj, (set, frozenset)):
        return sorted(obj)

    if hasattr(obj, 'ring') or hasattr(obj, 'variables'):
        return str(obj)

    raise TypeError('Unknown type:', type(obj))


def _is_record(obj):
    return core.is_report_obj(obj) or core.is_reduction_report_obj(obj) or (
        isinstance(obj, dict) and 'class' in obj)


def to_json(record):
    """
    Converts a report into a deterministic JSON string: keys are sorted and
    witness lists keep their computed order.

    Parameters
    ----------
    record : dict
        A CheckReport, ReductionReport or other tagged result.

    Returns
    -------
    str :
        The record as a JSON formatted string.
    """
    if not _is_record(record):
        raise ValueError('record is expected to be a report data structure')

    return json.dumps(record, default=JSONSerializer, sort_keys=True)


def from_json(text):
    """
    Converts a JSON string (or open file) back into a report dict.
    """
    if hasattr(text, 'read'):
        text = text.read()

    record = json.loads(text)
    if not _is_record(record):
        raise ValueError('JSON is not a report data structure!')

    return record


def to_jsonl(records):
    """
    One JSON document per line, in the given order.
    """
    return ''.join('{}\n'.format(to_json(r)) for r in records)


def from_jsonl(text):
    if hasattr(text, 'read'):
        text = text.read()

    return [from_json(line) for line in text.splitlines() if line.strip()]


def add_extension_to_path(file_path, extension):
    """
    Utility function to add the file extension when it is not provided by the
    user in the file path.

    Parameters
    ----------
    file_path : str
        The file path.

    Returns
    -------
    str :
        The file path with the extension appended.
    """
    end = '.{}'.format(extension)
    if not file_path.endswith(end):
        file_path = '{}{}'.format(file_path, end)

    return file_path


def infer_file_format(file_path):
    """
    Attempts to determine the file type based on the extension. The extension
    is assumed to be the last dot suffix.
    """
    pieces = file_path.split('.')
    extension = pieces[-1].lower()
    if extension not in SUPPORTED_EXTS:
        raise RuntimeError('Unsupported file type with extension {}'.format(extension))

    return extension


def to_disk(records, file_path, format='jsonl'):
    """
    Writes reports to disk. jsonl writes a list of records one per line,
    json writes a single record. When the file path does not include the
    extension, it is appended for you.

    Parameters
    ----------
    records : list, dict
        Reports to write.
    file_path : str
        The path to write the file to.
    format : str, default jsonl
        Options include json, jsonl.

    Returns
    -------
    str : file_path
        The path written.
    """
    if format not in SUPPORTED_FORMATS:
        raise ValueError('Unsupported file format {} given.'.format(format))

    file_path = add_extension_to_path(file_path, format)

    with open(file_path, 'w') as out:
        if format == 'json':
            out.write(to_json(records))
        else:
            if isinstance(records, dict):
                records = [records]

            out.write(to_jsonl(records))

    return file_path


def from_disk(file_path, format='infer'):
    """
    Reads reports from disk; the format is inferred from the extension by
    default.

    Returns
    -------
    dict, list :
        A single record for json, a list of records for jsonl.
    """
    if format != 'infer':
        if format not in SUPPORTED_FORMATS:
            raise ValueError('format supplied {} is not supported'.format(format))
    else:
        format = infer_file_format(file_path)

    with open(file_path) as f:
        if format == 'json':
            return from_json(f)

        return from_jsonl(f)
