# SPDX-License-Identifier: BSD-3-Clause
# Copyright (c) 2024 Zetafast contributors
"""Text rendering of results."""

import json
import math
from collections.abc import Iterator, Mapping
from typing import Any

__all__ = [
    'SIGNIFICANT_DIGITS',
    'mapping_to_json',
    'mapping_to_string',
    'value_to_string',
]

SIGNIFICANT_DIGITS = 17


def value_to_string(val: Any) -> str:
    """
    Convert a scalar to a string that parses back to the same value.

    Floats are printed with 17 significant digits, booleans in lower case
    and ``None`` as an empty string.
    """
    if val is None:
        return ''
    if isinstance(val, bool):
        return 'true' if val else 'false'
    if isinstance(val, float):
        return f'{val:.{SIGNIFICANT_DIGITS}g}'
    if isinstance(val, complex):
        return f'{value_to_string(val.real)} {value_to_string(val.imag)}'
    return str(val)


def _flatten(prefix: str, obj: Any) -> Iterator[tuple[str, str]]:
    if isinstance(obj, Mapping):
        for key, value in obj.items():
            yield from _flatten(f'{prefix}.{key}' if prefix else str(key), value)
    elif isinstance(obj, list | tuple):
        for i, value in enumerate(obj):
            yield from _flatten(f'{prefix}[{i}]', value)
    else:
        yield prefix, value_to_string(obj)


def mapping_to_string(mapping: Mapping[str, Any]) -> str:
    """
    Render a nested mapping as ``key = value`` lines.

    Nested keys are joined with ``.``, list items are indexed as ``key[i]``.
    """
    return '\n'.join(f'{key} = {value}' for key, value in _flatten('', mapping))


def _json_float(val: float) -> str:
    if not math.isfinite(val):
        return json.dumps(val)
    text = f'{val:.{SIGNIFICANT_DIGITS}g}'
    # keep floats distinguishable from integers after parsing
    return text if any(c in text for c in '.en') else f'{text}.0'


def _json_lines(obj: Any, indent: str, level: int) -> str:
    inner = indent * (level + 1)
    if isinstance(obj, Mapping):
        if not obj:
            return '{}'
        items = (
            f'{inner}{json.dumps(str(key))}: {_json_lines(value, indent, level + 1)}'
            for key, value in obj.items()
        )
        return '{\n' + ',\n'.join(items) + '\n' + indent * level + '}'
    if isinstance(obj, list | tuple):
        if not obj:
            return '[]'
        items = (f'{inner}{_json_lines(value, indent, level + 1)}' for value in obj)
        return '[\n' + ',\n'.join(items) + '\n' + indent * level + ']'
    if isinstance(obj, float):
        return _json_float(obj)
    return json.dumps(obj)


def mapping_to_json(mapping: Mapping[str, Any], indent: int = 2) -> str:
    """
    Render a nested mapping as JSON with floats in 17 significant digits.

    Everything but finite floats is encoded by :func:`json.dumps`.
    """
    return _json_lines(mapping, ' ' * indent, 0)
