"""Line-oriented ``key=value`` records.

One record per line. Fields are separated by single spaces and appear as
``key=value``. Keys are drawn from ``[A-Za-z0-9_.]``. Values are
percent-encoded (RFC 3986 style, via :func:`urllib.parse.quote`), so a
value never contains a space, ``=``, ``%`` or a newline in raw form; the
characters ``/ . - + : , ^ _`` are left as they are. Decoding applies
:func:`urllib.parse.unquote` to each value.

Conventional keys:

``command``
    the command that produced the record
``status``
    ``ok``, ``identity-violation`` or ``domain-error``
``param.<name>``
    an input parameter
``result.<name>``
    an output value; exact rationals as ``p/q``, decimals to ``precision``
    significant digits
``env.<VAR>``
    an environment override that affected the run
"""

from __future__ import annotations

import re
from typing import Mapping
from urllib.parse import quote, unquote

__all__ = ["encode_record", "decode_record", "SAFE_CHARS"]

SAFE_CHARS = "/.-+:,^_"
_KEY = re.compile(r"^[A-Za-z0-9_.]+$")


def encode_record(fields: Mapping[str, object]) -> str:
    parts = []
    for key, value in fields.items():
        if not _KEY.match(key):
            raise ValueError(f"invalid record key {key!r}")
        parts.append(f"{key}={quote(str(value), safe=SAFE_CHARS)}")
    return " ".join(parts)


def decode_record(line: str) -> dict[str, str]:
    fields: dict[str, str] = {}
    for token in line.strip().split(" "):
        if not token:
            continue
        key, sep, value = token.partition("=")
        if not sep or not _KEY.match(key):
            raise ValueError(f"malformed record field {token!r}")
        fields[key] = unquote(value)
    return fields
