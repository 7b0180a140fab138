"""Size caps.

The defaults keep every exhaustive scan in the range of seconds. Set the
``CLEANGRAPH_CAP`` environment variable to override both the ring-order and
the vertex cap at once.
"""

from __future__ import annotations

import os

DEFAULT_RING_CAP = 5000
DEFAULT_VERTEX_CAP = 5000
TABLE_THRESHOLD = 256
DEFAULT_ISO_BUDGET = 10**7
TINY_GRAPH_LIMIT = 64


def _env_cap() -> int | None:
    raw = os.environ.get("CLEANGRAPH_CAP")
    if not raw:
        return None
    return int(raw)


def ring_cap() -> int:
    return _env_cap() or DEFAULT_RING_CAP


def vertex_cap() -> int:
    return _env_cap() or DEFAULT_VERTEX_CAP
