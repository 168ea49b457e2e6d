"""On-disk group cache files.

Binary layout: magic "PCG1" | backend tag (1 byte) | p (2 bytes LE, 0 = none)
| order (4 bytes LE) | generator count (2 bytes LE) | per generator:
key length (4 bytes LE) + canonical element key.  Loading re-closes the group
from the stored generators and verifies the stored order, so a corrupt or
stale file cannot smuggle in a wrong group.
"""

from __future__ import annotations

import os
from typing import Optional

from .elements import decode_element
from .errors import CapExceeded
from .groups import DEFAULT_CLOSURE_CAP, GroupTable, close

__all__ = ["save_group", "load_group", "cache_dir_from_env"]

_MAGIC = b"PCG1"

CACHE_DIR_ENV = "PCENTRAL_CACHE_DIR"


def save_group(G: GroupTable, path: str) -> None:
    if not G.generators:
        raise ValueError("cannot cache a group without generators")
    blob = bytearray(_MAGIC)
    blob.append(G.generators[0].key[0])
    blob += (G.p or 0).to_bytes(2, "little")
    blob += G.order.to_bytes(4, "little")
    blob += len(G.generators).to_bytes(2, "little")
    for g in G.generators:
        blob += len(g.key).to_bytes(4, "little")
        blob += g.key
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "wb") as fh:
        fh.write(blob)
    os.replace(tmp, path)


def load_group(path: str, *, cap: int = DEFAULT_CLOSURE_CAP) -> GroupTable:
    with open(path, "rb") as fh:
        blob = fh.read()
    if blob[:4] != _MAGIC:
        raise ValueError(f"{path} is not a group cache file")
    backend = blob[4]
    p = int.from_bytes(blob[5:7], "little") or None
    order = int.from_bytes(blob[7:11], "little")
    count = int.from_bytes(blob[11:13], "little")
    pos = 13
    gens = []
    for _ in range(count):
        if pos + 4 > len(blob):
            raise ValueError(f"{path}: truncated generator block")
        klen = int.from_bytes(blob[pos:pos + 4], "little")
        pos += 4
        key = blob[pos:pos + klen]
        if len(key) != klen:
            raise ValueError(f"{path}: truncated generator key")
        pos += klen
        if key[0] != backend:
            raise ValueError(f"{path}: generator backend disagrees with header")
        gens.append(decode_element(bytes(key)))
    if pos != len(blob):
        raise ValueError(f"{path}: trailing bytes after generators")
    if order > cap:
        raise CapExceeded(f"{path}: stored order {order} exceeds cap {cap}")
    G = close(gens, cap=cap, p=p)
    if G.order != order:
        raise ValueError(f"{path}: re-closed order {G.order} != stored order {order}")
    return G


def cache_dir_from_env() -> Optional[str]:
    d = os.environ.get(CACHE_DIR_ENV)
    if d:
        os.makedirs(d, exist_ok=True)
    return d or None
