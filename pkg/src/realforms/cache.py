"""On-disk cache of automorphism image arrays, keyed by the Cayley-table hash."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

import numpy as np

from .groups import FiniteGroup, GroupHom

log = logging.getLogger(__name__)

CACHE_VERSION = 1


class AutCache:
    """JSON files ``<hash>.json`` under ``root``.

    A file is used only when its version and hash match and every stored map
    is a bijective homomorphism of the group; anything else is reported and
    recomputed by the caller.
    """

    def __init__(self, root):
        self.root = Path(root)
        self.hits = 0
        self.misses = 0

    def path(self, H: FiniteGroup) -> Path:
        return self.root / f"{H.cayley_hash()}.json"

    def load(self, H: FiniteGroup) -> np.ndarray | None:
        p = self.path(H)
        if not p.exists():
            self.misses += 1
            return None
        try:
            data = json.loads(p.read_text())
            if data.get("version") != CACHE_VERSION:
                raise ValueError(f"version {data.get('version')!r}")
            if data.get("cayley_hash") != H.cayley_hash() or data.get("group_order") != H.order:
                raise ValueError("hash or order mismatch")
            maps = np.array(data["automorphisms"], dtype=np.int64).reshape(-1, H.order)
            if len({m.tobytes() for m in maps}) != len(maps):
                raise ValueError("repeated maps")
            for m in maps:
                hom = GroupHom(H, H, m)
                if not (hom.is_homomorphism() and len(set(m.tolist())) == H.order):
                    raise ValueError("stored map is not an automorphism")
        except (OSError, ValueError, KeyError, TypeError, IndexError) as exc:
            log.warning("ignoring cache entry %s: %s", p.name, exc)
            self.misses += 1
            return None
        self.hits += 1
        return maps

    def store(self, H: FiniteGroup, maps) -> None:
        data = {
            "version": CACHE_VERSION,
            "group_label": H.label,
            "group_order": H.order,
            "cayley_hash": H.cayley_hash(),
            "automorphisms": np.asarray(maps).tolist(),
        }
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.root, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(data, fh)
            os.replace(tmp, self.path(H))
        except OSError as exc:
            log.warning("could not write cache entry for %s: %s", H.label, exc)
