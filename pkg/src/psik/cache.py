"""Optional append-only cache of psi_k values, one JSON record per line."""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path

from .groups import CayleyTable, GroupSpec
from .psi import PsiValue, psi
from .syntax import canonical_text

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CacheEntry:
    key: str
    value: str
    route: str

    def to_json(self) -> str:
        return json.dumps({"key": self.key, "value": self.value, "route": self.route})


def cache_key(spec: GroupSpec, k: int) -> str:
    return f"{canonical_text(spec)}|k={k}"


def _contains_table(spec: GroupSpec) -> bool:
    return isinstance(spec, CayleyTable) or any(
        _contains_table(f) for f in getattr(spec, "factors", ())
    )


class PsiCache:
    """Lookups keyed by canonical spec text and k.

    Unreadable lines are skipped with a warning.  With ``verify=True`` every
    hit is recomputed, and a mismatching entry is reported and not used.
    """

    def __init__(self, path: str | Path, verify: bool = False):
        self.path = Path(path)
        self.verify = verify
        self.entries: dict[str, CacheEntry] = {}
        self.skipped = 0
        self.mismatches: list[str] = []
        if self.path.exists():
            self._load()

    def _load(self) -> None:
        with self.path.open() as fh:
            for lineno, line in enumerate(fh, 1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    entry = CacheEntry(str(rec["key"]), str(rec["value"]), str(rec["route"]))
                    int(entry.value)
                except (ValueError, KeyError, TypeError):
                    log.warning("%s:%d: skipping unreadable cache line", self.path, lineno)
                    self.skipped += 1
                    continue
                self.entries[entry.key] = entry

    def __len__(self) -> int:
        return len(self.entries)

    def psi(self, spec: GroupSpec, k: int) -> PsiValue:
        if _contains_table(spec):
            return psi(spec, k)  # file contents can change under the same name
        key = cache_key(spec, k)
        hit = self.entries.get(key)
        if hit is not None and not self.verify:
            return PsiValue(int(hit.value), k, spec.order, hit.route)
        fresh = psi(spec, k)
        if hit is not None:
            if int(hit.value) == fresh.value:
                return fresh
            log.warning("cache entry %s disagrees with recomputation; ignoring it", key)
            self.mismatches.append(key)
        self._append(CacheEntry(key, str(fresh.value), fresh.route))
        return fresh

    def _append(self, entry: CacheEntry) -> None:
        self.entries[entry.key] = entry
        self.path.parent.mkdir(parents=True, exist_ok=True)
        with self.path.open("a") as fh:
            fh.write(entry.to_json() + "\n")

    def verify_all(self) -> list[str]:
        """Recompute every entry; returns keys whose stored value is wrong."""
        from .syntax import parse_spec

        bad = []
        for key, entry in self.entries.items():
            text, _, k = key.rpartition("|k=")
            if psi(parse_spec(text), int(k)).value != int(entry.value):
                bad.append(key)
        return bad
