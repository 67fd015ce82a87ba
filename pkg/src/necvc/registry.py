"""Known optimum cover sizes for benchmark instances.

The shipped table lists the complete-graph ladder and the DIMACS clique
instances together with the NEC sizes reported alongside them. For clique
instances the optimum is ``n - omega``: the minimum cover of the
*complement* of the distributed file, which is what ``complemented`` flags.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

__all__ = ["KnownOptimum", "Registry", "normalize_name", "load_registry", "dump_registry"]

FIELDS = [
    "instance",
    "n",
    "optimal_cover",
    "complemented",
    "reported_nec",
    "reported_ratio",
    "cover_ref",
    "aliases",
    "notes",
]


def normalize_name(name: str) -> str:
    """Registry key: lower-case, ``_`` folded to ``-``, file suffix dropped."""
    base = Path(name).name
    base = re.sub(r"\.(clq|col|dimacs|txt)$", "", base, flags=re.IGNORECASE)
    return base.lower().replace("_", "-")


def _opt_int(s: str) -> int | None:
    return int(s) if s.strip() else None


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    return str(x)


@dataclass(frozen=True)
class KnownOptimum:
    instance: str
    n: int
    optimal_cover: int
    complemented: bool
    reported_nec: int | None = None
    reported_ratio: str = ""
    cover_ref: int | None = None
    aliases: tuple[str, ...] = ()
    notes: str = ""

    def __post_init__(self):
        if not 0 <= self.optimal_cover <= self.n:
            raise ValueError(f"{self.instance}: optimal_cover outside [0, n]")

    @property
    def key(self) -> str:
        return normalize_name(self.instance)

    def row(self) -> dict[str, str]:
        d = {f: _fmt(getattr(self, f)) for f in FIELDS if f != "aliases"}
        d["aliases"] = ";".join(self.aliases)
        return d

    @classmethod
    def from_row(cls, row: dict[str, str]) -> "KnownOptimum":
        flag = row["complemented"].strip().lower()
        if flag not in ("true", "false"):
            raise ValueError(f"bad complemented flag {row['complemented']!r}")
        return cls(
            instance=row["instance"],
            n=int(row["n"]),
            optimal_cover=int(row["optimal_cover"]),
            complemented=flag == "true",
            reported_nec=_opt_int(row["reported_nec"]),
            reported_ratio=row["reported_ratio"],
            cover_ref=_opt_int(row["cover_ref"]),
            aliases=tuple(a for a in row["aliases"].split(";") if a),
            notes=row["notes"],
        )


class Registry:
    def __init__(self, entries: list[KnownOptimum]):
        self.entries = list(entries)
        self._index: dict[str, KnownOptimum] = {}
        for e in self.entries:
            for k in (e.key, *map(normalize_name, e.aliases)):
                if k in self._index:
                    raise ValueError(f"duplicate registry key {k!r}")
                self._index[k] = e

    def get(self, name: str) -> KnownOptimum | None:
        return self._index.get(normalize_name(name))

    def __contains__(self, name: str) -> bool:
        return self.get(name) is not None

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Registry) and self.entries == other.entries


def parse_registry(text: str) -> Registry:
    rows = csv.DictReader(io.StringIO(text))
    if rows.fieldnames != FIELDS:
        raise ValueError(f"unexpected registry header {rows.fieldnames}")
    return Registry([KnownOptimum.from_row(r) for r in rows])


def dump_registry(reg: Registry) -> str:
    out = io.StringIO()
    w = csv.DictWriter(out, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    for e in reg:
        w.writerow(e.row())
    return out.getvalue()


def load_registry(path: str | Path | None = None) -> Registry:
    """Load a registry file, or the packaged one when ``path`` is None."""
    if path is None:
        text = resources.files("necvc").joinpath("data/known_optima.csv").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return parse_registry(text)
