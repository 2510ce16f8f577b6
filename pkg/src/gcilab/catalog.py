"""Embedded generator data for the groups the toolkit knows about.

Entries live in ``data/catalog.txt`` (grammar documented in that file's
header).  Every entry is verified when it is loaded: the stabilizer chain
must reproduce the declared order, the involution classes must number the
declared ``c2``, every outer map must extend to a non-inner automorphism,
and the outer maps must generate an Out(G) of the declared size.
"""
from __future__ import annotations

import logging
import os
import re
import time
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .autgroup import AutGroup, build_aut_group
from .permgroup import DEFAULT_CAP, CapExceeded, Group, build_chain, involution_class_count, parse_cycles

logger = logging.getLogger(__name__)

ENV_VAR = "GCILAB_CATALOG"
NAMES = ("A5", "A6", "A7", "A8", "L2(7)", "L2(8)", "L3(4)", "M11", "Sz(8)", "M23")


class CatalogError(ValueError):
    pass


class UnknownGroup(CatalogError, KeyError):
    def __str__(self):
        return str(self.args[0]) if self.args else ""


class ExtendedModeRequired(CatalogError):
    pass


class VerificationFailure(CatalogError):
    pass


@dataclass
class CatalogEntry:
    name: str
    degree: int
    generators: list[str]
    order: int
    c2: int
    out: int
    outer_maps: list[list[str]] = field(default_factory=list)
    mode: str = "default"
    _group: Group | None = field(default=None, repr=False)
    _aut: AutGroup | None = field(default=None, repr=False)

    @property
    def extended(self) -> bool:
        return self.mode == "extended"

    def permutations(self):
        return [parse_cycles(g, self.degree) for g in self.generators]

    @property
    def group(self) -> Group:
        if self._group is None:
            cap = self.order if self.extended else DEFAULT_CAP
            self._group = Group(self.permutations(), name=self.name, cap=max(cap, DEFAULT_CAP))
        return self._group

    @property
    def aut(self) -> AutGroup:
        if self._aut is None:
            maps = [[parse_cycles(im, self.degree) for im in images] for images in self.outer_maps]
            self._aut = build_aut_group(self.group, maps, declared_out=self.out)
        return self._aut


def catalog_path() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files("gcilab").joinpath("data/catalog.txt")))


_KEYWORDS = {"group", "degree", "gen", "outer", "order", "c2", "out", "mode"}


def parse_catalog(text: str) -> dict[str, CatalogEntry]:
    entries: dict[str, CatalogEntry] = {}
    cur: dict | None = None

    def finish():
        if cur is None:
            return
        missing = [k for k in ("degree", "order", "c2", "out") if k not in cur]
        if missing or not cur["gens"]:
            raise CatalogError(f"entry {cur['name']}: missing {missing or ['gen']}")
        entries[cur["name"]] = CatalogEntry(
            name=cur["name"], degree=cur["degree"], generators=cur["gens"], order=cur["order"],
            c2=cur["c2"], out=cur["out"],
            outer_maps=[cur["outer"][k] for k in sorted(cur["outer"])],
            mode=cur.get("mode", "default"))

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = re.match(r"(\w+)\s*(.*)$", line)
        key, rest = m.group(1), m.group(2).strip()
        if key not in _KEYWORDS:
            raise CatalogError(f"line {lineno}: unknown keyword {key!r}")
        if key == "group":
            finish()
            cur = {"name": rest, "gens": [], "outer": {}}
            continue
        if cur is None:
            raise CatalogError(f"line {lineno}: {key} before any group line")
        if key == "gen":
            cur["gens"].append(rest)
        elif key == "outer":
            mo = re.match(r"(\d+)\s*:\s*(.*)$", rest)
            if not mo:
                raise CatalogError(f"line {lineno}: expected 'outer <i>: <images>'")
            cur["outer"][int(mo.group(1))] = [s.strip() for s in mo.group(2).split(";")]
        elif key == "mode":
            if rest not in ("default", "extended"):
                raise CatalogError(f"line {lineno}: mode must be default or extended")
            cur["mode"] = rest
        else:
            try:
                cur[key] = int(rest)
            except ValueError:
                raise CatalogError(f"line {lineno}: {key} needs an integer") from None
    finish()
    return entries


@lru_cache(maxsize=None)
def _raw_entries(path: str) -> dict[str, CatalogEntry]:
    return parse_catalog(Path(path).read_text())


def entries() -> dict[str, CatalogEntry]:
    return _raw_entries(str(catalog_path()))


def names(include_extended: bool = True) -> list[str]:
    return [n for n, e in entries().items() if include_extended or not e.extended]


def verify_entry(entry: CatalogEntry) -> dict:
    """Recompute order, ``c2`` and |Out|; raise on any disagreement."""
    report = {"group": entry.name}
    chain = build_chain(entry.permutations(), entry.degree)
    if chain.order != entry.order:
        raise VerificationFailure(f"{entry.name}: chain order {chain.order} != declared {entry.order}")
    report["order"] = chain.order
    c2 = involution_class_count(entry.group)
    if c2 != entry.c2:
        raise VerificationFailure(f"{entry.name}: C_G(2) computed {c2} != declared {entry.c2}")
    report["c2"] = c2
    try:
        aut = entry.aut
    except ValueError as exc:
        raise VerificationFailure(f"{entry.name}: {exc}") from exc
    report["out"] = aut.out_order
    report["aut_order"] = aut.order
    return report


_loaded: dict[tuple[str, str], CatalogEntry] = {}


def load(name: str, extended: bool = False) -> CatalogEntry:
    """A verified catalog entry.  Extended entries need ``extended=True``."""
    table = entries()
    if name not in table:
        raise UnknownGroup(f"unknown group {name!r}; known: {', '.join(table)}")
    entry = table[name]
    if entry.extended and not extended:
        raise ExtendedModeRequired(f"{name} is an extended-mode group (|G| = {entry.order}); "
                                   "pass the extended flag")
    key = (str(catalog_path()), name)
    if key not in _loaded:
        verify_entry(entry)
        _loaded[key] = entry
    return _loaded[key]


TABLE1 = {"L2(8)": (1, 3), "M11": (1, 1), "Sz(8)": (1, 3), "M23": (1, 1)}


def verify_table1(extended: bool = False) -> list[dict]:
    """Recompute ``C_G(2)`` and |Out| for the four groups of the summary table."""
    rows = []
    for name, (c2, out) in TABLE1.items():
        row = {"group": name, "expected": {"c2": c2, "out": out}}
        if entries()[name].extended and not extended:
            row.update(status="skipped", reason="extended mode")
            rows.append(row)
            continue
        t0 = time.perf_counter()
        try:
            entry = load(name, extended=extended)
            got = {"c2": involution_class_count(entry.group), "out": entry.aut.out_order}
        except (CatalogError, CapExceeded) as exc:
            row.update(status="error", reason=str(exc))
            rows.append(row)
            continue
        row["computed"] = got
        row["status"] = "match" if got == row["expected"] else "mismatch"
        row["seconds"] = round(time.perf_counter() - t0, 3)
        rows.append(row)
    return rows
