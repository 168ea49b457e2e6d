"""Experiment corpus: configuration, the default row set, and the runner.

A configuration is JSON: caps, parallelism, and a list of entries.  Each entry
names a group (or a rank parameter for the explicit tightness example), an
optional action or prime, and the checks to run.  The runner emits one NDJSON
line per verdict plus a summary, writes a self-contained reproducer bundle for
every entry with a failing conclusion, and reports via exit code:

    0   every conclusion passed or was skipped (hypothesis unmet)
    2   some conclusion failed (a counterexample candidate; bundle written)
    3   a cap or search budget was exhausted before an answer

Expected structural facts in ``catalog_facts`` entries were frozen from an
independent enumeration run; corrupting one is the supported way to exercise
the counterexample path end to end.
"""

from __future__ import annotations

import dataclasses
import json
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .autsearch import DEFAULT_AUT_BUDGET
from .catalog import ACTION_NAMES, FAMILY_NAMES, build_action, build_group, parse_family
from .checks import (
    ALL_CHECK_NAMES,
    FACT_CHECKS,
    GROUP_CHECKS,
    GROUP_PRIME_CHECKS,
    PAIR_CHECKS,
    SIGMA_CHECKS,
    check_catalog_facts,
    check_mixed_series_oracle,
)
from .elements import _is_prime
from .errors import BudgetExceeded, CapExceeded, ConfigError
from .groups import DEFAULT_CLOSURE_CAP, GroupTable
from .store import cache_dir_from_env, load_group, save_group
from .verdict import FAIL, Verdict

__all__ = [
    "Entry",
    "ExperimentConfig",
    "CorpusResult",
    "default_config",
    "run_corpus",
    "run_entry",
    "replay_bundle",
    "EXIT_OK",
    "EXIT_COUNTEREXAMPLE",
    "EXIT_BUDGET",
]

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 2
EXIT_BUDGET = 3

DEFAULT_CAPS: Dict[str, int] = {
    "closure_cap": DEFAULT_CLOSURE_CAP,
    "action_cap": 10_000,
    "aut_budget": DEFAULT_AUT_BUDGET,
    "oracle_size_limit": 256,
    "oracle_k_max": 5,
}

_ENTRY_KEYS = {"id", "group", "action", "p", "sigma", "checks", "expect"}
_TOP_KEYS = {"caps", "parallelism", "entries"}


# -- configuration --------------------------------------------------------


@dataclass(frozen=True)
class Entry:
    entry_id: str
    checks: Tuple[str, ...]
    group_spec: Optional[str] = None
    action_spec: Optional[str] = None
    p: Optional[int] = None
    sigma: Optional[int] = None
    expect: Optional[Dict[str, object]] = None

    def to_dict(self) -> Dict[str, object]:
        d: Dict[str, object] = {"id": self.entry_id, "checks": list(self.checks)}
        if self.group_spec is not None:
            d["group"] = self.group_spec
        if self.action_spec is not None:
            d["action"] = self.action_spec
        if self.p is not None:
            d["p"] = self.p
        if self.sigma is not None:
            d["sigma"] = self.sigma
        if self.expect is not None:
            d["expect"] = self.expect
        return d


def _loc(raw: Optional[str], needle: str) -> str:
    """Best-effort ' (line L, column C)' for a literal occurring in raw JSON."""
    if not raw:
        return ""
    i = raw.find(needle)
    if i < 0:
        return ""
    line = raw.count("\n", 0, i) + 1
    col = i - (raw.rfind("\n", 0, i) + 1) + 1
    return f" (line {line}, column {col})"


def _fail(msg: str, raw: Optional[str], needle: Optional[str] = None) -> ConfigError:
    return ConfigError(msg + (_loc(raw, needle) if needle else ""))


def _parse_entry(data: object, raw: Optional[str]) -> Entry:
    if not isinstance(data, dict):
        raise _fail("each entry must be a JSON object", raw)
    unknown = set(data) - _ENTRY_KEYS
    if unknown:
        k = sorted(unknown)[0]
        raise _fail(f"unknown entry key {k!r}", raw, json.dumps(k))
    entry_id = data.get("id")
    if not isinstance(entry_id, str) or not entry_id:
        raise _fail("entry is missing a non-empty string 'id'", raw)
    here = f"entry {entry_id!r}: "

    checks = data.get("checks")
    if (not isinstance(checks, list) or not checks
            or not all(isinstance(c, str) for c in checks)):
        raise _fail(here + "'checks' must be a non-empty list of names",
                    raw, json.dumps(entry_id))
    for c in checks:
        if c not in ALL_CHECK_NAMES:
            raise _fail(here + f"unknown check {c!r}", raw, json.dumps(c))
    if len(set(checks)) != len(checks):
        raise _fail(here + "duplicate check names", raw, json.dumps(entry_id))

    sigma = data.get("sigma")
    group_spec = data.get("group")
    if (sigma is None) == (group_spec is None):
        raise _fail(here + "exactly one of 'group' or 'sigma' is required",
                    raw, json.dumps(entry_id))

    if sigma is not None:
        if not isinstance(sigma, int) or not _is_prime(sigma):
            raise _fail(here + f"'sigma' must be a prime, got {sigma!r}",
                        raw, json.dumps(entry_id))
        bad = [c for c in checks if c not in SIGMA_CHECKS]
        if bad:
            raise _fail(here + f"check {bad[0]!r} does not apply to a "
                        "rank-parameter entry", raw, json.dumps(bad[0]))
        return Entry(entry_id, tuple(checks), sigma=sigma)

    if not isinstance(group_spec, str):
        raise _fail(here + "'group' must be a string", raw, json.dumps(entry_id))
    try:
        spec = parse_family(group_spec)
    except ConfigError as e:
        raise _fail(here + f"bad group spec: {e}", raw, json.dumps(group_spec))
    if spec.name not in FAMILY_NAMES:
        raise _fail(here + f"unknown group family {spec.name!r}",
                    raw, json.dumps(group_spec))

    action_spec = data.get("action")
    if action_spec is not None:
        if not isinstance(action_spec, str):
            raise _fail(here + "'action' must be a string",
                        raw, json.dumps(entry_id))
        try:
            aspec = parse_family(action_spec)
        except ConfigError as e:
            raise _fail(here + f"bad action spec: {e}", raw,
                        json.dumps(action_spec))
        if aspec.name not in ACTION_NAMES:
            raise _fail(here + f"unknown action {aspec.name!r}", raw,
                        json.dumps(action_spec))

    p = data.get("p")
    if p is not None and (not isinstance(p, int) or not _is_prime(p)):
        raise _fail(here + f"'p' must be a prime, got {p!r}",
                    raw, json.dumps(entry_id))

    expect = data.get("expect")
    if expect is not None and not isinstance(expect, dict):
        raise _fail(here + "'expect' must be an object", raw,
                    json.dumps(entry_id))

    for c in checks:
        if c in PAIR_CHECKS and action_spec is None:
            raise _fail(here + f"check {c!r} needs an 'action'", raw,
                        json.dumps(c))
        if c in GROUP_PRIME_CHECKS and p is None:
            raise _fail(here + f"check {c!r} needs a prime 'p'", raw,
                        json.dumps(c))
        if c in FACT_CHECKS and expect is None:
            raise _fail(here + f"check {c!r} needs an 'expect' object", raw,
                        json.dumps(c))
        if c in SIGMA_CHECKS:
            raise _fail(here + f"check {c!r} needs a 'sigma' entry", raw,
                        json.dumps(c))
    return Entry(entry_id, tuple(checks), group_spec=group_spec,
                 action_spec=action_spec, p=p, expect=expect)


@dataclass
class ExperimentConfig:
    caps: Dict[str, int] = field(default_factory=lambda: dict(DEFAULT_CAPS))
    parallelism: int = 1
    entries: List[Entry] = field(default_factory=list)

    @classmethod
    def from_dict(cls, data: object,
                  raw: Optional[str] = None) -> "ExperimentConfig":
        if not isinstance(data, dict):
            raise ConfigError("configuration must be a JSON object")
        unknown = set(data) - _TOP_KEYS
        if unknown:
            k = sorted(unknown)[0]
            raise _fail(f"unknown configuration key {k!r}", raw, json.dumps(k))
        caps = dict(DEFAULT_CAPS)
        for k, v in (data.get("caps") or {}).items():
            if k not in DEFAULT_CAPS:
                raise _fail(f"unknown cap {k!r}", raw, json.dumps(k))
            if not isinstance(v, int) or v < 1:
                raise _fail(f"cap {k!r} must be a positive integer", raw,
                            json.dumps(k))
            caps[k] = v
        par = data.get("parallelism", 1)
        if not isinstance(par, int) or par < 1:
            raise _fail("'parallelism' must be a positive integer", raw,
                        json.dumps("parallelism"))
        raw_entries = data.get("entries")
        if not isinstance(raw_entries, list) or not raw_entries:
            raise _fail("'entries' must be a non-empty list", raw,
                        json.dumps("entries"))
        entries = [_parse_entry(e, raw) for e in raw_entries]
        seen: Dict[str, int] = {}
        for e in entries:
            if e.entry_id in seen:
                raise _fail(f"duplicate entry id {e.entry_id!r}", raw,
                            json.dumps(e.entry_id))
            seen[e.entry_id] = 1
        return cls(caps=caps, parallelism=par, entries=entries)

    @classmethod
    def from_text(cls, text: str) -> "ExperimentConfig":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ConfigError(
                f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})")
        return cls.from_dict(data, raw=text)

    @classmethod
    def from_file(cls, path: os.PathLike) -> "ExperimentConfig":
        return cls.from_text(Path(path).read_text())

    def to_dict(self) -> Dict[str, object]:
        return {"caps": dict(self.caps), "parallelism": self.parallelism,
                "entries": [e.to_dict() for e in self.entries]}


# -- default corpus -------------------------------------------------------


_PAIR_BATTERY = (
    "mixed_series_ladder",
    "mixed_series_oracle",
    "omega_center_sandwich",
    "omega_exponent_bound",
    "prime_order_action",
    "quotient_inheritance",
    "omega_ladder",
    "faithful_p_group",
    "power_order_criterion",
    "main_regularity",
)
_GROUP_BATTERY = ("xu_regularity", "derived_exponent", "derived_omega_identity")
_COMPLEMENT_BATTERY = ("normal_p_complement", "height_p_complement")

_DEFAULT_PAIRS: Tuple[Tuple[str, str], ...] = (
    ("cyclic(2,1)", "trivial"),
    ("cyclic(2,3)", "inner"),
    ("elementary_abelian(2,2)", "full_aut"),
    ("elementary_abelian(2,3)", "jordan"),
    ("elementary_abelian(2,4)", "jordan"),
    ("elementary_abelian(2,4)", "jordan_power(2)"),
    ("ut(3,2)", "inner"),
    ("ut(4,2)", "inner"),
    ("dihedral(8)", "inner"),
    ("dihedral(16)", "inner"),
    ("dihedral(32)", "inner"),
    ("quaternion(8)", "inner"),
    ("quaternion(8)", "trivial"),
    ("wreath_cp_cp(2)", "inner"),
    ("direct_product(quaternion(8), cyclic(2,1))", "inner"),
    ("direct_product(cyclic(2,2), cyclic(2,1))", "inner"),
    ("cyclic(3,2)", "trivial"),
    ("elementary_abelian(3,2)", "full_aut"),
    ("elementary_abelian(3,4)", "jordan"),
    ("elementary_abelian(3,4)", "jordan_power(3)"),
    ("elementary_abelian(3,6)", "jordan"),
    ("elementary_abelian(3,6)", "jordan_power(3)"),
    ("heisenberg(3)", "inner"),
    ("heisenberg(3)", "trivial"),
    ("ut(4,3)", "inner"),
    ("ut(4,3)", "trivial"),
    ("wreath_cp_cp(3)", "inner"),
    ("elementary_abelian(5,2)", "jordan"),
    ("elementary_abelian(5,4)", "jordan"),
)

_DEFAULT_GROUPS: Tuple[str, ...] = (
    "cyclic(2,3)", "cyclic(3,2)",
    "elementary_abelian(2,4)", "elementary_abelian(3,3)",
    "ut(3,2)", "heisenberg(3)", "ut(4,2)", "ut(4,3)",
    "dihedral(8)", "dihedral(16)", "dihedral(32)", "quaternion(8)",
    "wreath_cp_cp(2)", "wreath_cp_cp(3)",
    "direct_product(quaternion(8), cyclic(2,1))",
    "direct_product(cyclic(2,2), cyclic(2,1))",
)

_DEFAULT_COMPLEMENTS: Tuple[Tuple[str, int], ...] = (
    ("sym(3)", 2), ("sym(3)", 3),
    ("sym(4)", 2), ("sym(4)", 3),
    ("alt(4)", 2), ("alt(4)", 3),
    ("sl2_3()", 2), ("sl2_3()", 3),
    ("dic3()", 2), ("dic3()", 3),
    ("direct_product(quaternion(8), cyclic(3,1))", 2),
    ("direct_product(quaternion(8), cyclic(3,1))", 3),
    ("quaternion(8)", 2),
    ("heisenberg(3)", 3),
)

_DEFAULT_AUT_ROWS: Tuple[str, ...] = (
    "elementary_abelian(2,2)",
    "elementary_abelian(3,2)",
    "elementary_abelian(3,3)",
    "heisenberg(3)",
    "cyclic(3,2)",
    "elementary_abelian(2,3)",
    "quaternion(8)",
)

_DEFAULT_SIGMA_RANKS: Tuple[int, ...] = (2, 3, 5)

# Frozen from an enumeration run of the catalog itself (order histograms keyed
# by element order as strings, JSON-style).
_DEFAULT_FACTS: Dict[str, Dict[str, object]] = {
    "cyclic(2,3)": {"order": 8, "exponent": 8, "nilpotency_class": 1,
                    "order_stats": {"1": 1, "2": 1, "4": 2, "8": 4}},
    "cyclic(3,2)": {"order": 9, "exponent": 9, "nilpotency_class": 1,
                    "order_stats": {"1": 1, "3": 2, "9": 6}},
    "elementary_abelian(2,2)": {"order": 4, "exponent": 2,
                                "nilpotency_class": 1,
                                "order_stats": {"1": 1, "2": 3}},
    "elementary_abelian(2,3)": {"order": 8, "exponent": 2,
                                "nilpotency_class": 1,
                                "order_stats": {"1": 1, "2": 7}},
    "elementary_abelian(3,4)": {"order": 81, "exponent": 3,
                                "nilpotency_class": 1,
                                "order_stats": {"1": 1, "3": 80}},
    "ut(3,2)": {"order": 8, "exponent": 4, "nilpotency_class": 2,
                "order_stats": {"1": 1, "2": 5, "4": 2}},
    "heisenberg(3)": {"order": 27, "exponent": 3, "nilpotency_class": 2,
                      "order_stats": {"1": 1, "3": 26}},
    "ut(4,2)": {"order": 64, "exponent": 4, "nilpotency_class": 3,
                "order_stats": {"1": 1, "2": 27, "4": 36}},
    "ut(4,3)": {"order": 729, "exponent": 9, "nilpotency_class": 3,
                "order_stats": {"1": 1, "3": 512, "9": 216}},
    "dihedral(8)": {"order": 8, "exponent": 4, "nilpotency_class": 2,
                    "order_stats": {"1": 1, "2": 5, "4": 2}},
    "dihedral(16)": {"order": 16, "exponent": 8, "nilpotency_class": 3,
                     "order_stats": {"1": 1, "2": 9, "4": 2, "8": 4}},
    "dihedral(32)": {"order": 32, "exponent": 16, "nilpotency_class": 4,
                     "order_stats": {"1": 1, "2": 17, "4": 2, "8": 4,
                                     "16": 8}},
    "quaternion(8)": {"order": 8, "exponent": 4, "nilpotency_class": 2,
                      "order_stats": {"1": 1, "2": 1, "4": 6}},
    "wreath_cp_cp(2)": {"order": 8, "exponent": 4, "nilpotency_class": 2,
                        "order_stats": {"1": 1, "2": 5, "4": 2}},
    "wreath_cp_cp(3)": {"order": 81, "exponent": 9, "nilpotency_class": 3,
                        "order_stats": {"1": 1, "3": 44, "9": 36}},
    "sym(3)": {"order": 6, "exponent": 6, "nilpotency_class": None,
               "order_stats": {"1": 1, "2": 3, "3": 2}},
    "sym(4)": {"order": 24, "exponent": 12, "nilpotency_class": None,
               "order_stats": {"1": 1, "2": 9, "3": 8, "4": 6}},
    "alt(4)": {"order": 12, "exponent": 6, "nilpotency_class": None,
               "order_stats": {"1": 1, "2": 3, "3": 8}},
    "sl2_3()": {"order": 24, "exponent": 12, "nilpotency_class": None,
                "order_stats": {"1": 1, "2": 1, "3": 8, "4": 6, "6": 8}},
    "dic3()": {"order": 12, "exponent": 12, "nilpotency_class": None,
               "order_stats": {"1": 1, "2": 1, "3": 2, "4": 6, "6": 2}},
    "direct_product(quaternion(8), cyclic(3,1))": {
        "order": 24, "exponent": 12, "nilpotency_class": 2,
        "order_stats": {"1": 1, "2": 1, "3": 2, "4": 6, "6": 2, "12": 12}},
    "direct_product(quaternion(8), cyclic(2,1))": {
        "order": 16, "exponent": 4, "nilpotency_class": 2,
        "order_stats": {"1": 1, "2": 3, "4": 12}},
    "direct_product(cyclic(2,2), cyclic(2,1))": {
        "order": 8, "exponent": 4, "nilpotency_class": 1,
        "order_stats": {"1": 1, "2": 3, "4": 4}},
}


def _slug(spec: str) -> str:
    return re.sub(r"-+", "-", re.sub(r"[^a-z0-9]+", "-", spec.lower())).strip("-")


def _default_entry_dicts() -> List[Dict[str, object]]:
    rows: List[Dict[str, object]] = []
    for gspec, aspec in _DEFAULT_PAIRS:
        rows.append({"id": f"{_slug(gspec)}--{_slug(aspec)}", "group": gspec,
                     "action": aspec, "checks": list(_PAIR_BATTERY)})
    for gspec in _DEFAULT_GROUPS:
        rows.append({"id": f"{_slug(gspec)}--structure", "group": gspec,
                     "checks": list(_GROUP_BATTERY)})
    for gspec, p in _DEFAULT_COMPLEMENTS:
        rows.append({"id": f"{_slug(gspec)}--mod{p}", "group": gspec, "p": p,
                     "checks": list(_COMPLEMENT_BATTERY)})
    for gspec in _DEFAULT_AUT_ROWS:
        rows.append({"id": f"aut--{_slug(gspec)}", "group": gspec,
                     "checks": ["sylow_aut_exponent"]})
    for p in _DEFAULT_SIGMA_RANKS:
        rows.append({"id": f"sigma--{p}", "sigma": p,
                     "checks": ["sigma_example_tightness"]})
    for gspec, facts in _DEFAULT_FACTS.items():
        rows.append({"id": f"facts--{_slug(gspec)}", "group": gspec,
                     "checks": ["catalog_facts"], "expect": facts})
    return rows


def default_config() -> ExperimentConfig:
    return ExperimentConfig.from_dict(
        {"caps": {}, "parallelism": 1, "entries": _default_entry_dicts()})


# -- execution ------------------------------------------------------------


def _cached_build_group(spec: str, caps: Dict[str, int]) -> GroupTable:
    cache = cache_dir_from_env()
    if cache is None:
        return build_group(spec, cap=caps["closure_cap"])
    path = Path(cache) / (_slug(spec) + ".pcg")
    if path.exists():
        try:
            return load_group(path)
        except Exception:
            path.unlink()
    G = build_group(spec, cap=caps["closure_cap"])
    save_group(G, path)
    return G


def run_entry(entry: Entry, caps: Dict[str, int],
              G: Optional[GroupTable] = None) -> List[Verdict]:
    """Run one entry's checks; cap and budget errors propagate.

    ``G`` overrides the catalog build (used when replaying a bundle, which
    restores the serialized table instead of rebuilding from the family).
    """
    verdicts: List[Verdict] = []
    if entry.sigma is not None:
        for c in entry.checks:
            verdicts.append(SIGMA_CHECKS[c](entry.sigma))
        return verdicts
    if G is None:
        G = _cached_build_group(entry.group_spec, caps)
    pair = None
    if any(c in PAIR_CHECKS for c in entry.checks):
        pair = build_action(G, entry.action_spec,
                            action_cap=caps["action_cap"],
                            aut_budget=caps["aut_budget"])
    for c in entry.checks:
        if c in PAIR_CHECKS:
            if c == "mixed_series_oracle":
                verdicts.append(check_mixed_series_oracle(
                    pair, k_max=caps["oracle_k_max"],
                    size_limit=caps["oracle_size_limit"]))
            else:
                verdicts.append(PAIR_CHECKS[c](pair))
        elif c in GROUP_CHECKS:
            verdicts.append(GROUP_CHECKS[c](G))
        elif c in GROUP_PRIME_CHECKS:
            verdicts.append(GROUP_PRIME_CHECKS[c](G, entry.p))
        elif c in FACT_CHECKS:
            verdicts.append(check_catalog_facts(G, entry.expect))
        else:  # pragma: no cover - guarded by config validation
            raise ConfigError(f"unroutable check {c!r}")
    return verdicts


def _entry_worker(entry_dict: Dict[str, object],
                  caps: Dict[str, int]) -> Tuple[str, List[Dict[str, object]],
                                                 Optional[Dict[str, str]]]:
    entry = _parse_entry(entry_dict, None)
    try:
        verdicts = run_entry(entry, caps)
    except (CapExceeded, BudgetExceeded) as e:
        return entry.entry_id, [], {"type": type(e).__name__, "message": str(e)}
    return entry.entry_id, [v.to_dict() for v in verdicts], None


@dataclass
class CorpusResult:
    exit_code: int
    records: List[Dict[str, object]]
    counts: Dict[str, int]
    report_path: Optional[Path] = None
    summary_path: Optional[Path] = None
    bundle_dirs: List[Path] = field(default_factory=list)

    @property
    def summary_line(self) -> str:
        c = self.counts
        return (f"entries={c['entries']} verdicts={c['verdicts']} "
                f"pass={c['pass']} skipped={c['skipped']} fail={c['fail']} "
                f"aborted={c['aborted']} exit={self.exit_code}")


def _write_bundle(out_dir: Path, entry: Entry, caps: Dict[str, int],
                  records: List[Dict[str, object]]) -> Path:
    bundle = out_dir / f"repro--{entry.entry_id}"
    bundle.mkdir(parents=True, exist_ok=True)
    if entry.group_spec is not None:
        save_group(build_group(entry.group_spec, cap=caps["closure_cap"]),
                   bundle / "group.bin")
    failing = sorted({r["check"] for r in records if r.get("conclusion") == FAIL})
    meta = {"entry": entry.to_dict(), "caps": caps, "failing_checks": failing}
    (bundle / "meta.json").write_text(json.dumps(meta, indent=2, sort_keys=True) + "\n")
    return bundle


def run_corpus(config: ExperimentConfig, out_dir: Optional[os.PathLike] = None,
               progress: Optional[Callable[[str], None]] = None) -> CorpusResult:
    """Run every entry; write report.ndjson, summary.json and bundles."""
    say = progress or (lambda s: None)
    caps = dict(config.caps)
    by_id = {e.entry_id: e for e in config.entries}
    results: Dict[str, Tuple[List[Dict[str, object]], Optional[Dict[str, str]]]] = {}

    if config.parallelism > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            futures = [(e.entry_id,
                        pool.submit(_entry_worker, e.to_dict(), caps))
                       for e in config.entries]
            for entry_id, fut in futures:
                _, dicts, err = fut.result()
                results[entry_id] = (dicts, err)
                say(f"[{entry_id}] {'ABORT ' + err['type'] if err else f'{len(dicts)} verdicts'}")
    else:
        for e in config.entries:
            _, dicts, err = _entry_worker(e.to_dict(), caps)
            results[e.entry_id] = (dicts, err)
            say(f"[{e.entry_id}] {'ABORT ' + err['type'] if err else f'{len(dicts)} verdicts'}")

    records: List[Dict[str, object]] = []
    counts = {"entries": len(config.entries), "verdicts": 0, "pass": 0,
              "skipped": 0, "fail": 0, "aborted": 0}
    bundle_dirs: List[Path] = []
    out_path = Path(out_dir) if out_dir is not None else None
    if out_path is not None:
        out_path.mkdir(parents=True, exist_ok=True)

    for e in config.entries:
        dicts, err = results[e.entry_id]
        if err is not None:
            counts["aborted"] += 1
            records.append({"entry": e.entry_id, "error": err})
            continue
        failing = False
        for d in dicts:
            counts["verdicts"] += 1
            counts[d["conclusion"]] += 1
            failing |= d["conclusion"] == FAIL
            records.append({"entry": e.entry_id, **d})
        if failing and out_path is not None:
            bundle_dirs.append(_write_bundle(out_path, e, caps, dicts))

    if counts["aborted"]:
        exit_code = EXIT_BUDGET
    elif counts["fail"]:
        exit_code = EXIT_COUNTEREXAMPLE
    else:
        exit_code = EXIT_OK

    report_path = summary_path = None
    if out_path is not None:
        report_path = out_path / "report.ndjson"
        with report_path.open("w") as fh:
            for r in records:
                fh.write(json.dumps(r, sort_keys=True) + "\n")
        summary_path = out_path / "summary.json"
        summary_path.write_text(json.dumps(
            {"counts": counts, "exit_code": exit_code,
             "caps": caps, "parallelism": config.parallelism},
            indent=2, sort_keys=True) + "\n")
    result = CorpusResult(exit_code, records, counts, report_path,
                          summary_path, bundle_dirs)
    say("summary: " + result.summary_line)
    return result


def replay_bundle(bundle_dir: os.PathLike,
                  progress: Optional[Callable[[str], None]] = None) -> CorpusResult:
    """Re-run a reproducer bundle from its own artifacts alone.

    The group is restored from the serialized table (group.bin), not rebuilt
    from the family catalog, so the bundle pins the exact inputs.
    """
    say = progress or (lambda s: None)
    bundle = Path(bundle_dir)
    meta = json.loads((bundle / "meta.json").read_text())
    entry = _parse_entry(meta["entry"], None)
    caps = dict(DEFAULT_CAPS)
    caps.update(meta.get("caps", {}))
    G = load_group(bundle / "group.bin") if entry.sigma is None else None
    verdicts = run_entry(entry, caps, G=G)
    records = [{"entry": entry.entry_id, **v.to_dict()} for v in verdicts]
    counts = {"entries": 1, "verdicts": len(records), "pass": 0,
              "skipped": 0, "fail": 0, "aborted": 0}
    for r in records:
        counts[r["conclusion"]] += 1
        say(f"{r['check']}: hypothesis={r['hypothesis']} "
            f"conclusion={r['conclusion']}")
    exit_code = EXIT_COUNTEREXAMPLE if counts["fail"] else EXIT_OK
    result = CorpusResult(exit_code, records, counts)
    say("summary: " + result.summary_line)
    return result
