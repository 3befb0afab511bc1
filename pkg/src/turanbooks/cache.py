"""Append-only JSON-lines store of exact search outcomes.

One record per line::

    {"schema": "turanbooks/1", "problem": "n=7 max_booksize=1 non_bipartite",
     "max_edges": 11, "extremal": ["F@Vn_", ...], "explored": 96, "exact": true}

Records with a different schema, unparseable lines and non-exact outcomes
are ignored on lookup.
"""

from __future__ import annotations

import json
import logging
import os
from pathlib import Path

from .search import SearchOutcome, SearchProblem

log = logging.getLogger(__name__)

SCHEMA = "turanbooks/1"
CACHE_ENV = "TURANBOOKS_CACHE_DIR"
DEFAULT_CACHE_DIR = ".turanbooks-cache"
CACHE_FILE = "outcomes.jsonl"


def resolve_cache_dir(explicit: str | os.PathLike | None = None) -> Path:
    """Explicit argument, then ``$TURANBOOKS_CACHE_DIR``, then ``./.turanbooks-cache``."""
    if explicit:
        return Path(explicit)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(DEFAULT_CACHE_DIR)


def outcome_record(outcome: SearchOutcome) -> dict:
    return {
        "schema": SCHEMA,
        "problem": outcome.problem,
        "max_edges": outcome.max_edges,
        "extremal": outcome.graph6,
        "explored": outcome.explored,
        "exact": outcome.exact,
    }


def outcome_from_record(rec: dict) -> SearchOutcome:
    return SearchOutcome(
        problem=rec["problem"],
        max_edges=rec["max_edges"],
        extremal=[s.encode("ascii") for s in rec["extremal"]],
        explored=int(rec["explored"]),
        elapsed=0.0,
        exact=bool(rec["exact"]),
    )


def _records(path: Path):
    if not path.exists():
        return
    with path.open("r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                if rec.get("schema") != SCHEMA:
                    log.warning("%s:%d: skipping record with schema %r", path, lineno, rec.get("schema"))
                    continue
                yield outcome_from_record(rec)
            except (ValueError, KeyError, TypeError, AttributeError) as exc:
                log.warning("%s:%d: skipping corrupt cache record (%s)", path, lineno, exc)


def cache_lookup(problem: SearchProblem, cache_dir: str | os.PathLike | None = None) -> SearchOutcome | None:
    key = problem.key()
    for outcome in _records(resolve_cache_dir(cache_dir) / CACHE_FILE):
        if outcome.problem == key and outcome.exact:
            return outcome
    return None


def cache_store(problem: SearchProblem, outcome: SearchOutcome,
                cache_dir: str | os.PathLike | None = None) -> bool:
    """Append ``outcome``; returns False (and writes nothing) when it is not
    exact or an exact record for the problem already exists."""
    if not outcome.exact or outcome.problem != problem.key():
        return False
    if cache_lookup(problem, cache_dir) is not None:
        return False
    directory = resolve_cache_dir(cache_dir)
    directory.mkdir(parents=True, exist_ok=True)
    line = json.dumps(outcome_record(outcome), sort_keys=True) + "\n"
    # single O_APPEND write keeps each record on its own line
    fd = os.open(directory / CACHE_FILE, os.O_WRONLY | os.O_APPEND | os.O_CREAT, 0o644)
    try:
        os.write(fd, line.encode("utf-8"))
    finally:
        os.close(fd)
    return True
