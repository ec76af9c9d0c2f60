"""OEIS b-file parsing and sequence cross-checks.

b-files are the two-column "index value" format.  Vendored copies live in
the package data directory so the verification suite never needs the
network; a base URL can be configured to fetch fresh copies, which are
cached on disk.
"""

from __future__ import annotations

import os
import re
import urllib.request
from dataclasses import dataclass
from importlib import resources

from .poly import sequence

BASE_URL_ENV = "ARCACT_OEIS_BASE_URL"
CACHE_ENV = "ARCACT_OEIS_CACHE"

#: sequence name -> (OEIS id, index offset: b-file index = n + offset)
KNOWN_SEQUENCES = {
    "Bell_B": ("A007405", 0),
    "Bell_D": ("A004211", 0),
    "M_B": ("A002426", 0),
    "M_B_tilde": ("A005773", 1),
    "F": ("A000296", 0),
}


class BFileError(ValueError):
    """Malformed b-file content."""


class OeisIOError(OSError):
    """A b-file could not be read or fetched."""


@dataclass(frozen=True)
class OeisRef:
    id: str
    source: str
    values: dict


def parse_bfile(text: str) -> dict[int, int]:
    """Parse "index value" lines; '#' comments and blank lines are skipped."""
    values: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2 or not all(re.fullmatch(r"-?\d+", p) for p in parts):
            raise BFileError(f"parse error at line {lineno}: {line!r}")
        index, value = int(parts[0]), int(parts[1])
        if index in values:
            raise BFileError(f"duplicate index {index} at line {lineno}")
        values[index] = value
    return values


def _cache_dir() -> str:
    return os.environ.get(
        CACHE_ENV, os.path.join(os.path.expanduser("~"), ".cache", "arcact", "bfiles")
    )


def load_bfile(oeis_id: str, path: str | None = None) -> OeisRef:
    """Load a b-file: explicit path, then cache, then package data, then URL."""
    if path is not None:
        try:
            with open(path, "r", encoding="ascii") as handle:
                return OeisRef(oeis_id, path, parse_bfile(handle.read()))
        except OSError as exc:
            raise OeisIOError(f"cannot read {path}: {exc}") from exc
    cached = os.path.join(_cache_dir(), f"b{oeis_id[1:]}.txt")
    if os.path.exists(cached):
        with open(cached, "r", encoding="ascii") as handle:
            return OeisRef(oeis_id, cached, parse_bfile(handle.read()))
    vendored = resources.files("arcact").joinpath(f"data/bfiles/b{oeis_id[1:]}.txt")
    if vendored.is_file():
        return OeisRef(oeis_id, str(vendored), parse_bfile(vendored.read_text()))
    base = os.environ.get(BASE_URL_ENV)
    if base is None:
        raise OeisIOError(f"no vendored b-file for {oeis_id} and no base URL set")
    url = f"{base.rstrip('/')}/{oeis_id}/b{oeis_id[1:]}.txt"
    try:
        with urllib.request.urlopen(url, timeout=30) as response:
            text = response.read().decode("ascii")
    except OSError as exc:
        raise OeisIOError(f"cannot fetch {url}: {exc}") from exc
    values = parse_bfile(text)
    os.makedirs(_cache_dir(), exist_ok=True)
    with open(cached, "w", encoding="ascii") as handle:
        handle.write(text)
    return OeisRef(oeis_id, url, values)


def oeis_check(
    sequence_name: str,
    oeis_id: str,
    offset: int,
    n_max: int,
    path: str | None = None,
) -> dict:
    """Compare sequence(name, n) with b-file entry n + offset for n <= n_max."""
    ref = load_bfile(oeis_id, path)
    mismatches = []
    checked = 0
    for n in range(n_max + 1):
        index = n + offset
        if index not in ref.values:
            continue
        checked += 1
        computed = sequence(sequence_name, n)
        if computed != ref.values[index]:
            mismatches.append(
                {"n": n, "computed": computed, "bfile": ref.values[index]}
            )
            break
    return {
        "sequence": sequence_name,
        "oeis_id": oeis_id,
        "offset": offset,
        "source": ref.source,
        "checked": checked,
        "ok": checked > 0 and not mismatches,
        "mismatches": mismatches,
    }
