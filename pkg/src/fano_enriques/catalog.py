"""Catalog files, bundled fixtures, and golden verification.

A catalog file is JSON: {"format_version": "1", "entries": [...]} with
one serialized CoverRecord per entry.  Records are fully validated on
load (weights/degrees arithmetic, parity, declared basket against the
model series), with per-entry diagnostics collected before failing.

Bundled under data/:

  covers_codim1.json      hypersurface covers plus decoys
  covers_codim2.json      codimension-2 complete intersection covers
  covers_codim3.json      codimension-3 covers plus decoys
  quotients_codim1.json   expected search output for the above
  quotients_codim2.json
  quotients_codim3.json
  torsion_baskets.json    the 39 admissible marked baskets, by order
  series_examples.json    frozen series values for the worked examples

verify_fixtures() recomputes everything the goldens freeze and returns
the list of mismatches (empty means all good).
"""

from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import Sequence, Union

from .enumeration import enumerate_bt
from .errors import CatalogError
from .exact import format_rational, parse_rational
from .hilbert import FanoData, FanoEnriquesData, altinok_series, bigraded_series
from .orbifold import Basket
from .quotient import CoverRecord, QuotientCandidate, search
from .series import Bidegree

__all__ = [
    "FORMAT_VERSION",
    "load_catalog",
    "save_catalog",
    "bundled_names",
    "bundled_catalog",
    "bundled_json",
    "verify_fixtures",
]

FORMAT_VERSION = "1"

GOLDEN_FILES = (
    "quotients_codim1.json",
    "quotients_codim2.json",
    "quotients_codim3.json",
)


def _parse_file(source: Union[str, Path]) -> dict:
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise CatalogError(f"cannot read {path}: {exc}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CatalogError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise CatalogError(f"{path}: expected a JSON object at top level")
    return obj


def _records_from(obj: dict, origin: str, trunc: int) -> list[CoverRecord]:
    version = obj.get("format_version")
    if version != FORMAT_VERSION:
        raise CatalogError(
            f"{origin}: format_version {version!r}, expected {FORMAT_VERSION!r}"
        )
    entries = obj.get("entries")
    if not isinstance(entries, list):
        raise CatalogError(f"{origin}: missing entry list")

    records: list[CoverRecord] = []
    problems: list[str] = []
    names: set[str] = set()
    for idx, raw in enumerate(entries):
        label = f"{origin} entry {idx}"
        try:
            record = CoverRecord.from_json(raw)
        except (KeyError, TypeError, ValueError, CatalogError) as exc:
            problems.append(f"{label}: unreadable record ({exc})")
            continue
        label = f"{label} ({record.name})"
        if record.name in names:
            problems.append(f"{label}: duplicate name")
        names.add(record.name)
        for issue in record.validate(trunc):
            problems.append(f"{label}: {issue}")
        records.append(record)
    if problems:
        raise CatalogError("\n".join(problems))
    return records


def load_catalog(path: Union[str, Path], trunc: int = 20) -> list[CoverRecord]:
    """Read and validate a catalog file; raises CatalogError listing every
    problem found rather than stopping at the first."""
    obj = _parse_file(path)
    return _records_from(obj, str(path), trunc)


def save_catalog(records: Sequence[CoverRecord], path: Union[str, Path]):
    payload = {
        "format_version": FORMAT_VERSION,
        "entries": [r.to_json() for r in records],
    }
    Path(path).write_text(json.dumps(payload, indent=2) + "\n")


def _data_root():
    return resources.files("fano_enriques") / "data"


def bundled_names() -> list[str]:
    return sorted(
        entry.name for entry in _data_root().iterdir() if entry.name.endswith(".json")
    )


def bundled_json(name: str) -> dict:
    node = _data_root() / name
    try:
        text = node.read_text()
    except (FileNotFoundError, OSError) as exc:
        raise CatalogError(f"no bundled file {name!r}") from exc
    return json.loads(text)


def bundled_catalog(name: str, trunc: int = 20) -> list[CoverRecord]:
    return _records_from(bundled_json(name), name, trunc)


def resolve_catalog(source: str, trunc: int = 20) -> list[CoverRecord]:
    """A path if it exists on disk, else a bundled file name."""
    if Path(source).exists():
        return load_catalog(source, trunc)
    return bundled_catalog(source, trunc)


# ---------------------------------------------------------------------------
# golden verification


def _row_key(obj: dict) -> tuple:
    flags = tuple(sorted(obj.get("flags", ())))
    return (
        obj["cover"],
        obj["r"],
        obj["minusK3"],
        tuple(tuple(sorted(e.items())) for e in obj["bt"]),
        tuple(tuple(sorted(e.items())) for e in obj["be"]),
        tuple(tuple(g) for g in obj["generators"]),
        tuple(tuple(q) for q in obj["relations"]),
        flags,
    )


def _candidate_row(c: QuotientCandidate) -> dict:
    return {
        "cover": c.cover.name,
        "r": c.data.r,
        "minusK3": format_rational(c.data.minus_k_cubed),
        "bt": c.data.bt.to_json(),
        "be": c.data.be.to_json(),
        "generators": [[g.n, g.i] for g in c.presentation.generators],
        "relations": [[q.n, q.i] for q in c.presentation.relations],
        "flags": sorted(c.diagnostics),
    }


def _verify_quotients(golden_name: str, strict_chi: bool = False) -> list[str]:
    golden = bundled_json(golden_name)
    catalog = bundled_catalog(golden["catalog"], trunc=golden.get("trunc", 24))
    result = search(
        catalog,
        trunc=golden.get("trunc", 24),
        max_degree=golden.get("max_degree", 24),
        strict_chi=strict_chi,
    )

    problems = []
    computed_clean = sorted(_row_key(_candidate_row(c)) for c in result.clean())
    expected_clean = sorted(_row_key(row) for row in golden["rows"])
    if computed_clean != expected_clean:
        missing = [k for k in expected_clean if k not in computed_clean]
        extra = [k for k in computed_clean if k not in expected_clean]
        for k in missing:
            problems.append(f"{golden_name}: missing expected row {k[0]} r={k[1]}")
        for k in extra:
            problems.append(f"{golden_name}: unexpected row {k[0]} r={k[1]}")

    computed_special = sorted(_row_key(_candidate_row(c)) for c in result.special())
    expected_special = sorted(
        _row_key(row) for row in golden.get("special_cases", [])
    )
    if computed_special != expected_special:
        missing = [k for k in expected_special if k not in computed_special]
        extra = [k for k in computed_special if k not in expected_special]
        for k in missing:
            problems.append(
                f"{golden_name}: missing special case {k[0]} r={k[1]}"
            )
        for k in extra:
            problems.append(
                f"{golden_name}: unexpected special case {k[0]} r={k[1]}"
            )

    clean_covers = {c.cover.name for c in result.clean()}
    reasons_by_cover: dict[str, set] = {}
    for rej in result.rejections:
        reasons_by_cover.setdefault(rej.cover, set()).add(rej.reason)
    for decoy in golden.get("decoys", []):
        name = decoy["cover"]
        if name in clean_covers:
            problems.append(f"{golden_name}: decoy {name} produced a clean row")
        seen = reasons_by_cover.get(name, set())
        for reason in decoy.get("reasons", []):
            if reason not in seen:
                problems.append(
                    f"{golden_name}: decoy {name} never rejected with "
                    f"{reason!r} (saw {sorted(seen) or 'nothing'})"
                )
    return problems


def _verify_baskets() -> list[str]:
    golden = bundled_json("torsion_baskets.json")
    max_order = golden.get("max_order", 24)
    expected = {
        int(r): sorted(
            tuple(tuple(sorted(e.items())) for e in basket) for basket in baskets
        )
        for r, baskets in golden["baskets"].items()
    }
    problems = []
    total = 0
    for r in range(2, max_order + 1):
        computed = sorted(
            tuple(tuple(sorted(e.items())) for e in c.entries.to_json())
            for c in enumerate_bt(r)
        )
        total += len(computed)
        want = expected.get(r, [])
        if computed != want:
            problems.append(
                f"torsion_baskets.json: order {r} has {len(computed)} baskets, "
                f"golden lists {len(want)} (or contents differ)"
            )
    want_total = sum(len(v) for v in expected.values())
    if total != want_total:
        problems.append(
            f"torsion_baskets.json: {total} baskets enumerated, "
            f"golden freezes {want_total}"
        )
    return problems


def _verify_series_examples() -> list[str]:
    golden = bundled_json("series_examples.json")
    problems = []

    plain = golden["untwisted"]
    data = FanoData(
        parse_rational(plain["minusK3"]), Basket.from_json(plain["basket"])
    )
    coeffs = [parse_rational(c) for c in plain["coeffs"]]
    series = altinok_series(data, trunc=len(coeffs) - 1)
    got = series.component(0)
    if list(got) != coeffs:
        problems.append("series_examples.json: untwisted coefficients differ")
    peeled = series
    for n, i in plain["peel"]:
        peeled = peeled.peel(Bidegree(n, i))
    for m, c in enumerate(peeled.component(0)):
        want = parse_rational(plain["peeled"].get(str(m), "0"))
        if c != want:
            problems.append(
                f"series_examples.json: peeled untwisted series differs at t^{m}"
            )
            break

    twisted = golden["bigraded"]
    fe = FanoEnriquesData.from_json(twisted["data"])
    components = [[parse_rational(c) for c in row] for row in twisted["components"]]
    series = bigraded_series(fe, trunc=len(components[0]) - 1)
    for i, row in enumerate(components):
        if list(series.component(i)) != row:
            problems.append(
                f"series_examples.json: bigraded component {i} differs"
            )
    peeled = series
    for n, i in twisted["peel"]:
        peeled = peeled.peel(Bidegree(n, i))
    for i in range(peeled.r):
        for m, c in enumerate(peeled.component(i)):
            want = parse_rational(twisted["peeled"].get(f"{m},{i}", "0"))
            if c != want:
                problems.append(
                    f"series_examples.json: peeled bigraded series differs "
                    f"at t^{m} e^{i}"
                )
    return problems


def verify_fixtures() -> list[str]:
    """Recompute every bundled golden file; returns all mismatches found."""
    problems = []
    problems.extend(_verify_series_examples())
    problems.extend(_verify_baskets())
    for name in GOLDEN_FILES:
        problems.extend(_verify_quotients(name))
    return problems
