"""
JSON formats of the codes, the constructions and the reports.

All the coordinates in the files are 1-based, while the library uses 0-based
coordinates. The conversion happens here and nowhere else.
"""

from __future__ import annotations

import enum
import json
import pathlib
import sys
from collections.abc import Mapping
from typing import Any

import lrcsim.api as lrc
import lrcsim.typing as ltp
from lrcsim import exceptions, logging

PathLike = str | pathlib.Path

# Keys of the verdict details holding coordinates.
_COORDINATE_KEYS = frozenset(
    {"i", "S", "group", "groups", "members", "light", "h", "dependencies", "witness"}
)

# ===========
# Plain files
# ===========


def read_json(path: PathLike) -> Any:
    """
    Read a JSON document.

    Args:
        path: The path of the file, or "-" for the standard input.

    Returns:
        The decoded document.
    """

    try:
        if str(path) == "-":
            return json.load(sys.stdin)

        with open(path, encoding="utf-8") as file:
            return json.load(file)

    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise exceptions.FormatError(f"Malformed JSON in '{path}': {e}") from e


def write_json(document: Any, path: PathLike | None = "-") -> None:
    """
    Write a JSON document.

    Args:
        document: The document to encode.
        path: The path of the file, "-" or None for the standard output.
    """

    text = json.dumps(document, indent=2)

    if path is None or str(path) == "-":
        print(text, flush=True)
        return

    logging.debug(msg=f"Writing '{path}'")

    with open(path, "w+", encoding="utf-8") as file:
        file.write(text + "\n")


# =======
# Helpers
# =======


def _require(document: Any, key: str, kind: type | tuple[type, ...]) -> Any:

    if not isinstance(document, Mapping):
        raise exceptions.FormatError(f"Expected a JSON object, got '{document}'")

    if key not in document:
        raise exceptions.FormatError(f"Missing key '{key}'")

    value = document[key]

    # JSON booleans are not integers.
    if isinstance(value, bool) and bool not in (
        kind if isinstance(kind, tuple) else (kind,)
    ):
        raise exceptions.FormatError(f"Invalid value '{value}' of key '{key}'")

    if not isinstance(value, kind):
        raise exceptions.FormatError(f"Invalid value '{value}' of key '{key}'")

    return value


def _is_int(value: Any) -> bool:

    # Symbols are stored as 64-bit integers.
    return (
        isinstance(value, int)
        and not isinstance(value, bool)
        and -(2**63) <= value < 2**63
    )


def _int_list(values: Any, what: str) -> list[int]:

    if not isinstance(values, list) or not all(_is_int(v) for v in values):
        raise exceptions.FormatError(f"Expected a list of integers for {what}")

    return values


def coordinates_from_json(values: Any, *, n: int | None = None) -> ltp.Coordinates:
    """
    Convert 1-based coordinates to 0-based ones.

    Args:
        values: The list of 1-based coordinates.
        n: The block-length, if known.

    Returns:
        The sorted 0-based coordinates.
    """

    values = _int_list(values, "the coordinates")

    if any(v < 1 or (n is not None and v > n) for v in values):
        raise exceptions.FormatError(f"Coordinates {values} outside of [1, {n}]")

    if len(set(values)) != len(values):
        raise exceptions.FormatError(f"Repeated coordinates in {values}")

    return tuple(sorted(v - 1 for v in values))


def coordinates_to_json(coordinates: ltp.CoordinatesLike) -> list[int]:
    """Convert 0-based coordinates to a list of 1-based ones."""

    return [int(c) + 1 for c in coordinates]


def _shift_coordinates(value: Any) -> Any:

    if isinstance(value, bool) or value is None:
        return value

    if isinstance(value, int):
        return value + 1

    if isinstance(value, (list, tuple)):
        return [_shift_coordinates(v) for v in value]

    return value


def detail_to_json(detail: Any) -> Any:
    """
    Convert a verdict detail to JSON, shifting the coordinates to 1-based.

    Args:
        detail: The detail, made of dictionaries, lists, integers and strings.

    Returns:
        The JSON-compatible detail.
    """

    if isinstance(detail, Mapping):
        return {
            str(key): (
                _shift_coordinates(value)
                if key in _COORDINATE_KEYS
                else detail_to_json(value)
            )
            for key, value in detail.items()
        }

    if isinstance(detail, (list, tuple)):
        return [detail_to_json(v) for v in detail]

    if isinstance(detail, enum.Enum):
        return detail.value

    return detail


# =====
# Codes
# =====


def code_to_json(code: lrc.code.CodeLike) -> dict[str, Any]:
    """
    Serialize a code.

    Args:
        code: The code, either a codebook or a systematic code.

    Returns:
        The document `{"q", "n", "codewords"}`, with `"k"` for systematic codes.
    """

    codebook = lrc.code.as_codebook(code)

    document: dict[str, Any] = {"q": codebook.q, "n": codebook.n}

    if isinstance(code, lrc.code.SystematicCode):
        document["k"] = code.k

    document["codewords"] = [list(w) for w in codebook.as_tuples()]

    return document


def code_from_json(document: Any) -> lrc.code.CodeLike:
    """
    Deserialize a code.

    Args:
        document: The document `{"q", "n", "codewords"}`, optionally with `"k"`.

    Returns:
        A systematic code if the document has the key `"k"`, a codebook otherwise.
    """

    q = _require(document, "q", int)
    n = _require(document, "n", int)
    words = _require(document, "codewords", list)

    for word in words:
        _int_list(word, "a codeword")

        if len(word) != n:
            raise exceptions.FormatError(f"The codeword {word} has not {n} symbols")

    try:
        codebook = lrc.code.Codebook.build(words=words, q=q)

    except exceptions.ShapeError as e:
        raise exceptions.FormatError(str(e)) from e

    if "k" not in document:
        return codebook

    k = _require(document, "k", int)

    return lrc.code.systematic_from_codebook(codebook, k=k)


def read_code(path: PathLike) -> lrc.code.CodeLike:
    """Read a code from a JSON file."""

    return code_from_json(read_json(path))


# ==============
# Specifications
# ==============


def spec_from_json(
    document: Any,
) -> lrc.construct.PyramidSpec | lrc.construct.RsMdsSpec:
    """
    Deserialize a construction specification.

    Args:
        document: Either `{"construction": "pyramid", "q", "k", "r", "d"}` or
            `{"construction": "rs_mds", "q", "k", "d"}`.

    Returns:
        The specification.
    """

    construction = _require(document, "construction", str)

    match construction:

        case "pyramid":
            return lrc.construct.PyramidSpec(
                q=_require(document, "q", int),
                k=_require(document, "k", int),
                r=_require(document, "r", int),
                d=_require(document, "d", int),
            )

        case "rs_mds":
            return lrc.construct.RsMdsSpec(
                q=_require(document, "q", int),
                k=_require(document, "k", int),
                d=_require(document, "d", int),
            )

        case _:
            raise exceptions.FormatError(f"Unknown construction '{construction}'")


def spec_to_json(
    spec: lrc.construct.PyramidSpec | lrc.construct.RsMdsSpec,
) -> dict[str, Any]:
    """Serialize a construction specification."""

    if isinstance(spec, lrc.construct.PyramidSpec):
        return {
            "construction": "pyramid",
            "q": spec.q,
            "k": spec.k,
            "r": spec.r,
            "d": spec.d,
        }

    return {"construction": "rs_mds", "q": spec.q, "k": spec.k, "d": spec.d}


def twist_from_json(document: Any, *, q: int, n: int) -> lrc.construct.TwistSpec:
    """
    Deserialize a twist.

    Args:
        document: Either `{"seed": int}` or `{"perms": [[int, ...], ...]}`.
        q: The size of the alphabet of the code to twist.
        n: The block-length of the code to twist.

    Returns:
        The twist specification.
    """

    if isinstance(document, Mapping) and "perms" in document:
        perms = _require(document, "perms", list)
        spec = lrc.construct.TwistSpec(
            perms=tuple(tuple(_int_list(p, "a permutation")) for p in perms)
        )

        try:
            spec.validate(q=q, n=n)
        except exceptions.ShapeError as e:
            raise exceptions.FormatError(str(e)) from e

        return spec

    return lrc.construct.TwistSpec.from_seed(_require(document, "seed", int), q=q, n=n)


# ========
# Locality
# ========


def profile_to_json(profile: lrc.locality.LocalityProfile) -> list[dict[str, Any]]:
    """Serialize a locality profile."""

    return [
        {
            "i": entry.coordinate + 1,
            "locality": entry.locality,
            "witness": (
                coordinates_to_json(entry.witness)
                if entry.witness is not None
                else None
            ),
        }
        for entry in profile.entries
    ]


def profile_from_json(
    document: Any, *, n: int | None = None, size_cap: int | None = None
) -> lrc.locality.LocalityProfile:
    """
    Deserialize a locality profile.

    Args:
        document: The list of `{"i", "locality", "witness"}` entries.
        n: The block-length of the code, defaulting to the number of entries.
        size_cap: The size cap of the search that produced the profile.

    Returns:
        The locality profile.
    """

    if not isinstance(document, list):
        raise exceptions.FormatError("Expected a list of locality entries")

    n = n if n is not None else len(document)

    if len(document) != n:
        msg = "Expected {} locality entries, got {}"
        raise exceptions.FormatError(msg.format(n, len(document)))

    entries = []

    for position, item in enumerate(document):
        i = _require(item, "i", int)
        witness = item.get("witness")
        witness = coordinates_from_json(witness, n=n) if witness is not None else None

        if i != position + 1:
            raise exceptions.FormatError(f"Expected the entry of {position + 1}, got {i}")

        entries.append(
            lrc.locality.LocalityEntry(
                coordinate=i - 1,
                locality=len(witness) if witness is not None else None,
                witness=witness,
            )
        )

    size_cap = size_cap if size_cap is not None else max(len(entries) - 1, 0)

    return lrc.locality.LocalityProfile(entries=tuple(entries), size_cap=size_cap)


# =========
# Sub-codes
# =========


def trace_to_json(trace: lrc.subcode.SubcodeTrace) -> dict[str, Any]:
    """Serialize a sub-code trace."""

    steps = []

    for step in trace.steps:
        item = {
            "i": step.i + 1,
            "S": coordinates_to_json(step.S),
            "T": coordinates_to_json(step.T),
            "sigma": list(step.sigma),
            "size_after": step.size_after,
        }

        if step.patterns is not None:
            item["patterns"] = step.patterns

        steps.append(item)

    return {"steps": steps, "ell": trace.ell, "R": coordinates_to_json(trace.R)}


def trace_from_json(document: Any) -> lrc.subcode.SubcodeTrace:
    """Deserialize a sub-code trace."""

    steps = []

    for item in _require(document, "steps", list):
        if not isinstance(item, Mapping):
            raise exceptions.FormatError(f"Expected a JSON object, got '{item}'")

        patterns = item.get("patterns")
        if patterns is not None and not _is_int(patterns):
            msg = "Invalid value '{}' of key 'patterns'"
            raise exceptions.FormatError(msg.format(patterns))

        steps.append(
            lrc.subcode.SubcodeStep(
                i=_require(item, "i", int) - 1,
                S=coordinates_from_json(_require(item, "S", list)),
                T=coordinates_from_json(_require(item, "T", list)),
                sigma=tuple(_int_list(_require(item, "sigma", list), "sigma")),
                size_after=_require(item, "size_after", int),
                patterns=int(patterns) if patterns is not None else None,
            )
        )

    return lrc.subcode.SubcodeTrace(
        steps=tuple(steps),
        ell=_require(document, "ell", int),
        R=coordinates_from_json(_require(document, "R", list)),
    )


def strategy_from_json(document: Any, *, n: int) -> lrc.subcode.Strategy:
    """
    Deserialize the forced steps of a strategy.

    Args:
        document: The list of `{"i": int, "S": [int, ...]}` steps.
        n: The block-length of the code.

    Returns:
        The forced strategy.
    """

    if not isinstance(document, list):
        raise exceptions.FormatError("Expected a list of forced steps")

    steps = []

    for item in document:
        i = _require(item, "i", int)

        if not 1 <= i <= n:
            raise exceptions.FormatError(f"Coordinate {i} outside of [1, {n}]")

        steps.append((i - 1, coordinates_from_json(_require(item, "S", list), n=n)))

    return lrc.subcode.Strategy.build(forced_steps=steps)


def bound_to_json(
    report: lrc.subcode.BoundReport, *, n: int, k: int, d: int, r: int
) -> dict[str, Any]:
    """Serialize the report of the locality bound."""

    return {
        "n": n,
        "k": k,
        "d": d,
        "r": r,
        "rhs": report.rhs,
        "holds": report.holds,
        "optimal": report.optimal,
    }


def trace_report_to_json(report: lrc.subcode.TraceReport) -> dict[str, Any]:
    """Serialize the checks performed on a trace."""

    return {
        "passed": report.passed,
        "checks": {
            name: {"pass": v.passed, "detail": detail_to_json(v.detail)}
            for name, v in report.checks.items()
        },
    }


# =========
# Structure
# =========


def structure_to_json(report: lrc.structure.StructureReport) -> dict[str, Any]:
    """
    Serialize a structure report, with a stable field order.

    Args:
        report: The structure report.

    Returns:
        The document `{"optimal", "groups", "partition", "items", "heavy_bound"}`.
    """

    partition = report.partition

    return {
        "optimal": report.optimal,
        "groups": [coordinates_to_json(g) for g in report.groups],
        "partition": {
            "I": coordinates_to_json(partition.information()) if partition else [],
            "L": coordinates_to_json(partition.L) if partition else [],
            "H": coordinates_to_json(partition.H) if partition else [],
        },
        "items": {
            name: {"pass": v.passed, "detail": detail_to_json(v.detail)}
            for name, v in sorted(report.items.items())
        },
        "heavy_bound": report.heavy_bound,
    }


# ========
# Recovery
# ========


def pattern_from_json(document: Any) -> lrc.recovery.ErasurePattern:
    """
    Deserialize an erasure pattern.

    Args:
        document: Either `{"word": [...]}` or the bare word, with null marking
            the erased positions.

    Returns:
        The erasure pattern.
    """

    word = _require(document, "word", list) if isinstance(document, Mapping) else document

    if not isinstance(word, list) or any(
        s is not None and not _is_int(s) for s in word
    ):
        raise exceptions.FormatError("Expected a list of integers and nulls")

    return lrc.recovery.ErasurePattern.build(word)


def pattern_to_json(pattern: lrc.recovery.ErasurePattern) -> dict[str, Any]:
    """Serialize an erasure pattern."""

    return {"word": list(pattern.word)}


def recovery_to_json(
    result: lrc.recovery.RecoveryResult,
    repaired: Mapping[int, lrc.recovery.RepairedSymbol] | None = None,
) -> dict[str, Any]:
    """
    Serialize the result of a recovery.

    Args:
        result: The result of the scan of the codebook.
        repaired: The symbols repaired locally, if any.

    Returns:
        The document `{"status", "count", "codeword"}`, with `"local"` when the
        local repair succeeded.
    """

    document: dict[str, Any] = {
        "status": result.status.value,
        "count": result.count,
        "codeword": list(result.codeword) if result.codeword is not None else None,
    }

    if repaired is not None:
        document["local"] = [
            {
                "i": coordinate + 1,
                "value": symbol.value,
                "accessed": coordinates_to_json(symbol.accessed),
            }
            for coordinate, symbol in sorted(repaired.items())
        ]

    return document
