"""Reading fixture files and the shipped fixture corpus.

Effect algebra files::

    {"size": 6, "zero": 0, "one": 5, "labels": [...], "sums": [[1, 4, 5], ...]}

Po-group files::

    {"ambient_rank": 4, "basis": [...], "cone_generators": [...],
     "unit": [...], "lex_tail_rank": 1}

Extension problem files::

    {"algebra": "mo2", "subalgebra": ["a1", "a4"], "given": {"a1": "7/10"}}

where ``algebra`` is a file path, a shipped fixture name, or an inline
effect-algebra object.

``labels`` and ``basis`` are optional (default: ids as strings, standard
basis); a ``lex_tail_rank`` key selects a lexicographic product. Other keys
such as ``description`` are ignored.
"""
from __future__ import annotations

import json
from importlib import resources
from pathlib import Path
from typing import NamedTuple, Union

from .algebra import EffectAlgebra, validate_effect_algebra
from .pogroup import LexPresentation, PoGroupError, UnitalPoGroupPresentation

__all__ = ["FixtureError", "ParseError", "FixtureIOError", "parse_algebra_file",
           "parse_group_file", "parse_file", "load_fixture", "fixture_names",
           "fixture_metadata", "algebra_from_json", "group_from_json",
           "ExtensionFile", "parse_extension_file", "resolve_input"]

Presentation = Union[UnitalPoGroupPresentation, LexPresentation]


class FixtureError(ValueError):
    code = "fixture"


class ParseError(FixtureError):
    code = "parse"


class FixtureIOError(FixtureError):
    code = "io"


def _read_json(path) -> dict:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise FixtureIOError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: top level must be an object")
    return data


def is_group_data(data: dict) -> bool:
    return "cone_generators" in data or "unit" in data


def is_extension_data(data: dict) -> bool:
    return "algebra" in data


class ExtensionFile(NamedTuple):
    """Raw contents of an extension problem file; keys are labels or ids."""

    algebra: EffectAlgebra
    subalgebra: list
    given: dict


def algebra_from_json(data: dict) -> EffectAlgebra:
    missing = [k for k in ("size", "zero", "one", "sums") if k not in data]
    if missing:
        raise ParseError(f"missing field(s): {', '.join(missing)}")
    if not isinstance(data["sums"], list):
        raise ParseError("'sums' must be a list of [a, b, c] triples")
    return validate_effect_algebra(data)


def group_from_json(data: dict) -> Presentation:
    missing = [k for k in ("ambient_rank", "cone_generators", "unit") if k not in data]
    if missing:
        raise ParseError(f"missing field(s): {', '.join(missing)}")
    n = data["ambient_rank"]
    basis = data.get("basis") or [[int(i == j) for j in range(n)] for i in range(n)]
    try:
        head = UnitalPoGroupPresentation(n, tuple(map(tuple, basis)),
                                         tuple(map(tuple, data["cone_generators"])),
                                         tuple(data["unit"]))
    except TypeError as exc:
        raise ParseError(f"malformed po-group data: {exc}") from exc
    tail = data.get("lex_tail_rank")
    if tail is None:
        return head
    if not isinstance(tail, int) or tail < 0:
        raise PoGroupError("lex_tail_rank must be a nonnegative integer")
    return LexPresentation(head, tail)


def parse_algebra_file(path) -> EffectAlgebra:
    return algebra_from_json(_read_json(path))


def parse_group_file(path) -> Presentation:
    return group_from_json(_read_json(path))


def parse_file(path) -> EffectAlgebra | Presentation | ExtensionFile:
    """Parse any kind of input file, deciding by its keys."""
    data = _read_json(path)
    if is_extension_data(data):
        return _extension_from_json(data, Path(path).parent)
    return group_from_json(data) if is_group_data(data) else algebra_from_json(data)


def parse_extension_file(path) -> ExtensionFile:
    data = _read_json(path)
    if not is_extension_data(data):
        raise ParseError(f"{path}: missing field 'algebra'")
    return _extension_from_json(data, Path(path).parent)


def _extension_from_json(data: dict, base: Path) -> ExtensionFile:
    missing = [k for k in ("subalgebra", "given") if k not in data]
    if missing:
        raise ParseError(f"missing field(s): {', '.join(missing)}")
    ref = data["algebra"]
    if isinstance(ref, dict):
        table = algebra_from_json(ref)
    elif isinstance(ref, str):
        local = base / ref
        table = parse_algebra_file(local if local.exists() else resolve_input(ref))
    else:
        raise ParseError("'algebra' must be a path, a fixture name or an object")
    if not isinstance(data["subalgebra"], list) or not isinstance(data["given"], dict):
        raise ParseError("'subalgebra' must be a list and 'given' an object")
    return ExtensionFile(table, data["subalgebra"], data["given"])


def resolve_input(spec: str) -> Path:
    """A path if it exists, otherwise the shipped fixture of that name."""
    path = Path(spec)
    if not path.exists():
        name = spec[:-5] if spec.endswith(".json") else spec
        if name in fixture_names():
            return fixture_path(name)
    return path


def _fixture_dir():
    return resources.files("effectstates") / "fixtures"


def fixture_names() -> list[str]:
    return sorted(p.name[:-5] for p in _fixture_dir().iterdir() if p.name.endswith(".json"))


def fixture_path(name: str) -> Path:
    return Path(str(_fixture_dir() / f"{name}.json"))


def fixture_metadata(name: str) -> dict:
    data = json.loads((_fixture_dir() / f"{name}.json").read_text())
    return {k: data[k] for k in ("description", "interval", "mv") if k in data}


def load_fixture(name: str) -> EffectAlgebra | Presentation:
    return parse_file(fixture_path(name))
