"""Text formats.

All files start with a ``frame:`` line listing element names; ``#`` starts a
comment.  Body lines by file type::

    .bba    mass {a b} = 1/3        masses, unlisted subsets are 0, sum exactly 1
    .wgt    weight {a} = 1/2        weights in [0, 1], never on the whole frame
    .set    subset {a b}            one subset (Boolean belief state)
    .prob   prob a = 1/4            atom probabilities, unlisted atoms are 0

Values are ``p/q``, integers or decimals with at most nine fractional digits.
Emission is canonical: frame line, then nonzero entries in increasing
bitmask (or element) order, rationals in lowest terms.
"""

from __future__ import annotations

import os
import re
from typing import Union

from .categories import ProbabilityDistribution, make_probability
from .errors import DuplicateEntry, ParseError, ValidationError
from .frames import Frame, Subset, make_frame
from .mass import MassDistribution, SetFunction, make_mass, parse_rational
from .separable import WeightVector, make_weights

_ENTRY = re.compile(r"(mass|weight)\s*(\{[^{}]*\})\s*=\s*(\S+)\Z")
_SUBSET = re.compile(r"subset\s*(\{[^{}]*\})\Z")
_PROB = re.compile(r"prob\s+(\S+)\s*=\s*(\S+)\Z")

KIND_BY_SUFFIX = {".bba": "mass", ".wgt": "weight", ".set": "subset", ".prob": "prob"}

Document = Union[MassDistribution, WeightVector, Subset, ProbabilityDistribution]


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _split_frame(text: str, path=None) -> tuple[Frame, list[tuple[int, str]]]:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty document: expected a 'frame:' line", path)
    number, first = lines[0]
    if not first.startswith("frame:"):
        raise ParseError("first line must be 'frame: name ...'", path, number)
    try:
        frame = make_frame(first[len("frame:") :].split())
    except ValidationError as exc:
        raise ParseError(str(exc), path, number) from None
    return frame, lines[1:]


def _detect(body, default: str | None, path) -> str:
    for number, line in body:
        keyword = line.split(None, 1)[0].split("{", 1)[0]
        if keyword in ("mass", "weight", "subset", "prob"):
            if default is not None and keyword != default:
                raise ParseError(f"'{keyword}' line in a {default} file", path, number)
            return keyword
        raise ParseError(f"unrecognized line {line!r}", path, number)
    if default is None:
        raise ParseError("cannot tell the file type from an empty body", path)
    return default


def parse(text: str, kind: str | None = None, path=None) -> Document:
    """Parse a document; ``kind`` is ``mass``, ``weight``, ``subset``, ``prob`` or None to sniff."""
    frame, body = _split_frame(text, path)
    kind = _detect(body, kind, path)
    try:
        if kind in ("mass", "weight"):
            entries = []
            for number, line in body:
                m = _ENTRY.match(line)
                if not m or m.group(1) != kind:
                    raise ParseError(f"expected '{kind} {{...}} = value', got {line!r}", path, number)
                try:
                    entries.append((frame.parse_subset(m.group(2)), parse_rational(m.group(3))))
                except ValidationError as exc:
                    raise ParseError(str(exc), path, number) from None
            return make_mass(frame, entries) if kind == "mass" else make_weights(frame, entries)
        if kind == "subset":
            if len(body) != 1:
                raise ParseError("a subset file holds exactly one 'subset {...}' line", path)
            number, line = body[0]
            m = _SUBSET.match(line)
            if not m:
                raise ParseError(f"expected 'subset {{...}}', got {line!r}", path, number)
            return frame.parse_subset(m.group(1))
        atoms = {}
        for number, line in body:
            m = _PROB.match(line)
            if not m:
                raise ParseError(f"expected 'prob name = value', got {line!r}", path, number)
            name = m.group(1)
            frame.index(name)
            if name in atoms:
                raise DuplicateEntry(f"atom {name!r} listed twice")
            atoms[name] = parse_rational(m.group(2))
        return make_probability(frame, atoms)
    except ParseError:
        raise
    except ValidationError as exc:
        if path is not None:
            raise type(exc)(f"{path}: {exc}") from None
        raise


def read(path: str | os.PathLike, kind: str | None = None) -> Document:
    path = os.fspath(path)
    if kind is None:
        kind = KIND_BY_SUFFIX.get(os.path.splitext(path)[1].lower())
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read(), kind, path)


def parse_mass(text: str) -> MassDistribution:
    return parse(text, "mass")


def parse_weights(text: str) -> WeightVector:
    return parse(text, "weight")


def emit_mass(m: MassDistribution) -> str:
    lines = [str(m.frame)]
    lines += [f"mass {m.frame.format_subset(x)} = {v}" for x, v in m.focal()]
    return "\n".join(lines) + "\n"


def emit_weights(w: WeightVector) -> str:
    lines = [str(w.frame)]
    lines += [f"weight {w.frame.format_subset(x)} = {a}" for x, a in w.support()]
    return "\n".join(lines) + "\n"


def emit_subset(s: Subset) -> str:
    return f"{s.frame}\nsubset {s}\n"


def emit_probability(p: ProbabilityDistribution) -> str:
    lines = [str(p.frame)]
    lines += [f"prob {name} = {v}" for name, v in zip(p.frame.elements, p.atoms) if v]
    return "\n".join(lines) + "\n"


def emit_set_function(f: SetFunction) -> str:
    """Every subset in bitmask order, zeros included."""
    return "".join(f"{f.kind} {f.frame.format_subset(x)} = {v}\n" for x, v in enumerate(f.values))


def emit(doc: Document) -> str:
    if isinstance(doc, MassDistribution):
        return emit_mass(doc)
    if isinstance(doc, WeightVector):
        return emit_weights(doc)
    if isinstance(doc, Subset):
        return emit_subset(doc)
    if isinstance(doc, ProbabilityDistribution):
        return emit_probability(doc)
    if isinstance(doc, SetFunction):
        return emit_set_function(doc)
    raise TypeError(f"cannot emit {type(doc).__name__}")
