"""JSON interchange format for fusion data.

Schema (canonical form: sorted keys, simples sorted by label, two-space
indent, no floats anywhere):

    {
      "name": "rep_f2_z3",
      "description": "...",                      # optional
      "endo_degree": 1,
      "unit": ["1"],                             # defaults to ["1"]
      "simples": [
        {"label": "1", "endo_dim": 1, "dual": "1", "galois": "trivial"},
        {"label": "v", "endo_dim": 2, "dual": "v", "galois": null}
      ],
      "fusion": {"v|v": {"1": 2, "v": 1}},       # omitted entries are zero
      "group": {"elements": [...], "table": [[...]]},   # optional
      "center_degree": 1,                        # optional
      "division_types": {"1": "R", "v": "R"}     # optional
    }

A "galois" value of "trivial" marks a Galois-trivial simple, an object
{"group_element": "c"} attaches a Galois group element, and null marks a
Galois-nontrivial simple with no group datum.  A file whose galois values
are all null and which carries neither "group" nor "center_degree" has no
annotation at all.

Parsing enforces the schema only; semiring axioms are the validator's job so
that broken data can be loaded and reported on.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Optional

from .catalog import FixtureEntry
from .core import FusionData
from .deligne import DivisionType, SemisimpleDesc
from .errors import SchemaError
from .galois import FiniteGroup, GaloisAnnotation, GaloisMark

__all__ = [
    "ParsedFile",
    "parse_fusion_file",
    "emit_fusion_file",
    "emit_entry",
    "emit_morphism_file",
    "parse_morphism_file",
]


@dataclass(frozen=True)
class ParsedFile:
    name: str
    data: FusionData
    annotation: Optional[GaloisAnnotation] = None
    desc: Optional[SemisimpleDesc] = None
    description: str = ""

    def as_entry(self) -> FixtureEntry:
        return FixtureEntry(
            name=self.name,
            data=self.data,
            annotation=self.annotation,
            desc=self.desc,
            description=self.description,
        )


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise SchemaError(message)


def _get_str(doc: dict, key: str, default: Optional[str] = None) -> Optional[str]:
    value = doc.get(key, default)
    _expect(value is None or isinstance(value, str), f'"{key}" must be a string')
    return value


def _get_positive_int(doc: dict, key: str, default: Optional[int]) -> Optional[int]:
    value = doc.get(key, default)
    if value is None:
        return None
    _expect(
        isinstance(value, int) and not isinstance(value, bool) and value >= 1,
        f'"{key}" must be a positive integer, got {value!r}',
    )
    return value


def parse_fusion_file(source: str | bytes) -> ParsedFile:
    if isinstance(source, bytes):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise SchemaError(f"not valid UTF-8: {exc}") from exc
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}")
    _expect(isinstance(doc, dict), "top level must be a JSON object")

    name = _get_str(doc, "name", "") or ""
    description = _get_str(doc, "description", "") or ""
    endo_degree = _get_positive_int(doc, "endo_degree", 1)

    simples = doc.get("simples")
    _expect(
        isinstance(simples, list) and simples, '"simples" must be a nonempty array'
    )
    labels: list[str] = []
    endo_dims: list[int] = []
    dual_labels: list[str] = []
    galois_raw: list[Any] = []
    for pos, simple in enumerate(simples):
        _expect(isinstance(simple, dict), f"simples[{pos}] must be an object")
        label = simple.get("label")
        _expect(
            isinstance(label, str) and label, f'simples[{pos}] needs a nonempty "label"'
        )
        _expect(label not in labels, f"duplicate simple label {label!r}")
        labels.append(label)
        dim = simple.get("endo_dim", 1)
        _expect(
            isinstance(dim, int) and not isinstance(dim, bool) and dim >= 1,
            f'simple {label!r}: "endo_dim" must be a positive integer, got {dim!r}',
        )
        endo_dims.append(dim)
        dual = simple.get("dual", label)
        _expect(isinstance(dual, str), f'simple {label!r}: "dual" must be a label')
        dual_labels.append(dual)
        galois_raw.append(simple.get("galois"))

    index = {label: i for i, label in enumerate(labels)}
    rank = len(labels)
    for label, dual in zip(labels, dual_labels):
        _expect(dual in index, f'simple {label!r}: unknown dual label {dual!r}')

    unit_labels = doc.get("unit", ["1"])
    _expect(
        isinstance(unit_labels, list) and unit_labels,
        '"unit" must be a nonempty array of labels',
    )
    for u in unit_labels:
        _expect(isinstance(u, str) and u in index, f"unknown unit label {u!r}")

    tensor = [[[0] * rank for _ in range(rank)] for _ in range(rank)]
    fusion = doc.get("fusion", {})
    _expect(isinstance(fusion, dict), '"fusion" must be an object')
    for key, row in fusion.items():
        parts = key.split("|")
        _expect(
            len(parts) == 2, f'fusion key {key!r} must look like "left|right"'
        )
        left, right = parts
        _expect(left in index, f"fusion key {key!r}: unknown label {left!r}")
        _expect(right in index, f"fusion key {key!r}: unknown label {right!r}")
        _expect(isinstance(row, dict), f"fusion[{key!r}] must be an object")
        for result, mult in row.items():
            _expect(result in index, f"fusion[{key!r}]: unknown label {result!r}")
            _expect(
                isinstance(mult, int) and not isinstance(mult, bool) and mult >= 0,
                f"fusion[{key!r}][{result!r}] must be a nonnegative integer, got {mult!r}",
            )
            tensor[index[left]][index[right]][index[result]] = mult

    group: Optional[FiniteGroup] = None
    if "group" in doc:
        raw = doc["group"]
        _expect(isinstance(raw, dict), '"group" must be an object')
        elements = raw.get("elements")
        table = raw.get("table")
        _expect(
            isinstance(elements, list) and all(isinstance(e, str) for e in elements),
            '"group.elements" must be an array of labels',
        )
        _expect(
            isinstance(table, list)
            and all(isinstance(row, list) for row in table)
            and all(isinstance(v, int) for row in table for v in row),
            '"group.table" must be an array of arrays of element indices',
        )
        try:
            group = FiniteGroup(tuple(elements), tuple(tuple(row) for row in table))
        except ValueError as exc:
            raise SchemaError(f'"group" is not a valid group: {exc}') from exc

    center_degree = _get_positive_int(doc, "center_degree", None)

    marks: list[GaloisMark] = []
    annotated = group is not None or center_degree is not None
    for label, raw in zip(labels, galois_raw):
        if raw is None:
            marks.append(GaloisMark.nontrivial())
        elif raw == "trivial":
            marks.append(GaloisMark.trivial())
            annotated = True
        elif isinstance(raw, dict) and set(raw) == {"group_element"}:
            element = raw["group_element"]
            _expect(
                isinstance(element, str),
                f'simple {label!r}: "group_element" must be a label',
            )
            _expect(
                group is not None,
                f'simple {label!r} names a group element but the file has no "group"',
            )
            _expect(
                element in group.labels,
                f'simple {label!r}: unknown group element {element!r}',
            )
            marks.append(GaloisMark.of(element))
            annotated = True
        else:
            raise SchemaError(
                f'simple {label!r}: "galois" must be null, "trivial" or '
                f'{{"group_element": ...}}, got {raw!r}'
            )
    annotation = (
        GaloisAnnotation(tuple(marks), group=group, center_degree=center_degree)
        if annotated
        else None
    )

    desc: Optional[SemisimpleDesc] = None
    if "division_types" in doc:
        raw = doc["division_types"]
        _expect(isinstance(raw, dict), '"division_types" must be an object')
        _expect(
            set(raw) == set(labels),
            '"division_types" must assign a type to every simple',
        )
        kinds = []
        for label in labels:
            value = raw[label]
            _expect(
                value in ("R", "C", "H"),
                f'division type of {label!r} must be "R", "C" or "H", got {value!r}',
            )
            kinds.append((label, DivisionType(value)))
        desc = SemisimpleDesc(tuple(kinds))

    try:
        data = FusionData(
            labels=tuple(labels),
            n_tensor=tuple(tuple(tuple(row) for row in plane) for plane in tensor),
            dual=tuple(index[d] for d in dual_labels),
            eps=tuple(endo_dims),
            endo_degree=endo_degree,
            unit=tuple(index[u] for u in unit_labels),
        )
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc

    return ParsedFile(
        name=name, data=data, annotation=annotation, desc=desc, description=description
    )


def _mark_to_json(mark: Optional[GaloisMark]) -> Any:
    if mark is None or mark.kind == "nontrivial":
        return None
    if mark.kind == "trivial":
        return "trivial"
    return {"group_element": mark.element}


def emit_fusion_file(
    data: FusionData,
    *,
    name: str = "",
    annotation: Optional[GaloisAnnotation] = None,
    desc: Optional[SemisimpleDesc] = None,
    description: str = "",
) -> str:
    """Canonical byte-deterministic JSON form.  Simples are listed sorted by
    label, fusion rows keep only nonzero results, keys are sorted."""
    order = sorted(range(data.rank), key=lambda i: data.labels[i])
    doc: dict[str, Any] = {
        "name": name,
        "endo_degree": data.endo_degree,
        "unit": sorted(data.labels[u] for u in data.unit),
    }
    if description:
        doc["description"] = description
    simples = []
    for i in order:
        mark = annotation.marks[i] if annotation is not None else None
        simples.append(
            {
                "label": data.labels[i],
                "endo_dim": data.eps[i],
                "dual": data.labels[data.dual[i]],
                "galois": _mark_to_json(mark),
            }
        )
    doc["simples"] = simples
    fusion: dict[str, dict[str, int]] = {}
    for i in order:
        for j in order:
            row = {
                data.labels[k]: m
                for k, m in enumerate(data.n_tensor[i][j])
                if m
            }
            if row:
                fusion[f"{data.labels[i]}|{data.labels[j]}"] = dict(sorted(row.items()))
    doc["fusion"] = fusion
    if annotation is not None and annotation.group is not None:
        doc["group"] = {
            "elements": list(annotation.group.labels),
            "table": [list(row) for row in annotation.group.table],
        }
    if annotation is not None and annotation.center_degree is not None:
        doc["center_degree"] = annotation.center_degree
    if desc is not None:
        doc["division_types"] = {
            label: kind.value for label, kind in sorted(desc.simples)
        }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def emit_entry(entry: FixtureEntry) -> str:
    return emit_fusion_file(
        entry.data,
        name=entry.name,
        annotation=entry.annotation,
        desc=entry.desc,
        description=entry.description,
    )


# ---------------------------------------------------------------------------
# morphism files: embedded source/target documents plus label-keyed images


def emit_morphism_file(f: "SemiringMorphism", *, name: str = "") -> str:
    """Canonical JSON form of a semiring morphism.  The image of each source
    simple is keyed by labels, so it survives the label-sorted canonical
    ordering of the embedded fusion documents."""
    from .morphisms import SemiringMorphism  # local import avoids a cycle

    assert isinstance(f, SemiringMorphism)
    images: dict[str, dict[str, int]] = {}
    for s in range(f.source.rank):
        column = {
            f.target.labels[t]: f.matrix[t][s]
            for t in range(f.target.rank)
            if f.matrix[t][s]
        }
        if column:
            images[f.source.labels[s]] = dict(sorted(column.items()))
    doc: dict[str, Any] = {
        "kind": "morphism",
        "name": name,
        "source": json.loads(emit_fusion_file(f.source)),
        "target": json.loads(emit_fusion_file(f.target)),
        "images": images,
        "twist": None
        if f.twist is None
        else {
            f.source.labels[i]: c for i, c in enumerate(f.twist.coeffs) if c
        },
    }
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def parse_morphism_file(source: str | bytes) -> "SemiringMorphism":
    from .core import MultisetElement
    from .morphisms import SemiringMorphism

    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno}: {exc.msg}")
    _expect(isinstance(doc, dict), "top level must be a JSON object")
    _expect(doc.get("kind") == "morphism", 'morphism files carry "kind": "morphism"')
    for key in ("source", "target"):
        _expect(isinstance(doc.get(key), dict), f'"{key}" must be an embedded fusion document')
    src = parse_fusion_file(json.dumps(doc["source"])).data
    tgt = parse_fusion_file(json.dumps(doc["target"])).data
    images = doc.get("images", {})
    _expect(isinstance(images, dict), '"images" must be an object')
    matrix = [[0] * src.rank for _ in range(tgt.rank)]
    for s_label, column in images.items():
        _expect(s_label in src.labels, f"unknown source label {s_label!r}")
        _expect(isinstance(column, dict), f"images[{s_label!r}] must be an object")
        for t_label, mult in column.items():
            _expect(t_label in tgt.labels, f"unknown target label {t_label!r}")
            _expect(
                isinstance(mult, int) and not isinstance(mult, bool) and mult >= 0,
                f"images[{s_label!r}][{t_label!r}] must be a nonnegative integer",
            )
            matrix[tgt.index(t_label)][src.index(s_label)] = mult
    twist = None
    raw_twist = doc.get("twist")
    if raw_twist is not None:
        _expect(isinstance(raw_twist, dict), '"twist" must be an object or null')
        coeffs = [0] * src.rank
        for label, c in raw_twist.items():
            _expect(label in src.labels, f"unknown twist label {label!r}")
            _expect(
                isinstance(c, int) and not isinstance(c, bool) and c >= 0,
                f"twist[{label!r}] must be a nonnegative integer",
            )
            coeffs[src.index(label)] = c
        twist = MultisetElement(src, tuple(coeffs))
    return SemiringMorphism(
        source=src, target=tgt, matrix=tuple(tuple(row) for row in matrix), twist=twist
    )
