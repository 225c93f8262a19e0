"""YAML documents: a category with optional group, action, grading and transversal.

A document looks like::

    name: swap
    field: 5
    objects: [x, y]
    hom:
      - {target: x, source: x, basis: [1x]}
      - {target: y, source: x, basis: [a]}
    comp:
      - [a, 1x, {a: 1}]
    identities: {x: 1x, y: 1y}
    group: {cyclic: 2}
    action:
      s:
        objects: {x: y, y: x}
        morphisms: {a: b, 1x: 1y}
    grading: {a: s}
    transversal: [x]

Composition entries read ``[g, f, g∘f]``. Morphism images and identities
are either a single basis label or a ``{label: scalar}`` map; scalars are
integers or ``"num/den"`` strings. Action data is given on generators and
closed under products; unlisted morphisms are fixed.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Mapping

import yaml

from .constructions.grading import Grading
from .errors import StructureError
from .group.action import GroupAction
from .group.finite_group import FiniteGroup, cyclic_group, symmetric_group, trivial_group
from .lincat.category import LinCat
from .lincat.matrices import Vector
from .lincat.scalars import Field, Scalar

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Document:
    """A parsed document; sections other than the category are optional."""

    category: LinCat
    group: FiniteGroup | None = None
    action: GroupAction | None = None
    grading: Grading | None = None
    transversal: tuple[str, ...] | None = None
    name: str = ""


# Scalars and vectors


def _vector_from(labels: Mapping[str, int], field: Field, raw: Any, where: str) -> Vector:
    if isinstance(raw, str):
        raw = {raw: 1}
    if not isinstance(raw, Mapping):
        raise StructureError(f"{where}: expected a basis label or a {{label: scalar}} map, got {raw!r}")
    out: Vector = {}
    for label, coeff in raw.items():
        if str(label) not in labels:
            raise StructureError(f"{where} refers to unknown basis label {label!r}")
        value = field(coeff)
        if value:
            i = labels[str(label)]
            total = out.get(i, field.zero) + value
            if total:
                out[i] = total
            else:
                out.pop(i, None)
    return out


def _vector_to(c: LinCat, vec: Mapping[int, Scalar]) -> dict[str, int | str] | str:
    if len(vec) == 1:
        (i, v), = vec.items()
        if v == c.field.one:
            return c.basis[i].label
    return c.describe(vec)


# Categories


def category_from_dict(data: Mapping[str, Any], field: Field | None = None) -> LinCat:
    """Build a category from a document; ``field`` overrides the document's field."""
    for key in ("objects", "hom", "identities"):
        if key not in data:
            raise StructureError(f"Document has no {key!r} section")
    field = field or Field.parse(data.get("field", 5))
    hom: dict[tuple[str, str], list[str]] = {}
    for entry in data["hom"]:
        try:
            target, source, labels = str(entry["target"]), str(entry["source"]), entry["basis"]
        except (KeyError, TypeError):
            raise StructureError(f"Hom entry needs target, source and basis: {entry!r}") from None
        hom.setdefault((target, source), []).extend(str(label) for label in labels)
    comp: dict[tuple[str, str], Mapping[str, object]] = {}
    for entry in data.get("comp") or ():
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise StructureError(f"Composition entry must read [g, f, value]: {entry!r}")
        g, f, value = entry
        comp[(str(g), str(f))] = {value: 1} if isinstance(value, str) else dict(value or {})
    identities = {
        str(x): ({v: 1} if isinstance(v, str) else dict(v)) for x, v in (data["identities"] or {}).items()
    }
    return LinCat.build(
        field,
        [str(x) for x in data["objects"]],
        hom,
        comp,
        identities,
        name=str(data.get("name", "")),
    )


def category_to_dict(c: LinCat) -> dict[str, Any]:
    """Inverse of category_from_dict, keeping the basis order."""
    hom: list[dict[str, Any]] = []
    for b in c.basis:
        target, source = c.objects[b.target], c.objects[b.source]
        if not hom or (hom[-1]["target"], hom[-1]["source"]) != (target, source):
            hom.append({"target": target, "source": source, "basis": []})
        hom[-1]["basis"].append(b.label)
    comp = [
        [c.basis[g].label, c.basis[f].label, _vector_to(c, value)]
        for (g, f), value in sorted(c.comp.items())
        if value
    ]
    out: dict[str, Any] = {}
    if c.name:
        out["name"] = c.name
    out.update(
        {
            "field": c.field.descriptor,
            "objects": list(c.objects),
            "hom": hom,
            "comp": comp,
            "identities": {c.objects[x]: _vector_to(c, ident) for x, ident in enumerate(c.identities)},
        }
    )
    return out


# Groups, actions, gradings


def group_from_dict(data: Any) -> FiniteGroup:
    """``{cyclic: n}``, ``{symmetric: n}``, ``trivial`` or an explicit table."""
    if data in ("trivial", None) or (isinstance(data, Mapping) and data.get("trivial")):
        return trivial_group()
    if not isinstance(data, Mapping):
        raise StructureError(f"Unknown group description: {data!r}")
    if "cyclic" in data:
        return cyclic_group(int(data["cyclic"]), str(data.get("generator", "s")))
    if "symmetric" in data:
        return symmetric_group(int(data["symmetric"]))
    if "elements" in data and "table" in data:
        return FiniteGroup.from_table([str(e) for e in data["elements"]], data["table"], str(data.get("name", "")))
    raise StructureError(f"Unknown group description: {dict(data)!r}")


def group_to_dict(group: FiniteGroup) -> dict[str, Any]:
    return {
        "name": group.name,
        "elements": list(group.labels),
        "table": [[group.labels[group.mul(a, b)] for b in group.elements] for a in group.elements],
    }


def action_from_dict(group: FiniteGroup, c: LinCat, data: Mapping[str, Any]) -> GroupAction:
    generators: dict[int, tuple[list[int], list[Vector]]] = {}
    for element, entry in data.items():
        if str(element) not in group.index:
            raise StructureError(f"Action refers to unknown group element {element!r}")
        entry = entry or {}
        perm = list(range(len(c.objects)))
        for x, y in (entry.get("objects") or {}).items():
            for name in (x, y):
                if str(name) not in c.object_index:
                    raise StructureError(f"Action refers to unknown object {name!r}")
            perm[c.object_index[str(x)]] = c.object_index[str(y)]
        images = [c.basis_vector(i) for i in range(c.dimension)]
        for label, image in (entry.get("morphisms") or {}).items():
            if str(label) not in c.label_index:
                raise StructureError(f"Action refers to unknown basis label {label!r}")
            images[c.label_index[str(label)]] = _vector_from(c.label_index, c.field, image, f"Image of {label}")
        generators[group.index[str(element)]] = (perm, images)
    return GroupAction.from_generators(group, c, generators)


def action_to_dict(a: GroupAction) -> dict[str, Any]:
    """Action data of every non-identity element, listing only what moves."""
    c, group = a.category, a.group
    out: dict[str, Any] = {}
    for s in group.elements:
        if s == group.identity:
            continue
        objects = {c.objects[x]: c.objects[y] for x, y in enumerate(a.object_perm[s]) if x != y}
        morphisms = {
            c.basis[f].label: _vector_to(c, img)
            for f, img in enumerate(a.images[s])
            if img != c.basis_vector(f)
        }
        entry: dict[str, Any] = {}
        if objects:
            entry["objects"] = objects
        if morphisms:
            entry["morphisms"] = morphisms
        out[group.labels[s]] = entry
    return out


def grading_to_dict(grading: Grading) -> dict[str, str]:
    group = grading.group
    return {label: element for label, element in grading.labels().items() if element != group.labels[group.identity]}


# Documents


def document_from_dict(data: Mapping[str, Any], field: Field | None = None) -> Document:
    if not isinstance(data, Mapping):
        raise StructureError("A document must be a mapping")
    c = category_from_dict(data, field)
    group = action = grading = None
    if "group" in data or "action" in data or "grading" in data:
        group = group_from_dict(data.get("group"))
    if data.get("action"):
        action = action_from_dict(group, c, data["action"])
    if data.get("grading"):
        grading = Grading.from_labels(group, c, {str(k): str(v) for k, v in data["grading"].items()})
    transversal = None
    if data.get("transversal"):
        transversal = tuple(str(x) for x in data["transversal"])
        unknown = [x for x in transversal if x not in c.object_index]
        if unknown:
            raise StructureError(f"Transversal refers to unknown object {unknown[0]!r}")
    logger.debug(f"document {c.name or '?'}: {len(c.objects)} objects, dim {c.dimension}")
    return Document(c, group, action, grading, transversal, name=c.name)


def document_to_dict(doc: Document) -> dict[str, Any]:
    out = category_to_dict(doc.category)
    group = doc.group or (doc.action.group if doc.action else None) or (doc.grading.group if doc.grading else None)
    if group is not None:
        out["group"] = group_to_dict(group)
    if doc.action is not None:
        out["action"] = action_to_dict(doc.action)
    if doc.grading is not None:
        out["grading"] = grading_to_dict(doc.grading)
    if doc.transversal:
        out["transversal"] = list(doc.transversal)
    return out


def load_document(path: str | Path, field: Field | None = None) -> Document:
    """Read a YAML document; ``field`` rebinds every scalar to another field."""
    path = Path(path).expanduser()
    if not path.exists():
        raise FileNotFoundError(f"Document not found: {path}")
    with open(path) as f:
        try:
            data = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise StructureError(f"{path} is not valid YAML: {e}") from e
    return document_from_dict(data, field)


def dump_document(doc: Document, path: str | Path | None = None) -> str:
    """Serialize a document; also writes it when ``path`` is given."""
    text = yaml.safe_dump(document_to_dict(doc), sort_keys=False, allow_unicode=True)
    if path is not None:
        Path(path).write_text(text)
    return text


# Cochains


def cochain_to_dict(c: LinCat, degree: int, entries: Mapping[tuple[tuple[int, ...], int], Scalar]) -> dict[str, Any]:
    """A cochain as ``{degree, entries: [{path, value, coeff}]}`` over basis labels."""
    rows = []
    for (p, h), v in sorted(entries.items()):
        rows.append({"path": [c.basis[f].label for f in p], "value": c.basis[h].label, "coeff": c.field.to_text(v)})
    return {"degree": degree, "entries": rows}


def cochain_from_dict(c: LinCat, data: Mapping[str, Any]) -> tuple[int, dict[tuple[tuple[int, ...], int], Scalar]]:
    try:
        degree = int(data["degree"])
        rows = data.get("entries") or []
    except (KeyError, TypeError, ValueError):
        raise StructureError("A cochain needs an integer 'degree' and a list of 'entries'") from None
    out: dict[tuple[tuple[int, ...], int], Scalar] = {}
    for row in rows:
        path = tuple(row.get("path") or ())
        if len(path) != degree:
            raise StructureError(f"Cochain entry {row!r} has a path of length {len(path)}, expected {degree}")
        for label in (*path, row.get("value")):
            if str(label) not in c.label_index:
                raise StructureError(f"Cochain refers to unknown basis label {label!r}")
        key = (tuple(c.label_index[str(f)] for f in path), c.label_index[str(row["value"])])
        value = c.field(row.get("coeff", 1))
        if value:
            out[key] = out.get(key, c.field.zero) + value
    return degree, {k: v for k, v in out.items() if v}


def load_cochain(path: str | Path, c: LinCat) -> tuple[int, dict[tuple[tuple[int, ...], int], Scalar]]:
    with open(Path(path).expanduser()) as f:
        return cochain_from_dict(c, yaml.safe_load(f))
