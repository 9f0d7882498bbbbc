"""Scene-graph and question data model, JSON ingestion, and read-only queries.

Scene graphs follow the GQA distribution layout: a JSON object keyed by image
id whose values carry integer ``width``/``height`` and an ``objects`` map from
object id to ``{name, x, y, w, h, attributes, relations}``.  Parsed values are
treated as immutable; malformed entries are skipped and reported as warnings
because the source data is known to be noisy.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum

from ._jsonio import load_json_object


def normalize_name(name: str) -> str:
    """Lowercase and collapse internal whitespace."""
    return " ".join(name.lower().split())


@dataclass(frozen=True)
class SGRelation:
    """Directed labeled edge from the owning object to ``target``."""

    predicate: str
    target: str


@dataclass
class SGObject:
    """One annotated object: name, pixel box (top-left corner), attributes, relations."""

    name: str
    x: int
    y: int
    w: int
    h: int
    attributes: set[str] = field(default_factory=set)
    relations: list[SGRelation] = field(default_factory=list)

    def center_x(self) -> float:
        return self.x + self.w / 2


@dataclass
class SceneGraph:
    image_id: str
    width: int
    height: int
    objects: dict[str, SGObject] = field(default_factory=dict)

    def object_names(self) -> list[str]:
        """Distinct normalized object names, sorted."""
        return sorted({normalize_name(o.name) for o in self.objects.values()})

    def has_relation(self, source_id: str, predicate: str, target_id: str) -> bool:
        obj = self.objects.get(source_id)
        if obj is None:
            return False
        want = normalize_name(predicate)
        return any(
            normalize_name(rel.predicate) == want and rel.target == target_id
            for rel in obj.relations
        )


class QuestionSource(Enum):
    ORIGINAL = "original"
    PERTURBED = "perturbed"


@dataclass(frozen=True)
class QAPair:
    question_id: str
    image_id: str
    question: str
    answer: str
    source: QuestionSource = QuestionSource.ORIGINAL


@dataclass(frozen=True)
class SchemaViolation:
    """A structurally invalid entry that was skipped or repaired during parsing."""

    entry_id: str
    path: str
    message: str


def _is_int(value) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)


def _parse_object(
    image_id: str,
    object_id: str,
    raw,
    width: int,
    height: int,
    warnings: list[SchemaViolation],
) -> SGObject | None:
    path = f"objects.{object_id}"
    if not isinstance(raw, dict):
        warnings.append(SchemaViolation(image_id, path, "object entry is not a JSON object"))
        return None
    name = raw.get("name")
    if not isinstance(name, str) or not name.strip():
        warnings.append(SchemaViolation(image_id, path, "missing or empty object name"))
        return None
    coords = {}
    for key in ("x", "y", "w", "h"):
        value = raw.get(key, 0)
        if not _is_int(value):
            warnings.append(SchemaViolation(image_id, f"{path}.{key}", "coordinate is not an integer"))
            return None
        coords[key] = value

    attributes: set[str] = set()
    raw_attrs = raw.get("attributes", [])
    if isinstance(raw_attrs, list):
        attributes = {normalize_name(a) for a in raw_attrs if isinstance(a, str) and a.strip()}
    else:
        warnings.append(SchemaViolation(image_id, f"{path}.attributes", "attributes is not an array"))

    relations: list[SGRelation] = []
    raw_rels = raw.get("relations", [])
    if isinstance(raw_rels, list):
        for i, rel in enumerate(raw_rels):
            if (
                not isinstance(rel, dict)
                or not isinstance(rel.get("name"), str)
                or not rel["name"].strip()
                or not isinstance(rel.get("object"), str)
                or not rel["object"].strip()
            ):
                warnings.append(
                    SchemaViolation(image_id, f"{path}.relations[{i}]", "malformed relation entry")
                )
                continue
            relations.append(SGRelation(predicate=rel["name"], target=rel["object"]))
    else:
        warnings.append(SchemaViolation(image_id, f"{path}.relations", "relations is not an array"))

    obj = SGObject(name=name, attributes=attributes, relations=relations, **coords)
    if obj.x < 0 or obj.y < 0 or obj.w < 0 or obj.h < 0 or obj.x + obj.w > width or obj.y + obj.h > height:
        # Out-of-bounds boxes occur in real annotations; keep the object.
        warnings.append(SchemaViolation(image_id, path, "bounding box outside image bounds"))
    return obj


def parse_scene_graphs(stream) -> tuple[dict[str, SceneGraph], list[SchemaViolation]]:
    """Parse a GQA-layout scene-graph file into SceneGraph values.

    Structurally invalid entries are skipped and reported in the returned
    warning list; relations whose target object id is missing are dropped
    with a warning while the rest of the graph is retained.
    """
    data = load_json_object(stream)
    graphs: dict[str, SceneGraph] = {}
    warnings: list[SchemaViolation] = []
    for image_id, raw in data.items():
        if not isinstance(raw, dict):
            warnings.append(SchemaViolation(image_id, "", "graph entry is not a JSON object"))
            continue
        width = raw.get("width")
        height = raw.get("height")
        if not _is_int(width) or width <= 0 or not _is_int(height) or height <= 0:
            warnings.append(SchemaViolation(image_id, "width/height", "missing or non-positive image size"))
            continue
        raw_objects = raw.get("objects")
        if not isinstance(raw_objects, dict):
            warnings.append(SchemaViolation(image_id, "objects", "objects is not a JSON object"))
            continue
        objects: dict[str, SGObject] = {}
        for object_id, raw_obj in raw_objects.items():
            obj = _parse_object(image_id, object_id, raw_obj, width, height, warnings)
            if obj is not None:
                objects[object_id] = obj
        for object_id, obj in objects.items():
            resolved = [rel for rel in obj.relations if rel.target in objects]
            for rel in obj.relations:
                if rel.target not in objects:
                    warnings.append(
                        SchemaViolation(
                            image_id,
                            f"objects.{object_id}.relations",
                            f"relation target {rel.target!r} does not resolve",
                        )
                    )
            obj.relations = resolved
        graphs[image_id] = SceneGraph(image_id=image_id, width=width, height=height, objects=objects)
    return graphs, warnings


def parse_questions(stream) -> tuple[list[QAPair], list[SchemaViolation]]:
    """Parse a question file: JSON object keyed by question id with imageId/question/answer."""
    data = load_json_object(stream)
    questions: list[QAPair] = []
    warnings: list[SchemaViolation] = []
    for question_id, raw in data.items():
        if not isinstance(raw, dict):
            warnings.append(SchemaViolation(question_id, "", "question entry is not a JSON object"))
            continue
        fields = {}
        bad = False
        for key in ("imageId", "question", "answer"):
            value = raw.get(key)
            if not isinstance(value, str) or not value.strip():
                warnings.append(SchemaViolation(question_id, key, f"missing or empty {key!r}"))
                bad = True
                break
            fields[key] = value
        if bad:
            continue
        questions.append(
            QAPair(
                question_id=question_id,
                image_id=fields["imageId"],
                question=fields["question"],
                answer=fields["answer"],
                source=QuestionSource.ORIGINAL,
            )
        )
    return questions, warnings


def objects_by_name(graph: SceneGraph, name: str) -> list[str]:
    """Ids of all objects whose normalized name equals ``name``, ascending."""
    wanted = normalize_name(name)
    return sorted(oid for oid, obj in graph.objects.items() if normalize_name(obj.name) == wanted)


def graph_to_dict(graph: SceneGraph) -> dict:
    return {
        "width": graph.width,
        "height": graph.height,
        "objects": {
            oid: {
                "name": obj.name,
                "x": obj.x,
                "y": obj.y,
                "w": obj.w,
                "h": obj.h,
                "attributes": sorted(obj.attributes),
                "relations": [{"name": rel.predicate, "object": rel.target} for rel in obj.relations],
            }
            for oid, obj in sorted(graph.objects.items())
        },
    }


def graphs_to_json(graphs: dict[str, SceneGraph]) -> str:
    return json.dumps({image_id: graph_to_dict(g) for image_id, g in sorted(graphs.items())}, indent=2)
