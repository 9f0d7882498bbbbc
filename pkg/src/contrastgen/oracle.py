"""Deterministic gold-answer computation for template matches against a scene graph.

The oracle reasons only over scene-graph content: relation edges first, with a
bounding-box geometry fallback for left/right questions.  Ambiguity (multiple
grounded objects that disagree, edge/geometry conflicts, exact-midline
centers) lowers confidence instead of guessing; generation only consumes
confident answers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GroundingFailedError
from .grounding import ground
from .lexicon import Lexicon
from .scene_graph import SceneGraph
from .templates import TemplateKind, TemplateMatch

NEAR_PREDICATE = "near"

_OPPOSITE = {"left": "right", "right": "left"}


def opposite(direction: str) -> str:
    return _OPPOSITE[direction]


def relation_predicate(direction: str) -> str:
    return f"to the {direction} of"


@dataclass(frozen=True)
class OracleAnswer:
    value: str
    confident: bool


def side_answer(object_ids, graph: SceneGraph) -> OracleAnswer:
    """Which half of the image the objects sit in, by horizontal box center."""
    ids = sorted(object_ids)
    if not ids:
        raise GroundingFailedError("side object")
    midline = graph.width / 2
    sides = []
    on_midline = False
    for oid in ids:
        center = graph.objects[oid].center_x()
        if center == midline:
            on_midline = True
        sides.append("left" if center < midline else "right")
    return OracleAnswer(value=sides[0], confident=not on_midline and len(set(sides)) == 1)


def color_answer(object_ids, graph: SceneGraph, lex: Lexicon) -> OracleAnswer:
    ids = sorted(object_ids)
    if not ids:
        raise GroundingFailedError("color object")
    per_object = [
        sorted(a for a in graph.objects[oid].attributes if a in lex.colors) for oid in ids
    ]
    all_colors = sorted(set().union(*per_object))
    if not all_colors:
        raise GroundingFailedError("color")
    confident = len(all_colors) == 1 and all(len(colors) == 1 for colors in per_object)
    return OracleAnswer(value=all_colors[0], confident=confident)


def near_answer(x_ids, y_ids, graph: SceneGraph) -> OracleAnswer:
    """Is any X object near any Y object, judged purely from "near" edges."""
    if not y_ids:
        raise GroundingFailedError("near target")
    for x in sorted(x_ids):
        for y in sorted(y_ids):
            if x == y:
                continue
            if graph.has_relation(x, NEAR_PREDICATE, y) or graph.has_relation(y, NEAR_PREDICATE, x):
                return OracleAnswer(value="yes", confident=True)
    if not x_ids:
        return OracleAnswer(value="no", confident=True)
    # X exists in the graph but the near edges say nothing about the pair.
    return OracleAnswer(value="no", confident=False)


def relation_answer(
    x_ids, y_ids, direction: str, graph: SceneGraph, *, geometry_fallback: bool = True
) -> OracleAnswer:
    """Answer "is X to the {direction} of Y" from relation edges, geometry as fallback.

    Per (x, y) pair: an explicit edge decides; otherwise the strict comparison
    of horizontal centers does (when enabled).  Edge evidence takes precedence
    but a disagreement with geometry, a conflicting edge pair, or pairs that
    disagree with each other all drop confidence.
    """
    pairs = [(x, y) for x in sorted(x_ids) for y in sorted(y_ids) if x != y]
    if not pairs:
        raise GroundingFailedError("relation pair")
    rel_pred = relation_predicate(direction)
    opp_pred = relation_predicate(opposite(direction))
    verdicts: list[str | None] = []
    conflict = False
    for x, y in pairs:
        has_rel = graph.has_relation(x, rel_pred, y)
        has_opp = graph.has_relation(x, opp_pred, y)
        if has_rel and has_opp:
            edge = None
            conflict = True
        elif has_rel:
            edge = "yes"
        elif has_opp:
            edge = "no"
        else:
            edge = None
        geo = None
        if geometry_fallback:
            cx = graph.objects[x].center_x()
            cy = graph.objects[y].center_x()
            if cx != cy:
                x_is_left = cx < cy
                geo = "yes" if (direction == "left") == x_is_left else "no"
        if edge is not None and geo is not None and edge != geo:
            conflict = True
        verdicts.append(edge if edge is not None else geo)
    decided = [v for v in verdicts if v is not None]
    if not decided:
        return OracleAnswer(value="no", confident=False)
    value = decided[0]
    confident = (
        not conflict
        and len(decided) == len(verdicts)
        and all(v == value for v in decided)
    )
    return OracleAnswer(value=value, confident=confident)


def answer(
    m: TemplateMatch, graph: SceneGraph, lex: Lexicon, *, geometry_fallback: bool = True
) -> OracleAnswer:
    """Compute the gold answer for a template match.

    Raises GroundingFailedError when a presupposed slot grounds to nothing,
    i.e. the question is unanswerable against this graph.
    """
    if m.kind is TemplateKind.WHICH_SIDE:
        g = ground(m.first_object, graph, lex)
        if not g.object_ids:
            raise GroundingFailedError(m.first_object)
        return side_answer(g.object_ids, graph)

    if m.kind is TemplateKind.WHAT_COLOR:
        g = ground(m.first_object, graph, lex)
        if not g.object_ids:
            raise GroundingFailedError(m.first_object)
        return color_answer(g.object_ids, graph, lex)

    if m.kind is TemplateKind.SEE_EITHER:
        seen = bool(ground(m.first_object, graph, lex).object_ids) or bool(
            ground(m.second_object, graph, lex).object_ids
        )
        return OracleAnswer(value="yes" if seen else "no", confident=True)

    if m.kind is TemplateKind.ANY_NEAR:
        gy = ground(m.second_object, graph, lex)
        if not gy.object_ids:
            raise GroundingFailedError(m.second_object)
        gx = ground(m.first_object, graph, lex)
        return near_answer(gx.object_ids, gy.object_ids, graph)

    # Spatial kinds share one evaluation; they differ only in what gets perturbed.
    gx = ground(m.first_object, graph, lex)
    if not gx.object_ids:
        raise GroundingFailedError(m.first_object)
    gy = ground(m.second_object, graph, lex)
    if not gy.object_ids:
        raise GroundingFailedError(m.second_object)
    try:
        return relation_answer(
            gx.object_ids, gy.object_ids, m.direction, graph, geometry_fallback=geometry_fallback
        )
    except GroundingFailedError:
        raise GroundingFailedError(m.second_object) from None
