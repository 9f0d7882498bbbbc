"""Link question noun phrases to scene-graph objects.

A phrase grounds through the strongest applicable match level (exact, number,
synonym, hyponym), tried against the full phrase, the phrase with trailing
qualifier clauses stripped, and its head noun.  Using all three keeps exact
multiword names ("teddy bear") working alongside clause-carrying slots
("bat the batter is holding").
"""

from __future__ import annotations

from dataclasses import dataclass

from .lexicon import Lexicon, MatchKind, head_noun, same_term, strip_qualifiers
from .scene_graph import SceneGraph, normalize_name

_PRECEDENCE = (MatchKind.EXACT, MatchKind.NUMBER, MatchKind.SYNONYM, MatchKind.HYPONYM)
_STRENGTH = {kind: len(_PRECEDENCE) - i for i, kind in enumerate(_PRECEDENCE)}
_STRENGTH[MatchKind.NONE] = 0


@dataclass(frozen=True)
class Grounding:
    phrase: str
    object_ids: tuple[str, ...]
    kind: MatchKind


def _query_terms(phrase: str) -> list[str]:
    norm = normalize_name(phrase)
    terms = [norm]
    for candidate in (strip_qualifiers(norm), head_noun(norm)):
        if candidate and candidate not in terms:
            terms.append(candidate)
    return terms


def ground(phrase: str, graph: SceneGraph, lex: Lexicon) -> Grounding:
    """Ground a phrase to all objects matching at the strongest successful level."""
    if not normalize_name(phrase):
        raise ValueError("phrase must be non-empty")
    terms = _query_terms(phrase)
    strengths: dict[str, MatchKind] = {}
    for object_id in sorted(graph.objects):
        name = graph.objects[object_id].name
        best = MatchKind.NONE
        for term in terms:
            kind = same_term(term, name, lex)
            if _STRENGTH[kind] > _STRENGTH[best]:
                best = kind
        if best is not MatchKind.NONE:
            strengths[object_id] = best
    if not strengths:
        return Grounding(phrase=phrase, object_ids=(), kind=MatchKind.NONE)
    top = max(strengths.values(), key=_STRENGTH.get)
    ids = tuple(oid for oid in sorted(strengths) if strengths[oid] is top)
    return Grounding(phrase=phrase, object_ids=ids, kind=top)


def is_present(phrase: str, graph: SceneGraph, lex: Lexicon) -> bool:
    return bool(ground(phrase, graph, lex).object_ids)
