"""Recognition of the six supported question templates and canonical rendering.

Each template is a regular expression over the question surface, case
insensitive and tolerant of a/an/any/the and of is/are agreement.  Slot spans
are character ranges into the original question so that downstream edits can
replace exactly one atom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum

from .errors import ArityMismatchError
from .lexicon import Lexicon, indefinite_article
from .scene_graph import QAPair


class TemplateKind(Enum):
    WHICH_SIDE = "which_side"          # On which side is the _?
    WHAT_COLOR = "what_color"          # What color is the _? / The _ has what color?
    SEE_EITHER = "see_either"          # Do you see (either) _ or _?
    ANY_NEAR = "any_near"              # Is there any _ near the _?
    SPATIAL_OBJECT = "spatial_object"      # Is the _ to the left/right of the _?  (object replaced)
    SPATIAL_RELATION = "spatial_relation"  # same surface, relation word replaced


SPATIAL_KINDS = frozenset({TemplateKind.SPATIAL_OBJECT, TemplateKind.SPATIAL_RELATION})
TWO_OBJECT_KINDS = frozenset(
    {TemplateKind.SEE_EITHER, TemplateKind.ANY_NEAR} | SPATIAL_KINDS
)

Span = tuple[int, int]


@dataclass(frozen=True)
class TemplateMatch:
    kind: TemplateKind
    first_object: str
    first_span: Span
    original: QAPair
    second_object: str | None = None
    second_span: Span | None = None
    direction: str | None = None
    direction_span: Span | None = None
    verb_span: Span | None = None


_ART = r"(?:(?:a|an|any|the)\s+)?"
_TAIL = r"\s*\??\s*$"

_RX_WHICH_SIDE = re.compile(
    rf"^\s*on\s+which\s+side\s+(?P<verb>is|are)\s+{_ART}(?P<first>.+?){_TAIL}",
    re.IGNORECASE,
)
_RX_WHAT_COLOR = re.compile(
    rf"^\s*what\s+color\s+(?P<verb>is|are)\s+{_ART}(?P<first>.+?){_TAIL}",
    re.IGNORECASE,
)
_RX_SEE_EITHER = re.compile(
    rf"^\s*do\s+you\s+see\s+(?:either\s+)?{_ART}(?P<first>.+?)\s+or\s+{_ART}(?P<second>.+?)"
    rf"(?:\s+(?:there|in\s+th(?:is|e)\s+(?:picture|image|photo)))?{_TAIL}",
    re.IGNORECASE,
)
_RX_ANY_NEAR = re.compile(
    rf"^\s*(?P<verb>is|are)\s+there\s+{_ART}(?P<first>.+?)\s+near\s+{_ART}(?P<second>.+?){_TAIL}",
    re.IGNORECASE,
)
_RX_SPATIAL = re.compile(
    rf"^\s*(?P<verb>is|are)\s+{_ART}(?P<first>.+?)\s+to\s+the\s+(?P<direction>left|right)\s+of\s+"
    rf"{_ART}(?P<second>.+?){_TAIL}",
    re.IGNORECASE,
)
# Inverted color form is checked last: its loose prefix would otherwise shadow nothing,
# but crafted inputs could pass two patterns.
_RX_WHAT_COLOR_INV = re.compile(
    rf"^\s*(?:the\s+)?(?P<first>.+?)\s+(?P<verb>has|have)\s+what\s+color{_TAIL}",
    re.IGNORECASE,
)


def _single(kind: TemplateKind, q: QAPair, m: re.Match) -> TemplateMatch:
    return TemplateMatch(
        kind=kind,
        first_object=m.group("first"),
        first_span=m.span("first"),
        original=q,
        verb_span=m.span("verb") if "verb" in m.groupdict() and m.group("verb") else None,
    )


def _pair(kind: TemplateKind, q: QAPair, m: re.Match) -> TemplateMatch:
    return TemplateMatch(
        kind=kind,
        first_object=m.group("first"),
        first_span=m.span("first"),
        original=q,
        second_object=m.group("second"),
        second_span=m.span("second"),
        verb_span=m.span("verb") if "verb" in m.groupdict() and m.group("verb") else None,
    )


def match_template(q: QAPair) -> list[TemplateMatch]:
    """Match a question against the six templates.

    Returns an empty list for questions outside the templates.  A spatial
    question ("Is the _ to the left of the _?") produces two matches, one per
    perturbation strategy, sharing the same slots and spans.
    """
    text = q.question
    m = _RX_WHICH_SIDE.match(text)
    if m:
        return [_single(TemplateKind.WHICH_SIDE, q, m)]
    m = _RX_WHAT_COLOR.match(text)
    if m:
        return [_single(TemplateKind.WHAT_COLOR, q, m)]
    m = _RX_SEE_EITHER.match(text)
    if m:
        return [_pair(TemplateKind.SEE_EITHER, q, m)]
    m = _RX_ANY_NEAR.match(text)
    if m:
        return [_pair(TemplateKind.ANY_NEAR, q, m)]
    m = _RX_SPATIAL.match(text)
    if m:
        base = dict(
            first_object=m.group("first"),
            first_span=m.span("first"),
            original=q,
            second_object=m.group("second"),
            second_span=m.span("second"),
            direction=m.group("direction").lower(),
            direction_span=m.span("direction"),
            verb_span=m.span("verb"),
        )
        return [
            TemplateMatch(kind=TemplateKind.SPATIAL_OBJECT, **base),
            TemplateMatch(kind=TemplateKind.SPATIAL_RELATION, **base),
        ]
    m = _RX_WHAT_COLOR_INV.match(text)
    if m:
        return [_single(TemplateKind.WHAT_COLOR, q, m)]
    return []


def render(
    kind: TemplateKind,
    first_object: str,
    second_object: str | None = None,
    direction: str | None = None,
    *,
    lexicon: Lexicon,
) -> str:
    """Render the canonical question for a template and its slots.

    Verb agreement follows the first slot's plurality; indefinite articles are
    chosen per slot where the canonical surface uses one.
    """
    needs_second = kind in TWO_OBJECT_KINDS
    if needs_second != (second_object is not None):
        raise ArityMismatchError(f"{kind.value} takes {'two objects' if needs_second else 'one object'}")
    needs_direction = kind in SPATIAL_KINDS
    if needs_direction != (direction is not None):
        raise ArityMismatchError(f"{kind.value} {'requires' if needs_direction else 'does not take'} a direction")
    if direction is not None and direction not in ("left", "right"):
        raise ArityMismatchError(f"direction must be 'left' or 'right', got {direction!r}")

    plural = lexicon.is_plural(first_object)
    be = "are" if plural else "is"

    if kind is TemplateKind.WHICH_SIDE:
        return f"On which side {be} the {first_object}?"
    if kind is TemplateKind.WHAT_COLOR:
        return f"What color {be} the {first_object}?"
    if kind is TemplateKind.SEE_EITHER:
        def with_article(phrase: str) -> str:
            article = indefinite_article(phrase, lexicon)
            return f"{article} {phrase}" if article else phrase

        return f"Do you see either {with_article(first_object)} or {with_article(second_object)}?"
    if kind is TemplateKind.ANY_NEAR:
        return f"{be.capitalize()} there any {first_object} near the {second_object}?"
    return f"{be.capitalize()} the {first_object} to the {direction} of the {second_object}?"


def template_names() -> list[str]:
    return [kind.value for kind in TemplateKind]


def templates_from_names(names) -> frozenset[TemplateKind]:
    kinds = set()
    for name in names:
        cleaned = name.strip().lower()
        if not cleaned:
            continue
        try:
            kinds.add(TemplateKind(cleaned))
        except ValueError:
            raise ValueError(
                f"unknown template {name!r}; choose from: {', '.join(template_names())}"
            ) from None
    return frozenset(kinds)
