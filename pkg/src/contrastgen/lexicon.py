"""Word-knowledge tables: synonyms, hypernym links, plural forms, countability, colors.

A small built-in lexicon ships with the package; real-data runs should supply
their own file via ``--lexicon`` since the built-in tables only cover common
object names.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ._jsonio import load_json_object
from .errors import InconsistentPluralError
from .scene_graph import normalize_name

# Function words that end the head noun phrase of a slot, e.g.
# "bat the batter is holding" -> "bat", "teddy bear to the right of the pillow" -> "teddy bear".
_QUALIFIER_MARKERS = frozenset(
    {"the", "that", "which", "to", "of", "in", "on", "at", "by", "near", "with",
     "behind", "under", "above", "below", "over"}
)

_VOWELS = "aeiou"


class MatchKind(Enum):
    EXACT = "exact"
    NUMBER = "number"
    SYNONYM = "synonym"
    HYPONYM = "hyponym"
    NONE = "none"


def strip_qualifiers(phrase: str) -> str:
    """Drop a trailing qualifier clause: everything from the first mid-phrase marker word."""
    tokens = normalize_name(phrase).split()
    cut = len(tokens)
    for i, token in enumerate(tokens):
        if i > 0 and token in _QUALIFIER_MARKERS:
            cut = i
            break
    return " ".join(tokens[:cut])


def head_noun(phrase: str) -> str:
    """Head noun of a slot phrase: last alphabetic token after stripping qualifiers."""
    kept = strip_qualifiers(phrase).split()
    if not kept:
        return ""
    for token in reversed(kept):
        if token.isalpha():
            return token
    return kept[-1]


@dataclass(frozen=True)
class Lexicon:
    synonyms: dict[str, frozenset[str]]  # term -> its full synonym group (including itself)
    hypernyms: dict[str, str]            # term -> broader term
    plural_of: dict[str, str]            # singular -> plural
    singular_of: dict[str, str]          # plural -> singular (inverse of plural_of)
    uncountable: frozenset[str]
    colors: frozenset[str]
    article_overrides: dict[str, str] = field(default_factory=dict)

    def is_plural(self, term: str) -> bool:
        t = normalize_name(term)
        if t in self.singular_of:
            return True
        tokens = t.split()
        return bool(tokens) and tokens[-1] in self.singular_of

    def singularize(self, term: str) -> str:
        t = normalize_name(term)
        if t in self.singular_of:
            return self.singular_of[t]
        tokens = t.split()
        if tokens and tokens[-1] in self.singular_of:
            return " ".join(tokens[:-1] + [self.singular_of[tokens[-1]]])
        return t


def build_lexicon(
    synonyms=(),
    hypernyms=None,
    plurals=None,
    uncountable=(),
    colors=(),
    article_overrides=None,
) -> Lexicon:
    """Construct a Lexicon, applying symmetric closure to synonym groups and validating plurals."""
    groups: dict[str, set[str]] = {}
    for raw_group in synonyms:
        members = {normalize_name(t) for t in raw_group if normalize_name(t)}
        merged = set(members)
        for term in members:
            merged |= groups.get(term, set())
        for term in merged:
            groups[term] = merged
    closed = {term: frozenset(members) for term, members in groups.items()}

    plural_of: dict[str, str] = {}
    singular_of: dict[str, str] = {}
    for singular, plural in (plurals or {}).items():
        s, p = normalize_name(singular), normalize_name(plural)
        if not s or not p:
            continue
        if s in plural_of and plural_of[s] != p:
            raise InconsistentPluralError(s)
        if p in singular_of and singular_of[p] != s:
            raise InconsistentPluralError(p)
        plural_of[s] = p
        singular_of[p] = s

    color_set = frozenset(normalize_name(c) for c in colors if normalize_name(c))
    if not color_set:
        raise ValueError("lexicon colors must be non-empty")

    return Lexicon(
        synonyms=closed,
        hypernyms={normalize_name(k): normalize_name(v) for k, v in (hypernyms or {}).items()},
        plural_of=plural_of,
        singular_of=singular_of,
        uncountable=frozenset(normalize_name(u) for u in uncountable),
        colors=color_set,
        article_overrides={
            normalize_name(k): v.strip().lower() for k, v in (article_overrides or {}).items()
        },
    )


def load_lexicon(stream) -> Lexicon:
    """Load a lexicon JSON file.

    Expected keys: ``synonyms`` (array of arrays), ``hypernyms`` (map),
    ``plurals`` (map singular -> plural), ``uncountable`` (array), ``colors``
    (array), optional ``article_overrides`` (map word -> article).
    """
    duplicates: dict[str, list] = {}

    def record_duplicates(pairs):
        seen = {}
        for key, value in pairs:
            if key in seen and seen[key] != value:
                duplicates.setdefault(key, [seen[key]]).append(value)
            seen[key] = value
        return seen

    data = load_json_object(stream, object_pairs_hook=record_duplicates)
    plurals = data.get("plurals", {})
    if isinstance(plurals, dict):
        for term in duplicates:
            if term in plurals:
                raise InconsistentPluralError(term)
    return build_lexicon(
        synonyms=data.get("synonyms", []),
        hypernyms=data.get("hypernyms", {}),
        plurals=plurals if isinstance(plurals, dict) else {},
        uncountable=data.get("uncountable", []),
        colors=data.get("colors", []),
        article_overrides=data.get("article_overrides", {}),
    )


def lexicon_to_dict(lex: Lexicon) -> dict:
    groups = sorted({tuple(sorted(g)) for g in lex.synonyms.values()})
    return {
        "synonyms": [list(g) for g in groups],
        "hypernyms": dict(sorted(lex.hypernyms.items())),
        "plurals": dict(sorted(lex.plural_of.items())),
        "uncountable": sorted(lex.uncountable),
        "colors": sorted(lex.colors),
        "article_overrides": dict(sorted(lex.article_overrides.items())),
    }


def same_term(question_term: str, graph_term: str, lex: Lexicon) -> MatchKind:
    """Strongest way ``graph_term`` can answer for ``question_term``.

    Precedence is Exact > Number > Synonym > Hyponym.  Hyponym fires when the
    graph term is a narrower term whose hypernym chain reaches the question
    term ("animal" in the question matches "dog" in the graph).
    """
    a = normalize_name(question_term)
    b = normalize_name(graph_term)
    if not a or not b:
        return MatchKind.NONE
    if a == b:
        return MatchKind.EXACT
    sa = lex.singularize(a)
    sb = lex.singularize(b)
    if sa == sb:
        return MatchKind.NUMBER
    group = lex.synonyms.get(sa, frozenset((sa,)))
    if sb in group:
        return MatchKind.SYNONYM
    seen = set()
    current = sb
    while current in lex.hypernyms and current not in seen:
        seen.add(current)
        current = lex.hypernyms[current]
        if current == sa or current in group:
            return MatchKind.HYPONYM
    return MatchKind.NONE


def indefinite_article(noun_phrase: str, lex: Lexicon) -> str:
    """Choose "a", "an", or "" (plural or uncountable head) for a noun phrase."""
    phrase = normalize_name(noun_phrase)
    if not phrase:
        return ""
    head = head_noun(phrase)
    if lex.is_plural(phrase) or head in lex.uncountable or phrase in lex.uncountable:
        return ""
    first_word = phrase.split()[0]
    if first_word in lex.article_overrides:
        return lex.article_overrides[first_word]
    return "an" if phrase[0] in _VOWELS else "a"


_DEFAULT_LEXICON_DATA = {
    "synonyms": [
        ["motorbike", "motorcycle"],
        ["couch", "sofa"],
    ],
    "hypernyms": {
        "dog": "animal",
        "cat": "animal",
        "zebra": "animal",
        "elephant": "animal",
        "horse": "animal",
        "bird": "animal",
        "tree": "plant",
        "bush": "plant",
        "flower": "plant",
        "car": "vehicle",
        "boat": "vehicle",
        "motorcycle": "vehicle",
    },
    "plurals": {
        "animal": "animals",
        "apple": "apples",
        "baker": "bakers",
        "banana": "bananas",
        "bat": "bats",
        "batter": "batters",
        "bear": "bears",
        "bench": "benches",
        "bird": "birds",
        "blanket": "blankets",
        "boat": "boats",
        "bottle": "bottles",
        "boy": "boys",
        "bucket": "buckets",
        "bush": "bushes",
        "camera": "cameras",
        "car": "cars",
        "carpet": "carpets",
        "cat": "cats",
        "catcher": "catchers",
        "chair": "chairs",
        "child": "children",
        "couch": "couches",
        "cup": "cups",
        "dish": "dishes",
        "dishwasher": "dishwashers",
        "dog": "dogs",
        "dress": "dresses",
        "elephant": "elephants",
        "fence": "fences",
        "flower": "flowers",
        "girl": "girls",
        "helmet": "helmets",
        "headphone": "headphones",
        "horse": "horses",
        "jacket": "jackets",
        "ladder": "ladders",
        "lamp": "lamps",
        "laptop": "laptops",
        "light": "lights",
        "man": "men",
        "mirror": "mirrors",
        "motorbike": "motorbikes",
        "motorcycle": "motorcycles",
        "ornament": "ornaments",
        "photographer": "photographers",
        "pillow": "pillows",
        "plant": "plants",
        "plate": "plates",
        "player": "players",
        "pole": "poles",
        "puddle": "puddles",
        "sign": "signs",
        "sofa": "sofas",
        "spectator": "spectators",
        "table": "tables",
        "teddy bear": "teddy bears",
        "towel": "towels",
        "tree": "trees",
        "umpire": "umpires",
        "vehicle": "vehicles",
        "wall": "walls",
        "window": "windows",
        "woman": "women",
        "zebra": "zebras",
    },
    "uncountable": ["water", "grass", "sand", "snow", "food"],
    "colors": ["brown", "blue", "yellow", "green", "red", "white", "black", "gray", "orange"],
    "article_overrides": {"hour": "an"},
}

_default: Lexicon | None = None


def default_lexicon() -> Lexicon:
    """The compiled-in lexicon used when no ``--lexicon`` file is supplied."""
    global _default
    if _default is None:
        _default = build_lexicon(
            synonyms=_DEFAULT_LEXICON_DATA["synonyms"],
            hypernyms=_DEFAULT_LEXICON_DATA["hypernyms"],
            plurals=_DEFAULT_LEXICON_DATA["plurals"],
            uncountable=_DEFAULT_LEXICON_DATA["uncountable"],
            colors=_DEFAULT_LEXICON_DATA["colors"],
            article_overrides=_DEFAULT_LEXICON_DATA["article_overrides"],
        )
    return _default
