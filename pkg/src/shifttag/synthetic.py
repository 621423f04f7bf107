"""Seeded template-grammar generator for desk-scale tagging benchmarks.

Sentences are drawn from fixed part-of-speech templates with per-tag word
pools.  The pools are deliberately rich in ``u``/``i``/``v`` letters and
consonant endings so that the orthographic shift rules in
:mod:`shifttag.corpus` produce a large out-of-vocabulary gap between the
source and target sides of a benchmark.
"""

from __future__ import annotations

import numpy as np

from .corpus import Corpus, CorpusError, Sentence, SOURCE_DOMAIN

WORD_POOLS: dict[str, tuple[str, ...]] = {
    "DT": ("the", "a", "this", "that", "every", "some", "no", "each", "another"),
    "JJ": (
        "quiet", "curious", "humble", "noble", "ancient", "busy", "plain",
        "quick", "simple", "vivid", "rustic", "golden", "little", "mighty",
        "solemn", "proud", "weary", "gentle", "grim", "rich", "young", "old",
        "fair", "dull", "brave", "swift", "vast", "bright", "broad", "grave",
        "civil", "prudent", "virtuous", "diligent", "furious", "quaint",
    ),
    "NN": (
        "mountain", "river", "minister", "union", "kingdom", "building",
        "music", "guide", "universe", "unit", "virtue", "village", "voice",
        "visit", "court", "house", "field", "garden", "harbour", "church",
        "market", "bridge", "tower", "forest", "meadow", "valley", "street",
        "castle", "mill", "barn", "ship", "wagon", "letter", "journal",
        "sermon", "ballad", "charter", "statute", "physician", "merchant",
        "pilgrim", "scholar", "servant", "soldier", "tailor", "weaver",
        "widow", "witness", "question", "custom", "voyage", "supper",
        "winter", "summer", "morning", "evening", "curtain", "window",
        "picture", "mirror",
    ),
    "NNS": (
        "mountains", "rivers", "ministers", "unions", "kingdoms", "buildings",
        "guides", "units", "virtues", "villages", "voices", "visits",
        "courts", "houses", "fields", "gardens", "churches", "markets",
        "bridges", "towers", "forests", "meadows", "valleys", "streets",
        "castles", "mills", "ships", "letters", "journals", "sermons",
        "ballads", "charters", "statutes", "merchants", "pilgrims",
        "scholars", "servants", "soldiers", "widows", "witnesses",
        "questions", "customs", "voyages", "windows", "pictures",
    ),
    "NNP": (
        "London", "Bristol", "York", "Durham", "Oxford", "Julia", "Edmund",
        "Victor", "Ursula", "Vincent", "Isabel", "Quentin", "Humphrey",
        "Irene", "Uriah", "Martin", "Lucy", "Virgil", "Ivy", "Austin",
        "Dover", "Exeter", "Norwich", "Hugh",
    ),
    "PRP": ("he", "she", "it", "they", "we", "you", "him", "her", "them", "us"),
    "VBD": (
        "moved", "lived", "built", "carried", "viewed", "united", "invited",
        "visited", "found", "kept", "told", "heard", "sailed", "walked",
        "sang", "wrote", "read", "gained", "ruled", "served", "studied",
        "guarded", "followed", "raised", "turned", "valued", "visioned",
        "quitted", "murmured", "pursued", "devised", "uttered", "vowed",
        "required", "delivered", "inquired",
    ),
    "VBZ": (
        "moves", "lives", "builds", "carries", "views", "unites", "invites",
        "visits", "finds", "keeps", "tells", "hears", "sails", "walks",
        "sings", "writes", "reads", "gains", "rules", "serves", "studies",
        "guards", "follows", "raises", "turns", "values", "pursues",
        "devises", "utters", "vows", "requires", "delivers", "inquires",
    ),
    "VB": (
        "move", "live", "build", "carry", "view", "unite", "invite", "visit",
        "find", "keep", "tell", "hear", "sail", "walk", "sing", "write",
        "read", "gain", "rule", "serve", "study", "guard", "follow", "raise",
        "turn", "value", "pursue", "devise", "utter", "vow", "require",
        "deliver", "inquire",
    ),
    "MD": ("will", "can", "must", "may", "should", "might"),
    "IN": (
        "in", "on", "under", "over", "near", "beside", "through", "within",
        "during", "against", "upon", "behind", "beyond",
    ),
    "RB": (
        "quickly", "quietly", "truly", "justly", "bravely", "further",
        "indeed", "often", "never", "always", "soon", "again", "nimbly",
        "duly", "privately", "utterly",
    ),
    "CC": ("and", "or", "but"),
    "TO": ("to",),
    "CD": ("two", "five", "seven", "nine", "twenty", "forty", "hundred"),
    ".": (".", ".", ".", "!", "?"),
}

TEMPLATES: tuple[tuple[str, ...], ...] = (
    ("DT", "JJ", "NN", "VBD", "IN", "DT", "NN", "."),
    ("DT", "NN", "VBZ", "DT", "JJ", "NN", "."),
    ("PRP", "VBD", "DT", "NN", "CC", "DT", "NN", "."),
    ("NNP", "VBD", "TO", "VB", "DT", "NN", "."),
    ("DT", "NN", "IN", "DT", "NN", "VBD", "RB", "."),
    ("PRP", "MD", "VB", "IN", "DT", "JJ", "NN", "."),
    ("DT", "JJ", "NNS", "VBD", "RB", "."),
    ("NNP", "CC", "NNP", "VBD", "DT", "NNS", "."),
    ("PRP", "VBZ", "RB", "."),
    ("DT", "NNS", "IN", "DT", "NN", "VBD", "JJ", "NNS", "."),
    ("NNP", "VBZ", "DT", "NN", "IN", "NNP", "."),
    ("DT", "NN", "VBD", "CD", "NNS", "."),
    ("RB", "DT", "NN", "VBD", "DT", "NN", "."),
    ("PRP", "VBD", "IN", "DT", "NN", "IN", "DT", "NN", "."),
    ("DT", "JJ", "NN", "MD", "RB", "VB", "NNS", "."),
    ("NNP", "VBD", "DT", "JJ", "NN", "TO", "PRP", "."),
    ("DT", "NN", "CC", "DT", "NN", "VBD", "JJ", "."),
    ("PRP", "MD", "VB", "DT", "NNS", "RB", "."),
    ("DT", "CD", "NNS", "VBD", "IN", "DT", "NN", "."),
    ("NNP", "VBD", "RB", "CC", "VBD", "DT", "NN", "."),
)

TAGSET: tuple[str, ...] = tuple(sorted(WORD_POOLS))


def generate_tagged_corpus(
    n_sentences: int,
    seed: int,
    name: str = "synthetic",
    domain_id: str = SOURCE_DOMAIN,
    sentences_per_doc: int = 25,
) -> Corpus:
    """Draw ``n_sentences`` template sentences, grouped into documents of
    ``sentences_per_doc`` so document-level splitting is possible."""
    if n_sentences < 1:
        raise CorpusError("n_sentences must be >= 1")
    if sentences_per_doc < 1:
        raise CorpusError("sentences_per_doc must be >= 1")
    rng = np.random.default_rng(seed)
    sentences: list[Sentence] = []
    for i in range(n_sentences):
        template = TEMPLATES[rng.integers(len(TEMPLATES))]
        words: list[str] = []
        tags: list[str] = []
        for tag in template:
            pool = WORD_POOLS[tag]
            words.append(pool[rng.integers(len(pool))])
            tags.append(tag)
        # Sentence-initial capitalization, as in edited prose.
        if words[0][0].isalpha():
            words[0] = words[0][0].upper() + words[0][1:]
        doc_id = f"{name}-{i // sentences_per_doc:04d}"
        sentences.append(Sentence(tuple(words), tuple(tags), domain_id, doc_id))
    return Corpus(tuple(sentences), name=name)
