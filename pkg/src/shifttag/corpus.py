"""Corpus ingestion, split manifests, word vocabularies, and synthetic
orthographic shift.

The CoNLL-style format accepted here is UTF-8, one token per line with an
optional TAB-separated tag, blank line between sentences.  ``# doc: <id>``
comment lines set the document id for the sentences that follow; other
``#``-prefixed lines are ignored.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

SOURCE_DOMAIN = "source"
TARGET_DOMAIN = "target"

VOWELS = set("aeiouAEIOU")


class CorpusError(ValueError):
    """Raised for malformed corpus files or contract violations."""


@dataclass(frozen=True)
class Sentence:
    """One tokenized sentence, optionally tagged."""

    words: tuple[str, ...]
    tags: tuple[str, ...] | None = None
    domain_id: str = SOURCE_DOMAIN
    doc_id: str = ""

    def __post_init__(self):
        if not self.words:
            raise CorpusError("sentence must contain at least one word")
        for w in self.words:
            if not w or any(c.isspace() for c in w):
                raise CorpusError(f"bad word {w!r}: empty or contains whitespace")
        if self.tags is not None and len(self.tags) != len(self.words):
            raise CorpusError(
                f"tag count {len(self.tags)} != word count {len(self.words)}"
            )

    def __len__(self) -> int:
        return len(self.words)


@dataclass(frozen=True)
class Corpus:
    sentences: tuple[Sentence, ...]
    name: str = ""

    @property
    def labeled(self) -> bool:
        return all(s.tags is not None for s in self.sentences)

    def __len__(self) -> int:
        return len(self.sentences)

    def __iter__(self):
        return iter(self.sentences)

    @property
    def token_count(self) -> int:
        return sum(len(s) for s in self.sentences)

    def doc_ids(self) -> list[str]:
        """Distinct doc ids in first-seen order."""
        seen: dict[str, None] = {}
        for s in self.sentences:
            seen.setdefault(s.doc_id)
        return list(seen)

    def without_tags(self) -> "Corpus":
        return Corpus(
            tuple(
                Sentence(s.words, None, s.domain_id, s.doc_id) for s in self.sentences
            ),
            name=self.name,
        )

    def subset_by_docs(self, doc_ids: set[str], name: str = "") -> "Corpus":
        return Corpus(
            tuple(s for s in self.sentences if s.doc_id in doc_ids),
            name=name or self.name,
        )


@dataclass(frozen=True)
class SplitManifest:
    train_doc_ids: frozenset[str]
    test_doc_ids: frozenset[str]
    train_token_count: int
    test_token_count: int

    def __post_init__(self):
        if self.train_doc_ids & self.test_doc_ids:
            raise CorpusError("train and test doc ids overlap")


@dataclass(frozen=True)
class WordVocabulary:
    words: frozenset[str]
    case_sensitive: bool = True
    name: str = ""

    def __contains__(self, word: str) -> bool:
        return (word if self.case_sensitive else word.lower()) in self.words

    def __len__(self) -> int:
        return len(self.words)


# Shift rule kinds, applied in this order.
RULE_UV_SWAP = "uv_swap"
RULE_I_TO_Y = "i_to_y"
RULE_SILENT_E = "silent_e"
RULE_RANDOM_CASE = "random_case"

_KNOWN_RULES = (RULE_UV_SWAP, RULE_I_TO_Y, RULE_SILENT_E, RULE_RANDOM_CASE)


@dataclass(frozen=True)
class ShiftRuleSet:
    """Ordered per-word rewrite rules with application probabilities."""

    rules: tuple[tuple[str, float], ...]
    seed: int = 0

    def __post_init__(self):
        for kind, prob in self.rules:
            if kind not in _KNOWN_RULES:
                raise CorpusError(f"unknown shift rule {kind!r}")
            if not 0.0 <= prob <= 1.0:
                raise CorpusError(f"rule {kind}: probability {prob} outside [0,1]")

    @classmethod
    def default(cls, seed: int = 0) -> "ShiftRuleSet":
        return cls(
            rules=(
                (RULE_UV_SWAP, 0.8),
                (RULE_I_TO_Y, 0.8),
                (RULE_SILENT_E, 0.55),
                (RULE_RANDOM_CASE, 0.25),
            ),
            seed=seed,
        )


def read_conll(path: str | Path, labeled: bool, domain_id: str = SOURCE_DOMAIN) -> Corpus:
    """Read a CoNLL-style file into a Corpus.

    ``labeled=True`` requires a tag on every token line; ``labeled=False``
    drops any tags present.
    """
    path = Path(path)
    default_doc = path.stem
    sentences: list[Sentence] = []
    words: list[str] = []
    tags: list[str] = []
    doc_id = default_doc

    def flush():
        nonlocal words, tags
        if words:
            sentences.append(
                Sentence(
                    tuple(words),
                    tuple(tags) if labeled else None,
                    domain_id,
                    doc_id,
                )
            )
            words, tags = [], []

    with path.open(encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.rstrip("\n")
            if line.startswith("#"):
                comment = line[1:].strip()
                if comment.startswith("doc:"):
                    flush()
                    doc_id = comment[len("doc:"):].strip() or default_doc
                continue
            if not line.strip():
                flush()
                continue
            fields = line.split("\t")
            if len(fields) > 2:
                raise CorpusError(f"{path}:{lineno}: more than 2 TAB-separated fields")
            if labeled:
                if len(fields) < 2 or not fields[1]:
                    raise CorpusError(f"{path}:{lineno}: missing tag in labeled corpus")
                words.append(fields[0])
                tags.append(fields[1])
            else:
                words.append(fields[0])
    flush()
    if not sentences:
        raise CorpusError(f"{path}: no sentences found")
    return Corpus(tuple(sentences), name=path.stem)


def write_conll(corpus: Corpus, path: str | Path) -> None:
    Path(path).write_text(render_conll(corpus), encoding="utf-8")


def render_conll(corpus: Corpus) -> str:
    """Canonical text rendering; also used for dataset hashing."""
    lines: list[str] = []
    current_doc: str | None = None
    for sent in corpus:
        if sent.doc_id != current_doc:
            lines.append(f"# doc: {sent.doc_id}")
            current_doc = sent.doc_id
        for i, word in enumerate(sent.words):
            if sent.tags is not None:
                lines.append(f"{word}\t{sent.tags[i]}")
            else:
                lines.append(word)
        lines.append("")
    return "\n".join(lines) + "\n"


def round_half_up(x: float) -> int:
    return int(math.floor(x + 0.5))


def split_by_documents(corpus: Corpus, test_fraction: float, seed: int) -> SplitManifest:
    """Assign whole documents to train/test, test side getting
    round(test_fraction * #docs) documents (minimum 1)."""
    if not 0.0 < test_fraction < 1.0:
        raise CorpusError(f"test_fraction {test_fraction} outside (0,1)")
    docs = corpus.doc_ids()
    if len(docs) < 2:
        raise CorpusError("cannot split a corpus with fewer than 2 documents")
    n_test = max(1, round_half_up(test_fraction * len(docs)))
    if n_test >= len(docs):
        n_test = len(docs) - 1
    rng = np.random.default_rng(seed)
    order = rng.permutation(len(docs))
    test_docs = frozenset(docs[i] for i in order[:n_test])
    train_docs = frozenset(d for d in docs if d not in test_docs)
    tokens_by_doc = Counter()
    for s in corpus:
        tokens_by_doc[s.doc_id] += len(s)
    return SplitManifest(
        train_doc_ids=train_docs,
        test_doc_ids=test_docs,
        train_token_count=sum(tokens_by_doc[d] for d in train_docs),
        test_token_count=sum(tokens_by_doc[d] for d in test_docs),
    )


def write_manifest(manifest: SplitManifest, path: str | Path) -> None:
    lines = ["[train]"]
    lines += sorted(manifest.train_doc_ids)
    lines.append("[test]")
    lines += sorted(manifest.test_doc_ids)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_manifest(path: str | Path, corpus: Corpus | None = None) -> SplitManifest:
    train: list[str] = []
    test: list[str] = []
    bucket: list[str] | None = None
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line == "[train]":
            bucket = train
        elif line == "[test]":
            bucket = test
        elif bucket is None:
            raise CorpusError(f"{path}:{lineno}: doc id before any section header")
        else:
            bucket.append(line)
    counts = Counter()
    if corpus is not None:
        for s in corpus:
            counts[s.doc_id] += len(s)
    return SplitManifest(
        train_doc_ids=frozenset(train),
        test_doc_ids=frozenset(test),
        train_token_count=sum(counts[d] for d in train),
        test_token_count=sum(counts[d] for d in test),
    )


def build_word_vocabulary(corpus: Corpus, case_sensitive: bool = True, name: str = "") -> WordVocabulary:
    if len(corpus) == 0:
        raise CorpusError("cannot build a vocabulary from an empty corpus")
    words: set[str] = set()
    for s in corpus:
        for w in s.words:
            words.add(w if case_sensitive else w.lower())
    return WordVocabulary(frozenset(words), case_sensitive, name=name or corpus.name)


def _swap_case_letter(c: str, upper: bool) -> str:
    return c.upper() if upper else c.lower()


def apply_shift(word: str, rules: ShiftRuleSet, rng: np.random.Generator) -> str:
    """Rewrite one word through the enabled rules, each firing with its own
    probability.  Rules are word-local and applied in ruleset order."""
    if not word:
        raise CorpusError("cannot shift an empty word")
    out = word
    for kind, prob in rules.rules:
        if prob <= 0.0:
            continue
        fire = prob >= 1.0 or rng.random() < prob
        if not fire:
            continue
        if kind == RULE_UV_SWAP:
            chars = list(out)
            for i, c in enumerate(chars):
                if i == 0 and c in "uU":
                    chars[i] = "v" if c == "u" else "V"
                elif i > 0 and c in "vV":
                    chars[i] = "u" if c == "v" else "U"
            out = "".join(chars)
        elif kind == RULE_I_TO_Y:
            out = out.replace("i", "y").replace("I", "Y")
        elif kind == RULE_SILENT_E:
            last = out[-1]
            if len(out) >= 3 and last.isalpha() and last not in VOWELS:
                out = out + "e"
        elif kind == RULE_RANDOM_CASE:
            first = out[0]
            if first.isalpha():
                out = _swap_case_letter(first, rng.random() < 0.5) + out[1:]
    return out


def generate_shifted_corpus(corpus: Corpus, rules: ShiftRuleSet, name: str = "") -> Corpus:
    """Pass every word through apply_shift; tags and structure are untouched
    and the result is labeled as target-domain text."""
    if len(corpus) == 0:
        raise CorpusError("cannot shift an empty corpus")
    rng = np.random.default_rng(rules.seed)
    shifted: list[Sentence] = []
    for s in corpus:
        words = tuple(apply_shift(w, rules, rng) for w in s.words)
        shifted.append(Sentence(words, s.tags, TARGET_DOMAIN, s.doc_id))
    return Corpus(tuple(shifted), name=name or f"{corpus.name}-shifted")


@dataclass(frozen=True)
class OverlapStats:
    """Coverage of source-OOV test items by a target-side training vocabulary."""

    oov_type_count: int
    oov_token_count: int
    covered_type_count: int
    covered_token_count: int
    applicable: bool

    @property
    def type_coverage(self) -> float | None:
        if not self.applicable:
            return None
        return self.covered_type_count / self.oov_type_count

    @property
    def token_coverage(self) -> float | None:
        if not self.applicable:
            return None
        return self.covered_token_count / self.oov_token_count


def vocab_overlap_stats(
    test: Corpus,
    source_vocab: WordVocabulary,
    target_train_vocab: WordVocabulary,
) -> OverlapStats:
    """Over test tokens absent from source_vocab, report the fraction of
    types and tokens present in target_train_vocab."""
    if len(test) == 0:
        raise CorpusError("empty test corpus")
    oov_tokens = Counter()
    for s in test:
        for w in s.words:
            if w not in source_vocab:
                oov_tokens[w] += 1
    if not oov_tokens:
        return OverlapStats(0, 0, 0, 0, applicable=False)
    covered_types = sum(1 for w in oov_tokens if w in target_train_vocab)
    covered_tokens = sum(n for w, n in oov_tokens.items() if w in target_train_vocab)
    return OverlapStats(
        oov_type_count=len(oov_tokens),
        oov_token_count=sum(oov_tokens.values()),
        covered_type_count=covered_types,
        covered_token_count=covered_tokens,
        applicable=True,
    )


def oov_rate(corpus: Corpus, reference: WordVocabulary) -> float:
    """Token-level fraction of corpus tokens absent from the reference."""
    total = 0
    oov = 0
    for s in corpus:
        for w in s.words:
            total += 1
            if w not in reference:
                oov += 1
    return oov / total if total else 0.0
