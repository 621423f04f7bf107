"""Subword vocabulary training and wordpiece-style segmentation.

The vocabulary is trained with greedy pair merging (BPE over word-frequency
counts) on position-marked symbols: a word ``abab`` starts as
``a ##b ##a ##b`` and merges produce pieces like ``ab`` or ``##ba``.
Segmentation is greedy longest-match-first; a word containing a character
outside the training alphabet collapses to ``[UNK]``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path

from .corpus import Corpus, Sentence

PAD, UNK, CLS, SEP, MASK = "[PAD]", "[UNK]", "[CLS]", "[SEP]", "[MASK]"
SPECIAL_TOKENS = (PAD, UNK, CLS, SEP, MASK)
NUM_SPECIALS = len(SPECIAL_TOKENS)


class TokenizerError(ValueError):
    pass


def _strip_cont(piece: str) -> str:
    return piece[2:] if piece.startswith("##") else piece


@dataclass(frozen=True)
class SubwordVocabulary:
    pieces: tuple[str, ...]

    def __post_init__(self):
        if self.pieces[:NUM_SPECIALS] != SPECIAL_TOKENS:
            raise TokenizerError("special tokens must occupy ids 0..4")
        if len(set(self.pieces)) != len(self.pieces):
            raise TokenizerError("duplicate pieces in vocabulary")
        object.__setattr__(
            self, "_piece_to_id", {p: i for i, p in enumerate(self.pieces)}
        )

    @property
    def piece_to_id(self) -> dict[str, int]:
        return self._piece_to_id

    def __len__(self) -> int:
        return len(self.pieces)

    @property
    def pad_id(self) -> int:
        return 0

    @property
    def unk_id(self) -> int:
        return 1

    @property
    def cls_id(self) -> int:
        return 2

    @property
    def sep_id(self) -> int:
        return 3

    @property
    def mask_id(self) -> int:
        return 4

    def is_special_id(self, piece_id: int) -> bool:
        return piece_id < NUM_SPECIALS

    def id_to_piece(self, piece_id: int) -> str:
        return self.pieces[piece_id]

    def save(self, path: str | Path) -> None:
        Path(path).write_text("\n".join(self.pieces) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "SubwordVocabulary":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls(tuple(line for line in lines if line))


@dataclass(frozen=True)
class TokenizedSentence:
    """Piece-level view of a sentence: [CLS] pieces... [SEP]."""

    piece_ids: tuple[int, ...]
    word_start_flags: tuple[bool, ...]
    word_index: tuple[int | None, ...]
    domain_id: str = "source"
    source_key: str = ""
    included_word_count: int = 0
    truncated: bool = False

    def __post_init__(self):
        if sum(self.word_start_flags) != self.included_word_count:
            raise TokenizerError("word_start_flags inconsistent with word count")

    def __len__(self) -> int:
        return len(self.piece_ids)


def _word_to_symbols(word: str) -> tuple[str, ...]:
    return (word[0],) + tuple("##" + c for c in word[1:])


def train_subword_vocab(
    corpus: Corpus, target_size: int, min_frequency: int = 2
) -> SubwordVocabulary:
    """Greedy pair-merging until ``target_size`` pieces are reached or no
    pair occurs at least ``min_frequency`` times.

    Ties in pair frequency are broken by the lexicographically smallest
    merged piece after stripping the continuation marker, preferring the
    word-initial form on a full tie.
    """
    if len(corpus) == 0:
        raise TokenizerError("cannot train a vocabulary on an empty corpus")
    word_freq = Counter(w for s in corpus for w in s.words)

    alphabet: set[str] = set()
    for word in word_freq:
        alphabet.update(word)
    alphabet_pieces = sorted({c for c in alphabet} | {"##" + c for c in alphabet})

    min_size = NUM_SPECIALS + len(alphabet_pieces)
    if target_size < min_size:
        raise TokenizerError(
            f"target_size {target_size} below alphabet + specials ({min_size})"
        )

    pieces: list[str] = list(SPECIAL_TOKENS) + alphabet_pieces
    known = set(pieces)
    splits: dict[str, tuple[str, ...]] = {w: _word_to_symbols(w) for w in word_freq}

    def merge_key(pair: tuple[str, str]) -> tuple[str, bool]:
        merged = pair[0] + _strip_cont(pair[1])
        return (_strip_cont(merged), merged.startswith("##"))

    while len(pieces) < target_size:
        pair_counts: Counter[tuple[str, str]] = Counter()
        for word, syms in splits.items():
            freq = word_freq[word]
            for a, b in zip(syms, syms[1:]):
                pair_counts[(a, b)] += freq
        if not pair_counts:
            break
        best_count = max(pair_counts.values())
        if best_count < min_frequency:
            break
        best = min(
            (p for p, c in pair_counts.items() if c == best_count), key=merge_key
        )
        merged = best[0] + _strip_cont(best[1])
        if merged in known:
            # Same surface piece can arise from several pair splits once it
            # exists; re-merging adds nothing, so just rewrite the splits.
            pass
        else:
            pieces.append(merged)
            known.add(merged)
        new_splits: dict[str, tuple[str, ...]] = {}
        for word, syms in splits.items():
            out: list[str] = []
            i = 0
            while i < len(syms):
                if i + 1 < len(syms) and (syms[i], syms[i + 1]) == best:
                    out.append(merged)
                    i += 2
                else:
                    out.append(syms[i])
                    i += 1
            new_splits[word] = tuple(out)
        splits = new_splits
    return SubwordVocabulary(tuple(pieces))


def segment_word(word: str, vocab: SubwordVocabulary) -> list[int]:
    """Greedy longest-match-first segmentation; whole word becomes [UNK]
    when any remainder cannot be matched."""
    if not word:
        raise TokenizerError("cannot segment an empty word")
    table = vocab.piece_to_id
    ids: list[int] = []
    start = 0
    while start < len(word):
        end = len(word)
        found = None
        while start < end:
            piece = word[start:end]
            if start > 0:
                piece = "##" + piece
            if piece in table:
                found = table[piece]
                break
            end -= 1
        if found is None:
            return [vocab.unk_id]
        ids.append(found)
        start = end
    return ids


def tokenize_sentence(
    sentence: Sentence,
    vocab: SubwordVocabulary,
    max_len: int = 64,
    source_key: str = "",
) -> TokenizedSentence:
    """[CLS] + word segmentations + [SEP], truncated at a word boundary when
    the pieces would exceed max_len."""
    if max_len < 3:
        raise TokenizerError("max_len must be >= 3")
    budget = max_len - 2
    piece_ids: list[int] = [vocab.cls_id]
    starts: list[bool] = [False]
    windex: list[int | None] = [None]
    included = 0
    truncated = False
    for wi, word in enumerate(sentence.words):
        seg = segment_word(word, vocab)
        if len(piece_ids) - 1 + len(seg) > budget:
            truncated = True
            break
        piece_ids.extend(seg)
        starts.extend([True] + [False] * (len(seg) - 1))
        windex.extend([wi] * len(seg))
        included += 1
    piece_ids.append(vocab.sep_id)
    starts.append(False)
    windex.append(None)
    return TokenizedSentence(
        piece_ids=tuple(piece_ids),
        word_start_flags=tuple(starts),
        word_index=tuple(windex),
        domain_id=sentence.domain_id,
        source_key=source_key,
        included_word_count=included,
        truncated=truncated,
    )


def tokenize_corpus(
    corpus: Corpus, vocab: SubwordVocabulary, max_len: int = 64
) -> list[TokenizedSentence]:
    return [
        tokenize_sentence(s, vocab, max_len, source_key=f"{s.doc_id}#{i}")
        for i, s in enumerate(corpus)
    ]
