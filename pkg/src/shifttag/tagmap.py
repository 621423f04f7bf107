"""Tag inventories, first-letter coarsening, and user-supplied tag mappings."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .corpus import Corpus, Sentence


class TagError(ValueError):
    pass


@dataclass(frozen=True)
class TagInventory:
    tags: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.tags)) != len(self.tags):
            raise TagError("duplicate tags in inventory")
        object.__setattr__(self, "_tag_to_id", {t: i for i, t in enumerate(self.tags)})

    @property
    def tag_to_id(self) -> dict[str, int]:
        return self._tag_to_id

    def __len__(self) -> int:
        return len(self.tags)

    def __contains__(self, tag: str) -> bool:
        return tag in self._tag_to_id

    def id_of(self, tag: str) -> int:
        try:
            return self._tag_to_id[tag]
        except KeyError:
            raise TagError(f"tag {tag!r} not in inventory") from None

    def tag_of(self, tag_id: int) -> str:
        return self.tags[tag_id]

    @classmethod
    def from_corpus(cls, corpus: Corpus) -> "TagInventory":
        if not corpus.labeled:
            raise TagError("cannot build a tag inventory from unlabeled corpus")
        tags = sorted({t for s in corpus for t in (s.tags or ())})
        return cls(tuple(tags))

    def save(self, path: str | Path) -> None:
        Path(path).write_text("\n".join(self.tags) + "\n", encoding="utf-8")

    @classmethod
    def load(cls, path: str | Path) -> "TagInventory":
        lines = Path(path).read_text(encoding="utf-8").splitlines()
        return cls(tuple(line for line in lines if line))


@dataclass(frozen=True)
class MappingTable:
    entries: dict[str, str]
    name: str = ""

    def lookup(self, tag: str) -> str | None:
        return self.entries.get(tag)


def read_mapping(path: str | Path, name: str = "") -> MappingTable:
    """One SOURCE<TAB>TARGET pair per line; ``#`` comments allowed."""
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2 or not fields[0] or not fields[1]:
            raise TagError(f"{path}:{lineno}: expected SOURCE<TAB>TARGET")
        entries[fields[0]] = fields[1]
    return MappingTable(entries, name=name or Path(path).stem)


def coarsen_tag(tag: str) -> str:
    """First letter of an alphanumeric tag; punctuation-category tags map to
    themselves in full."""
    if not tag:
        raise TagError("cannot coarsen an empty tag")
    if not tag[0].isalnum():
        return tag
    return tag[0]


def coarsen_corpus(corpus: Corpus) -> Corpus:
    if not corpus.labeled:
        raise TagError("coarsen_corpus requires a labeled corpus")
    sentences = tuple(
        Sentence(
            s.words,
            tuple(coarsen_tag(t) for t in (s.tags or ())),
            s.domain_id,
            s.doc_id,
        )
        for s in corpus
    )
    return Corpus(sentences, name=corpus.name)


def apply_mapping(corpus: Corpus, table: MappingTable, strict: bool = True) -> tuple[Corpus, int]:
    """Replace each tag via the table.  strict=True errors on unmapped tags;
    otherwise they pass through and are counted in the returned total."""
    if not corpus.labeled:
        raise TagError("apply_mapping requires a labeled corpus")
    unmapped = 0
    sentences: list[Sentence] = []
    for si, s in enumerate(corpus):
        new_tags: list[str] = []
        for t in s.tags or ():
            mapped = table.lookup(t)
            if mapped is None:
                if strict:
                    raise TagError(
                        f"tag {t!r} has no mapping (sentence {si}, doc {s.doc_id!r})"
                    )
                unmapped += 1
                mapped = t
            new_tags.append(mapped)
        sentences.append(Sentence(s.words, tuple(new_tags), s.domain_id, s.doc_id))
    return Corpus(tuple(sentences), name=corpus.name), unmapped
