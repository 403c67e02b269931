"""Cue-preserving tokenization for social-media and dialog text.

Sarcasm and irony ride on surface cues that ordinary NLP pipelines destroy:
ALL-CAPS words, quotation marks, repeated punctuation ("!!!"), emoticons,
emojis and hashtags. The tokenizer here therefore does *no* lowercasing, no
stemming, and no punctuation removal. Normalization is limited to two
substitutions that carry no cue value:

  * user mentions (``@handle``) become the single token ``<user>``
  * URLs (``http://``, ``https://`` or ``www.``-prefixed) become ``<url>``

plus optional removal of "artifact" hashtags -- tags such as ``#sarcasm``
that were used to *collect* a dataset and would leak the label.

Tokenization is regex-driven, in the spirit of Twitter-aware tokenizers:
an ordered alternation of patterns where the first match wins. The order
matters (URLs before mentions before hashtags before words; emoji before
generic punctuation) and is documented next to the master pattern below.
Every function in this module is pure and thread-safe.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum


class TokenKind(str, Enum):
    WORD = "word"
    HASHTAG = "hashtag"
    MENTION_PLACEHOLDER = "mention_placeholder"
    URL_PLACEHOLDER = "url_placeholder"
    EMOJI = "emoji"
    EMOTICON = "emoticon"
    PUNCTUATION = "punctuation"
    NUMBER = "number"
    OTHER = "other"


MENTION_TOKEN = "<user>"
URL_TOKEN = "<url>"

DEFAULT_ARTIFACT_HASHTAGS = frozenset({"#sarcasm", "#irony", "#not"})


@dataclass(frozen=True)
class Token:
    """One surface token. ``surface`` is the exact original text except for
    the two placeholder substitutions."""

    surface: str
    kind: TokenKind

    def __post_init__(self) -> None:
        if not self.surface:
            raise ValueError("token surface must be non-empty")

    def to_json(self) -> dict:
        return {"surface": self.surface, "kind": self.kind.value}


@dataclass(frozen=True)
class TokenizerConfig:
    """Tokenizer switches.

    ``strip_artifact_hashtags`` drops tokens that match an entry of
    ``artifact_hashtags`` case-insensitively (exact match only: ``#sarcasmo``
    is not ``#sarcasm`` and survives). ``max_token_chars`` truncates, never
    splits, overlong tokens so the downstream character encoder has a bounded
    input width.
    """

    strip_artifact_hashtags: bool = False
    artifact_hashtags: frozenset[str] = DEFAULT_ARTIFACT_HASHTAGS
    max_token_chars: int = 50

    def __post_init__(self) -> None:
        if self.max_token_chars < 1:
            raise ValueError("max_token_chars must be positive")
        for tag in self.artifact_hashtags:
            if not tag.startswith("#"):
                raise ValueError(f"artifact hashtag {tag!r} must begin with '#'")
        object.__setattr__(self, "artifact_hashtags", frozenset(self.artifact_hashtags))


DEFAULT_CONFIG = TokenizerConfig()

# ---------------------------------------------------------------------------
# Master pattern. Alternatives are tried in order; each is a named group so
# classification falls out of ``match.lastgroup``.
# ---------------------------------------------------------------------------

# Fixed emoticon inventory. Unknown ASCII art falls through to punctuation
# tokens, which still preserves the characters.
EMOTICONS = (
    ">:(", ">:)", ":'-(", ":'(", ":'-)", ":')",
    ":-)", ":)", ":-(", ":(", ";-)", ";)",
    ":-D", ":D", "=D", ":-P", ":P", ":-p", ":p",
    ":-/", ":/", ":-\\", ":-|", ":|", ":-O", ":O", ":-o", ":o",
    "=)", "=(", "</3", "<3", "^_^", "-_-", "o_O", "O_o",
    "xD", "XD", "xP", "XP",
)

# Single emoji codepoints. Multi-codepoint sequences (ZWJ families, skin
# tones) come out as one token per codepoint; joiners and variation selectors
# are kept as kind=other so no character is lost.
_EMOJI_RANGES = (
    (0x1F1E6, 0x1F1FF),  # regional indicator symbols
    (0x1F300, 0x1F5FF),  # misc symbols and pictographs
    (0x1F600, 0x1F64F),  # emoticons block
    (0x1F680, 0x1F6FF),  # transport and map
    (0x1F900, 0x1F9FF),  # supplemental symbols
    (0x1FA70, 0x1FAFF),  # symbols and pictographs extended-A
    (0x2600, 0x26FF),    # misc symbols
    (0x2700, 0x27BF),    # dingbats
    (0x2B00, 0x2BFF),    # arrows, stars
)

_EMOJI_CLASS = "[" + "".join(f"{chr(lo)}-{chr(hi)}" for lo, hi in _EMOJI_RANGES) + "]"


def _emoticon_alternatives() -> str:
    # Longest first so ":-)" wins over ":-"; a trailing word-char guard keeps
    # letter-final emoticons like "xD" from eating the front of "xDream".
    parts = sorted(EMOTICONS, key=len, reverse=True)
    return "(?:" + "|".join(re.escape(e) for e in parts) + r")(?!\w)"


_TOKEN_RE = re.compile(
    "|".join(
        [
            # URLs first: "https://" contains ':' and '/' that later branches
            # would shred.
            r"(?P<url>(?:https?://|www\.)\S+)",
            # @-mentions.
            r"(?P<mention>@\w+)",
            # Literal placeholder forms, so tokenize(detokenize(...)) is stable.
            r"(?P<user_ph><user>)",
            r"(?P<url_ph><url>)",
            # Hashtags stay single tokens, '#' included.
            r"(?P<hashtag>#\w+)",
            # Emoticons (fixed inventory) before generic punctuation.
            f"(?P<emoticon>{_emoticon_alternatives()})",
            # Words: unicode letters, apostrophes allowed inside ("don't").
            r"(?P<word>[^\W\d_]+(?:['’][^\W\d_]+)*)",
            # Numbers, allowing decimal/thousands separators.
            r"(?P<number>\d+(?:[.,]\d+)*)",
            # Each emoji codepoint is its own token, whitespace or not.
            f"(?P<emoji>{_EMOJI_CLASS})",
            # Runs of one repeated punctuation/symbol char: "!!!", "??", "...".
            r"(?P<punct>([^\w\s])\2*)",
            # Last resort: any other single non-space character.
            r"(?P<other>\S)",
        ]
    )
)

_KIND_BY_GROUP = {
    "url": TokenKind.URL_PLACEHOLDER,
    "mention": TokenKind.MENTION_PLACEHOLDER,
    "user_ph": TokenKind.MENTION_PLACEHOLDER,
    "url_ph": TokenKind.URL_PLACEHOLDER,
    "hashtag": TokenKind.HASHTAG,
    "emoticon": TokenKind.EMOTICON,
    "word": TokenKind.WORD,
    "number": TokenKind.NUMBER,
    "emoji": TokenKind.EMOJI,
    "punct": TokenKind.PUNCTUATION,
    "other": TokenKind.OTHER,
}


def tokenize(raw: str, cfg: TokenizerConfig = DEFAULT_CONFIG) -> list[Token]:
    """Split ``raw`` into cue-preserving tokens.

    Deterministic and case-preserving. Mentions and URLs collapse to
    ``<user>`` / ``<url>``; everything else keeps its original characters,
    truncated at ``cfg.max_token_chars``. Empty input gives an empty list.
    """
    artifacts = {t.lower() for t in cfg.artifact_hashtags}
    out: list[Token] = []
    for m in _TOKEN_RE.finditer(raw):
        group = m.lastgroup
        kind = _KIND_BY_GROUP[group]
        if kind is TokenKind.MENTION_PLACEHOLDER:
            surface = MENTION_TOKEN
        elif kind is TokenKind.URL_PLACEHOLDER:
            surface = URL_TOKEN
        else:
            surface = m.group()[: cfg.max_token_chars]
        if (
            kind is TokenKind.HASHTAG
            and cfg.strip_artifact_hashtags
            and surface.lower() in artifacts
        ):
            continue
        out.append(Token(surface, kind))
    return out


def detokenize(tokens: list[Token]) -> str:
    """Join token surfaces with single spaces. Tokenizing the result again
    reproduces the same token sequence for placeholder tokens by construction."""
    return " ".join(t.surface for t in tokens)


def extract_hashtags(tokens: list[Token]) -> set[str]:
    """Lowercased, deduplicated hashtag surfaces (leading '#' kept)."""
    return {t.surface.lower() for t in tokens if t.kind is TokenKind.HASHTAG}


# ---------------------------------------------------------------------------
# Language guessing. Deliberately small: the augmentation pipeline accepts
# any predicate with this signature, so a real detector can be swapped in.
# ---------------------------------------------------------------------------

# High-frequency English function words plus a little social-media vernacular.
ENGLISH_STOPWORDS = frozenset(
    """
    the a an and or but of to in on at for with as is are was were be been
    am do does did have has had will would can could should not no yes it
    its i you he she we they this that these those my your his her our so
    if then than there here what when who how why all any some very just
    lol omg ok okay yeah nah btw
    """.split()
)

#: A whitespace chunk counts as English-ish when, stripped of leading
#: '#'/'@' and surrounding ASCII punctuation, its letters are all Latin
#: script (or it is a known stopword). The default decision threshold on the
#: English-ish fraction is 0.5; "lol \U0001F602 #fail so true" scores 4/5.
ENGLISH_THRESHOLD = 0.5

_LATIN_MAX_CODEPOINT = 0x024F  # Basic Latin through Latin Extended-B


def _is_latin_word(chunk: str) -> bool:
    core = chunk.lstrip("#@").strip("\"'.,!?;:()[]{}<>*~-_")
    letters = [c for c in core if c.isalpha()]
    if not letters:
        return False
    return all(ord(c) <= _LATIN_MAX_CODEPOINT for c in letters)


def is_english(raw: str, threshold: float = ENGLISH_THRESHOLD) -> bool:
    """Heuristic English detector over whitespace chunks.

    Scores the fraction of chunks that are English stopwords or Latin-script
    words and accepts when the fraction reaches ``threshold``. Empty input is
    not English.
    """
    chunks = raw.split()
    if not chunks:
        return False
    hits = sum(
        1
        for c in chunks
        if c.lower().strip("\"'.,!?;:()[]{}") in ENGLISH_STOPWORDS or _is_latin_word(c)
    )
    return hits / len(chunks) >= threshold
