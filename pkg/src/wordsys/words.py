"""Words over integer alphabets and leveled word systems.

A word is a tuple of letters, each letter a nonnegative integer below the
alphabet size d (letters are 0-based).  A word system is a horizon-bounded
leveled family X_0..X_N of word sets that is closed under taking contiguous
subwords; equivalently, every word of X_{m+n} splits into a prefix in X_m
and a suffix in X_n.  Level sets are stored canonically sorted so equality
and serialization are deterministic.

The module also implements the two directions of the exclusion-set
description: building the system of all words avoiding a set of forbidden
factors, and recovering the unique reduced exclusion set (the
antidictionary) of a given system.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    BadLengthError,
    EmptyWordError,
    InvalidLetterError,
    LengthMismatchError,
    NotClosedError,
)

Word = tuple[int, ...]

EMPTY_WORD: Word = ()


def concat(*words: Sequence[int]) -> Word:
    """Concatenate words; the empty word is two-sided neutral."""
    out: list[int] = []
    for w in words:
        out.extend(w)
    return tuple(out)


def is_subword(y: Sequence[int], w: Sequence[int]) -> bool:
    """True iff y occurs as a contiguous block of w.

    Factor semantics: (0,0) is not a subword of (0,1,0).  The relation is
    reflexive and transitive.
    """
    y = tuple(y)
    w = tuple(w)
    k = len(y)
    if k > len(w):
        return False
    return any(w[i : i + k] == y for i in range(len(w) - k + 1))


def lex_compare(v: Sequence[int], w: Sequence[int]) -> int:
    """Compare equal-length words lexicographically: -1, 0, or +1.

    Raises LengthMismatchError for words of different lengths; the order is
    only total within one level.
    """
    v = tuple(v)
    w = tuple(w)
    if len(v) != len(w):
        raise LengthMismatchError(f"cannot compare lengths {len(v)} and {len(w)}")
    if v < w:
        return -1
    if v > w:
        return 1
    return 0


def _check_letters(word: Sequence[int], alphabet_size: int) -> Word:
    w = tuple(word)
    for a in w:
        if not (isinstance(a, int) and 0 <= a < alphabet_size):
            raise InvalidLetterError(f"letter {a!r} not in 0..{alphabet_size - 1}")
    return w


@dataclass(frozen=True)
class WordSystem:
    """A leveled family X_0..X_N of same-length word sets, one per level.

    ``levels[n]`` holds the length-n words, sorted; ``levels[0]`` is always
    ((),).  Instances are plain values: construct through :meth:`make`
    (which normalizes and checks letters/lengths) and validate closure with
    :func:`check_word_system`.
    """

    alphabet_size: int
    levels: tuple[tuple[Word, ...], ...]

    @classmethod
    def make(cls, alphabet_size: int, levels: Iterable[Iterable[Sequence[int]]]) -> "WordSystem":
        if alphabet_size < 0:
            raise InvalidLetterError("alphabet size must be nonnegative")
        normalized: list[tuple[Word, ...]] = []
        for n, level in enumerate(levels):
            words = sorted({_check_letters(w, alphabet_size) for w in level})
            for w in words:
                if len(w) != n:
                    raise BadLengthError(f"word {w} of length {len(w)} at level {n}")
            normalized.append(tuple(words))
        if not normalized or normalized[0] != (EMPTY_WORD,):
            raise BadLengthError("level 0 must be exactly {()}")
        return cls(alphabet_size, tuple(normalized))

    @property
    def horizon(self) -> int:
        return len(self.levels) - 1

    @property
    def counts(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.levels)

    def level(self, n: int) -> tuple[Word, ...]:
        return self.levels[n]


@dataclass(frozen=True)
class ClosureViolation:
    """First failing split found by check_word_system.

    The word at level prefix_len + suffix_len does not factor through the
    two levels: ``missing`` is its offending prefix or suffix.
    """

    prefix_len: int
    suffix_len: int
    word: Word
    missing: Word

    def __str__(self) -> str:
        if self.prefix_len == 0 and self.suffix_len == 0:
            return "level 0 must be exactly {()}"
        return (
            f"violation at ({self.prefix_len},{self.suffix_len}): "
            f"word {self.word} has subword {self.missing} "
            f"missing from level {len(self.missing)}"
        )


def check_word_system(
    alphabet_size: int, levels: Sequence[Iterable[Sequence[int]]]
) -> ClosureViolation | None:
    """Verify the full factorization condition X_{m+n} ⊆ X_m·X_n.

    Returns None when every invariant holds, else the first violation in
    deterministic (total length, prefix length, word) order.  Letter and
    length errors raise; they are structural, not closure failures.
    """
    level_sets: list[set[Word]] = []
    for n, level in enumerate(levels):
        words = set()
        for w in level:
            w = _check_letters(w, alphabet_size)
            if len(w) != n:
                raise BadLengthError(f"word {w} of length {len(w)} at level {n}")
            words.add(w)
        level_sets.append(words)
    if not level_sets or level_sets[0] != {EMPTY_WORD}:
        return ClosureViolation(0, 0, EMPTY_WORD, EMPTY_WORD)
    for total in range(2, len(level_sets)):
        for w in sorted(level_sets[total]):
            for m in range(1, total):
                prefix, suffix = w[:m], w[m:]
                if prefix not in level_sets[m]:
                    return ClosureViolation(m, total - m, w, prefix)
                if suffix not in level_sets[total - m]:
                    return ClosureViolation(m, total - m, w, suffix)
    return None


def validate_word_system(system: WordSystem) -> ClosureViolation | None:
    return check_word_system(system.alphabet_size, system.levels)


def _require_valid(system: WordSystem) -> None:
    violation = validate_word_system(system)
    if violation is not None:
        raise NotClosedError(str(violation))


@dataclass(frozen=True)
class ExclusionSet:
    """A finite set of nonempty forbidden words over a fixed alphabet.

    ``words`` is stored sorted by (length, letters).  The set is *reduced*
    when no member is a proper subword of another member; reduced sets are
    the canonical generators of word systems.
    """

    alphabet_size: int
    words: tuple[Word, ...]

    @classmethod
    def make(cls, alphabet_size: int, words: Iterable[Sequence[int]]) -> "ExclusionSet":
        normalized = {
            _check_letters(w, alphabet_size) for w in words
        }
        if EMPTY_WORD in normalized:
            raise EmptyWordError("the empty word cannot be excluded")
        return cls(alphabet_size, tuple(sorted(normalized, key=lambda w: (len(w), w))))

    @property
    def reduced(self) -> bool:
        return all(
            not (len(short) < len(long) and is_subword(short, long))
            for short in self.words
            for long in self.words
        )


def from_exclusions(
    alphabet_size: int, exclusions: ExclusionSet | Iterable[Sequence[int]], horizon: int
) -> WordSystem:
    """Levels X_n of all length-n words with no forbidden factor, n = 0..horizon.

    Built incrementally: extending a surviving word by one letter can only
    create forbidden factors that are suffixes of the extension.
    """
    if isinstance(exclusions, ExclusionSet):
        if exclusions.alphabet_size != alphabet_size:
            raise InvalidLetterError("exclusion set declared over a different alphabet")
        forbidden = set(exclusions.words)
    else:
        forbidden = set(ExclusionSet.make(alphabet_size, exclusions).words)
    max_len = max((len(w) for w in forbidden), default=0)

    levels: list[tuple[Word, ...]] = [(EMPTY_WORD,)]
    current = [EMPTY_WORD]
    for n in range(1, horizon + 1):
        nxt = []
        for w in current:
            for a in range(alphabet_size):
                extended = w + (a,)
                tail = extended[-max_len:] if max_len else ()
                if any(tail[i:] in forbidden for i in range(len(tail))):
                    continue
                nxt.append(extended)
        nxt.sort()
        levels.append(tuple(nxt))
        current = nxt
    return WordSystem(alphabet_size, tuple(levels))


def antidictionary(system: WordSystem) -> ExclusionSet:
    """The reduced exclusion set generating the system, up to the horizon.

    Level n contributes the words both of whose length-(n-1) factors
    survive but which are absent from X_n.  Members longer than the horizon
    cannot be seen and are necessarily dropped; regenerating at the same
    horizon is still exact.
    """
    _require_valid(system)
    d = system.alphabet_size
    out: list[Word] = []
    for n in range(1, system.horizon + 1):
        prev = system.levels[n - 1]
        here = set(system.levels[n])
        extendable = {w + (a,) for w in prev for a in range(d)} & {
            (a,) + w for w in prev for a in range(d)
        }
        out.extend(sorted(extendable - here))
    return ExclusionSet.make(d, out)


def reduce_exclusions(exclusions: ExclusionSet) -> ExclusionSet:
    """Drop every member containing a strictly shorter member as a factor."""
    by_length = sorted(exclusions.words, key=len)
    kept: list[Word] = []
    for w in by_length:
        if not any(len(r) < len(w) and is_subword(r, w) for r in kept):
            kept.append(w)
    return ExclusionSet.make(exclusions.alphabet_size, kept)


def full_levels(alphabet_size: int, horizon: int) -> WordSystem:
    """The full word system: every word of every length up to the horizon."""
    levels: list[tuple[Word, ...]] = [(EMPTY_WORD,)]
    for n in range(1, horizon + 1):
        levels.append(tuple(sorted(product(range(alphabet_size), repeat=n))))
    return WordSystem(alphabet_size, tuple(levels))
