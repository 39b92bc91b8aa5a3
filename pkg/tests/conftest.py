"""Shared brute-force oracles and random instance generators.

Everything here is deliberately independent of the library's own
algorithms: plain enumeration, plain filtering, no reuse of the code paths
under test.
"""

from __future__ import annotations

import random
from itertools import product

from wordsys.words import ExclusionSet, WordSystem


def enumerate_words(alphabet_size: int, length: int):
    return product(range(alphabet_size), repeat=length)


def has_factor(word, factor) -> bool:
    k = len(factor)
    return any(tuple(word[i : i + k]) == tuple(factor) for i in range(len(word) - k + 1))


def brute_avoiding_level(alphabet_size: int, forbidden, n: int) -> list[tuple[int, ...]]:
    """All length-n words with no factor in ``forbidden``, by full enumeration."""
    out = []
    for w in enumerate_words(alphabet_size, n):
        if not any(has_factor(w, f) for f in forbidden):
            out.append(w)
    return out


def brute_avoiding_counts(alphabet_size: int, forbidden, horizon: int) -> list[int]:
    return [len(brute_avoiding_level(alphabet_size, forbidden, n)) for n in range(horizon + 1)]


def random_exclusions(rng: random.Random, alphabet_size: int, max_len: int = 3,
                      max_words: int = 4) -> ExclusionSet:
    words = set()
    for _ in range(rng.randint(0, max_words)):
        length = rng.randint(1, max_len)
        words.add(tuple(rng.randrange(alphabet_size) for _ in range(length)))
    return ExclusionSet.make(alphabet_size, words)


def random_word_system(rng: random.Random, max_alphabet: int = 3,
                       max_horizon: int = 6) -> WordSystem:
    """A random valid system: all words avoiding a random exclusion set."""
    from wordsys.words import from_exclusions

    d = rng.randint(1, max_alphabet)
    n = rng.randint(1, max_horizon)
    return from_exclusions(d, random_exclusions(rng, d), n)
