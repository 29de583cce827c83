#!/usr/bin/env python3
"""Writes a deterministic list of unique pseudo-words, one per line.

The rotation experiment depends only on the relative order of distinct keys,
so synthetic words stand in for a dictionary file.

    python3 tools/make_sample_corpus.py 10000 > data/sample_words.txt
"""

import random
import sys

ONSETS = ["", "b", "c", "d", "f", "g", "h", "j", "k", "l", "m", "n", "p", "qu", "r", "s", "t", "v", "w", "z",
          "bl", "br", "ch", "cl", "cr", "dr", "fl", "fr", "gl", "gr", "pl", "pr", "sc", "sh", "sl", "sp", "st",
          "str", "th", "tr", "wh"]
VOWELS = ["a", "e", "i", "o", "u", "ai", "ea", "ee", "io", "oo", "ou", "y"]
CODAS = ["", "", "b", "ck", "d", "ft", "g", "l", "ll", "m", "n", "nd", "ng", "nt", "p", "r", "rd", "rk", "s", "ss",
         "st", "t", "th", "x"]


def main() -> None:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 10000
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 1
    rng = random.Random(seed)
    seen = set()
    while len(seen) < count:
        syllables = rng.choice([1, 2, 2, 3, 3, 4])
        word = "".join(rng.choice(ONSETS) + rng.choice(VOWELS) + rng.choice(CODAS) for _ in range(syllables))
        if word not in seen:
            seen.add(word)
            sys.stdout.write(word + "\n")


if __name__ == "__main__":
    main()
