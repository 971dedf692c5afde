#!/usr/bin/env python3
"""Building word vectors from raw co-occurrence counts.

Pick context words, slide a window over the tokens, and count how often
each word sits near each context word.  The counts are the coordinates:
words used in similar company end up pointing the same way.
"""

import io

import numpy as np

from gramsem import (ContextConfig, build_noun_vector, count_cooccurrence,
                     export_vectors_tsv, tokenize)

TEXT = """
The banana was sweet, sweet as only a green banana can be.
A puppy is furry; the furry puppy chased the green ball.
Sweet fruit, green fruit: the banana is fruit and the fruit was sweet.
"""

cfg = ContextConfig(("sweet", "green", "furry"), window=3)
tokens = tokenize(TEXT, cfg)
print(f"{len(tokens)} tokens, window {cfg.window}, contexts "
      f"{list(cfg.context_words)}\n")

counts = count_cooccurrence(tokens, cfg)
for word in ("banana", "puppy", "fruit"):
    vec = build_noun_vector(word, counts, cfg)
    print(f"{word:8s} {vec.flat}")

banana = np.array(build_noun_vector("banana", counts, cfg).flat)
puppy = np.array(build_noun_vector("puppy", counts, cfg).flat)
fruit = np.array(build_noun_vector("fruit", counts, cfg).flat)
print("\nbanana . fruit =", int(banana @ fruit))
print("banana . puppy =", int(banana @ puppy))
print("(shared contexts pull the dot product up)\n")

out = io.StringIO()
export_vectors_tsv(tokens, cfg, out)
print("TSV export, first rows:")
print("\n".join(out.getvalue().splitlines()[:6]))
