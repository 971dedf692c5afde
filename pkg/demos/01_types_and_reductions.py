#!/usr/bin/env python3
"""Grammar types and reduction search, from the ground up.

A word gets a compound type: a string of basic types with left/right
adjoint marks.  A sentence is grammatical when the concatenation of its
word types reduces to the sentence type by cancelling adjacent dual pairs
("cups").  This script builds a few types, finds their reductions, and
draws the cups.
"""

from gramsem import enumerate_reductions, parse_type_expr
from gramsem.cli import render_reduction

# An adjective takes a noun on its right and yields a noun, so it is typed
# n n^l: the n^l slot eats the noun that follows.
adjective_phrase = parse_type_expr("n n^l n")
noun = parse_type_expr("n")
print("adjective + noun:", adjective_phrase)
for d in enumerate_reductions(adjective_phrase, noun):
    print(render_reduction(d))
print()

# A transitive verb expects a noun on each side and produces a sentence:
# n^r s n^l.  Concatenating subject + verb + object:
sentence = parse_type_expr("n n^r s n^l n")
print("subject + transitive verb + object:", sentence)
for d in enumerate_reductions(sentence, parse_type_expr("s")):
    print(render_reduction(d))
print()

# Some strings reduce in more than one way.  Two stacked adjective slots
# can each attach to the bare noun that follows:
stacked = parse_type_expr("n n^l n n^l n")
target = parse_type_expr("n n^l n")
print(f"ambiguous attachment: {stacked} -> {target}")
for k, d in enumerate(enumerate_reductions(stacked, target)):
    print(f"option {k}:")
    print(render_reduction(d))
print()

# And some do not reduce at all; the search returns an empty list.
print("does 'n' reduce to 's'?",
      enumerate_reductions(parse_type_expr("n"), parse_type_expr("s")) or "no")
