#!/usr/bin/env python3
"""From word vectors to a sentence meaning, end to end.

The bundled toy lexicon lives in a 3-dimensional noun space spanned by
the context words (sweet, green, furry) and a 1-dimensional true/false
sentence space.  The copula is the identity matrix viewed as a state, so
"X are Y" contracts to the dot product of X and Y: large and positive
when the nouns share contexts.
"""

from gramsem import enumerate_reductions, load_lexicon, sentence_meaning
from gramsem.cli import default_lexicon_path, render_reduction

lexicon = load_lexicon(default_lexicon_path())
F = lexicon.functor_assignment()

for word in ("bananas", "fruit", "puppies"):
    entry = lexicon.entries_for(word)[0]
    print(f"{word:8s} :: {entry.gtype}  {entry.state.flat}")
are = lexicon.entries_for("are")[0]
print(f"{'are':8s} :: {are.gtype}  {are.state.flat}")
print()

for words in (["bananas", "are", "fruit"], ["bananas", "are", "puppies"]):
    analysis = sentence_meaning(words, lexicon, F)
    print(" ".join(words))
    print(render_reduction(analysis.chosen))
    print("meaning:", analysis.meaning.item(), "\n")

# Nouns and noun phrases work too; just aim at a different target type.
phrase = sentence_meaning(["yellow", "banana"], lexicon, F, target="n")
print("yellow banana ->", phrase.meaning.flat,
      "(the identity adjective keeps the noun vector)")
