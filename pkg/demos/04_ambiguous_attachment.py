#!/usr/bin/env python3
"""One sentence, two parses, two meanings.

The bundled homonym lexicon types "with" two ways: as a noun postmodifier
(n^r n n^l, the telescope belongs to the men) and as a sentence modifier
(s^r s n^l, the telescope is how the seeing happened).  Each typing admits
exactly one reduction, so the sentence has two parses with genuinely
different meaning tensors.
"""

from gramsem import enumerate_analyses, load_lexicon
from gramsem.cli import default_lexicon_path, render_reduction

path = default_lexicon_path().replace("toy_lexicon", "ambiguous_lexicon")
lexicon = load_lexicon(path)
F = lexicon.functor_assignment()

words = ["moths", "saw", "men", "with", "telescopes"]
print(" ".join(words), "\n")

for k, analysis in enumerate(enumerate_analyses(words, lexicon, F)):
    types = "  ".join(str(e.gtype) for e in analysis.words)
    print(f"parse {k}: {types}")
    print(render_reduction(analysis.chosen))
    print("meaning:", analysis.meaning.item(), "\n")

print("Same words, different wirings, different truths; pick a parse "
      "index to choose one.")
