import json
from pathlib import Path

import pytest

from gramsem.corpus import load_lexicon

DATA = Path(__file__).parent / "data"
PACKAGE_DATA = Path(__file__).parents[1] / "src" / "gramsem" / "data"


@pytest.fixture(scope="session")
def toy_lexicon():
    return load_lexicon(PACKAGE_DATA / "toy_lexicon.json")


@pytest.fixture(scope="session")
def ambiguous_lexicon():
    return load_lexicon(PACKAGE_DATA / "ambiguous_lexicon.json")


@pytest.fixture(scope="session")
def ambiguous_expected():
    with open(DATA / "ambiguous_expected.json", encoding="utf-8") as fh:
        return json.load(fh)
