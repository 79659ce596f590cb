import sys
from functools import lru_cache
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from semicong.enumeration import enumerate_semirings
from semicong.formats import read_semiring

ROOT = Path(__file__).resolve().parent.parent
CORPUS_DIR = ROOT / "corpus"
REES_DIR = ROOT / "data" / "rees"


@lru_cache(maxsize=None)
def load_corpus():
    paths = sorted(CORPUS_DIR.glob("*.sr"), key=lambda p: p.stem)
    if not paths:
        from semicong.corpus import write_corpus

        paths = sorted(write_corpus(CORPUS_DIR), key=lambda p: p.stem)
    return {p.stem: read_semiring(p) for p in paths}


@lru_cache(maxsize=None)
def small_semirings(max_order=3):
    return [S for n in range(1, max_order + 1) for S in enumerate_semirings(n)]


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()
