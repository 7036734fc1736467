from __future__ import annotations

import pytest

from helpers import small_corpus_graphs


@pytest.fixture(scope="session")
def small_corpus():
    return small_corpus_graphs()
