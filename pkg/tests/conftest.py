import time

import pytest

from pcentral.corpus import CorpusResult, default_config, run_corpus


@pytest.fixture(scope="session")
def corpus_run(tmp_path_factory):
    """One full default-corpus run shared by every test that slices it.

    Returns (result, wall_seconds, config).
    """
    out = tmp_path_factory.mktemp("corpus")
    config = default_config()
    t0 = time.perf_counter()
    result = run_corpus(config, out)
    seconds = time.perf_counter() - t0
    return result, seconds, config


def records_for(result: CorpusResult, check: str):
    return [r for r in result.records if r.get("check") == check]


def record(result: CorpusResult, entry: str, check: str):
    matches = [r for r in result.records
               if r.get("entry") == entry and r.get("check") == check]
    assert len(matches) == 1, f"expected one record for {entry}/{check}"
    return matches[0]
