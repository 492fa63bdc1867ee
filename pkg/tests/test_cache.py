import json
import logging

import pytest

from realforms.automorphisms import automorphism_group, clear_memo
from realforms.builders import build_quaternion
from realforms.cache import CACHE_VERSION, AutCache
from realforms.cli import run_command


@pytest.fixture(autouse=True)
def fresh_memo():
    clear_memo()
    yield
    clear_memo()


def test_roundtrip_q8(tmp_cache):
    Q = build_quaternion(3)
    A = automorphism_group(Q, cache=tmp_cache)
    assert A.order == 24 and tmp_cache.misses == 1
    data = json.loads(tmp_cache.path(Q).read_text())
    assert data["version"] == CACHE_VERSION and data["group_order"] == 8
    assert len(data["automorphisms"]) == 24
    clear_memo()
    B = automorphism_group(Q, cache=tmp_cache)
    assert tmp_cache.hits == 1 and B.order == 24
    assert {m.tobytes() for m in A.maps} == {m.tobytes() for m in B.maps}


def _corrupt(path, how):
    if how == "garbage":
        path.write_text("{not json")
        return
    data = json.loads(path.read_text())
    if how == "version":
        data["version"] = CACHE_VERSION + 1
    elif how == "hash":
        data["cayley_hash"] = "0" * 64
    elif how == "bad-map":
        data["automorphisms"][1] = [0] * data["group_order"]
    elif how == "repeat":
        data["automorphisms"][1] = data["automorphisms"][0]
    elif how == "missing":
        del data["automorphisms"]
    elif how == "short":
        data["automorphisms"] = data["automorphisms"][:5]
    path.write_text(json.dumps(data))


@pytest.mark.parametrize("how", ["garbage", "version", "hash", "bad-map", "repeat", "missing", "short"])
def test_bad_entries_recompute(tmp_cache, caplog, how):
    Q = build_quaternion(3)
    automorphism_group(Q, cache=tmp_cache)
    _corrupt(tmp_cache.path(Q), how)
    clear_memo()
    with caplog.at_level(logging.WARNING):
        A = automorphism_group(Q, cache=tmp_cache)
    assert A.order == 24
    assert caplog.records, "a warning should be logged"
    # the recomputed maps overwrite the bad entry
    clear_memo()
    assert AutCache(tmp_cache.root).load(Q) is not None


def test_unwritable_root_warns(tmp_path, caplog):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    cache = AutCache(blocker / "sub")
    with caplog.at_level(logging.WARNING):
        assert automorphism_group(build_quaternion(3), cache=cache).order == 24
    assert any("could not write" in r.message for r in caplog.records)


@pytest.mark.parametrize("cmd", [["m", "Q8"], ["aut", "A5"], ["h1", "D8"], ["sylow-reduce", "A5", "--involution", "1"]])
def test_cached_reports_match(tmp_path, cmd):
    base = cmd + ["--format", "json", "--cache-dir", str(tmp_path)]
    _, cold, _ = run_command(base)
    clear_memo()
    _, warm, _ = run_command(base)
    clear_memo()
    _, none, _ = run_command(cmd + ["--format", "json", "--seedless"])
    assert cold.results == warm.results == none.results
    assert warm.timing["cache_hits"] >= 1 and cold.timing["cache_misses"] >= 1
    assert "cache_hits" not in none.timing
