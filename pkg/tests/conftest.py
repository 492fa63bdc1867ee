import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from realforms.groups import FiniteGroup

settings.register_profile("default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def relabel(G: FiniteGroup, perm) -> FiniteGroup:
    """Same group with element ``x`` renamed ``perm[x]`` (``perm[0]`` must be 0)."""
    perm = np.asarray(perm)
    inv = np.argsort(perm)
    table = perm[G.mul[np.ix_(inv, inv)]]
    return FiniteGroup(table, [int(perm[g]) for g in G.generators], G.label)


def random_relabel(G: FiniteGroup, seed: int) -> FiniteGroup:
    rng = np.random.default_rng(seed)
    perm = np.concatenate([[0], 1 + rng.permutation(G.order - 1)])
    return relabel(G, perm)


@pytest.fixture
def tmp_cache(tmp_path):
    from realforms.cache import AutCache

    return AutCache(tmp_path / "aut")
