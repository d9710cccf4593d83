from __future__ import annotations

import pytest

from sortable_lab.configs import bundled
from sortable_lab.group import CoxeterGroup


@pytest.fixture(scope="session")
def cfg():
    cache = {}

    def get(name: str, d: int = 1):
        key = (name, d)
        if key not in cache:
            c = bundled(name, d)
            cache[key] = (c, CoxeterGroup(c.data))
        return cache[key]

    return get
