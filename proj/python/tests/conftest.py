import json
import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]

L6 = [(0, 0), (2, 0), (2, 1), (1, 1), (1, 2), (0, 2)]
SQ4 = [(0, 0), (4, 0), (4, 4), (0, 4)]


@pytest.fixture
def l6():
    import edgeguard

    return edgeguard.Polygon(L6)


@pytest.fixture
def sq4():
    import edgeguard

    return edgeguard.Polygon(SQ4)


@pytest.fixture(scope="session")
def report_schema():
    path = os.environ.get("EDGEGUARD_SCHEMA", str(ROOT / "schema" / "report.schema.json"))
    with open(path) as f:
        return json.load(f)
