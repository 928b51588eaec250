import json
import pathlib

import pytest

from isosym import kernels

SCHEMA_DIR = pathlib.Path(__file__).resolve().parents[1] / "src" / "isosym" / "schemas"


@pytest.fixture(params=kernels.available())
def backend(request):
    """Run the decorated test once per importable kernel backend."""
    previous = kernels.active.NAME
    kernels.use(request.param)
    yield request.param
    kernels.use(previous)


@pytest.fixture(scope="session")
def schemas():
    out = {}
    for path in SCHEMA_DIR.glob("*.schema.json"):
        out[path.name.split(".")[0]] = json.loads(path.read_text())
    return out
