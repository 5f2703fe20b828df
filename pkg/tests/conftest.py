import pytest

from ramac.catalog import CATALOG, catalog_tower


@pytest.fixture(params=list(CATALOG))
def tower(request):
    return catalog_tower(request.param)


SMALL = [name for name in CATALOG if CATALOG[name]["p"] ** len(CATALOG[name]["rhs"]) <= 4]


@pytest.fixture(params=SMALL)
def small_tower(request):
    return catalog_tower(request.param)
