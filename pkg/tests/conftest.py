import pytest
from hypothesis import settings

from mixedbraid.cover import Character, CoverSpec

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def worked_cover() -> CoverSpec:
    return CoverSpec.of((2, 2), (3, 5))


@pytest.fixture(scope="session")
def worked_rho(worked_cover) -> Character:
    return Character(worked_cover, (2, 4))
