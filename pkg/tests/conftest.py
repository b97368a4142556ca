import os

import pytest

os.environ.setdefault("HURWITZ_ENV", "test")

from app import create_app
from app.config import TestingConfig
from app.services.datum_service import enumerate_compatible_data, parse_datum

# Les quatre données travaillées et leurs comptages (rigide, flexible, très flexible)
WORKED_DATA = {
    "7; 3,2,1,1; 3,2,1,1; 7": (9, 6, 4),
    "7; 7; 4,1,1,1; 3,2,1,1": (3, 3, 2),
    "7; 3,3,1; 3,3,1; 4,2,1": (4, 2, 2),
    "8; 4,2,2; 2,2,1,1,1,1; 8": (3, 3, 3),
}

CENSUS_DATUM = "7; 3,2,1,1; 3,2,1,1; 7"


def small_data():
    """Toutes les données de degré 3 à 5, dix données de degré 6 et deux cas dégénérés"""
    data = [parse_datum("2; 2; 2; 1,1"), parse_datum("3; 1,1,1; 3; 3")]
    for degree in range(3, 6):
        data.extend(enumerate_compatible_data(degree))
    sixes = enumerate_compatible_data(6)
    step = max(1, len(sixes) // 10)
    data.extend(sixes[::step][:10])
    return data


@pytest.fixture
def app():
    return create_app(TestingConfig)


@pytest.fixture
def census_datum():
    return parse_datum(CENSUS_DATUM)


@pytest.fixture(params=sorted(WORKED_DATA))
def worked_case(request):
    return parse_datum(request.param), WORKED_DATA[request.param]
