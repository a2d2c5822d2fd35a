import pytest

from wpline import (CoordinateAlgebra, PrimeField, RationalField,
                    WeightSequence, builtin_case)

TUBULAR = [(2, 2, 2, 2), (3, 3, 3), (4, 4, 2), (6, 3, 2)]


@pytest.fixture(scope="session")
def tubular_groups():
    return {ws: WeightSequence(ws) for ws in TUBULAR}


@pytest.fixture(scope="session")
def tubular_algebras():
    """One rational coordinate algebra per tubular type (lambda = -1 for the
    four-point type)."""
    out = {}
    for ws in TUBULAR:
        params = [1, -1] if len(ws) == 4 else [1]
        out[ws] = CoordinateAlgebra(ws, RationalField(), params)
    return out


@pytest.fixture(scope="session")
def case_specs():
    """The four built-in cases over their smallest convenient fields."""
    return {
        "A": builtin_case("A", RationalField()),
        "B": builtin_case("B", PrimeField(7)),
        "C": builtin_case("C", PrimeField(5)),
        "D": builtin_case("D", PrimeField(7), lam=-1),
    }
