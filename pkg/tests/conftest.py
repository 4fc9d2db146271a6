import pathlib

import numpy as np
import pytest

from catmap.dataset import AttributeSchema, CategoricalTable, deduplicate, load_csv

DATA_DIR = pathlib.Path(__file__).resolve().parent.parent / "data"
TITANIC_CSV = DATA_DIR / "titanic.csv"


@pytest.fixture(scope="session")
def titanic_table():
    return load_csv(TITANIC_CSV)


@pytest.fixture(scope="session")
def titanic_subsets(titanic_table):
    return deduplicate(titanic_table)


@pytest.fixture
def small_schema():
    # a1: {red, blue}, a2: {small, large}
    return AttributeSchema(("a1", "a2"), (("red", "blue"), ("small", "large")))


@pytest.fixture
def small_table(small_schema):
    # rows: (red,small), (red,large), (blue,large)
    return CategoricalTable(small_schema, ((0, 0), (0, 1), (1, 1)))


def random_subset_rows(rng, n_attrs, cats_per_attr, n_rows):
    return [
        tuple(int(rng.integers(0, cats_per_attr)) for _ in range(n_attrs))
        for _ in range(n_rows)
    ]


def random_table(rng, n_attrs=4, cats_per_attr=3, n_rows=30):
    schema = AttributeSchema(
        tuple(f"a{i}" for i in range(n_attrs)),
        tuple(tuple(f"c{j}" for j in range(cats_per_attr)) for _ in range(n_attrs)),
    )
    rows = tuple(random_subset_rows(rng, n_attrs, cats_per_attr, n_rows))
    return CategoricalTable(schema, rows)


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
