"""
Shared test fixtures
Catalog objects are built once per session; random Lie algebras are seeded
"""

import random

import pytest

import catalog
import config
import geometry
import linalg
from geometry import AlmostContactData, LieAlgebraFrame, NordenMetric
from scalar import SymbolTable


@pytest.fixture(scope="session")
def table():
    return catalog.catalog_table()


@pytest.fixture(scope="session")
def G(table):
    return catalog.build_G(table)


@pytest.fixture(scope="session")
def E(table):
    return catalog.build_E(table)


@pytest.fixture(scope="session")
def H3(table):
    return catalog.example_H3(table)


@pytest.fixture(scope="session")
def H(table):
    return catalog.example_H(table)


@pytest.fixture(scope="session")
def G_connection(G):
    return geometry.koszul_connection(G.frame, G.metric)


@pytest.fixture(scope="session")
def rational_table():
    return SymbolTable([])


def almost_abelian(table, rng, n):
    """
    Lie algebra with [e_n, e_i] = sum_j M[j, i] e_j for i < n and every other
    bracket zero (Jacobi holds for any M), then rewritten in a random
    unipotent integer basis
    """
    M = [[rng.randint(-2, 2) for _ in range(n - 1)] for _ in range(n - 1)]
    upper = {}
    for i in range(n - 1):
        column = [M[j][i] for j in range(n - 1)] + [0]
        if any(column):
            # [e_i, e_n] = -[e_n, e_i]
            upper[(i, n - 1)] = [-c for c in column]
    frame = LieAlgebraFrame.from_upper(table, [f"e{i + 1}" for i in range(n)], upper)

    P = linalg.identity(table, n)
    for i in range(n):
        for j in range(i + 1, n):
            P[i, j] = table.element(rng.randint(-1, 1))
    brackets = geometry.transport_vector_table(frame.brackets, P)
    return LieAlgebraFrame(table, frame.basis, brackets)


def random_inputs(table, count=config.RANDOM_ALGEBRAS, seed=config.RANDOM_SEED):
    """
    (frame, metric, phi) triples in dimensions 3 to 5 with diag(+-1) metrics
    and phi = G S for a random symmetric integer S, so g(phi X, Y) = g(X, phi Y)
    """
    rng = random.Random(seed)
    out = []
    for index in range(count):
        n = 3 + index % 3
        frame = almost_abelian(table, rng, n)
        signs = [rng.choice([1, -1]) for _ in range(n)]
        G = linalg.diagonal(signs, table)
        S = linalg.zeros(table, n, n)
        for i in range(n):
            for j in range(i, n):
                value = table.element(rng.randint(-2, 2))
                S[i, j] = value
                S[j, i] = value
        out.append((frame, NordenMetric(G), G @ S))
    return out


@pytest.fixture(scope="session")
def random_algebras(rational_table):
    return random_inputs(rational_table)


@pytest.fixture
def point_structure(rational_table):
    """Dimension one: phi = 0, xi = e1, eta = e1*, g = (1)"""
    t = rational_table
    return (
        LieAlgebraFrame.abelian(t, ["e1"]),
        NordenMetric(linalg.diagonal([1], t)),
        AlmostContactData(linalg.zeros(t, 1, 1), linalg.vector([1], t), linalg.vector([1], t)),
    )
