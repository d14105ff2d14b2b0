"""
Pytest configuration and fixtures
"""

from typing import Dict, List
from unittest.mock import patch

import networkx as nx
import pytest

from gp_toolkit.config import Config
from gp_toolkit.core.graph import Graph, build_graph
from gp_toolkit.generators.lattices import LatticeSpec, lattice, primitive, product
from gp_toolkit.generators.networks import benes, butterfly


def to_networkx(g: Graph) -> nx.Graph:
    """Same graph as a networkx object, for oracle checks"""
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.fixture
def sample_config() -> Dict[str, str]:
    """Sample configuration for testing"""
    return {
        "GP_LOG_LEVEL": "WARNING",
        "GP_THREADS": "1",
        "GP_SEED": "7",
        "GP_TORUS_TIME_LIMIT": "5",
    }


@pytest.fixture
def mock_env(sample_config, monkeypatch):
    """Mock environment variables"""
    unset = ("GP_TIME_LIMIT", "GP_LOG_FILE", "GP_OUTPUT_DIR", "GP_LABELING_CAP", "GP_SOLVER_CAP")
    for key in unset:
        monkeypatch.delenv(key, raising=False)
    for key, value in sample_config.items():
        monkeypatch.setenv(key, value)


@pytest.fixture
def temp_output_dir(tmp_path):
    """Create temporary output directory"""
    output_dir = tmp_path / "output"
    output_dir.mkdir()
    return output_dir


@pytest.fixture
def config(mock_env, temp_output_dir, monkeypatch):
    """Config built from the mocked environment without reading a .env file"""
    monkeypatch.setenv("GP_OUTPUT_DIR", str(temp_output_dir))
    with patch("gp_toolkit.config.load_dotenv"):
        yield Config()


@pytest.fixture
def star() -> Graph:
    """K_{1,3} with center 0"""
    return build_graph(4, [(0, 1), (0, 2), (0, 3)], name="K1,3")


@pytest.fixture
def zoo() -> List[Graph]:
    """Small graphs from every generator family"""
    return [
        primitive("path", 5),
        primitive("cycle", 6),
        primitive("cycle", 7),
        primitive("complete", 4),
        product("cartesian", primitive("path", 3), primitive("cycle", 4)),
        lattice(LatticeSpec("cartesian", (4, 4))),
        lattice(LatticeSpec("cartesian", (3, 3, 2))),
        lattice(LatticeSpec("strong", (4, 4))),
        lattice(LatticeSpec("triangular", (4, 4))),
        lattice(LatticeSpec("torus", (3, 4))),
        butterfly(2),
        benes(2),
    ]
