import pytest

from momst import MultiGraph

# Triangle used throughout: root s=0, u=1, w=2 with costs
# [s,u]=(3,3), [s,w]=(1,1), [u,w]=(2,1). Its three spanning trees cost
# (4,4), (5,4) and (3,2); only (3,2) is nondominated.
TRIANGLE_EDGES = [(0, 1, (3, 3)), (0, 2, (1, 1)), (1, 2, (2, 1))]

TRIANGLE_TEXT = """p momst 3 3 2 1
e 1 2 3 3
e 1 3 1 1
e 2 3 2 1
"""


@pytest.fixture
def triangle():
    return MultiGraph(3, TRIANGLE_EDGES, root=0)


@pytest.fixture
def triangle_text():
    return TRIANGLE_TEXT
