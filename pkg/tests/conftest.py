import pytest

from dcrystal.cartan import Root
from dcrystal.crystalgraph import KOSTANT, TABLEAUX, generate
from dcrystal.kostant import KostantPartition
from dcrystal.tableaux import MLTableau

B, G = Root.beta, Root.gamma

# D_4 tableau used for e_4 / f_4 and for the isomorphism example
EX_T_ROWS = [[1] * 9 + [2, 2, -3, -1, -1, -1], [2] * 4 + [3, -4, -3, -3], [3, -4, -3]]

# D_4 partition 5(a1) + (a1+a2+a3+a4) + 3(a1+2a2+a3+a4) + 2(a2+a4) + (a2+a3) + (a2+a3+a4) + (a3) + 2(a4)
EX_ALPHA = {B(1, 1): 5, G(1, 3): 1, G(1, 2): 3, G(2, 4): 2, B(2, 3): 1, G(2, 3): 1, B(3, 3): 1, G(3, 4): 2}

# D_4 single-row tableau used with f_2
EX_SINGLE_ROW_ROWS = [[1, 1, 1, 2, 2, 3, 4, -3, -1, -1], [2, 2], [3]]


@pytest.fixture
def ex_t():
    return MLTableau.from_rows(4, EX_T_ROWS)


@pytest.fixture
def ex_alpha():
    return KostantPartition(4, EX_ALPHA)


@pytest.fixture
def ex_single_row_t():
    return MLTableau.from_rows(4, EX_SINGLE_ROW_ROWS)


@pytest.fixture(scope="session")
def balls():
    """BFS balls shared across modules: (realization, n) -> graph."""
    return {
        (TABLEAUX, 4): generate(TABLEAUX, 4, 5),
        (KOSTANT, 4): generate(KOSTANT, 4, 5),
        (TABLEAUX, 5): generate(TABLEAUX, 5, 4),
        (KOSTANT, 5): generate(KOSTANT, 5, 4),
    }
