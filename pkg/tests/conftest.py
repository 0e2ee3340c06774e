from pathlib import Path

import pytest

from dualgraphs.hopf import HopfSkeleton, LinComb
from dualgraphs.qpoly import q_int

GOLDEN = Path(__file__).parent / "golden"


def doubled_chain_skeleton(quantized=False):
    """Chain whose up-edges carry two colours: m(n, n+1) = 2(n+1) (or 2[n+1]).

    With the plain chain as Gamma' this forces D U - U D = 2 Id (resp.
    D U - q U D = 2 Id).
    """

    def up(n):
        return LinComb({n + 1: 2 * (q_int(n + 1) if quantized else n + 1)})

    def down(n):
        return LinComb({n - 1: 1}) if n else LinComb()

    return HopfSkeleton(
        name="doubled-chain-q" if quantized else "doubled-chain",
        quantized=quantized,
        labels=lambda n: [n],
        up=up,
        down=down,
        r=2 * q_int(1),
        height_of=int,
    )


@pytest.fixture
def golden_dir():
    return GOLDEN
