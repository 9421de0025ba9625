import os
from fractions import Fraction

import pytest

import yokotl

HOPF = yokotl.Braid(2, [1, 1])
TREFOIL = yokotl.Braid(2, [1, 1, 1])


def test_braid_basics():
    b = yokotl.Braid.parse("1 -2 1", 3)
    assert b.strands == 3
    assert b.letters == [1, -2, 1]
    assert len(b) == 3
    assert b.exponent_sum() == 1
    assert len(HOPF.components()) == 2
    assert HOPF.linking_matrix() == [[0, 1], [1, 0]]


def test_jones_of_trefoil():
    assert yokotl.jones(TREFOIL) == yokotl.theta_small(TREFOIL, 1)
    assert yokotl.jones(TREFOIL) == "1*q^2 + 1*q^6 - 1*q^8"


def test_routes_agree_on_hopf():
    at_half = yokotl.theta_small(HOPF, 2)
    assert yokotl.theta2(HOPF, E="1/2") == at_half
    assert yokotl.theta2(HOPF, E="1/2", route="skein") == at_half
    assert yokotl.theta(HOPF, E="1/3") == yokotl.theta_cap(HOPF, 3)
    assert yokotl.theta2(HOPF) == yokotl.theta2(HOPF, route="skein")


def test_dims_and_esystem():
    assert yokotl.dims(2, 3) == {"Y": 48, "YTL": 28, "CTL": 47, "FTL": 46}
    assert yokotl.dims(1, 4) == {"Y": 24, "YTL": 14, "CTL": 14, "FTL": 14}
    s = yokotl.esolution(2, {0, 1})
    assert Fraction(s["E"]) == Fraction(1, 2)
    assert [Fraction(v) for v in s["x"]] == [1, 0]


def test_markov_moves():
    b = yokotl.Braid(2, [1, 1, 1])
    assert yokotl.theta_small(b.stabilize(-1), 2) == yokotl.theta_small(b, 2)
    assert yokotl.delta(b.conjugate(yokotl.Braid(2, [1])), 2, {0}) == yokotl.delta(b, 2, {0})


def test_errors():
    with pytest.raises(ValueError):
        yokotl.Braid.parse("1 x", 2)
    with pytest.raises(ValueError):
        yokotl.theta2(HOPF, E="q")
    with pytest.raises(ValueError):
        yokotl.theta2(HOPF, route="trace")


def test_run_cli():
    code, out, err = yokotl.run(["tables", "--table", "dims", "--d", "2", "--n", "3"])
    assert code == 0, err
    assert "FTL 46" in out
    code, _, _ = yokotl.run(["invariant", "--braid", "1 1", "--strands", "2", "--inv", "nope"])
    assert code == 1


def test_pairs_file():
    data = os.environ.get("YOKOTL_DATA_DIR")
    if not data:
        pytest.skip("data directory not configured")
    code, out, _ = yokotl.run(["pairs", "--catalog", f"{data}/catalog.jsonl", "--pairs", f"{data}/pairs.jsonl"])
    assert sum(line.startswith("theta(") for line in out.splitlines()) == 6
    assert code in (0, 3)
