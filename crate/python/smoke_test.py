"""Smoke test for the monogamy_py extension.

Build and run from the repository root:

    cargo build --release -p monogamy-py --features extension-module
    cp target/release/libmonogamy_py.so python/monogamy_py.so
    python3 python/smoke_test.py
"""

import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

import monogamy_py as m  # noqa: E402


def close(a, b, tol=1e-9):
    assert abs(a - b) <= tol, f"{a} != {b}"


def main():
    h = 1 / math.sqrt(2)
    bell = m.PureState([h, 0, 0, h])
    assert bell.num_qubits == 2
    close(m.concurrence(bell, [0]), 1.0)
    close(m.negativity(bell, [0]), 1.0)
    assert bell.schmidt_rank([0]) == 2

    ex1 = m.PureState.named("gsd3")
    close(m.concurrence(ex1, [0]), 2 * math.sqrt(3) / 5)
    c, ca = m.pair_measures(ex1, 0, 1)
    assert ca >= c

    r = m.evaluate(ex1, "thm1", 1.0)
    close(r["lhs"], 2 * math.sqrt(3) / 5)
    close(r["rhs"], 0.8)
    assert r["status"] == "satisfied"

    rows = m.verify(m.PureState.named("thm2_saturating"), "thm2", "2")
    close(rows[0]["slack"], 0.0)

    summary = m.sweep(4, 50, 42, "thm1,thm2,thm3,thm4", "0.5:2:0.5")
    assert all(s["violations"] == 0 for s in summary)

    cols, table = m.figure(1)
    assert cols == ["alpha", "lhs", "thm1", "jin"]
    row = next(r for r in table if abs(r[0] - 1.0) < 1e-12)
    close(row[2], 0.8, 1e-6)

    assert len(m.families()) == 8
    spec = '{"kind":"named","family":"ghz","n":4}'
    assert m.PureState.from_json(spec).num_qubits == 4

    try:
        m.PureState([1, 1])
    except ValueError:
        pass
    else:
        raise AssertionError("unnormalized state accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
