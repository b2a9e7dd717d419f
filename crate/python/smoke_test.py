"""Smoke test for the hopf_scf_py extension module.

Build and run from the repository root:

    cargo build -p hopf-scf-py --release --features extension-module
    cp target/release/libhopf_scf_py.so python/hopf_scf_py.so
    python3 python/smoke_test.py
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import hopf_scf_py as h  # noqa: E402


def main():
    b3 = h.NSymElem("B", [3]).convert("H")
    assert b3.terms() == [([1, 1, 1], "1")], b3.terms()

    b12 = dict((tuple(c), v) for c, v in h.NSymElem("B", [1, 2]).convert("H").terms())
    assert b12 == {(2, 1): "q", (1, 1, 1): "t"}, b12

    delta = {(tuple(l), tuple(r)): c for l, r, c in h.NSymElem("Bhat", [3]).coproduct()}
    assert delta[((1,), (2,))] == "q + 2*t"
    assert delta[((1,), (1, 1))] == "q*t + t^2"

    assert h.a_shuffle([2, 3], 4, [2], 3, [1, 3, 4]) == [1, 3, 4, 5, 6]
    assert h.structconst([1, 2], [], 1, [1], 2) == "q + 2*t"

    # ch(kappa_I) = (nu - 1)^{|I|} Pi(nu)_{comp(I)}
    k = h.characteristic(3, "kappa", 3, [1])
    pi = h.QSymElem("Pi", [1, 2], nu=3).scale("2")
    assert k.equals(pi)

    m = h.QSymElem("M", [1]) * h.QSymElem("M", [1])
    assert sorted(m.terms()) == [([1, 1], "2"), ([2], "1")]
    assert h.NSymElem("H", [2, 1]).pair(h.QSymElem("M", [2, 1])) == "1"

    x = h.NSymElem("Bhat", [1, 2], params=("2", "3"))
    assert h.NSymElem.from_json(x.to_json()) == x

    report = json.loads(h.run_suite("specializations", 4))
    assert all(c["passed"] for c in report["checks"]), report

    try:
        h.QSymElem("Pi", [1])
    except ValueError:
        pass
    else:
        raise AssertionError("Pi without nu must be rejected")

    print("smoke test passed")


if __name__ == "__main__":
    main()
