"""Smoke test for the pykpoincare extension.

Build first:  cargo build -p pykpoincare --release
Then run:     python3 python/smoke_test.py
"""

import json
import pathlib
import shutil
import sys
import tempfile
from fractions import Fraction

ROOT = pathlib.Path(__file__).resolve().parents[1]


def load():
    for profile in ("release", "debug"):
        for name in ("libpykpoincare.so", "libpykpoincare.dylib"):
            lib = ROOT / "target" / profile / name
            if lib.exists():
                tmp = pathlib.Path(tempfile.mkdtemp())
                shutil.copy(lib, tmp / "pykpoincare.so")
                sys.path.insert(0, str(tmp))
                import pykpoincare

                return pykpoincare
    sys.exit("pykpoincare not built; run cargo build -p pykpoincare --release")


def main():
    kp = load()

    q = kp.Field([0, 1])
    cusp = kp.analyze_branch(q, 2, [(3, [1])])
    assert cusp.case == "I"
    assert cusp.generators == [2, 3]
    assert cusp.factors == [(6, 1), (2, -1), (3, -1)]
    assert cusp.expansion(6) == [1, 0, 1, 1, 1, 1, 1]
    assert cusp.verify(20) is None
    print("cusp:", cusp.formula)

    k = kp.Field(["-2", 0, 1])
    b = kp.analyze_branch(k, 2, [(3, [1, 0]), (4, [Fraction(0), Fraction(1)])])
    assert b.splitting == [(7, 2)]
    assert b.oracle_dims(20) == b.expansion(20)
    print("(t^2, t^3 + sqrt2 t^4):", b.formula)

    d = kp.analyze_branch(k, 1, [(1, [0, 1])], mode="divisorial")
    assert d.verify(12) is None
    print("divisor past the splitting point:", d.formula)

    g = kp.analyze_branch(q, 2, [(3, [1]), (5, "generic")])
    assert g.case == "III"

    c2 = kp.analyze_branch(q, 2, [(3, [1])], mode="case2", splitting=[(7, 2), (15, 2)])
    assert c2.partial
    try:
        c2.verify(10)
    except kp.KpError:
        pass
    else:
        raise AssertionError("case2 must not be verifiable")

    try:
        kp.analyze_branch(q, 2, [(4, [1])])
    except kp.KpError as e:
        assert "irreducible" in str(e)
    else:
        raise AssertionError("expected an error")

    doc = json.dumps({
        "ambient": {"var": "z", "min_poly": [0, 1]},
        "branch": {"x_order": 4, "y_terms": [{"exp": 6, "coeff": [1]}, {"exp": 7, "coeff": [1]}]},
    })
    r = json.loads(kp.analyze_json(doc).report_json())
    assert r["invariants"]["M_sigma"] == [4, 6, 13]
    assert "graph resolution" in cusp.dot()

    assert kp.expand_product([(6, 1), (2, -1), (3, -1)], 6) == [1, 0, 1, 1, 1, 1, 1]
    assert kp.factor_expansion(cusp.expansion(12)) == [(2, -1), (3, -1), (6, 1)]
    assert kp.semigroup_gaps([4, 6, 13], 30) == [1, 2, 3, 5, 7, 9, 11, 15]

    print("smoke test passed")


if __name__ == "__main__":
    main()
