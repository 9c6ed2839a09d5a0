#!/usr/bin/env python3
"""Generate the frozen field-data document for the complex cubic field of
discriminant -23 (defining polynomial x^3 - x - 1, h = 1, w = 2).

The real root rho is the fundamental unit (its norm is 1 and it is the
smallest Pisot number); log_E(rho) = (log rho, -log rho) and the regulator
is log rho.  Run from the repository root:

    python scripts/make_cubic_fixture.py > src/toralzeta/data/cubic_disc_m23.json
"""

import json
import math

import numpy as np
from mpmath import mp, mpf, polyroots

mp.dps = 40


def main():
    roots = polyroots([1, 0, -1, -1])  # x^3 - x - 1
    rho = next(r for r in roots if abs(r.imag) < 1e-30).real
    z = next(r for r in roots if r.imag > 0)

    def iota(power):
        val_r = rho ** power
        val_c = z ** power
        return [float(val_r), float(val_c.real), float(val_c.imag)]

    basis = [iota(0), iota(1), iota(2)]
    reg = float(mp.log(rho))

    det = np.linalg.det(np.array(basis))
    target = 0.5 * math.sqrt(23)
    assert abs(abs(det) - target) / target < 1e-14, (det, target)

    doc = {
        "degree": 3,
        "r1": 1,
        "r2": 1,
        "discriminant": -23,
        "w": 2,
        "regulator": reg,
        "unit_log_basis": [[reg, -reg]],
        "class_group": {
            "cyclic_orders": [],
            "classes": [
                {
                    "label": "O_E",
                    "coords": [],
                    "norm": "1/1",
                    "embedded_basis": basis,
                }
            ],
        },
    }
    print(json.dumps(doc, indent=2))


if __name__ == "__main__":
    main()
