#!/usr/bin/env python3
"""Smoke tests of the python bindings."""
import sys

import liecurrent as lc

failures = 0


def check(label, cond):
    global failures
    print(("ok  " if cond else "FAIL") + " " + label)
    if not cond:
        failures += 1


check("version string", isinstance(lc.__version__, str))

a = lc.algebra("sl2")
check("sl2 dim", a["dim"] == 3)
check("sl2 marks", a["root_system"]["marks"] == [1, 1])

g2 = lc.algebra("g2")
check("g2 dim", g2["dim"] == 14)
check("g2 marks", sorted(g2["root_system"]["marks"]) == [1, 2, 3])

for case in ["A1", "A2", "A3", "B1", "B2", "C", "DJ"]:
    check(f"cybe {case} sl2", lc.cybe_is_zero(case))
check("cybe A4 sl3", lc.cybe_is_zero("A4", "sl3", m1="1", m2="2"))
check("skew A3", lc.skew_holds("A3"))
check("DJ is not strictly skew", not lc.skew_holds("DJ"))

rep = lc.verify_case("A2")
check("verify A2 passes", rep["pass"] is True)
check("verify schema", rep["schema"] == "report_v1")

bd = lc.enum_bd("sl2", 1)
check("bd count", bd["count"] == 2)
check("bd v_dims", [t["v_dim"] for t in bd["triples"]] == [1, 0])

cls = lc.classify([1, -3, 2])
check("classify A4", cls["class"] == "A4" and cls["j"] == "9/2")

nrm = lc.normalize_trace(0, [1, 0, 0], order=6)
check("normalize verified", nrm["verified"] is True)

perp = lc.order_perp("sl3", 1)
check("order perp sl3", perp["pass"] is True and perp["x2_identity"] is True)

fd = {"basis": [["0", "0", "1"]], "form": [["0"]]}
fr = lc.verify_fdata(fd, "sl2", 1)
check("fdata runs", fr["applicable"] is True)

r = lc.rmatrix("C", "sl2")
check("rmatrix C", r["denom_power"] == 1 and len(r["numerator"]) > 0)

sys.exit(1 if failures else 0)
