#!/usr/bin/env python3
"""Smoke test for the qmaj_py extension module.

Builds are not triggered here; compile the module first with

    cargo build --release -p qmaj-python

then run

    python3 python/smoke_test.py

The script copies the compiled cdylib next to a temporary import path under
the name Python expects and exercises the main types and operations.
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def load_module():
    candidates = [
        ROOT / "target" / "release" / "libqmaj_py.so",
        ROOT / "target" / "debug" / "libqmaj_py.so",
        ROOT / "target" / "release" / "qmaj_py.dll",
        ROOT / "target" / "debug" / "qmaj_py.dll",
        ROOT / "target" / "release" / "libqmaj_py.dylib",
        ROOT / "target" / "debug" / "libqmaj_py.dylib",
    ]
    built = [p for p in candidates if p.exists()]
    if not built:
        sys.exit("no compiled module found; run: cargo build --release -p qmaj-python")
    newest = max(built, key=lambda p: p.stat().st_mtime)
    tmp = Path(tempfile.mkdtemp(prefix="qmaj_py_"))
    suffix = ".pyd" if newest.suffix == ".dll" else ".so"
    shutil.copy2(newest, tmp / f"qmaj_py{suffix}")
    sys.path.insert(0, str(tmp))
    import qmaj_py

    return qmaj_py


def check(name, condition):
    if not condition:
        sys.exit(f"FAIL: {name}")
    print(f"PASS: {name}")


def main():
    m = load_module()

    # q-polynomial arithmetic.
    gauss = m.q_binomial(4, 2)
    check("q_binomial(4,2) coefficients", gauss.coefficients() == [1, 1, 2, 1, 1])
    check("q_binomial display", str(gauss) == "1 + q + 2*q^2 + q^3 + q^4")
    check(
        "q_multinomial factorization",
        m.q_multinomial(6, [3, 3, 0]) == m.q_binomial(6, 3),
    )
    check(
        "exact division",
        m.q_binomial(6, 3).exact_div(m.q_int(4)).coefficients() == [1, 0, 1, 1, 1, 0, 1],
    )
    product = m.q_int(2) * m.q_int(2)
    check("operator overloads", product.coefficients() == [1, 2, 1])
    check("json form", json.loads(gauss.to_json()) == ["1", "1", "2", "1", "1"])
    try:
        m.q_int(3).exact_div(m.q_binomial(4, 2))
        sys.exit("FAIL: inexact division must raise")
    except ValueError:
        print("PASS: inexact division raises ValueError")

    # Paths and enumeration.
    check("endpoint", m.endpoint("NENNEE") == (3, 3))
    check("depth profile", m.depth_profile("NENNEE") == [1, 0, 1, 2, 1, 0])
    check("enumerate del:1,1,2", m.enumerate_family("del:1,1,2") == ["EN", "NE"])
    check("enumerate sch:3,6 count", len(m.enumerate_family("sch:3,6")) == 5)
    check("is_schroeder", m.is_schroeder("EEENNN", 3) and not m.is_schroeder("NENNEE", 3))
    check("is_bad", m.is_bad("NENNEE", 3))

    # Statistics and closed forms.
    check("six step orders", len(m.step_orders()) == 6)
    check("descent set", m.descent_set("NENNEE", "E<D<N") == [1, 4])
    check("maj", m.maj("NENNEE", "E<D<N") == 5)
    brute = m.maj_distribution("sch:3,6", "E<D<N")
    closed = m.msch_closed(3, 6, "E<D<N")
    check("theorem instance sch:3,6", brute == closed)
    check("theorem polynomial", str(closed) == "1 + q^2 + q^3 + q^4 + q^6")
    check(
        "lemma instance bdel:3,6",
        m.maj_distribution("bdel:3,6", "E<D<N") == m.mbdel_closed(3, 6, "E<D<N"),
    )
    check(
        "macmahon instance del:2,3,4",
        m.maj_distribution("del:2,3,4", "N<D<E") == m.mdel_closed(2, 3, 4),
    )
    check("counting at q=1", m.msch_closed(4, 8, "N<E<D").eval_at_one() == 14)

    # Bijections.
    check("pivot position", m.first_deepest("NENNEE") == 4)
    check("block around", m.block_around("DDNDE", 3) == (3, 2, 1))
    check("phi", m.phi("NENNEE", "E<D<N") == "NENEEE")
    for w in m.enumerate_family("bdel:3,6"):
        image = m.phi(w, "E<N<D")
        if m.phi_inverse(image, "E<N<D") != w:
            sys.exit(f"FAIL: phi round trip at {w}")
        if m.maj(w, "E<N<D") != m.maj(image, "E<N<D") + 1:
            sys.exit(f"FAIL: maj shift at {w}")
    print("PASS: phi round trip and maj shift over bdel:3,6")
    check("psi collision", m.psi("NENNEE") == m.psi("EENNNE") == "EENNEE")
    collisions = m.psi_collisions(3, 6)
    check(
        "psi collision group",
        ("EENNEE", ["EENNNE", "NENNEE"]) in collisions,
    )

    # Verification sweep.
    report = json.loads(m.verify_json(3, "all"))
    check("verification sweep n<=3", report["summary"]["failed"] == 0)
    check(
        "report coefficients are strings",
        all(isinstance(c, str) for c in report["checks"][0]["expected"]),
    )

    print("all smoke tests passed")


if __name__ == "__main__":
    main()
