#!/usr/bin/env python3
"""Tabulate Hurwitz orbit sizes of the alternating systems.

Over the symmetric-group coefficients the orbits are finite for every
length; over the three-strand braid group they stay finite only up to
length 4 (where the two stabilizers coincide) and blow past any cap from
length 5 on, which this script demonstrates with a small cap.
"""

from braidwork.catalog import artin_system, coxeter_system
from braidwork.hurwitz import OrbitCapExceeded, orbit


def run():
    print("length | coxeter orbit | artin orbit (cap 5000)")
    for n in range(2, 7):
        cox = len(orbit(coxeter_system(n)))
        try:
            art = str(len(orbit(artin_system(n), cap=5000)))
        except OrbitCapExceeded as exc:
            art = f">{exc.cap} (cap exceeded)"
        print(f"{n:6d} | {cox:13d} | {art}")


if __name__ == "__main__":
    run()
