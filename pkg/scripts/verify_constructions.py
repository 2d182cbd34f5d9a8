#!/usr/bin/env python3
"""Run every constructive labeling and witness up to a bound through the checker.

Covers cordial constructions for complete graphs, cycles, mobius ladders, and
wheels, plus the deficiency witnesses for complete graphs (both kinds), the
2-mod-4 mobius ladders, and the 3-mod-4 wheels. Each certificate goes through
a serialize/parse round trip before verification, so the wire format is
exercised as well. Prints a per-family summary; exits 1 if anything fails.
"""

import argparse
import sys
from collections import Counter

from cordial import (
    StrictlyNoncordial,
    check_certificate,
    complete_ced_witness,
    complete_cordial_labeling,
    complete_cvd_witness,
    construct_mobius_labeling,
    cycle_cordial_labeling,
    instance_certificate,
    is_cordial_cycle,
    is_cordial_mobius,
    is_cordial_wheel,
    mobius_ced_witness,
    mobius_cvd_witness,
    parse_certificate,
    serialize_certificate,
    wheel_ced_witness,
    wheel_cordial_labeling,
    wheel_cvd_witness,
)


def all_certificates(bound: int):
    """Yield (family, description, certificate) for everything constructible."""
    for n in (1, 2, 3):
        yield "complete", f"cordial n={n}", instance_certificate(
            complete_cordial_labeling(n))
    for n in range(2, bound + 1):
        yield "complete", f"ced witness n={n}", complete_ced_witness(n)
    for n in range(1, bound + 1):
        try:
            cert = complete_cvd_witness(n)
        except StrictlyNoncordial:
            continue
        yield "complete", f"cvd witness n={n}", cert
    for n in range(3, bound + 1):
        if is_cordial_cycle(n):
            yield "cycle", f"cordial n={n}", instance_certificate(
                cycle_cordial_labeling(n))
    for k in range(3, bound + 1):
        if is_cordial_mobius(k):
            yield "mobius", f"cordial k={k}", instance_certificate(
                construct_mobius_labeling(k))
        else:
            yield "mobius", f"ced witness k={k}", mobius_ced_witness(k)
            yield "mobius", f"cvd witness k={k}", mobius_cvd_witness(k)
    for n in range(3, bound + 1):
        if is_cordial_wheel(n):
            yield "wheel", f"cordial n={n}", instance_certificate(
                wheel_cordial_labeling(n))
        elif n >= 7:
            yield "wheel", f"ced witness n={n}", wheel_ced_witness(n)
            yield "wheel", f"cvd witness n={n}", wheel_cvd_witness(n)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--bound", type=int, default=200,
                    help="largest family size to construct (default 200)")
    ns = ap.parse_args(argv)

    checked = Counter()
    failed = []
    for family, desc, cert in all_certificates(ns.bound):
        rewired = parse_certificate(serialize_certificate(cert))
        verdict = check_certificate(rewired)
        checked[family] += 1
        if rewired != cert or not verdict.accepted:
            failed.append((family, desc, verdict.reason))

    for family in sorted(checked):
        print(f"{family:9s} {checked[family]:4d} certificates checked")
    print(f"total     {sum(checked.values()):4d}")
    if failed:
        for family, desc, reason in failed:
            print(f"FAIL {family} {desc}: {reason}")
        return 1
    print("all certificates accepted")
    return 0


if __name__ == "__main__":
    sys.exit(main())
