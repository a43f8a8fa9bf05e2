#!/usr/bin/env python3
"""Enumerate and classify invariant almost complex structures on a set of
flag manifolds, reporting census counts, equivalence classes, and
integrability verdicts."""

import argparse

from flagchern.flagmodel import classify_acs, enumerate_acs, parse_manifold

DEFAULT = ["F(3;1,1,1)", "F(4)", "F(5)", "F(5;1,2,2)", "F(6;1,2,3)",
           "F(6;2,2,2)", "FD(3;1,2)", "FD(4;1,3)", "G2-long", "G2-short",
           "G2/T"]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("manifolds", nargs="*", default=DEFAULT,
                    help="manifold names (default: a representative list)")
    args = ap.parse_args()

    for name in args.manifolds:
        flag = parse_manifold(name)
        census = enumerate_acs(flag)
        classes = classify_acs(flag)
        print(f"\n{flag.name()}: dim_C {flag.complex_dim}, "
              f"chi {flag.euler_characteristic()}, "
              f"{len(flag.summands())} isotropy summands, "
              f"{len(census)} structures up to conjugation, "
              f"{len(classes)} up to conjugation and equivalence")
        for i, cls in enumerate(classes, 1):
            verdict = "integrable" if cls.integrable else "non-integrable"
            members = " ".join(m.label() for m in cls.members)
            print(f"  class {i}: {verdict}, size {cls.size}: {members}")


if __name__ == "__main__":
    main()
