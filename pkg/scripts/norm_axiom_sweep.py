"""Run the norm axiom verifier over a sweep of frames and tabulate pass/fail.

    python3 scripts/norm_axiom_sweep.py --samples 2000
"""

import argparse
from fractions import Fraction

from neutroff import verify_norm_axioms
from neutroff.algebra import DEFAULT_SEED, algebraic_product, algebraic_sum

FRAMES = [(0, 1), (0, Fraction(6, 5)), (Fraction(-1, 5), 1), (Fraction(-1, 2), Fraction(3, 2)), (Fraction(-6, 5), Fraction(6, 5)), (-1, 2)]
FAMILIES = {
    "min_max": ("min_max", "min_max"),
    "bounded": ("bounded", "bounded"),
    "bounded_dual": ("bounded_dual", "bounded_dual"),
    "product": (algebraic_product, algebraic_sum),
}

CODES = {"overbounding": "o", "commutativity": "c", "monotonicity": "m", "associativity": "a", "closure": "x"}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    args = ap.parse_args()
    head = f"{'family':<13} {'role':<7}" + "".join(f"[{str(p)}, {str(o)}]".rjust(14) for p, o in FRAMES)
    print(head)
    print("-" * len(head))
    for name, (norm, conorm) in FAMILIES.items():
        for role, op in (("norm", norm), ("conorm", conorm)):
            cells = []
            for frame in FRAMES:
                rep = verify_norm_axioms(op, frame, args.samples, args.seed, role)
                failed = [r.name for r in rep.results.values() if not r.passed]
                cells.append("pass" if not failed else "FAIL " + "".join(CODES[n] for n in failed))
            print(f"{name:<13} {role:<7}" + "".join(c.rjust(14) for c in cells))
    print("\nfailure codes: " + ", ".join(f"{v}={k}" for k, v in CODES.items()))


if __name__ == "__main__":
    main()
