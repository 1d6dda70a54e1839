"""Print the class of every worked example next to its published class.

    python3 scripts/reproduce_worked_examples.py
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import worked  # noqa: E402


def main() -> int:
    bad = 0
    width = max(len(name) for name, _, _ in worked.ALL)
    for name, thunk, want in worked.ALL:
        c = thunk()
        got = c.tag.value
        mark = "ok " if got == want else "BAD"
        bad += got != want
        ev = "; ".join(str(e) for e in c.evidence[:2])
        more = f" (+{len(c.evidence) - 2})" if len(c.evidence) > 2 else ""
        print(f"{mark} {name:<{width}}  {got:<8} expected {want:<8} {ev}{more}")
    print(f"\n{len(worked.ALL) - bad}/{len(worked.ALL)} reproduced")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
