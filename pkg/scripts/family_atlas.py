#!/usr/bin/env python3
"""Print every named family construction on a given vertex count, grouped by
isomorphism class, with surface type and automorphism group order.

Example:
    python3 scripts/family_atlas.py 12
"""

import argparse
import sys

from flatland import automorphism_group, canonical_form, known_catalog, surface_type


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("n", type=int, help="vertex count")
    args = ap.parse_args()

    by_code: dict[tuple, list] = {}
    for named in known_catalog(args.n):
        code = canonical_form(named.complex).code
        by_code.setdefault(code, []).append(named)

    if not by_code:
        print(f"no named families on {args.n} vertices")
        return 0

    for i, code in enumerate(sorted(by_code)):
        group = by_code[code]
        t = group[0].complex
        aut = automorphism_group(t)
        names = ", ".join(sorted(g.name for g in group))
        print(f"class {i}: {surface_type(t)}, |Aut| = {aut.order}")
        print(f"  {names}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
