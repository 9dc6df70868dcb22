#!/usr/bin/env python3
"""Per-identity pass counts, worst residual and wall time.

    python3 scripts/run_catalog.py            # everything, misprints included
    python3 scripts/run_catalog.py 'E*' N12   # selected globs
"""

import argparse
import time

from periodic_dedekind import identities as ids
from periodic_dedekind.exact import embed


def worst(reports):
    if not reports:
        return 0.0
    if reports[0].mode is ids.Mode.EXACT:
        return max(abs(embed(r.residual)) for r in reports)
    return max(r.residual for r in reports)


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("patterns", nargs="*", default=["*"])
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--skip-errata", action="store_true")
    args = ap.parse_args()

    unexpected = 0
    print(f"{'id':<18}{'pass':>12}  {'max residual':>12}  {'seconds':>8}  status")
    for pattern in args.patterns:
        for ident in ids.select(pattern, include_errata=not args.skip_errata):
            start = time.perf_counter()
            reports = ids.run_suite(ident.id, include_errata=True, workers=args.workers)
            dt = time.perf_counter() - start
            p, t = ids.summarize(reports)
            ok = all(r.as_expected for r in reports)
            unexpected += not ok
            status = "ok" if ok else "UNEXPECTED"
            if not ident.holds:
                status += " (misprint, expected to fail)"
            print(f"{ident.id:<18}{f'{p}/{t}':>12}  {worst(reports):>12.2e}  {dt:>8.2f}  {status}")
    return 1 if unexpected else 0


if __name__ == "__main__":
    raise SystemExit(main())
