"""Run the Green function checks for Sp, SO and type A and print a summary.

    python3 scripts/verify_small_rank.py --sp 8 --so 8 --type-a 6
"""

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from springer_dual.greens.verify import verify_theorems, verify_type_a


@dataclass
class VerifyConfig:
    sp_bound: int = 8
    so_bound: int = 8
    type_a_bound: int = 6
    report: str | None = None


def run(cfg: VerifyConfig) -> dict:
    out = {"config": asdict(cfg),
           "Sp": verify_theorems("Sp", cfg.sp_bound),
           "SO": verify_theorems("SO", cfg.so_bound),
           "A": verify_type_a(cfg.type_a_bound)}
    out["ok"] = all(out[g]["ok"] for g in ("Sp", "SO", "A"))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sp", type=int, default=8, help="largest 2n for Sp(2n)")
    ap.add_argument("--so", type=int, default=8, help="largest N for SO(N)")
    ap.add_argument("--type-a", type=int, default=6)
    ap.add_argument("--report", help="write the full JSON report here")
    a = ap.parse_args()
    cfg = VerifyConfig(a.sp, a.so, a.type_a, a.report)
    result = run(cfg)
    for g in ("Sp", "SO"):
        r = result[g]
        print(f"{g:>2} <= {r['size_bound']:>2}: {r['pairs']:>4} pairs, "
              f"{len(r['families']):>3} families, {len(r['counterexamples'])} counterexamples, "
              f"{r['seconds']}s")
    print(f" A <= {cfg.type_a_bound:>2}: {len(result['A']['counterexamples'])} counterexamples")
    if cfg.report:
        with open(cfg.report, "w") as fh:
            json.dump(result, fh, indent=2)
    sys.exit(0 if result["ok"] else 2)


if __name__ == "__main__":
    main()
