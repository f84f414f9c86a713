"""Print every pair of Sp(2n) or SO(N) up to a size bound with its family,
bipartition, maximal constituent and dual, as an aligned text table."""

import argparse
from dataclasses import dataclass

from springer_dual.duality import im_dual_tempered, max_marked
from springer_dual.orbits import SP, enumerate_marked
from springer_dual.symbols import gsc_forward


@dataclass
class TableConfig:
    group: str = SP
    max_size: int = 6


def rows(cfg: TableConfig):
    step = 2 if cfg.group == SP else 1
    for size in range(0, cfg.max_size + 1, step):
        for m in enumerate_marked(cfg.group, size):
            key, b = gsc_forward(m)
            yield (str(size), str(m), str(key.k), str(b), str(max_marked(m)),
                   str(im_dual_tempered(m).marked))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--group", choices=("Sp", "SO"), default=SP)
    ap.add_argument("--max-size", type=int, default=6)
    a = ap.parse_args()
    header = ("size", "pair", "k", "bipartition", "max", "dual")
    body = list(rows(TableConfig(a.group, a.max_size)))
    widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
    for r in [header] + body:
        print("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())


if __name__ == "__main__":
    main()
