"""Regenerate src/twopan/data/b005704.txt.

a(k) = number of partitions of 3k into powers of 3, counted with the
standard coin-change table over coins 1, 3, 9, ...
"""
import sys
from pathlib import Path

TERMS = 1000
OUT = Path(__file__).resolve().parents[1] / "src" / "twopan" / "data" / "b005704.txt"


def partitions_into_powers_of_3(limit):
    ways = [1] + [0] * limit
    coin = 1
    while coin <= limit:
        for s in range(coin, limit + 1):
            ways[s] += ways[s - coin]
        coin *= 3
    return ways


def main():
    ways = partitions_into_powers_of_3(3 * (TERMS - 1))
    lines = [
        "# A005704 Number of partitions of 3n into powers of 3.",
        f"# n = 0..{TERMS - 1}, generated by scripts/make_b005704.py (coin-change count).",
    ]
    lines += [f"{k} {ways[3 * k]}" for k in range(TERMS)]
    OUT.write_text("\n".join(lines) + "\n")
    print(f"wrote {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
