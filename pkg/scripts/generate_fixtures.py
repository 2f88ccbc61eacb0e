#!/usr/bin/env python3
"""Regenerate the bundled OEIS reference b-files under src/fubini/data/.

The values reproduce the published OEIS data but are derived here by
routes independent of the library internals, so the fixtures stay a
meaningful cross-check of the package's own computation paths:

* A000670 via the binomial-convolution recurrence
  a(n) = sum_{j=1..n} C(n,j) a(n-j), no partition counts involved;
* A008277 and A130850 via the alternating-binomial explicit formula
  S(n,k) = (1/k!) sum_{j=0..k} (-1)^j C(k,j) (k-j)^n, while the library
  uses the triangle recurrence.

Run from the repository root: python scripts/generate_fixtures.py
"""

from math import comb, factorial
from pathlib import Path

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "fubini" / "data"

FUBINI_TERMS = 30  # indices 0..29
STIRLING_ROWS = 13  # rows 1..13 -> 91 entries, indices 1..91
WORPITZKY_ROWS = 12  # rows 0..11 -> 78 entries, indices 0..77


def fubini_values(count):
    values = [1]
    for n in range(1, count):
        values.append(sum(comb(n, j) * values[n - j] for j in range(1, n + 1)))
    return values


def stirling_explicit(n, k):
    total = sum((-1) ** j * comb(k, j) * (k - j) ** n for j in range(k + 1))
    quotient, remainder = divmod(total, factorial(k))
    assert remainder == 0, (n, k)
    return quotient


def bfile_lines(values, offset):
    return "".join(f"{offset + i} {v}\n" for i, v in enumerate(values))


def main():
    DATA_DIR.mkdir(parents=True, exist_ok=True)

    fubini = fubini_values(FUBINI_TERMS)
    (DATA_DIR / "b000670.txt").write_text(bfile_lines(fubini, 0), "ascii")

    stirling = [
        stirling_explicit(n, k)
        for n in range(1, STIRLING_ROWS + 1)
        for k in range(1, n + 1)
    ]
    (DATA_DIR / "b008277.txt").write_text(bfile_lines(stirling, 1), "ascii")

    worpitzky = [
        factorial(k) * stirling_explicit(n + 1, k + 1)
        for n in range(WORPITZKY_ROWS)
        for k in range(n + 1)
    ]
    (DATA_DIR / "b130850.txt").write_text(bfile_lines(worpitzky, 0), "ascii")

    for name in ("b000670.txt", "b008277.txt", "b130850.txt"):
        lines = (DATA_DIR / name).read_text("ascii").count("\n")
        print(f"wrote {name}: {lines} entries")


if __name__ == "__main__":
    main()
