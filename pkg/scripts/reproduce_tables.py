#!/usr/bin/env python3
"""Regenerate both deleted-edge tables and print them side by side with the
transcribed data."""

import sys

from regdef.tables import reproduce


def main():
    ok = True
    for table in (1, 2):
        rep = reproduce(table)
        print(f"== table {table}")
        width = max(len(e) for col in rep.produced.values() for e in col) + 2
        cols = list(rep.produced)
        print("".join(c.ljust(width) for c in cols))
        for row in zip(*(rep.produced[c] for c in cols)):
            print("".join(e.ljust(width) for e in row))
        print("\n".join(rep.lines()[-1:]))
        ok &= rep.ok
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
