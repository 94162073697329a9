#!/usr/bin/env python3
"""Convert a nominal ARFF file to FIMI transaction format.

Each data row becomes one transaction; every (attribute, value) pair that
occurs in the data is assigned a distinct integer item id. Ids are handed
out attribute-major (all of attribute 0's values first), values in order
of first occurrence, starting at 1. Missing markers ('?') count as ordinary
values, matching how the classic itemset-mining benchmark files were
derived from the UCI categorical datasets.

Usage: arff2fimi.py input.arff output.dat
"""

import re
import sys


def read_arff(path):
    n_attrs = 0
    rows = []
    in_data = False
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("%"):
                continue
            low = line.lower()
            if low.startswith("@attribute"):
                n_attrs += 1
            elif low.startswith("@data"):
                in_data = True
            elif in_data:
                row = [tok.strip().strip("'") for tok in line.split(",")]
                if len(row) != n_attrs:
                    raise SystemExit(f"row has {len(row)} fields, expected {n_attrs}: {line!r}")
                rows.append(row)
    return n_attrs, rows


def convert(rows, n_attrs):
    ids = {}  # (attr index, value) -> item id, assigned attribute-major
    for col in range(n_attrs):
        for row in rows:
            key = (col, row[col])
            if key not in ids:
                ids[key] = 0
    # renumber attribute-major: sort keys by (attr, first-occurrence order)
    order = {}
    next_id = 1
    for col in range(n_attrs):
        for row in rows:
            key = (col, row[col])
            if key not in order:
                order[key] = next_id
                next_id += 1
    return [[order[(col, row[col])] for col in range(n_attrs)] for row in rows]


def main(argv):
    if len(argv) != 3:
        raise SystemExit(__doc__.strip())
    n_attrs, rows = read_arff(argv[1])
    transactions = convert(rows, n_attrs)
    with open(argv[2], "w") as out:
        for t in transactions:
            out.write(" ".join(str(i) for i in sorted(t)) + "\n")
    n_items = len({i for t in transactions for i in t})
    print(f"{argv[2]}: {len(transactions)} transactions, {n_items} items")


if __name__ == "__main__":
    main(sys.argv)
