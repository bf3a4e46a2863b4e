#!/usr/bin/env python3
# Copyright 2026 The frobcode Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes data/golden/table{1,2,3}.txt from the published code tables.

Rows are printed as published. Notes are recomputed here with plain integer
arithmetic (cosets, runs, orders), independently of the C++ library.
"""

import argparse
import math
import pathlib

# (m, n, g labels, h labels, window lo, window hi, k, delta), as printed.
LINEAR = [
    (1, 5, [0], [2], 2, 3, 1, 3),
    (3, 13, [0], [2], 5, 8, 1, 5),
    (2, 17, [0], [2, 6], 6, 11, 1, 7),
    (2, 17, [0, 1], [6], 6, 7, 9, 3),
    (5, 25, [0], [1, 5], 4, 6, 1, 4),
    (5, 25, [0, 5], [2], 2, 3, 5, 3),
    (7, 29, [0], [1], 4, 7, 1, 5),
    (9, 37, [0], [1], 9, 12, 1, 5),
    (2, 41, [0], [1, 6], 14, 19, 1, 7),
    (2, 41, [0, 1], [3], 11, 13, 21, 4),
    (13, 53, [0], [2], 18, 23, 1, 7),
    (15, 61, [0], [2], 28, 33, 1, 7),
    (3, 65, [0, 1], [6, 7, 10, 22, 26], 22, 28, 13, 8),
    (3, 65, [0, 11, 13], [2, 6, 9, 10], 29, 36, 17, 9),
    (3, 65, [0, 7, 11, 13], [2, 6, 10], 30, 35, 29, 7),
    (3, 65, [0, 5, 7, 11, 13], [2, 6], 31, 34, 41, 5),
    (3, 65, [0, 1, 3, 5, 7, 13], [22], 22, 23, 53, 3),
    (12, 97, [0], [1, 7], 33, 40, 1, 9),
    (12, 97, [0, 1], [7], 37, 40, 49, 5),
]

NONLINEAR = [
    (1, 9, [0, 3], [4], 4, 5, 3, 3),
    (2, 13, [0], [4], 6, 7, 1, 3),
    (3, 19, [0], [4], 9, 10, 1, 3),
    (3, 27, [0, 9], [4, 12], 12, 15, 3, 5),
    (3, 27, [0, 9, 1], [12], 15, 15, 21, 2),
    (3, 27, [0, 9, 3], [4], 22, 23, 9, 3),
    (6, 37, [0], [4], 32, 34, 1, 4),
    (3, 57, [0, 19], [4, 12, 20], 25, 32, 3, 9),
    (3, 57, [0, 19, 5], [4, 12], 27, 30, 21, 5),
    (3, 57, [0, 19, 3, 5], [4], 28, 29, 39, 3),
    (10, 61, [0], [4], 29, 32, 1, 5),
    (2, 65, [0, 13], [4, 12, 20, 28, 44], 27, 38, 5, 13),
    (2, 65, [0, 13, 11], [4, 12, 20, 28], 28, 37, 17, 11),
    (2, 65, [0, 13, 1, 3, 5, 11], [28], 36, 37, 53, 3),
    (2, 65, [0, 13, 7, 11], [4, 12, 20], 30, 35, 29, 7),
    (2, 65, [0, 13, 5, 7, 11], [4, 12], 31, 34, 41, 5),
    (2, 65, [0, 13, 3, 5, 7, 11], [4], 32, 33, 53, 3),
    (11, 67, [0], [4], 31, 36, 1, 7),
    (9, 81, [0, 27, 3], [1, 36], 44, 46, 21, 4),
    (9, 81, [0, 27, 1, 3], [36], 45, 45, 75, 2),
    (9, 81, [0, 27, 9], [4, 12], 66, 69, 9, 5),
    (9, 81, [0, 27, 3, 9], [4], 76, 77, 27, 3),
    (8, 97, [0], [2, 20], 51, 55, 1, 6),
    (8, 97, [0, 1], [20], 77, 78, 49, 3),
    (8, 97, [0, 5], [4], 48, 49, 49, 3),
    (5, 99, [0, 3, 9, 15, 33, 1, 5], [44], 55, 55, 93, 2),
    (5, 99, [0, 3, 9, 15, 33, 1, 11], [5], 85, 86, 69, 3),
    (5, 99, [0, 3, 9, 15, 33, 5, 11], [4], 67, 68, 69, 3),
]

# (n, k, delta, mark): '+' linear and nonlinear, '*' nonlinear only.
SUMMARY = [
    (5, 1, 3, ' '), (9, 3, 3, '*'), (13, 1, 5, ' '), (17, 1, 7, ' '), (17, 9, 3, ' '), (19, 1, 3, '*'),
    (25, 1, 4, ' '), (25, 5, 3, ' '), (27, 21, 2, '*'), (27, 9, 3, '*'), (29, 1, 5, ' '), (37, 1, 5, ' '),
    (41, 1, 7, ' '), (41, 21, 4, ' '), (53, 1, 7, ' '), (57, 21, 5, '*'), (57, 39, 3, '*'), (61, 1, 7, ' '),
    (65, 5, 13, '*'), (65, 13, 8, ' '), (65, 17, 9, ' '), (65, 17, 11, '*'), (65, 29, 7, '+'), (65, 41, 5, '+'),
    (65, 53, 3, '+'), (67, 1, 7, '*'), (81, 21, 4, '*'), (81, 75, 2, '*'), (97, 1, 9, ' '), (97, 49, 5, ' '),
    (99, 69, 3, '*'),
]

HEADERS = {
    2: "Table II: linear codes over F_2, length dividing 4^m+1",
    3: "Table III: nonlinear codes over F_2, length dividing 8^m+1",
}


def coset(k, q, n):
    out, x = set(), k % n
    while x not in out:
        out.add(x)
        x = x * q % n
    return out


def least_m(n, d):
    # Least m with 2^(d m) = -1 mod n, by direct scan.
    for m in range(1, 2 * n + 1):
        if pow(2, d * m, n) == n - 1:
            return m
    raise ValueError(f"no m for n={n}, d={d}")


def longest_run(exps, n, s, prefer_last):
    """(run, ell) of the longest cyclic progression ell, ell+s, ... in exps."""
    best = (0, 0)
    for x in range(n):
        if (s * x) % n not in exps or (s * (x - 1)) % n in exps:
            continue
        run = 0
        while run < n and (s * (x + run)) % n in exps:
            run += 1
        if run > best[0] or (prefer_last and run == best[0]):
            best = (run, s * x % n)
    return best


def params(n, k, delta):
    return f"[[{n},{k},{delta}]]"


def labels(prefix, ls):
    return "".join(f"{prefix}_{l}" for l in ls)


def code_table(d):
    rows = LINEAR if d == 2 else NONLINEAR
    out = [HEADERS[d], "m | g | h | roots of h | code"]
    notes = []
    for m, n, g, h, lo, hi, k, delta in rows:
        code = params(n, k, delta)
        factors = labels("g", g) + " | " + labels("h", h)
        mm = least_m(n, d)
        out.append(f"{mm} | {factors} | beta^{lo}..beta^{hi} | {code}")
        if mm != m:
            notes.append(f"{code} {factors}: m = {mm} since 2^{mm * d} = -1 mod {n}; published m = {m}")
        exps = set()
        for l in h:
            exps |= coset(l, 2**d, n)
        prefer_last = d % 2 == 1
        best = (longest_run(exps, n, 1, prefer_last), 1)
        for s in range(2, n):
            if math.gcd(s, n) == 1:
                r = longest_run(exps, n, s, prefer_last)
                if r[0] > best[0][0]:
                    best = (r, s)
        (run, ell), s = best
        if run + 1 != delta:
            notes.append(f"{code} {factors}: BCH distance {run + 1} for another primitive root, "
                         f"roots beta^({ell}+{s}j) for j = 0..{run - 1}")
    if d == 3:
        summary = {(n, k, de) for n, k, de, _ in SUMMARY}
        seen = set()
        for row in rows:
            key = (row[1], row[6], row[7])
            if key not in summary and key not in seen:
                seen.add(key)
                notes.append(f"{params(*key)}: not in the published summary table")
    if notes:
        out.append("notes:")
        out.extend(f"- {x}" for x in notes)
    return "\n".join(out) + "\n"


def summary_table():
    found = {}
    for bit, rows in ((1, LINEAR), (2, NONLINEAR)):
        for row in rows:
            key = (row[1], row[6], row[7])
            found[key] = found.get(key, 0) | bit
    mark = {1: " ", 2: "*", 3: "+"}
    out = ["Table I: codes over F_2 from Tables II and III (+ linear and nonlinear, * nonlinear only)",
           "length | parameters"]
    derived = set()
    for n in sorted({key[0] for key in found}):
        entries = sorted((k, de) for nn, k, de in found if nn == n)
        parts = []
        for k, de in entries:
            mk = mark[found[(n, k, de)]]
            parts.append(params(n, k, de) + (mk if mk != " " else ""))
            derived.add((n, k, de, mk))
        out.append(f"{n} | " + ", ".join(parts))
    published = set(SUMMARY)

    def describe(e):
        return params(*e[:3]) + (e[3] if e[3] != " " else "")

    dev = [describe(e) + ": missing from the published summary" for e in sorted(derived - published)]
    dev += [describe(e) + ": published but not derived" for e in sorted(published - derived)]
    if dev:
        out.append("deviations:")
        out.extend(f"- {x}" for x in dev)
    return "\n".join(out) + "\n"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data" / "golden"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / "table1.txt").write_text(summary_table())
    (out / "table2.txt").write_text(code_table(2))
    (out / "table3.txt").write_text(code_table(3))


if __name__ == "__main__":
    main()
