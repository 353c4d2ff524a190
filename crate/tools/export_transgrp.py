#!/usr/bin/env python3
"""Export transitive-group generators from GAP transgrp data files.

Reads the GAP `TRANSGRP` / `TRANSPROPERTIES` / `TRANSSIZES` assignments from
`lib/trans.grp` (degrees 1..7) and `data/transNN*.grp[.gz]` (degrees >= 8) and
writes one group per line in the permstar database format:

    n i : (c1)(c2)... ; (...)...   # order=<|G|>

Usage:
    export_transgrp.py --transgrp DIR --degrees 2..16 > transitive.db

DIR is a transgrp package directory containing `lib/` and/or `data/`.
"""

import argparse
import gzip
import os
import re
import sys


class Tokens:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        t = self.text
        while self.pos < len(t):
            c = t[self.pos]
            if c in " \t\r\n":
                self.pos += 1
            elif c == "\\" and self.pos + 1 < len(t) and t[self.pos + 1] == "\n":
                self.pos += 2
            elif c == "#":
                while self.pos < len(t) and t[self.pos] != "\n":
                    self.pos += 1
            else:
                break

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, c):
        if self.peek() != c:
            ctx = self.text[self.pos:self.pos + 40]
            raise ValueError(f"expected {c!r} at {self.pos}: {ctx!r}")
        self.pos += 1


def parse_value(tk):
    c = tk.peek()
    if c == "[":
        return parse_list(tk)
    if c == "(":
        return parse_perm(tk)
    if c == '"':
        return parse_string(tk)
    m = re.compile(r"-?\d+").match(tk.text, tk.pos)
    if m:
        tk.pos = m.end()
        return int(m.group(0))
    m = re.compile(r"true|false|fail").match(tk.text, tk.pos)
    if m:
        tk.pos = m.end()
        return m.group(0)
    raise ValueError(f"unexpected token at {tk.pos}: {tk.text[tk.pos:tk.pos + 40]!r}")


def parse_list(tk):
    tk.expect("[")
    out = []
    if tk.peek() == "]":
        tk.pos += 1
        return out
    while True:
        if tk.peek() == ",":
            out.append(None)
            tk.pos += 1
            continue
        out.append(parse_value(tk))
        c = tk.peek()
        if c == ",":
            tk.pos += 1
            continue
        tk.expect("]")
        return out


def parse_perm(tk):
    cycles = []
    while tk.peek() == "(":
        tk.pos += 1
        cyc = []
        while tk.peek() != ")":
            m = re.compile(r"\d+").match(tk.text, tk.pos)
            if not m:
                raise ValueError(f"bad cycle at {tk.pos}")
            tk.pos = m.end()
            cyc.append(int(m.group(0)))
            if tk.peek() == ",":
                tk.pos += 1
        tk.pos += 1
        if cyc:
            cycles.append(cyc)
        # a permutation continues only when the next char is '(' with no comma
        save = tk.pos
        if tk.peek() != "(":
            tk.pos = save
            break
    return ("perm", cycles)


def parse_string(tk):
    tk.expect('"')
    t = tk.text
    buf = []
    while t[tk.pos] != '"':
        if t[tk.pos] == "\\":
            if t[tk.pos + 1] == "\n":
                tk.pos += 2
                continue
            buf.append(t[tk.pos + 1])
            tk.pos += 2
            continue
        buf.append(t[tk.pos])
        tk.pos += 1
    tk.pos += 1
    return "".join(buf)


ASSIGN = re.compile(
    r"^(TRANSGRP|TRANSPROPERTIES|TRANSSIZES)(?:\[(\d+)\])?(?:\{\[(\d+)\.\.(\d+)\]\})?\s*:=",
    re.M,
)


def read_assignments(text):
    """Yield (name, degree|None, start|None, value) for every list assignment."""
    for m in ASSIGN.finditer(text):
        tk = Tokens(text)
        tk.pos = m.end()
        if tk.peek() != "[":
            continue
        value = parse_list(tk)
        deg = int(m.group(2)) if m.group(2) else None
        start = int(m.group(3)) if m.group(3) else None
        yield m.group(1), deg, start, value


def load(path):
    opener = gzip.open if path.endswith(".gz") else open
    with opener(path, "rt", encoding="latin-1") as fh:
        # GAP continues long tokens across lines with a trailing backslash
        return fh.read().replace("\\\n", "")


def collect(root, lo, hi):
    groups = {}
    props = {}
    sizes = {}

    def put(table, deg, start, value):
        slot = table.setdefault(deg, {})
        base = start if start is not None else 1
        for off, v in enumerate(value):
            if v is not None:
                slot[base + off] = v

    paths = []
    lib = os.path.join(root, "lib", "trans.grp")
    if os.path.exists(lib):
        paths.append(lib)
    data = os.path.join(root, "data")
    if os.path.isdir(data):
        for f in sorted(os.listdir(data)):
            m = re.match(r"trans(\d+)[a-z]*\.grp", f)
            if m and lo <= int(m.group(1)) <= hi:
                paths.append(os.path.join(data, f))
    for path in paths:
        for name, deg, start, value in read_assignments(load(path)):
            if deg is None:
                # whole-library list indexed by degree (lib/trans.grp)
                for d, per in enumerate(value, start=1):
                    if per:
                        put(groups if name == "TRANSGRP" else props, d, None, per)
                continue
            if name == "TRANSGRP":
                put(groups, deg, start, value)
            elif name == "TRANSPROPERTIES":
                put(props, deg, start, value)
            else:
                put(sizes, deg, start, value)
    return groups, props, sizes


def fmt_perm(p):
    _, cycles = p
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x) for x in c) + ")" for c in cycles)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--transgrp", required=True, help="transgrp package directory")
    ap.add_argument("--degrees", default="2..16", help="inclusive range A..B")
    args = ap.parse_args()
    lo, hi = (int(x) for x in args.degrees.split(".."))
    groups, props, sizes = collect(args.transgrp, lo, hi)
    out = sys.stdout
    out.write("# Transitive permutation groups of degree %d..%d, one per line.\n" % (lo, hi))
    out.write("# Generators exported from the GAP transitive groups library\n")
    out.write("# (Hulpke; Conway-Hulpke-McKay for degrees <= 15).\n")
    out.write("# Format: n i : gen ; gen ; ...   # order=<group order>\n")
    for n in range(lo, hi + 1):
        entries = groups.get(n, {})
        if not entries:
            raise SystemExit(f"degree {n} not found under {args.transgrp}")
        count = max(entries)
        if sorted(entries) != list(range(1, count + 1)):
            raise SystemExit(f"degree {n}: gaps in group indices")
        out.write(f"# degree {n}: {count} groups\n")
        for i in range(1, count + 1):
            entry = entries[i]
            gens = [g for g in entry if isinstance(g, tuple)]
            order = None
            if i in props.get(n, {}):
                order = props[n][i][0]
            elif i in sizes.get(n, {}):
                order = sizes[n][i]
            line = f"{n} {i} : " + " ; ".join(fmt_perm(g) for g in gens)
            if order is not None:
                line += f"   # order={order}"
            out.write(line + "\n")


if __name__ == "__main__":
    main()
