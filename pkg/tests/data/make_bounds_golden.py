"""Regenerate bounds_golden.json with sympy, independently of tightpaths.bounds.

    python tests/data/make_bounds_golden.py
"""

import json
from pathlib import Path

import sympy as sp


def golden(kind, n, r, k):
    C = sp.binomial(n, r - 1)
    if kind == "trivial":
        return (k - 1) * C
    if kind == "kalai":
        return sp.Rational(k - 1, r) * C
    if kind == "tight_path":
        if r % 2 == 0:
            return sp.Rational(k - 1, 2) * C
        return sp.Rational(1, 2) * (k + sp.floor(sp.Rational(k - 1, r))) * C
    if kind == "perles":
        return sp.Rational((k - 1) * n, 2) if r == 2 else None
    if kind == "zigzag":
        return sp.Rational((k - 1) * (r - 1), r) * C if r % 2 == 0 else None
    if kind == "stack_leading":
        return (k - 1) * (r - 1) * C if r % 2 == 0 else None
    if kind == "small_k":
        return sp.Rational(k * k, 2 * r) * C if r >= k - 1 else None
    if kind == "odd_improved":
        if r % 2 == 0 or r < 3:
            return None
        a = sp.floor(sp.Rational(k - 1, r))
        b = sp.Rational((r - 1) * (k - 1 - a), 2)
        return sp.expand(sp.Rational(1, r) * (sp.sqrt(a) + sp.sqrt(b)) ** 2 * C)
    raise ValueError(kind)


KINDS = ["trivial", "kalai", "tight_path", "perles", "zigzag", "stack_leading", "small_k", "odd_improved"]


def main():
    table = []
    for n in range(4, 11):
        for r in (2, 3, 4):
            for k in range(1, 7):
                for kind in KINDS:
                    v = golden(kind, n, r, k)
                    table.append({"n": n, "r": r, "k": k, "kind": kind, "value": None if v is None else str(v)})
    out = Path(__file__).with_name("bounds_golden.json")
    out.write_text(json.dumps(table, indent=1) + "\n")
    print(f"wrote {len(table)} rows to {out}")


if __name__ == "__main__":
    main()
