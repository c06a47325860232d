#!/usr/bin/env python3
"""Scan prime ranges and print rank verdicts for both curve families.

For p = 1, 9 mod 16 the curve y^2 = x^3 + p*x has rank 0 or 2, and p divides
f_{3(p-1)/8}(0) exactly in the rank-2 case (the converse needs BSD).  For
p = 1 mod 9 the curve x^3 + y^3 = p behaves the same way with index (p-1)/3
and two interchangeable polynomial families a and x.
"""

from rankcrit import scan

print("y^2 = x^3 + p*x for p <= 460:")
print(f"{'p':>5} {'index':>6} {'k':>5} {'residue':>8}  verdict")
for v in scan("Ep", 2, 460):
    verdict = "rank 2 (under BSD)" if v.divisible else "rank 0"
    print(f"{v.p:>5} {v.index:>6} {v.weight_k:>5} {v.residue:>8}  {verdict}")

print()
print("x^3 + y^3 = p for p <= 250 (a-path and x-path must agree):")
rows = scan("Ap", 2, 250)
by_p = {}
for v in rows:
    by_p.setdefault(v.p, {})[v.path] = v
for p, paths in sorted(by_p.items()):
    va, vx = paths["a"], paths["x"]
    tag = "sum of two cubes (rank 2 under BSD)" if va.divisible else "not a sum of two cubes"
    print(f"{p:>5}  a-residue={va.residue:<6} x-residue={vx.residue:<6} {tag}")
