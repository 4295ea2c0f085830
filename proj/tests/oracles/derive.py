"""Independent reference values for the unit tests.

Positive roots are built by height using root strings (simply-laced rule:
beta + alpha_i is a root iff (beta, alpha_i) = -1), dimensions from the Weyl
product over that list, and gl dimensions from the hook-content formula.
Run from the repository root; writes tests/data/derived.json.
"""
import json
from fractions import Fraction
from pathlib import Path


def dynkin(kind, n):
    if kind == "E":
        edges = [(1, 3), (3, 4), (4, 5), (2, 4)] + [(k, k + 1) for k in range(5, n)]
    elif kind == "D":
        edges = [(k, k + 1) for k in range(1, n - 1)] + [(n - 2, n)]
    else:
        edges = [(k, k + 1) for k in range(1, n)]
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    return a


def positive_roots(a):
    n = len(a)
    layer = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    roots = list(layer)
    while layer:
        nxt = set()
        for beta in layer:
            for i in range(n):
                ip = sum(beta[j] * a[j][i] for j in range(n))
                if ip == -1:
                    nxt.add(tuple(beta[k] + (1 if k == i else 0) for k in range(n)))
        layer = sorted(nxt)
        roots += layer
    return roots


def weyl_dim(a, lam):
    # simply laced: <lambda + rho, beta^vee> = sum_j m_j (lambda_j + 1)
    num = den = 1
    for beta in positive_roots(a):
        num *= sum(m * (l + 1) for m, l in zip(beta, lam))
        den *= sum(beta)
    return num // den


def hook_content_dim(t):
    n = len(t)
    shift = -min(t) if min(t) < 0 else 0
    lam = [x + shift for x in t]
    dim = Fraction(1)
    for i, row in enumerate(lam):
        for j in range(row):
            arm = row - j - 1
            leg = sum(1 for k in range(i + 1, n) if lam[k] > j)
            dim *= Fraction(n + j - i, arm + leg + 1)
    return int(dim)


def main():
    out = {"root_counts": {}, "height_profiles": {}, "weyl_dimensions": {}, "gl_dims": [], "layers": {}}
    for kind, n in [("D", 4), ("D", 5), ("D", 6), ("D", 7), ("D", 8), ("E", 6), ("E", 7), ("E", 8), ("A", 2)]:
        a = dynkin(kind, n)
        roots = positive_roots(a)
        name = f"{kind}{n}"
        out["root_counts"][name] = len(roots)
        heights = {}
        for r in roots:
            heights[sum(r)] = heights.get(sum(r), 0) + 1
        out["height_profiles"][name] = [heights[h] for h in sorted(heights)]
        dims = []
        for k in range(n):
            lam = [1 if j == k else 0 for j in range(n)]
            dims.append(weyl_dim(a, lam))
        out["weyl_dimensions"][name] = dims
    for t in [(1, 1, 0), (2, 1, 1, 1, 1), (0, 0, 0, 0, -1), (2, 2, 2, 2, 1), (3, 3, 3, 2, 2), (4, 4, 4, 4, 3),
              (5, 4, 3, 3, 3, 2, 2, 2), (2, 1, 1), (1, 0, 0), (1, 1, 1, 1, 1, 1, 1, 0)]:
        out["gl_dims"].append({"t": list(t), "dim": hook_content_dim(t)})
    # E7 grading at node 5, lambda = Lambda_7: product of gl(5) and gl(3) dims of the printed rows
    rows = [((0, 0, 0, 0, 0), (0, 0, -1)), ((1, 1, 0, 0, 0), (0, 0, 0)), ((1, 1, 1, 1, 0), (1, 0, 0)),
            ((2, 1, 1, 1, 1), (1, 1, 0)), ((2, 2, 2, 1, 1), (1, 1, 1)), ((2, 2, 2, 2, 2), (2, 1, 1))]
    out["layers"]["E7-a5-V7"] = [hook_content_dim(t1) * hook_content_dim(t3) for t1, t3 in rows]
    Path("tests/data/derived.json").write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
