"""Solve an SDPA sparse (.dat-s) file with cvxpy and write an SDPA-style report.

Both standard forms are solved separately:
  primal  min c.x  s.t.  sum_i F_i x_i - F_0 >= 0
  dual    max F_0.Y  s.t.  F_i.Y = c_i,  Y >= 0
Usage: python3 scripts/sdpa_solve.py problem.dat-s [report.out]
"""
import re
import sys

import cvxpy as cp
import numpy as np


def numbers(line):
    """Leading numeric tokens of a line; SDPA allows trailing annotations."""
    out = []
    for t in re.split(r"[\s,{}()]+", line.strip()):
        if not t:
            continue
        try:
            out.append(float(t))
        except ValueError:
            break
    return out


def read_sdpa(path):
    lines = [l for l in open(path) if l.strip() and l[0] not in "\"*"]
    m = int(numbers(lines[0])[0])
    nblock = int(numbers(lines[1])[0])
    if nblock != 1:
        raise SystemExit("only single-block problems are supported")
    n = int(abs(numbers(lines[2])[0]))
    c = np.array(numbers(lines[3])[:m])
    F = [np.zeros((n, n)) for _ in range(m + 1)]
    for line in lines[4:]:
        mat, _blk, i, j, v = numbers(line)
        i, j = int(i) - 1, int(j) - 1
        F[int(mat)][i, j] = v
        F[int(mat)][j, i] = v
    return c, F


def main():
    c, F = read_sdpa(sys.argv[1])
    m, n = len(c), F[0].shape[0]

    Y = cp.Variable((n, n), symmetric=True)
    dual = cp.Problem(cp.Maximize(cp.trace(F[0] @ Y)), [Y >> 0] + [cp.trace(F[i + 1] @ Y) == c[i] for i in range(m)])
    dual.solve(solver=cp.CLARABEL)

    x = cp.Variable(m)
    lmi = sum(x[i] * F[i + 1] for i in range(m)) - F[0]
    primal = cp.Problem(cp.Minimize(c @ x), [(lmi + lmi.T) / 2 >> 0])
    primal.solve(solver=cp.CLARABEL)

    report = (
        f"\"solved with cvxpy {cp.__version__} / CLARABEL\n"
        f"phase.value = {'pdOPT' if dual.status == primal.status == 'optimal' else dual.status}\n"
        f"objValPrimal = {primal.value:+.10e}\n"
        f"objValDual   = {dual.value:+.10e}\n"
    )
    if len(sys.argv) > 2:
        open(sys.argv[2], "w").write(report)
    else:
        sys.stdout.write(report)


if __name__ == "__main__":
    main()
