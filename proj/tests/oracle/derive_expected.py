#!/usr/bin/env python3
"""Independent oracle for the frozen dimension values used by the C++ tests.

Builds every algebra from matrix commutators (not from transcribed tables),
forms the linear systems with sympy over QQ and prints the ranks. Run once
by hand; the numbers it prints are pasted into tests/*.cpp.
"""
from fractions import Fraction as F
import itertools
import sympy as sp
from sympy.polys.matrices import DomainMatrix
from sympy import QQ


def mat_unit(n, i, j):
    m = sp.zeros(n, n)
    m[i, j] = 1
    return m


def from_matrices(basis):
    """Structure constants of span(basis) under the commutator."""
    n = len(basis)
    flat = sp.Matrix([[b[k] for k in range(b.rows * b.cols)] for b in basis]).T
    c = {}
    for i, j in itertools.product(range(n), repeat=2):
        comm = basis[i] * basis[j] - basis[j] * basis[i]
        rhs = sp.Matrix([comm[k] for k in range(comm.rows * comm.cols)])
        sol = flat.solve_least_squares(rhs) if n else sp.Matrix([])
        assert flat * sol == rhs
        c[(i, j)] = [sp.Rational(v) for v in sol]
    return n, c


def sl2():
    e, f, h = mat_unit(2, 0, 1), mat_unit(2, 1, 0), mat_unit(2, 0, 0) - mat_unit(2, 1, 1)
    return from_matrices([e, f, h])


def sl3():
    E = lambda i, j: mat_unit(3, i - 1, j - 1)
    return from_matrices([E(1, 2), E(1, 3), E(2, 1), E(2, 3), E(3, 1), E(3, 2),
                          E(1, 1) - E(2, 2), E(2, 2) - E(3, 3)])


def sl2sl2():
    n, c = sl2()
    N = 2 * n
    cc = {(i, j): [0] * N for i in range(N) for j in range(N)}
    for o in (0, n):
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    cc[(o + i, o + j)][o + k] = c[(i, j)][k]
    return N, cc


def from_table(n, entries):
    c = {(i, j): [0] * n for i in range(n) for j in range(n)}
    for (i, j), v in entries.items():
        for k, x in v.items():
            c[(i, j)][k] += x
            c[(j, i)][k] -= x
    return n, c


def r31():
    return from_table(3, {(0, 1): {1: 1}, (0, 2): {2: 1}})


def heis():
    return from_table(3, {(0, 1): {2: 1}})


def abelian(n):
    return from_table(n, {})


def rank(rows, ncols):
    if not rows:
        return 0
    return DomainMatrix([[QQ.from_sympy(sp.Rational(x)) for x in r] for r in rows], (len(rows), ncols), QQ).rank()


def br_vec(n, c, x, y):
    out = [0] * n
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] == 0:
                continue
            for k in range(n):
                out[k] += x[i] * y[j] * c[(i, j)][k]
    return out


def phi_var(n, a, b):
    """coefficient vector of phi_{ab} (row a, col b) in n^2 unknowns."""
    return a * n + b


def d_dim(alg, w):
    n, c = alg
    al, be, ga = w
    rows = []
    # unknown phi[a][b]: phi(e_b) = sum_a phi[a][b] e_a
    for i in range(n):
        for j in range(n):
            # alpha*phi([ei,ej]) - beta*[phi ei, ej] - gamma*[ei, phi ej], component k
            for k in range(n):
                row = [0] * (n * n)
                for m in range(n):
                    row[phi_var(n, k, m)] += al * c[(i, j)][m]
                for a in range(n):
                    row[phi_var(n, a, i)] -= be * c[(a, j)][k]
                    row[phi_var(n, a, j)] -= ga * c[(i, a)][k]
                rows.append(row)
    return n * n - rank(rows, n * n)


def proj_dim(alg, kind):
    """dim of phi-projection of QDer (kind='q') or GDer (kind='g') solution space."""
    n, c = alg
    nn = n * n
    blocks = 2 if kind == 'q' else 3
    N = blocks * nn
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [0] * N
                tau_off = (blocks - 1) * nn
                for m in range(n):
                    row[tau_off + phi_var(n, k, m)] += c[(i, j)][m]
                sig_off = 0 if kind == 'q' else nn
                for a in range(n):
                    row[phi_var(n, a, i)] -= c[(a, j)][k]
                    row[sig_off + phi_var(n, a, j)] -= c[(i, a)][k]
                rows.append(row)
    # dim proj onto phi = dim(sol) - dim(sol ∩ {phi=0}) ; sol∩{phi=0} = kernel of rows restricted to other blocks
    full = N - rank(rows, N)
    rest = [r[nn:] for r in rows]
    kernel_rest = (N - nn) - rank(rest, N - nn)
    return full - kernel_rest


def ad(n, c, x):
    return sp.Matrix(n, n, lambda a, b: br_vec(n, c, x, [1 if t == b else 0 for t in range(n)])[a])


def invariants(alg):
    n, c = alg
    E = [[1 if t == i else 0 for t in range(n)] for i in range(n)]

    def span_bracket(U, V):
        vs = [br_vec(n, c, u, v) for u in U for v in V]
        if not vs:
            return []
        M = sp.Matrix(vs)
        R, piv = M.rref()
        return [list(R.row(i)) for i in range(len(piv))]
    ds = [n]
    cur = E
    while True:
        nxt = span_bracket(cur, cur)
        if len(nxt) == len(cur):
            break
        ds.append(len(nxt))
        cur = nxt
        if not cur:
            break
    lc = [n]
    cur = E
    while True:
        nxt = span_bracket(E, cur)
        if len(nxt) == len(cur):
            break
        lc.append(len(nxt))
        cur = nxt
        if not cur:
            break
    ads = [ad(n, c, e) for e in E]
    K = sp.Matrix(n, n, lambda i, j: (ads[i] * ads[j]).trace())
    stacked = sp.Matrix.vstack(*ads) if n else sp.zeros(0, 0)
    center = n - stacked.rank() if n else 0
    traces = [a.trace() for a in ads]
    return dict(derived=ds, lower=lc, center=center, killing_rank=K.rank(), K=K, traces=traces)


def split_g(alg, A_idx, B_idx):
    """bracket {a,a'} - {b,b'} for coordinate splittings."""
    n, c = alg
    cg = {}
    for i in range(n):
        for j in range(n):
            x = [0] * n
            ia, ja = i in A_idx, j in A_idx
            if ia and ja:
                x = c[(i, j)]
            elif not ia and not ja:
                x = [-v for v in c[(i, j)]]
            cg[(i, j)] = x
    return n, cg


if __name__ == '__main__':
    algs = {'sl2': sl2(), 'sl3': sl3(), 'sl2+sl2': sl2sl2(), 'r31': r31(), 'heis': heis(), 'ab2': abelian(2)}
    half = sp.Rational(1, 2)
    weights = [(0, 0, 0), (1, 0, 0), (0, 1, -1), (1, 1, -1), (0, 1, 0), (0, 1, 1), (1, 1, 0),
               (-1, 1, 1), (0, 1, 1), (1, 1, 1), (2, 1, 1), (3, 1, 1), (half, 1, 1), (5, 1, 1),
               (2, 1, 0), (4, 1, 1), (0, 1, 0)]
    for name, alg in algs.items():
        print('==', name)
        for w in weights:
            print('  D', tuple(str(x) for x in w), d_dim(alg, w))
        print('  QDer proj', proj_dim(alg, 'q'), 'GDer proj', proj_dim(alg, 'g'))
        inv = invariants(alg)
        print('  inv', {k: v for k, v in inv.items() if k != 'K'})
    print('sl2 Killing', invariants(algs['sl2'])['K'].tolist())
    g = split_g(algs['sl3'], {0, 1, 3, 6, 7}, {2, 4, 5})
    print('sl3 split g', {k: v for k, v in invariants(g).items() if k != 'K'})
    g = split_g(algs['sl2'], {0, 2}, {1})
    print('sl2 split g', {k: v for k, v in invariants(g).items() if k != 'K'})
