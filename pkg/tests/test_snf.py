import random
from itertools import combinations
from math import gcd, prod

from seifol.snf import cokernel_order, smith_normal_form


def minors_gcd(matrix, k):
    """gcd of all k x k minors, the classical determinantal invariant."""
    m, n = len(matrix), len(matrix[0])
    g = 0
    for rows in combinations(range(m), k):
        for cols in combinations(range(n), k):
            g = gcd(g, _det([[matrix[i][j] for j in cols] for i in rows]))
    return g


def _det(a):
    n = len(a)
    if n == 1:
        return a[0][0]
    return sum((-1) ** j * a[0][j] * _det([row[:j] + row[j + 1 :] for row in a[1:]]) for j in range(n))


def test_known_diagonal():
    assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
    assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]
    assert smith_normal_form([[0, 0], [0, 0]]) == [0, 0]
    assert smith_normal_form([[4]]) == [4]


def test_divisibility_chain_and_minor_invariants():
    rng = random.Random(7)
    for _ in range(120):
        m = rng.randint(1, 4)
        n = rng.randint(1, 4)
        mat = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        diag = smith_normal_form(mat)
        for a, b in zip(diag, diag[1:]):
            if b:
                assert a != 0 and b % a == 0
            # zeros only at the end
            if a == 0:
                assert b == 0
        # d_1 ... d_k = gcd of k x k minors
        running = 1
        for k, d in enumerate(diag, start=1):
            running *= d
            assert running == minors_gcd(mat, k)


def test_cokernel_order():
    # Z^2 / <(2,0),(0,3)> has order 6
    assert cokernel_order([[2, 0], [0, 3]], 2) == 6
    # one relation on two generators leaves a free factor
    assert cokernel_order([[2, 0]], 2) is None
    assert cokernel_order([], 0) == 1
    assert cokernel_order([], 2) is None
    # unimodular: trivial quotient
    assert cokernel_order([[1, 1], [0, 1]], 2) == 1
