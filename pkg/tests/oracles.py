"""Independent reference computations used by the tests.

Nothing here calls into the package's grouping, Min-term, elimination or
allocation code: each function is a direct transcription of the defining
formula on plain lists of Fractions.
"""

from fractions import Fraction
from itertools import combinations, permutations, product


def f_star_literal(W, sigma):
    """The three-case F* formula, read straight off the definition."""
    m, n = len(W), len(W[0])
    preferred = set(sigma)
    F = [[None] * n for _ in range(m)]
    for i in range(m):
        for j in range(1, n + 1):
            if j not in preferred:
                F[i][j - 1] = Fraction(1, m)
                continue
            group = [r for r in range(m) if sigma[r] == j]
            outside = [W[r][j - 1] for r in range(m) if r not in group]
            if sigma[i] == j:
                if outside:
                    extra = (m - len(group)) * min(outside) / len(group)
                else:
                    extra = Fraction(0)
                F[i][j - 1] = W[i][j - 1] + extra
            else:
                F[i][j - 1] = W[i][j - 1] - min(outside)
    return [tuple(row) for row in F]


def minimal_witnesses_brute_force(W, sigma):
    """All consumers i with w_{i,j_t} = min over non-preferrers of j_t, for every j_t != sigma(i)."""
    m = len(W)
    found = []
    for i in range(m):
        ok = True
        for jt in set(sigma):
            if jt == sigma[i]:
                continue
            floor = min(W[r][jt - 1] for r in range(m) if sigma[r] != jt)
            if W[i][jt - 1] != floor:
                ok = False
        if ok:
            found.append(i + 1)
    return found


def _sign(perm):
    inversions = sum(1 for a, b in combinations(range(len(perm)), 2) if perm[a] > perm[b])
    return -1 if inversions % 2 else 1


def det_leibniz(A):
    n = len(A)
    total = Fraction(0)
    for perm in permutations(range(n)):
        term = Fraction(_sign(perm))
        for r in range(n):
            term *= A[r][perm[r]]
        total += term
    return total


def cramer(A, b):
    """Solve a square system by Cramer's rule; None when singular."""
    d = det_leibniz(A)
    if d == 0:
        return None
    n = len(A)
    x = []
    for c in range(n):
        Ac = [[b[r] if k == c else A[r][k] for k in range(n)] for r in range(n)]
        x.append(det_leibniz(Ac) / d)
    return tuple(x)


def price_system_rows(W, F, sigma):
    """Rows (f_i - omega_i) on the preferred commodities, plus the ones row."""
    preferred = list(dict.fromkeys(sigma))
    A = [[F[i][j - 1] - W[i][j - 1] for j in preferred] for i in range(len(W))]
    A.append([Fraction(1)] * len(preferred))
    b = [Fraction(0)] * len(W) + [Fraction(1)]
    return preferred, A, b


def square_subsystem_solutions(A, b):
    """Cramer solutions of every nonsingular square subsystem of the overdetermined A x = b."""
    k = len(A[0])
    out = []
    for rows in combinations(range(len(A)), k):
        x = cramer([A[r] for r in rows], [b[r] for r in rows])
        if x is not None:
            out.append(x)
    return out


def grid_values(max_den=4):
    return sorted({Fraction(a, d) for d in range(1, max_den + 1) for a in range(d + 1)})


def stochastic_columns(m, max_den=4):
    return [c for c in product(grid_values(max_den), repeat=m) if sum(c) == 1]
