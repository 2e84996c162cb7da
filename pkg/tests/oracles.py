"""Independent reference computations used as test oracles.

None of these share code paths with the package: roots come from root
strings instead of reflection closure, Weyl orders from orbits of a regular
weight instead of permutation closure.
"""

from collections import deque


def positive_roots_by_strings(cartan):
    """Positive roots via alpha-strings: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0."""
    n = len(cartan)

    def pairing(beta, i):
        return sum(cartan[i][j] * beta[j] for j in range(n))

    simple = [tuple(int(i == k) for i in range(n)) for k in range(n)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(n):
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                if p - pairing(beta, i) > 0:
                    up = tuple(b + (j == i) for j, b in enumerate(beta))
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return roots


def all_roots_by_strings(cartan):
    pos = positive_roots_by_strings(cartan)
    return pos | {tuple(-x for x in r) for r in pos}


def weyl_order_by_regular_orbit(cartan):
    """|W| as the orbit size of rho = (1, ..., 1) in fundamental-weight coordinates."""
    n = len(cartan)

    def s(lam, k):
        c = lam[k]
        # alpha_k in weight coordinates is column k of the Cartan matrix
        return tuple(lam[i] - c * cartan[i][k] for i in range(n))

    start = (1,) * n
    seen = {start}
    q = deque([start])
    while q:
        lam = q.popleft()
        for k in range(n):
            mu = s(lam, k)
            if mu not in seen:
                seen.add(mu)
                q.append(mu)
    return len(seen)


CLOSED_FORM_COUNTS = {"A1": 2, "A2": 6, "B2": 8, "C2": 8, "G2": 12, "E6-bourbaki": 72}
CLOSED_FORM_WEYL = {"A1": 2, "A2": 6, "B2": 8, "C2": 8, "G2": 12, "E6-bourbaki": 51840}
