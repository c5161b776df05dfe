"""Reference implementations that share no code with the package.

Weyl groups are modelled by their reflection representation on the root
lattice, built straight from the Cartan matrix; type A is also modelled by
permutations.  Everything here is deliberately naive.
"""

from itertools import combinations, permutations


def _reflection(cartan, j):
    # s_j(beta) = beta - <beta, alpha_j^vee> alpha_j in simple-root coordinates
    n = len(cartan)
    m = [[int(r == c) for c in range(n)] for r in range(n)]
    for c in range(n):
        m[j][c] -= cartan[j][c]
    return tuple(map(tuple, m))


def _mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(n)) for c in range(n)) for r in range(n))


def _eye(n):
    return tuple(tuple(int(r == c) for c in range(n)) for r in range(n))


def word_matrix(cartan, word):
    m = _eye(len(cartan))
    for j in word:
        m = _mul(m, _reflection(cartan, j - 1))
    return m


def group_with_words(cartan):
    """Every element of a finite Weyl group with one reduced word, by BFS."""
    start = _eye(len(cartan))
    found = {start: ()}
    frontier = [start]
    while frontier:
        nxt = []
        for m in frontier:
            for j in range(len(cartan)):
                p = _mul(m, _reflection(cartan, j))
                if p not in found:
                    found[p] = found[m] + (j + 1,)
                    nxt.append(p)
        frontier = nxt
    return found


def subword_products(cartan, word):
    out = set()
    for k in range(len(word) + 1):
        for idx in combinations(range(len(word)), k):
            out.add(word_matrix(cartan, [word[i] for i in idx]))
    return out


def bruhat_by_subwords(cartan):
    """``leq[w][v]`` is True when ``v <= w``: v is a subword product of a reduced word of w."""
    elems = group_with_words(cartan)
    return elems, {w: subword_products(cartan, rw) for w, rw in elems.items()}


# ---- type A_{n-1} as permutations of 0..n-1 ---------------------------------


def perm_from_word(n, word):
    p = list(range(n))
    for j in word:
        p[j - 1], p[j] = p[j], p[j - 1]
    return tuple(p)


def perm_length(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def demazure_perm(n, word):
    p = tuple(range(n))
    for j in word:
        q = list(p)
        q[j - 1], q[j] = q[j], q[j - 1]
        q = tuple(q)
        if perm_length(q) > perm_length(p):
            p = q
    return p


def perm_bruhat_leq(u, w):
    """Tableau criterion: sorted prefixes of u are dominated by those of w."""
    for k in range(1, len(u)):
        a, b = sorted(u[:k]), sorted(w[:k])
        if any(x > y for x, y in zip(a, b)):
            return False
    return True


def all_perms(n):
    return list(permutations(range(n)))


# ---- anticanonical coefficients through coroots ------------------------------


def anticanonical_by_coroots(cartan, word):
    """``r_i + 1`` with ``r_i = <rho, gamma_i^vee>`` and
    ``gamma_i^vee = s_{a_d} ... s_{a_{i+1}} (alpha_{a_i}^vee)`` in coroot coordinates."""
    n = len(cartan)
    out = []
    for i, a in enumerate(word):
        cor = [int(k == a - 1) for k in range(n)]
        for j in word[i + 1 :]:
            # <alpha_j, beta^vee> = sum_k c_k <alpha_j, alpha_k^vee> = sum_k c_k cartan[k][j]
            p = sum(cor[k] * cartan[k][j - 1] for k in range(n))
            cor[j - 1] -= p
        out.append(sum(cor) + 1)
    return out
