"""Independent combinatorial oracle: Littlewood-Richardson numbers by direct
skew-tableau enumeration, partition dictionaries for Grassmannian and
Lagrangian-Grassmannian Schubert cells, and the multiplicity-one scaling
check c = 1  =>  c stays 1 under simultaneous stretching.

The tableau counter is deliberately free of any polynomial or
divided-difference machinery so it can certify the cup-product engine.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .weyl import minimal_coset_reps


def normalize(parts):
    """Weakly decreasing tuple with trailing zeros stripped."""
    p = tuple(int(x) for x in parts)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise ValueError(f"{parts!r} is not weakly decreasing")
    if any(x < 0 for x in p):
        raise ValueError(f"{parts!r} has negative parts")
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def is_strict(parts):
    p = normalize(parts)
    return all(p[i] > p[i + 1] for i in range(len(p) - 1))


def conjugate(parts):
    p = normalize(parts)
    if not p:
        return ()
    return tuple(sum(1 for x in p if x > j) for j in range(p[0]))


def complement(parts, rows, cols):
    """(cols - p_rows, ..., cols - p_1) inside the rows x cols box."""
    p = normalize(parts)
    if len(p) > rows or (p and p[0] > cols):
        raise ValueError(f"{parts!r} does not fit in a {rows}x{cols} box")
    full = p + (0,) * (rows - len(p))
    return normalize(tuple(cols - x for x in reversed(full)))


def partitions_in_box(rows, cols):
    """All partitions with at most `rows` parts, each at most `cols`."""
    out = []

    def rec(prefix, maxpart):
        out.append(normalize(prefix))
        if len(prefix) == rows:
            return
        for p in range(min(maxpart, cols), 0, -1):
            rec(prefix + (p,), p)

    rec((), cols)
    return sorted(set(out), key=lambda p: (sum(p), p))


def strict_partitions_max(l):
    """All strictly decreasing partitions with parts <= l."""
    out = []
    for r in range(l + 1):
        for combo in combinations(range(l, 0, -1), r):
            out.append(tuple(combo))
    return sorted(out, key=lambda p: (sum(p), p))


def lr_coefficient(lam, mu, nu):
    """c^nu_{lam,mu}: number of LR skew tableaux of shape nu/lam, content mu
    (weakly increasing rows, strictly increasing columns, reverse reading
    word a lattice word)."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    if sum(nu) != sum(lam) + sum(mu):
        return 0
    if len(lam) > len(nu) or any(lam[i] > nu[i] for i in range(len(lam))):
        return 0
    if not mu:
        return 1
    rows = len(nu)
    lam_full = lam + (0,) * (rows - len(lam))
    cells = []  # reverse reading order: top row to bottom, right to left
    for i in range(rows):
        for j in range(nu[i] - 1, lam_full[i] - 1, -1):
            cells.append((i, j))
    nvals = len(mu)
    filling = {}
    counts = [0] * (nvals + 1)
    total = 0

    def rec(pos):
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        i, j = cells[pos]
        right = filling.get((i, j + 1))
        above = filling.get((i - 1, j))  # None when the cell above sits in lam
        above_in_skew = i > 0 and j >= lam_full[i - 1]
        hi = right if right is not None else nvals
        lo = (above + 1) if (above_in_skew and above is not None) else 1
        for t in range(lo, hi + 1):
            if counts[t] >= mu[t - 1]:
                continue
            if t > 1 and counts[t - 1] <= counts[t]:
                continue
            filling[(i, j)] = t
            counts[t] += 1
            rec(pos + 1)
            counts[t] -= 1
        filling.pop((i, j), None)

    rec(0)
    return total


def gl_dimension(lam, r):
    """dim of the irreducible GL(r) representation with highest weight lam."""
    lam = normalize(lam)
    if len(lam) > r:
        raise ValueError(f"{lam!r} has more than {r} parts")
    full = lam + (0,) * (r - len(lam))
    num = Fraction(1)
    for i in range(r):
        for j in range(i + 1, r):
            num *= Fraction(full[i] - full[j] + j - i, j - i)
    assert num.denominator == 1
    return int(num)


def fulton_check(lam, mu, nu, n_max):
    """If c^nu_{lam,mu} = 1, verify c^{n nu}_{n lam, n mu} = 1 up to n_max."""
    lam, mu, nu = normalize(lam), normalize(mu), normalize(nu)
    c1 = lr_coefficient(lam, mu, nu)
    report = {"lam": lam, "mu": mu, "nu": nu, "c": c1,
              "applicable": c1 == 1, "scaled": {}, "violations": []}
    if c1 != 1:
        return report
    for n in range(2, n_max + 1):
        cn = lr_coefficient(tuple(n * x for x in lam), tuple(n * x for x in mu),
                            tuple(n * x for x in nu))
        report["scaled"][n] = cn
        if cn != 1:
            report["violations"].append(n)
    return report


def fulton_sweep(rows, cols, n_max):
    """Exhaustive scan of the box: every triple with c = 1 is stretch-checked."""
    box = partitions_in_box(rows, cols)
    checked = 0
    violations = []
    for lam in box:
        for mu in box:
            for nu in box:
                rep = fulton_check(lam, mu, nu, n_max)
                if rep["applicable"]:
                    checked += 1
                    if rep["violations"]:
                        violations.append(rep)
    return {"rows": rows, "cols": cols, "n_max": n_max,
            "box_size": len(box), "checked": checked, "violations": violations}


# ---------------------------------------------------------------------------
# Schubert-cell dictionaries


def _word_from_oneline(perm):
    """Reduced word (1-based) for a permutation given in one-line notation."""
    p = list(perm)
    rev = []
    while True:
        i = next((i for i in range(len(p) - 1) if p[i] > p[i + 1]), None)
        if i is None:
            break
        p[i], p[i + 1] = p[i + 1], p[i]
        rev.append(i + 1)
    return tuple(reversed(rev))


def grassmannian_table(R, P):
    """Coset table for Gr(r, n): type A_{n-1} with only alpha_r crossed."""
    if R.type_letter != "A" or len(P.crossed) != 1:
        raise ValueError("Grassmannian dictionary needs type A with one crossed node")
    return minimal_coset_reps(R, P)


def grassmannian_cell(ct, lam):
    """The W^P element whose Schubert cell has dimension |lam|.

    lam must fit in the r x (n-r) box, r the crossed node of Gr(r, n).
    """
    P = ct.parabolic
    r = P.crossed[0]
    n = P.system.rank + 1
    k = n - r
    lam = normalize(lam)
    if len(lam) > r or (lam and lam[0] > k):
        raise ValueError(f"partition {lam!r} does not fit in the {r}x{k} box")
    full = lam + (0,) * (r - len(lam))
    head = [full[r - i] + i for i in range(1, r + 1)]
    tail = sorted(set(range(1, n + 1)) - set(head))
    w = ct.wg.from_word(_word_from_oneline(head + tail))
    w = ct.canonical(w)
    assert w.length == sum(lam)
    return w


def grassmannian_bijection(ct, lam):
    """Partition in P_k(r) -> the codimension-|lam| Schubert basis index."""
    return ct.dual[grassmannian_cell(ct, lam)]


def grassmannian_partition(ct, w):
    """Inverse of grassmannian_bijection."""
    P = ct.parabolic
    r = P.crossed[0]
    k = P.system.rank + 1 - r
    for lam in partitions_in_box(r, k):
        if grassmannian_bijection(ct, lam) == w:
            return lam
    raise ValueError(f"{w!r} not indexed by the {r}x{k} box")


def lagrangian_table(R, P):
    """Coset table for LG(l, 2l): type C_l with only alpha_l crossed."""
    if R.type_letter != "C" or P.crossed != (R.rank,):
        raise ValueError("Lagrangian dictionary needs type C with the last node crossed")
    return minimal_coset_reps(R, P)


def _negated_values(ct, w):
    """Indices j with w(e_j) a negative coordinate vector (type C)."""
    l = ct.parabolic.system.rank
    out = set()
    for i in range(1, l + 1):
        f = tuple((1 if t == i - 1 else 0) - (1 if t == i - 2 and i >= 2 else 0)
                  for t in range(l))
        img = ct.wg.act_weight(w, f)
        x = [sum(img[t] for t in range(m, l)) for m in range(l)]
        nz = [(m + 1, x[m]) for m in range(l) if x[m]]
        assert len(nz) == 1 and abs(nz[0][1]) == 1
        if nz[0][1] < 0:
            out.add(nz[0][0])
    return frozenset(out)


def lagrangian_cell(ct, a):
    """The W^P element whose Schubert cell has dimension |a|.

    a is a strict partition with parts <= l; the cell is the coset whose
    negated coordinates are {l+1-a_i}.
    """
    l = ct.parabolic.system.rank
    a = normalize(a)
    if not is_strict(a) or (a and a[0] > l):
        raise ValueError(f"{a!r} is not a strict partition with parts <= {l}")
    want = frozenset(l + 1 - x for x in a)
    if not hasattr(ct, "_negset_index"):
        ct._negset_index = {_negated_values(ct, w): w for w in ct.elements}
    w = ct._negset_index[want]
    assert w.length == sum(a)
    return w


def lagrangian_bijection(ct, a):
    """Strict partition -> the codimension-|a| Schubert basis index."""
    return ct.dual[lagrangian_cell(ct, a)]


def lagrangian_partition(ct, w):
    """Inverse of lagrangian_bijection."""
    l = ct.parabolic.system.rank
    for a in strict_partitions_max(l):
        if lagrangian_bijection(ct, a) == w:
            return a
    raise ValueError(f"{w!r} not indexed by strict partitions")
