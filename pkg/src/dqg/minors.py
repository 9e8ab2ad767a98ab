"""Dynamical quantum minors and their expansion identities.

Ordered subsets are increasing tuples of 1-based indices; permutations
are tuples of the values ``1..r`` (``sigma[k-1] = sigma(k)``).
"""

import itertools

from .nfcore import Element
from .scalars import LAM, MU, Field, subset_vector, vneg


def complement(n, I):
    return tuple(k for k in range(1, n + 1) if k not in I)


def hat(n, i):
    return complement(n, (i,))


def subsets(n, r=None):
    sizes = range(n + 1) if r is None else [r]
    return [c for k in sizes for c in itertools.combinations(range(1, n + 1), k)]


def permutations(r):
    return list(itertools.permutations(range(1, r + 1)))


def _check_subset(alg, I):
    if any(not 1 <= i <= alg.n for i in I) or list(I) != sorted(set(I)):
        raise ValueError(f"not an ordered subset of 1..{alg.n}: {I}")


def xi(alg, I, J, rho=None):
    """xi^I_J = mu_r(S(rho,J)^{-1}) sum_sigma mu_l(S(sigma,I))
    t_{i_sigma(1) j_rho(1)} ... t_{i_sigma(r) j_rho(r)}."""
    I, J = tuple(I), tuple(J)
    _check_subset(alg, I)
    _check_subset(alg, J)
    if len(I) != len(J):
        return alg.zero
    r = len(I)
    F = alg.field
    rho = tuple(rho) if rho is not None else tuple(range(1, r + 1))
    cache = alg.__dict__.setdefault("_xi_cache", {})
    key = ("xi", I, J, rho)
    if key in cache:
        return cache[key]
    pre = F.gen_sign(rho, J, MU).inverse()
    terms = []
    for sigma in permutations(r):
        word = tuple(alg.gen(I[sigma[k] - 1], J[rho[k] - 1]) for k in range(r))
        terms.append((pre * F.gen_sign(sigma, I), word))
    out = alg.from_free(terms)
    cache[key] = out
    return out


def eta(alg, I, J, rho=None):
    """eta^I_J = mu_l(S~(rho,I)^{-1}) sum_sigma mu_r(S~(sigma,J))
    t_{i_rho(r) j_sigma(r)} ... t_{i_rho(1) j_sigma(1)}."""
    I, J = tuple(I), tuple(J)
    _check_subset(alg, I)
    _check_subset(alg, J)
    if len(I) != len(J):
        return alg.zero
    r = len(I)
    F = alg.field
    rho = tuple(rho) if rho is not None else tuple(range(1, r + 1))
    pre = F.gen_sign_tilde(rho, I).inverse()
    terms = []
    for sigma in permutations(r):
        word = tuple(alg.gen(I[rho[k] - 1], J[sigma[k] - 1])
                     for k in reversed(range(r)))
        terms.append((pre * F.gen_sign_tilde(sigma, J, MU), word))
    return alg.from_free(terms)


def normalizer(field, I):
    """A(I) = sum_rho prod_{k<l} -h(lam_{i_rho(k)} - lam_{i_rho(l)})."""
    r = len(I)
    total = field.zero
    for rho in permutations(r):
        term = field.one
        for k, l in itertools.combinations(range(r), 2):
            term = term * -field.h(I[rho[k] - 1], I[rho[l] - 1])
        total = total + term
    return total


def normalizer_closed_form(field, r):
    """(-q)^{r(r-1)/2} prod_{k=1}^r (1 - q^{-2k}) / (1 - q^{-2})."""
    q = field.q
    out = (-q) ** (r * (r - 1) // 2)
    for k in range(1, r + 1):
        out = out * (1 - q ** (-2 * k)) / (1 - q ** -2)
    return out


def hall_littlewood_sides(r):
    """Both sides of the zero-partition Hall-Littlewood identity in
    indeterminates x_1..x_r (the LAM bank of a size-r field) and t (tau)."""
    F = Field(r)
    x = [F.var(LAM, i) for i in range(1, r + 1)]
    t = F.tau
    lhs = F.zero
    for sigma in itertools.permutations(range(r)):
        term = F.one
        for i, j in itertools.combinations(range(r), 2):
            a, b = x[sigma[i]], x[sigma[j]]
            term = term * (a - t * b) / (a - b)
        lhs = lhs + term
    rhs = F.one
    for i in range(1, r + 1):
        rhs = rhs * (1 - t ** i) / (1 - t)
    return lhs, rhs


def hall_littlewood_check(r):
    if not 1 <= r <= 5:
        raise ValueError("r must be between 1 and 5")
    lhs, rhs = hall_littlewood_sides(r)
    return lhs == rhs


def _partitions(I, r1):
    for I1 in itertools.combinations(I, r1):
        yield I1, tuple(i for i in I if i not in I1)


def laplace_sides(alg, I, J1, J2, which=1):
    """(lhs, rhs) of the Laplace expansion number ``which``.

    For overlapping J1, J2 the left side is zero by convention.
    """
    F = alg.field
    I, J1, J2 = tuple(I), tuple(J1), tuple(J2)
    if len(J1) + len(J2) != len(I):
        raise ValueError("|J1| + |J2| must equal |I|")
    disjoint = not set(J1) & set(J2)
    J = tuple(sorted(set(J1) | set(J2)))
    rhs = alg.zero
    if which == 1:
        for I1, I2 in _partitions(I, len(J1)):
            c = F.subset_sign(I1, I2)
            rhs = rhs + alg.scalar(c) * xi(alg, I1, J1) * xi(alg, I2, J2)
        lhs = alg.zero
        if disjoint:
            lhs = alg.scalar(F.subset_sign(J1, J2, MU)) * xi(alg, I, J)
    else:
        for I1, I2 in _partitions(I, len(J1)):
            c = F.subset_sign(I2, I1, MU).inverse()
            c = c.shift(MU, vneg(subset_vector(alg.n, I1)))
            rhs = rhs + alg.scalar(c) * xi(alg, J1, I1) * xi(alg, J2, I2)
        lhs = alg.zero
        if disjoint:
            c = F.subset_sign(J2, J1).inverse()
            c = c.shift(LAM, vneg(subset_vector(alg.n, J1)))
            lhs = alg.scalar(c) * xi(alg, J, I)
    return lhs, rhs


def laplace_check(alg, I, J1, J2, which=1):
    lhs, rhs = laplace_sides(alg, I, J1, J2, which)
    return lhs == rhs


def cofactor_sides(alg, i, j, variant):
    """(lhs, rhs) of cofactor expansion ``variant`` (1..4): delta_ij det
    against the sum over k."""
    F = alg.field
    n = alg.n
    t = alg.t
    sc = alg.scalar
    ih = hat(n, i)
    lhs = alg.det() if i == j else alg.zero
    rhs = alg.zero
    for k in range(1, n + 1):
        kh = hat(n, k)
        if variant == 1:
            c = F.subset_sign((k,), kh) / F.subset_sign((i,), ih, MU)
            term = sc(c) * t(k, j) * xi(alg, kh, ih)
        elif variant == 2:
            c = F.subset_sign(ih, (i,)) / F.subset_sign(kh, (k,), MU)
            term = t(j, k) * sc(c) * xi(alg, ih, kh)
        elif variant == 3:
            c = F.subset_sign(kh, (k,)) / F.subset_sign(ih, (i,), MU)
            term = sc(c) * xi(alg, kh, ih) * t(k, j)
        elif variant == 4:
            c = F.subset_sign((i,), ih) / F.subset_sign((k,), kh, MU)
            term = xi(alg, ih, kh) * sc(c) * t(j, k)
        else:
            raise ValueError("variant must be 1..4")
        rhs = rhs + term
    return lhs, rhs


def cofactor_check(alg, i, j, variant):
    lhs, rhs = cofactor_sides(alg, i, j, variant)
    return lhs == rhs


def minor_weight(alg, I, J):
    return subset_vector(alg.n, I), subset_vector(alg.n, J)


def is_homogeneous_of(x, weight):
    return all(x.alg.weights(*m) == weight for m in x.terms)


__all__ = ["xi", "eta", "normalizer", "normalizer_closed_form",
           "hall_littlewood_check", "laplace_check", "cofactor_check",
           "complement", "hat", "subsets", "permutations", "Element"]
