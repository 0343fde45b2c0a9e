"""Brute-force reference computations that share no code with the package."""

import itertools

import numpy as np

PAULI = [
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
]


def charpoly_eigenvalues(m):
    """Roots of det(m - x I) via the Faddeev-LeVerrier recursion."""
    n = m.shape[0]
    coeffs = [1.0 + 0j]
    mk = np.zeros_like(m)
    for k in range(1, n + 1):
        mk = m @ mk + coeffs[-1] * np.eye(n)
        coeffs.append(-np.trace(m @ mk) / k)
    return np.sort(np.roots(coeffs).real)


def ptrace_loops(rho, dims, keep):
    """Partial trace by explicit index enumeration."""
    keep = sorted(keep)
    kd = [dims[i] for i in keep]
    out = np.zeros((int(np.prod(kd)),) * 2, dtype=complex)
    for r in itertools.product(*[range(d) for d in dims]):
        for c in itertools.product(*[range(d) for d in dims]):
            if any(r[i] != c[i] for i in range(len(dims)) if i not in keep):
                continue
            ri = int(np.ravel_multi_index([r[i] for i in keep], kd)) if keep else 0
            ci = int(np.ravel_multi_index([c[i] for i in keep], kd)) if keep else 0
            out[ri, ci] += rho[np.ravel_multi_index(r, dims), np.ravel_multi_index(c, dims)]
    return out


def ptranspose_loops(rho, dims, sub):
    out = np.zeros_like(rho)
    for r in itertools.product(*[range(d) for d in dims]):
        for c in itertools.product(*[range(d) for d in dims]):
            r2, c2 = list(r), list(c)
            for i in sub:
                r2[i], c2[i] = c[i], r[i]
            out[np.ravel_multi_index(r2, dims), np.ravel_multi_index(c2, dims)] = rho[
                np.ravel_multi_index(r, dims), np.ravel_multi_index(c, dims)
            ]
    return out


def entropy_bits(rho):
    ev = np.linalg.eigvalsh(rho)
    ev = ev[ev > 1e-15]
    return float(-np.sum(ev * np.log2(ev)))


def negativity_loops(rho, dims, sub):
    ev = np.linalg.eigvalsh(ptranspose_loops(rho, dims, sub))
    return float(-2 * np.sum(ev[ev < 0]))


def pi_tangle_bruteforce(psi):
    rho = np.outer(psi, psi.conj())
    d = [2, 2, 2]
    total = 0.0
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        n1 = negativity_loops(rho, d, [i])
        nij = negativity_loops(ptrace_loops(rho, d, [i, j]), [2, 2], [0])
        nik = negativity_loops(ptrace_loops(rho, d, [i, k]), [2, 2], [0])
        total += n1**2 - nij**2 - nik**2
    return total / 3


def fibonacci_sphere(n):
    k = np.arange(n) + 0.5
    z = 1 - 2 * k / n
    r = np.sqrt(1 - z * z)
    phi = np.pi * (3 - np.sqrt(5)) * k
    return np.column_stack([r * np.cos(phi), r * np.sin(phi), z])


def _cond_entropy(rho, n):
    """sum_k p_k S(rho_A|k) with explicit 4x4 projectors on B."""
    ns = sum(c * s for c, s in zip(n, PAULI))
    total = 0.0
    for sign in (1, -1):
        proj = np.kron(np.eye(2), (np.eye(2) + sign * ns) / 2)
        post = proj @ rho @ proj
        p = np.trace(post).real
        if p > 1e-14:
            total += p * entropy_bits(ptrace_loops(post / p, [2, 2], [0]))
    return total


def discord_oracle(rho, points=10_000, rounds=40):
    """D(A,B) from a dense Fibonacci grid and a shrinking compass search."""
    best_n, best = None, np.inf
    for n in fibonacci_sphere(points):
        v = _cond_entropy(rho, n)
        if v < best:
            best, best_n = v, n
    step = 0.05
    for _ in range(rounds):
        improved = True
        while improved:
            improved = False
            helper = np.eye(3)[np.argmin(np.abs(best_n))]
            e1 = np.cross(best_n, helper)
            e1 /= np.linalg.norm(e1)
            e2 = np.cross(best_n, e1)
            for d in (e1, -e1, e2, -e2, e1 + e2, e1 - e2, -e1 + e2, -e1 - e2):
                cand = best_n + step * d
                cand /= np.linalg.norm(cand)
                v = _cond_entropy(rho, cand)
                if v < best - 1e-15:
                    best, best_n, improved = v, cand, True
        step /= 2
    s_b = entropy_bits(ptrace_loops(rho, [2, 2], [1]))
    return s_b - entropy_bits(rho) + best


def symplectic_eigenvalues_sq(cov):
    """Symplectic eigenvalues as sqrt of the eigenvalues of -(Omega cov)^2."""
    n = cov.shape[0] // 2
    omega = np.zeros_like(cov)
    for i in range(n):
        omega[2 * i, 2 * i + 1], omega[2 * i + 1, 2 * i] = 1, -1
    m = omega @ cov
    ev = np.sort(np.sqrt(np.abs(np.linalg.eigvals(-m @ m).real)))[::-1]
    return ev[::2]
