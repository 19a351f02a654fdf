"""The one-dimensional-centre family: exact lattice model and numeric twin.

The exact model is the rational Heisenberg-by-cyclic group carried by a
symplectic pair (see sympmat.GammaA); the numeric model realizes the same
group on the analytic side, with the hyperbolic block on the split plane
and a rotation block per parameter entry.  A conjugating basis ties the two
together and pins down the sign conventions of the antisymmetric form.
"""

from __future__ import annotations

import math

import numpy as np

from .. import salem
from ..errors import ModelMismatch
from ..sympmat import GammaA


def osc1_mul(model, g, h):
    """Multiplication dispatch for either model of the family."""
    if isinstance(model, GammaA):
        return model.mul(g, h)
    if isinstance(model, Osc1Numeric):
        return model.mul(g, h)
    raise ModelMismatch(f"not a one-dimensional-centre model: {model!r}")


class Osc1Numeric:
    """Floating model: elements (z, v, t) with v in R^(2q+2) ~ C^(1+q).

    The t-action is hyperbolic [[cosh, sinh], [sinh, cosh]] on the first
    block and a rotation by t*mu_j on each remaining block; the
    antisymmetric form is <L(.), .>.
    """

    def __init__(self, f, q: int, signs=None, ks=None):
        res = salem.require_member(f)
        self.f = f
        self.q = q
        self.qbar = res.k - 1
        if q < self.qbar:
            raise ValueError("q below the circle-pair count")
        signs = list(signs) if signs is not None else [1] * self.qbar
        ks = (
            list(ks)
            if ks is not None
            else [0] * self.qbar + list(range(1, q - self.qbar + 1))
        )
        if len(signs) != self.qbar or len(ks) != q:
            raise ValueError("signs/offsets length mismatch")
        self.signs = signs
        self.ks = ks
        r = float(res.salem.r.re.mid)
        self.t_prime = math.log(r)
        angles = [float(p.angle.mid) for p in res.salem.unit_pairs]
        self.mu = []
        for j in range(self.qbar):
            self.mu.append((signs[j] * angles[j] + 2 * math.pi * ks[j]) / self.t_prime)
        for j in range(self.qbar, q):
            if ks[j] == 0:
                raise ValueError("trivial entries need a nonzero offset")
            self.mu.append(2 * math.pi * ks[j] / self.t_prime)
        self.dim = 2 * q + 2

    # -- linear data -------------------------------------------------------

    def exp_tl(self, t: float) -> np.ndarray:
        m = np.zeros((self.dim, self.dim))
        ch, sh = math.cosh(t), math.sinh(t)
        m[0:2, 0:2] = [[ch, sh], [sh, ch]]
        for j, mu in enumerate(self.mu):
            c, s = math.cos(t * mu), math.sin(t * mu)
            b = 2 + 2 * j
            m[b : b + 2, b : b + 2] = [[c, -s], [s, c]]
        return m

    def omega_matrix(self) -> np.ndarray:
        m = np.zeros((self.dim, self.dim))
        m[0:2, 0:2] = [[0.0, -1.0], [1.0, 0.0]]
        for j, mu in enumerate(self.mu):
            b = 2 + 2 * j
            m[b : b + 2, b : b + 2] = [[0.0, mu], [-mu, 0.0]]
        return m

    def omega(self, v, w) -> float:
        return float(v @ self.omega_matrix() @ w)

    def eigenvalues_tprime(self) -> np.ndarray:
        return np.linalg.eigvals(self.exp_tl(self.t_prime))

    # -- group law -----------------------------------------------------------

    def identity(self):
        return (0.0, np.zeros(self.dim), 0.0)

    def mul(self, g, h):
        z1, v1, t1 = g
        z2, v2, t2 = h
        tv2 = self.exp_tl(t1) @ v2
        return (z1 + z2 + 0.5 * self.omega(v1, tv2), v1 + tv2, t1 + t2)

    def inv(self, g):
        z, v, t = g
        w = -(self.exp_tl(-t) @ v)
        return (-z, w, -t)

    def random_element(self, rng):
        return (
            rng.uniform(-2, 2),
            np.array([rng.uniform(-2, 2) for _ in range(self.dim)]),
            rng.uniform(-2, 2),
        )


def _companion_eigvec(f, lam: complex) -> np.ndarray:
    """Right eigenvector of the companion matrix for the eigenvalue lam."""
    n = f.degree
    w = np.zeros(n, dtype=complex)
    w[n - 1] = 1.0
    for i in range(n - 1, 0, -1):
        w[i - 1] = lam * w[i] + f.coeffs[i]
    return w


def conjugating_basis(gamma: GammaA, ks=None):
    """(P, numeric) with P A = e^(t' L) P and P^T Omega P = J (floats).

    Entry signs of the numeric model are chosen so that the orientation of
    each rotation block agrees with the abstract form; this is the numeric
    cross-check that pins the sign conventions.
    """
    f, q, qbar = gamma.f, gamma.q, gamma.qbar
    res = salem.require_member(f)
    r = float(res.salem.r.re.mid)
    angles = [float(p.angle.mid) for p in res.salem.unit_pairs]
    J = np.array(gamma.pair.J, dtype=float)
    nfull = gamma.n
    m = 2 * qbar + 2
    lo = nfull - m  # companion block occupies the trailing coordinates

    signs = [1] * qbar
    numeric = Osc1Numeric(f, q, signs=signs, ks=ks)
    # complex eigenvector matrices for the companion block
    lam_real = [r, 1.0 / r]
    lam_pairs = [complex(math.cos(s), math.sin(s)) for s in angles]
    v_abs = np.zeros((m, m), dtype=complex)
    v_abs[:, 0] = _companion_eigvec(f, lam_real[0])
    v_abs[:, 1] = _companion_eigvec(f, lam_real[1])
    for j, lam in enumerate(lam_pairs):
        v_abs[:, 2 + 2 * j] = _companion_eigvec(f, lam)
        v_abs[:, 3 + 2 * j] = np.conj(v_abs[:, 2 + 2 * j])

    def _omega_j_complex(u, w):
        jj = J[lo:, lo:]
        return complex(u @ jj @ w)

    # decide the orientation of each rotation block, flipping the parameter
    # sign when the two forms disagree
    for j in range(qbar):
        w = v_abs[:, 2 + 2 * j]
        ratio_num = _omega_j_complex(w, np.conj(w)).imag
        mu_j = (angles[j]) / numeric.t_prime
        # omega_num(v, conj v) = 2 i mu_j for v = (1, -i) on the block
        if ratio_num / (2 * mu_j) < 0:
            signs[j] = -1
    numeric = Osc1Numeric(f, q, signs=signs, ks=ks)

    p_full = np.zeros((nfull, nfull))
    # identity block pairs map onto the trivial rotation blocks
    for i in range(q - qbar):
        bn = 2 + 2 * (qbar + i)  # numeric block of the (qbar + i)-th entry
        mu = numeric.mu[qbar + i]
        p_full[bn, 2 * i] = 1.0
        p_full[bn + 1, 2 * i + 1] = 1.0 / mu
    # companion block: match eigenvectors with symplectic scaling
    v_num = np.zeros((nfull, m), dtype=complex)
    omega_r = _omega_j_complex(v_abs[:, 0], v_abs[:, 1]).real
    v_num[0, 0], v_num[1, 0] = 1.0, 1.0
    v_num[0, 1], v_num[1, 1] = omega_r / 2.0, -omega_r / 2.0
    for j in range(qbar):
        w = v_abs[:, 2 + 2 * j]
        mu_j = numeric.mu[j]
        ratio = _omega_j_complex(w, np.conj(w)).imag / (2 * mu_j)
        c = math.sqrt(ratio)
        bn = 2 + 2 * j
        vec = np.array([1.0, -1j]) if signs[j] > 0 else np.array([1.0, 1j])
        v_num[bn : bn + 2, 2 + 2 * j] = c * vec
        v_num[bn : bn + 2, 3 + 2 * j] = np.conj(c * vec)
    p_comp = (v_num @ np.linalg.inv(v_abs)).real
    p_full[:, lo:] = p_comp
    return p_full, numeric
