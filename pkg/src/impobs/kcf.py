"""Systems given in Kronecker canonical form, and their impulsive solutions.

A pencil ``s E - A`` in canonical form is described by its block data:

* epsilon blocks ``s [I 0] - [0 I]`` of size ``eps x (eps + 1)``,
* a finite Jordan part ``s I - J_f``,
* a nilpotent part ``s J_sigma - I`` with ``J_sigma`` in Jordan form,
* eta blocks ``s [I; 0] - [0; I]`` of size ``(eta + 1) x eta``,

in that order along the diagonal. Only epsilon and sigma coordinates can
carry impulses at the switching time ``t = 0``; impulsive parts are stored as
coefficient stacks ``c0 delta + c1 delta' + c2 delta'' + ...``.

Collecting the epsilon blocks gives ``[I 0] [x1' ; x2'] = [A1 A2] [x1 ; x2]``
with ``A1`` nilpotent and ``x2`` free. For ``x2 = sum_j v_j delta^(j)``,
``j = 0..l``, and ``x_sigma(0-) = v``, the output impulses are

    y[0] = sum_k delta^(k) ( C2 v_k + sum_{j>k} C1 A1^(j-k-1) A2 v_j - C_s J^(k+1) v )

and likewise for ``z`` with ``L`` in place of ``C``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .pencil import DescriptorSystem, InvalidL
from .ratmat import DimensionMismatch, Mat, Scalar, block_diag, hstack, kernel_basis, rank, to_fraction, vstack

Vector = tuple[Fraction, ...]


class NotNilpotent(ValueError):
    pass


def shift_matrix(k: int) -> Mat:
    """``k x k`` nilpotent Jordan block (ones on the superdiagonal)."""
    return Mat([[1 if j == i + 1 else 0 for j in range(k)] for i in range(k)], cols=k)


def jordan_block(eigenvalue: Scalar, k: int) -> Mat:
    lam = to_fraction(eigenvalue)
    return Mat([[lam if j == i else (1 if j == i + 1 else 0) for j in range(k)] for i in range(k)], cols=k)


@dataclass(frozen=True)
class KcfSpec:
    epsilon_sizes: tuple[int, ...] = ()
    finite_jordan: tuple[tuple[Fraction, int], ...] = ()
    sigma_sizes: tuple[int, ...] = ()
    eta_sizes: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "epsilon_sizes", tuple(self.epsilon_sizes))
        object.__setattr__(
            self, "finite_jordan", tuple((to_fraction(lam), k) for lam, k in self.finite_jordan)
        )
        object.__setattr__(self, "sigma_sizes", tuple(self.sigma_sizes))
        object.__setattr__(self, "eta_sizes", tuple(self.eta_sizes))
        if any(e < 0 for e in self.epsilon_sizes) or any(e < 0 for e in self.eta_sizes):
            raise ValueError("epsilon and eta sizes must be >= 0")
        if any(k < 1 for k in self.sigma_sizes) or any(k < 1 for _, k in self.finite_jordan):
            raise ValueError("Jordan block sizes must be >= 1")

    @property
    def n_eps(self) -> int:
        return sum(e + 1 for e in self.epsilon_sizes)

    @property
    def n_f(self) -> int:
        return sum(k for _, k in self.finite_jordan)

    @property
    def n_sigma(self) -> int:
        return sum(self.sigma_sizes)

    @property
    def n_eta(self) -> int:
        return sum(self.eta_sizes)

    @property
    def n(self) -> int:
        return self.n_eps + self.n_f + self.n_sigma + self.n_eta

    @property
    def m(self) -> int:
        return (
            sum(self.epsilon_sizes) + self.n_f + self.n_sigma + sum(e + 1 for e in self.eta_sizes)
        )

    def J_sigma(self) -> Mat:
        return block_diag(*(shift_matrix(k) for k in self.sigma_sizes))

    def pencil(self) -> tuple[Mat, Mat]:
        """``(E, A)`` of the canonical pencil."""
        Es, As = [], []
        for e in self.epsilon_sizes:
            Es.append(hstack(Mat.identity(e), Mat.zeros(e, 1)))
            As.append(hstack(Mat.zeros(e, 1), Mat.identity(e)))
        for lam, k in self.finite_jordan:
            Es.append(Mat.identity(k))
            As.append(jordan_block(lam, k))
        for k in self.sigma_sizes:
            Es.append(shift_matrix(k))
            As.append(Mat.identity(k))
        for e in self.eta_sizes:
            Es.append(vstack(Mat.identity(e), Mat.zeros(1, e)))
            As.append(vstack(Mat.zeros(1, e), Mat.identity(e)))
        return block_diag(*Es), block_diag(*As)


@dataclass(frozen=True)
class KcfSystem:
    spec: KcfSpec
    C: Mat
    L: Mat

    def __post_init__(self):
        n = self.spec.n
        if n < 1:
            raise DimensionMismatch("the canonical pencil has no columns")
        if self.C.cols != n:
            raise DimensionMismatch(f"C has {self.C.cols} columns, the blocks give n = {n}")
        if self.L.cols != n:
            raise DimensionMismatch(f"L has {self.L.cols} columns, the blocks give n = {n}")

    @property
    def n(self) -> int:
        return self.spec.n

    @property
    def p(self) -> int:
        return self.C.rows

    @property
    def r(self) -> int:
        return self.L.rows

    def sigma_columns(self) -> range:
        start = self.spec.n_eps + self.spec.n_f
        return range(start, start + self.spec.n_sigma)

    @property
    def C_sigma(self) -> Mat:
        return self.C.submatrix(range(self.p), self.sigma_columns())

    @property
    def L_sigma(self) -> Mat:
        return self.L.submatrix(range(self.r), self.sigma_columns())


@dataclass(frozen=True)
class EpsilonPartition:
    A1: Mat
    A2: Mat
    C1: Mat
    C2: Mat
    L1: Mat
    L2: Mat
    h1: int  # nilpotency index of A1
    n1: int  # width of x2 (one column per epsilon block)
    n2: int  # size of the sigma part


@dataclass(frozen=True)
class ImpulseStack:
    """Coefficients ``c0, c1, ...`` of ``c0 delta + c1 delta' + ...``, trailing zeros trimmed."""

    coefficients: tuple[Vector, ...] = field(default=())

    def __post_init__(self):
        cs = [tuple(to_fraction(x) for x in c) for c in self.coefficients]
        while cs and all(x == 0 for x in cs[-1]):
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    def __len__(self) -> int:
        return len(self.coefficients)

    def is_zero(self) -> bool:
        return not self.coefficients

    def padded(self, length: int, width: int) -> list[Vector]:
        if len(self.coefficients) > length:
            raise ValueError(f"stack has {len(self.coefficients)} terms, cannot pad to {length}")
        zero = (Fraction(0),) * width
        return list(self.coefficients) + [zero] * (length - len(self.coefficients))


def assemble(ks: KcfSystem) -> DescriptorSystem:
    """The descriptor system with the canonical pencil and the given ``C``, ``L``."""
    E, A = ks.spec.pencil()
    return DescriptorSystem(E, A, ks.C, ks.L)


def _epsilon_columns(spec: KcfSpec) -> tuple[list[int], list[int]]:
    x1, x2 = [], []
    off = 0
    for e in spec.epsilon_sizes:
        x1.extend(range(off, off + e))
        x2.append(off + e)
        off += e + 1
    return x1, x2


def partition(ks: KcfSystem) -> EpsilonPartition:
    spec = ks.spec
    eps = spec.epsilon_sizes
    x1, x2 = _epsilon_columns(spec)
    if eps:
        A1 = block_diag(*(shift_matrix(e) for e in eps))
        A2 = block_diag(*(Mat.column([1 if i == e - 1 else 0 for i in range(e)]) if e else Mat.zeros(0, 1)
                          for e in eps))
    else:
        A1, A2 = Mat.zeros(0, 0), Mat.zeros(0, 0)
    return EpsilonPartition(
        A1=A1,
        A2=A2,
        C1=ks.C.submatrix(range(ks.p), x1),
        C2=ks.C.submatrix(range(ks.p), x2),
        L1=ks.L.submatrix(range(ks.r), x1),
        L2=ks.L.submatrix(range(ks.r), x2),
        h1=max(eps, default=0),
        n1=len(eps),
        n2=spec.n_sigma,
    )


def _side_matrix(X1: Mat, X2: Mat, Xs: Mat, part: EpsilonPartition, J: Mat, l: int) -> Mat:
    rows = X2.rows
    n1, n2 = part.n1, part.n2
    # X1 A1^i A2 for i = 0..l-1
    terms = []
    P = part.A2
    for _ in range(l):
        terms.append(X1 @ P)
        P = part.A1 @ P
    brows = []
    Jk = J
    for k in range(l + 1):
        blocks = []
        for j in range(l + 1):
            if j < k:
                blocks.append(Mat.zeros(rows, n1))
            elif j == k:
                blocks.append(X2)
            else:
                blocks.append(terms[j - k - 1])
        blocks.append(-(Xs @ Jk))
        Jk = J @ Jk
        brows.append(hstack(*blocks))
    return vstack(*brows)


def thm1_matrices(ks: KcfSystem, l: int) -> tuple[Mat, Mat]:
    """Block matrices mapping ``(v_0, ..., v_l, v)`` to the ``y`` and ``z`` impulse coefficients.

    Block row ``k`` (``k = 0..l``) gives the ``delta^(k)`` coefficient: ``C2``
    under ``v_k``, ``C1 A1^(j-k-1) A2`` under ``v_j`` for ``j > k`` and
    ``-C_sigma J^(k+1)`` under ``v``. For ``l >= n`` the last sigma entry is zero.
    """
    if l < 1:
        raise InvalidL(f"block count must be at least 1, got {l}")
    part = partition(ks)
    J = ks.spec.J_sigma()
    Cm = _side_matrix(part.C1, part.C2, ks.C_sigma, part, J, l)
    Lm = _side_matrix(part.L1, part.L2, ks.L_sigma, part, J, l)
    return Cm, Lm


def check_thm1(ks: KcfSystem, l: int | None = None) -> bool:
    """Kernel inclusion ``ker(C-side) ⊆ ker(L-side)`` decided by a rank comparison."""
    if l is None:
        l = ks.n + 1
    Cm, Lm = thm1_matrices(ks, l)
    return rank(vstack(Cm, Lm)) == rank(Cm)


def _is_nilpotent(J: Mat) -> bool:
    return (J ** J.rows).is_zero()


def sigma_impulse(J: Mat, x0: Sequence[Scalar]) -> ImpulseStack:
    """Impulsive part ``-sum_i delta^(i-1) J^i x0`` of ``J x' = x`` from ``x(0-) = x0``."""
    if J.rows != J.cols:
        raise DimensionMismatch(f"J is {J.shape}, must be square")
    if len(x0) != J.cols:
        raise DimensionMismatch(f"initial vector has length {len(x0)}, J is {J.shape}")
    if not _is_nilpotent(J):
        raise NotNilpotent("J must be nilpotent")
    coeffs = []
    x = tuple(to_fraction(c) for c in x0)
    for _ in range(J.rows):
        x = J.apply(x)
        if not any(x):
            break
        coeffs.append(tuple(-c for c in x))
    return ImpulseStack(tuple(coeffs))


def epsilon_impulse(part: EpsilonPartition, v: Sequence[Sequence[Scalar]]) -> ImpulseStack:
    """``x1[0] = sum_{i<h1} sum_{j=i+1..l} delta^(j-i-1) A1^i A2 v_j``."""
    for j, vj in enumerate(v):
        if len(vj) != part.n1:
            raise DimensionMismatch(f"v_{j} has length {len(vj)}, expected {part.n1}")
    l = len(v) - 1
    width = part.A1.rows
    acc = [[Fraction(0)] * width for _ in range(max(l, 0))]
    P = part.A2
    for i in range(part.h1):
        for j in range(i + 1, l + 1):
            term = P.apply(v[j])
            acc[j - i - 1] = [a + b for a, b in zip(acc[j - i - 1], term)]
        P = part.A1 @ P
    return ImpulseStack(tuple(tuple(c) for c in acc))


def _stack_input(ks: KcfSystem, v: Sequence[Sequence[Scalar]], v_sigma: Sequence[Scalar]) -> tuple[list, int]:
    part = partition(ks)
    if len(v) < 2:
        raise InvalidL("need at least v_0 and v_1")
    for j, vj in enumerate(v):
        if len(vj) != part.n1:
            raise DimensionMismatch(f"v_{j} has length {len(vj)}, expected {part.n1}")
    if len(v_sigma) != part.n2:
        raise DimensionMismatch(f"v_sigma has length {len(v_sigma)}, expected {part.n2}")
    flat = [to_fraction(x) for vj in v for x in vj] + [to_fraction(x) for x in v_sigma]
    return flat, len(v) - 1


def _reshape(values: Sequence[Fraction], width: int) -> ImpulseStack:
    if width == 0:
        return ImpulseStack(())
    return ImpulseStack(tuple(tuple(values[k : k + width]) for k in range(0, len(values), width)))


def output_impulse(
    ks: KcfSystem, v: Sequence[Sequence[Scalar]], v_sigma: Sequence[Scalar]
) -> tuple[ImpulseStack, ImpulseStack]:
    """``(y[0], z[0])`` for ``x2 = sum_j v_j delta^(j)`` and ``x_sigma(0-) = v_sigma``."""
    flat, l = _stack_input(ks, v, v_sigma)
    Cm, Lm = thm1_matrices(ks, l)
    return _reshape(Cm.apply(flat), ks.p), _reshape(Lm.apply(flat), ks.r)


def solution_impulse(
    ks: KcfSystem, v: Sequence[Sequence[Scalar]], v_sigma: Sequence[Scalar]
) -> tuple[ImpulseStack, ImpulseStack]:
    """``(y[0], z[0])`` assembled from the coordinate-wise solution formulas.

    Evaluates ``x1[0]``, ``x2[0]`` and ``x_sigma[0]`` separately and applies
    the output matrices, without going through the block matrices.
    """
    flat, l = _stack_input(ks, v, v_sigma)
    part = partition(ks)
    x1 = epsilon_impulse(part, v)
    x2 = ImpulseStack(tuple(tuple(vj) for vj in v))
    xs = sigma_impulse(ks.spec.J_sigma(), v_sigma)
    length = max(len(x1), len(x2), len(xs), 1)
    x1c = x1.padded(length, part.A1.rows)
    x2c = x2.padded(length, part.n1)
    xsc = xs.padded(length, part.n2)

    def out(X1: Mat, X2: Mat, Xs: Mat) -> ImpulseStack:
        coeffs = []
        for a, b, c in zip(x1c, x2c, xsc):
            ya, yb, yc = X1.apply(a), X2.apply(b), Xs.apply(c)
            coeffs.append(tuple(p + q + s for p, q, s in zip(ya, yb, yc)))
        return ImpulseStack(tuple(coeffs))

    return out(part.C1, part.C2, ks.C_sigma), out(part.L1, part.L2, ks.L_sigma)


def _response_matrix(ks: KcfSystem, l: int, which: int) -> Mat:
    part = partition(ks)
    n_in = (l + 1) * part.n1 + part.n2
    width = ks.p if which == 0 else ks.r
    cols = []
    for idx in range(n_in):
        e = [0] * n_in
        e[idx] = 1
        v = [e[j * part.n1 : (j + 1) * part.n1] for j in range(l + 1)]
        vs = e[(l + 1) * part.n1 :]
        stack = solution_impulse(ks, v, vs)[which]
        flat = [x for c in stack.padded(l + 1, width) for x in c]
        cols.append(flat)
    if not cols:
        return Mat.zeros((l + 1) * width, 0)
    return Mat(zip(*cols), cols=n_in) if cols[0] else Mat.zeros(0, n_in)


def oracle_pio(ks: KcfSystem) -> bool:
    """Partial impulse observability decided from the impulse solutions themselves.

    With ``l = n + 1`` the linear maps from impulse data ``(v_0..v_l, v)`` to
    ``y[0]`` and ``z[0]`` are tabulated column by column from the solution
    formulas. The system is PIO iff every kernel basis vector of the ``y``
    map (a ``y``-silent impulse pattern) is also ``z``-silent.
    """
    l = ks.n + 1
    Y = _response_matrix(ks, l, 0)
    Z = _response_matrix(ks, l, 1)
    for w in kernel_basis(Y).columns():
        if any(Z.apply(w)):
            return False
    return True
