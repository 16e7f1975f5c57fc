"""Random instances for property tests and verification suites.

Everything is driven by a ``random.Random`` so suites are reproducible from a seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .chain import ChainComplex, ChainMap, chain_map_space, direct_sum, from_dims
from .coalg import DGCoalgebra, DGCoalgebraMap, counit_map, identity_coalgebra_map, unit_coalgebra
from .doldkan import gamma, gamma_map
from .exactlinalg import FieldSpec, Matrix, inverse, is_invertible
from .simplicial import SimplicialMap, SimplicialVectorSpace, change_basis


@dataclass(frozen=True)
class GenConfig:
    D: int = 3
    max_dim: int = 2
    field: FieldSpec = FieldSpec("Q")
    coeff: int = 2  # entries drawn from -coeff..coeff


def scalar(rng: random.Random, F: FieldSpec, coeff: int = 2):
    if F.mod:
        return rng.randrange(F.p)
    return F(rng.randint(-coeff, coeff))


def random_matrix(rng: random.Random, F: FieldSpec, r: int, c: int, coeff: int = 2, density: float = 1.0) -> Matrix:
    return Matrix.from_dense(F, [[scalar(rng, F, coeff) if rng.random() < density else 0 for _ in range(c)]
                                 for _ in range(r)], ncols=c)


def random_invertible(rng: random.Random, F: FieldSpec, k: int, coeff: int = 2) -> tuple[Matrix, Matrix]:
    if k == 0:
        z = Matrix.zeros(F, 0, 0)
        return z, z
    while True:
        M = random_matrix(rng, F, k, k, coeff)
        if is_invertible(M):
            return M, inverse(M)


def random_sparse_invertible(rng: random.Random, F: FieldSpec, k: int, ops: int | None = None
                             ) -> tuple[Matrix, Matrix]:
    """A product of a permutation and ``ops`` shears, with its inverse; cheap for large ``k``."""
    perm = list(range(k))
    rng.shuffle(perm)
    P = Matrix.from_entries(F, k, k, {(perm[i], i): 1 for i in range(k)})
    g, g_inv = P, P.T
    for _ in range(k if ops is None else ops):
        if k < 2:
            break
        i, j = rng.sample(range(k), 2)
        c = scalar(rng, F, 2) or F(1)
        E = Matrix.from_entries(F, k, k, {**{(t, t): 1 for t in range(k)}, (i, j): c})
        E_inv = Matrix.from_entries(F, k, k, {**{(t, t): 1 for t in range(k)}, (i, j): -c})
        g, g_inv = E @ g, g_inv @ E_inv
    return g, g_inv


def conjugate_complex(V: ChainComplex, g: list[Matrix], g_inv: list[Matrix]) -> ChainComplex:
    """The complex making ``g : V' -> V`` an isomorphism."""
    return ChainComplex(V.field, V.dims, tuple(g_inv[n - 1] @ V.d[n - 1] @ g[n] for n in range(1, V.D + 1)))


def random_complex(rng: random.Random, F: FieldSpec, D: int, max_dim: int = 2, *, top: int | None = None,
                   connected: bool = False, acyclic: bool = False, dims: tuple[int, ...] | None = None,
                   coeff: int = 2) -> ChainComplex:
    """A random complex in a random basis: degrees ``> top`` are zero, ``V_0 = 0`` if connected.

    With ``acyclic`` the complex is a sum of disks (still acyclic below ``top``).
    """
    top = D if top is None else top
    lo = 1 if connected else 0
    if acyclic:
        counts = [0] * (D + 1)
        for n in range(lo + 1, top + 1):
            counts[n] = rng.randint(0, max(0, max_dim // 2))
        dims = [0] * (D + 1)
        for n in range(D + 1):
            dims[n] = counts[n] + (counts[n + 1] if n + 1 <= D else 0)
        ranks = [0] + [counts[n] for n in range(1, D + 1)]
    else:
        if dims is None:
            dims = [rng.randint(0, max_dim) if lo <= n <= top else 0 for n in range(D + 1)]
        dims = list(dims)
        ranks = [0] * (D + 1)
        for n in range(1, D + 1):
            room = dims[n - 1] - ranks[n - 1]
            ranks[n] = rng.randint(0, max(0, min(room, dims[n])))
    # canonical form: the first ranks[n] basis vectors of degree n map onto the last ranks[n] of degree n-1
    diffs = {}
    for n in range(1, D + 1):
        r = ranks[n]
        if r:
            ent = {(dims[n - 1] - r + i, i): 1 for i in range(r)}
            diffs[n] = Matrix.from_entries(F, dims[n - 1], dims[n], ent)
    V = from_dims(F, dims, diffs)
    gs = [random_invertible(rng, F, k, coeff) for k in dims]
    return conjugate_complex(V, [a for a, _ in gs], [b for _, b in gs])


def random_chain_map(rng: random.Random, X: ChainComplex, Y: ChainComplex, coeff: int = 2) -> ChainMap:
    F = X.field
    basis = chain_map_space(X, Y)
    mats = [Matrix.zeros(F, Y.dims[n], X.dims[n]) for n in range(X.D + 1)]
    for b in basis:
        c = scalar(rng, F, coeff)
        if c:
            mats = [m + bm.scale(c) for m, bm in zip(mats, b.f)]
    return ChainMap(X, Y, tuple(mats))


def random_injection(rng: random.Random, X: ChainComplex, R: ChainComplex) -> ChainMap:
    """``X -> X ⊕ R`` followed by a random change of basis of the target."""
    S = direct_sum(X, R)
    F = X.field
    gs = [random_invertible(rng, F, k) for k in S.total.dims]
    T = conjugate_complex(S.total, [a for a, _ in gs], [b for _, b in gs])
    inc = S.inclusions[0]
    return ChainMap(X, T, tuple(gs[n][1] @ inc.f[n] for n in range(X.D + 1)))


def random_simplicial(rng: random.Random, F: FieldSpec, D: int, max_dim: int = 2,
                      connected: bool = False) -> SimplicialVectorSpace:
    """``Γ`` of a random complex in a random basis (every simplicial object is of this form up to iso)."""
    return random_simplicial_with_map(rng, F, D, max_dim, connected)[0]


def random_simplicial_with_map(rng: random.Random, F: FieldSpec, D: int, max_dim: int = 2, connected: bool = False
                               ) -> tuple[SimplicialVectorSpace, ChainComplex, list[tuple[Matrix, Matrix]]]:
    """``X = g Γ(V) g⁻¹`` together with ``V`` and the levelwise ``(g, g⁻¹)``."""
    V = random_complex(rng, F, D, max_dim, connected=connected)
    G = gamma(V)
    gs = [random_sparse_invertible(rng, F, k) for k in G.dims]
    return change_basis(G, [a for a, _ in gs], [b for _, b in gs]), V, gs


def transport_simplicial_map(f: ChainMap, src: tuple, tgt: tuple) -> SimplicialMap:
    """``g_Y Γ(f) g_X⁻¹`` between two outputs of :func:`random_simplicial_with_map`."""
    X, _, gx = src
    Y, _, gy = tgt
    G = gamma_map(f)
    return SimplicialMap(X, Y, tuple(gy[n][0] @ G.f[n] @ gx[n][1] for n in range(X.D + 1)))


def random_simplicial_pair_map(rng: random.Random, F: FieldSpec, D: int, max_dim: int = 2
                               ) -> tuple[SimplicialMap, ChainMap]:
    """A simplicial map ``Γ(f)`` together with the chain map ``f`` it comes from."""
    V = random_complex(rng, F, D, max_dim)
    W = random_complex(rng, F, D, max_dim)
    f = random_chain_map(rng, V, W)
    return gamma_map(f), f


# ---------------------------------------------------------------------------
# Connected coalgebras


def coaugmentation(C: DGCoalgebra) -> DGCoalgebraMap:
    """``K[0] -> C``, ``1 ↦`` the element of counit one."""
    F = C.field
    K = unit_coalgebra(C.D, F)
    e = C.counit[0, 0]
    mats = [Matrix.from_dense(F, [[F.inv(e)]])] + [Matrix.zeros(F, C.dims[n], 0) for n in range(1, C.D + 1)]
    return DGCoalgebraMap(K, C, ChainMap(K.carrier, C.carrier, tuple(mats)))


def constant_map(C: DGCoalgebra, E: DGCoalgebra) -> DGCoalgebraMap:
    """``C -> K[0] -> E``."""
    return coaugmentation(E) @ counit_map(C)


def random_connected_coalgebra(rng: random.Random, F: FieldSpec, D: int, max_dim: int = 1) -> DGCoalgebra:
    from .connected.colimits import coproduct
    from .connected.cofree import product_with_cofree
    from .connected.factorization import primitive_coalgebra
    from .connected.tensor import tensor_coalgebra

    kind = rng.choice(["cofree", "primitive", "coproduct", "product", "unit"])
    V = random_complex(rng, F, D, max_dim, connected=True)
    if kind == "cofree":
        return tensor_coalgebra(V)
    if kind == "primitive":
        return primitive_coalgebra(V)
    if kind == "coproduct":
        W = random_complex(rng, F, D, max_dim, connected=True)
        return coproduct(tensor_coalgebra(V), primitive_coalgebra(W)).coalgebra
    if kind == "product":
        W = random_complex(rng, F, D, 1, connected=True)
        return product_with_cofree(primitive_coalgebra(V), W).coalgebra
    return unit_coalgebra(D, F)


def random_connected_coalgebra_map(rng: random.Random, F: FieldSpec, D: int, max_dim: int = 1) -> DGCoalgebraMap:
    from .connected.colimits import coproduct
    from .connected.tensor import coaugmentation_quotient, map_into_cofree, tensor_coalgebra_map

    kind = rng.choice(["constant", "identity", "cofree", "induced", "inclusion"])
    if kind == "induced":
        V = random_complex(rng, F, D, max_dim, connected=True)
        W = random_complex(rng, F, D, max_dim, connected=True)
        return tensor_coalgebra_map(random_chain_map(rng, V, W))
    C = random_connected_coalgebra(rng, F, D, max_dim)
    if kind == "constant":
        E = random_connected_coalgebra(rng, F, D, max_dim)
        return constant_map(C, E)
    if kind == "identity":
        return identity_coalgebra_map(C)
    if kind == "cofree":
        V = random_complex(rng, F, D, max_dim, connected=True)
        u = random_chain_map(rng, coaugmentation_quotient(C), V)
        return map_into_cofree(C, u, V)
    E = random_connected_coalgebra(rng, F, D, max_dim)
    return coproduct(C, E).inclusions[0]
