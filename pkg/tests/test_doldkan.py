from hypothesis import given

from conftest import fields, rng_for, seeds
from dkcoalg.chain import homology, point, sphere, tensor_maps
from dkcoalg.coalg import lemma_square_check
from dkcoalg.doldkan import (
    alexander_whitney,
    epsilon,
    eta,
    gamma,
    gamma_map,
    moore_complex,
    normalize,
    normalize_map,
    psi,
    shuffle,
    shuffles,
)
from dkcoalg.exactlinalg import QQ, Matrix, is_invertible
from dkcoalg.generators import (
    random_chain_map,
    random_complex,
    random_simplicial,
    random_simplicial_with_map,
    transport_simplicial_map,
)
from dkcoalg.simplicial import SimplicialVectorSpace, constant_unit, level_tensor_maps


def _identity(ms):
    return all(m == Matrix.identity(m.field, m.nrows) and m.nrows == m.ncols for m in ms)


def test_normalize_examples():
    assert normalize(constant_unit(3, QQ)).dims == (1, 0, 0, 0)
    N = normalize(gamma(sphere(2, 4, QQ)))
    assert N.dims == (0, 0, 1, 0, 0)
    X = SimplicialVectorSpace(QQ, (1, 2), [[Matrix.from_dense(QQ, [[1, 0]]), Matrix.from_dense(QQ, [[1, 1]])]],
                              [[Matrix.from_dense(QQ, [[1], [0]])]])
    assert normalize(X).dims == (1, 1)


def test_gamma_examples():
    assert gamma(sphere(1, 5, QQ)).dims == (0, 1, 2, 3, 4, 5)
    assert gamma(sphere(2, 3, QQ)).dims[1] == 0
    G = gamma(point(3, QQ))
    I = constant_unit(3, QQ)
    assert G.dims == I.dims
    assert all(a == b for fa, fb in zip(G.faces, I.faces) for a, b in zip(fa, fb))


def test_unit_maps_examples():
    for n in range(4):
        e = epsilon(sphere(n, 3, QQ))
        assert e.f[n] == Matrix.identity(QQ, 1)
    assert _identity(eta(constant_unit(3, QQ)).f)
    X = SimplicialVectorSpace(QQ, (1, 3), [[Matrix.from_dense(QQ, [[1, 2, 0]]), Matrix.from_dense(QQ, [[1, 0, 5]])]],
                              [[Matrix.from_dense(QQ, [[1], [0], [0]])]])
    assert all(is_invertible(m) for m in eta(X).f)


def test_aw_shuffle_examples():
    I = constant_unit(3, QQ)
    assert _identity(alexander_whitney(I, I).f)
    G = gamma(sphere(1, 3, QQ))
    assert _identity((alexander_whitney(G, G) @ shuffle(G, G)).f)
    assert shuffles(2, 0) == (((0, 1), (), 1),)
    assert shuffles(0, 2) == (((), (0, 1), 1),)
    assert sorted(s for _, _, s in shuffles(1, 1)) == [-1, 1]


def test_psi_examples():
    K = point(3, QQ)
    assert _identity(psi(K, K).f)
    S1 = sphere(1, 3, QQ)
    p = psi(S1, S1)
    assert p.f[1].ncols == 0
    assert lemma_square_check(S1, S1)


# --- properties


@given(fields, seeds)
def test_round_trips(F, seed):
    rng = rng_for(seed)
    V = random_complex(rng, F, 4, 3)
    assert all(is_invertible(m) for m in epsilon(V).f)
    X = random_simplicial(rng, F, 4, 2)
    assert all(is_invertible(m) for m in eta(X).f)


@given(fields, seeds)
def test_epsilon_eta_natural(F, seed):
    rng = rng_for(seed)
    V, W = random_complex(rng, F, 3, 2), random_complex(rng, F, 3, 2)
    f = random_chain_map(rng, V, W)
    NGf = normalize_map(gamma_map(f))
    assert all(epsilon(W).f[n] @ NGf.f[n] == f.f[n] @ epsilon(V).f[n] for n in range(4))
    sx, sy = random_simplicial_with_map(rng, F, 3, 2), random_simplicial_with_map(rng, F, 3, 2)
    g = transport_simplicial_map(random_chain_map(rng, sx[1], sy[1]), sx, sy)
    GNg = gamma_map(normalize_map(g))
    assert all(GNg.f[n] @ eta(sx[0]).f[n] == eta(sy[0]).f[n] @ g.f[n] for n in range(4))


@given(fields, seeds)
def test_aw_and_shuffle(F, seed):
    rng = rng_for(seed)
    A, B = random_simplicial(rng, F, 3, 2), random_simplicial(rng, F, 3, 2)
    aw, sh = alexander_whitney(A, B), shuffle(A, B)  # chain maps, checked on construction
    assert _identity((aw @ sh).f)
    H = (sh @ aw)
    from dkcoalg.chain import induced_homology_map

    assert _identity(induced_homology_map(H).maps)


@given(fields, seeds)
def test_aw_shuffle_natural(F, seed):
    rng = rng_for(seed)
    s = [random_simplicial_with_map(rng, F, 3, 1) for _ in range(4)]
    f = transport_simplicial_map(random_chain_map(rng, s[0][1], s[1][1]), s[0], s[1])
    g = transport_simplicial_map(random_chain_map(rng, s[2][1], s[3][1]), s[2], s[3])
    A, A2, B, B2 = s[0][0], s[1][0], s[2][0], s[3][0]
    fg = level_tensor_maps(f, g)
    Nfg = normalize_map(fg)
    NfNg = tensor_maps(normalize_map(f), normalize_map(g))
    aw, aw2 = alexander_whitney(A, B), alexander_whitney(A2, B2)
    assert all(aw2.f[n] @ Nfg.f[n] == NfNg.f[n] @ aw.f[n] for n in range(4))
    sh, sh2 = shuffle(A, B), shuffle(A2, B2)
    assert all(sh2.f[n] @ NfNg.f[n] == Nfg.f[n] @ sh.f[n] for n in range(4))


@given(fields, seeds)
def test_psi_natural(F, seed):
    rng = rng_for(seed)
    X, X2, Y, Y2 = (random_complex(rng, F, 3, 1) for _ in range(4))
    f, g = random_chain_map(rng, X, X2), random_chain_map(rng, Y, Y2)
    p, p2 = psi(X, Y), psi(X2, Y2)
    Gfg = gamma_map(tensor_maps(f, g))
    GfGg = level_tensor_maps(gamma_map(f), gamma_map(g))
    assert all(p2.f[n] @ Gfg.f[n] == GfGg.f[n] @ p.f[n] for n in range(4))


@given(fields, seeds)
def test_moore_and_normalized_homology_agree(F, seed):
    X = random_simplicial(rng_for(seed), F, 4, 2)
    assert homology(moore_complex(X)).dims == homology(normalize(X)).dims
