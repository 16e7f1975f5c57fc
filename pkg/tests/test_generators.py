from hypothesis import given

from conftest import fields, rng_for, seeds
from dkcoalg.chain import homology
from dkcoalg.coalg import check_coalgebra_axioms
from dkcoalg.exactlinalg import Matrix
from dkcoalg.generators import (
    random_complex,
    random_connected_coalgebra,
    random_connected_coalgebra_map,
    random_injection,
    random_sparse_invertible,
)


@given(seeds, fields)
def test_sparse_invertible_inverse(seed, F):
    g, g_inv = random_sparse_invertible(rng_for(seed), F, 4)
    assert g @ g_inv == Matrix.identity(F, 4)


@given(seeds, fields)
def test_complex_shape_options(seed, F):
    rng = rng_for(seed)
    V = random_complex(rng, F, 4, 3, top=2, connected=True)
    assert V.dims[0] == 0 and V.dims[3] == V.dims[4] == 0
    A = random_complex(rng, F, 4, 3, top=3, acyclic=True)
    assert not any(homology(A).dims[:3])


@given(seeds, fields)
def test_same_seed_same_complex(seed, F):
    a, b = random_complex(rng_for(seed), F, 3, 2), random_complex(rng_for(seed), F, 3, 2)
    assert a.dims == b.dims and a.d == b.d


@given(seeds, fields)
def test_injection_is_injective(seed, F):
    rng = rng_for(seed)
    f = random_injection(rng, random_complex(rng, F, 3, 2), random_complex(rng, F, 3, 2))
    assert all(m.rank() == m.ncols for m in f.f)


@given(seeds, fields)
def test_connected_coalgebras_and_maps(seed, F):
    rng = rng_for(seed)
    C = random_connected_coalgebra(rng, F, 3, 1)
    assert C.dims[0] == 1 and check_coalgebra_axioms(C).ok
    g = random_connected_coalgebra_map(rng, F, 3, 1)
    assert g.source.dims[0] == g.target.dims[0] == 1
