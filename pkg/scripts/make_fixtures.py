"""Regenerate the JSON documents in fixtures/ used by the CLI and serialization tests."""

import argparse
from pathlib import Path

from dkcoalg import serialize
from dkcoalg.chain import ChainMap, disk, identity_map, sphere, zero_complex, zero_map
from dkcoalg.coalg import counit_map
from dkcoalg.connected.tensor import tensor_coalgebra
from dkcoalg.doldkan import gamma
from dkcoalg.exactlinalg import QQ, Matrix
from dkcoalg.lifting import LiftingSquare


def boundary_inclusion(D: int, F=QQ) -> ChainMap:
    S, Dk = sphere(1, D, F), disk(2, D, F)
    return ChainMap(S, Dk, tuple(Matrix.identity(F, 1) if n == 1 else Matrix.zeros(F, Dk.dims[n], S.dims[n])
                                 for n in range(D + 1)))


def build(D: int = 4) -> dict[str, dict]:
    F = QQ
    S1 = sphere(1, D, F)
    T = tensor_coalgebra(S1)
    Z = zero_complex(F, D)
    Dk = disk(1, D, F)
    p = ChainMap(Dk, S1, tuple(Matrix.identity(F, 1) if n == 1 else Matrix.zeros(F, S1.dims[n], Dk.dims[n])
                               for n in range(D + 1)))
    docs = {
        "sphere2": serialize.to_document(sphere(2, D, F)),
        "disk2": serialize.to_document(disk(2, D, F)),
        "gamma_sphere1": serialize.to_document(gamma(sphere(1, 3, F))),
        "tensor_sphere1": serialize.to_document(T),
        "counit_map": serialize.to_document(counit_map(T)),
        "sphere1_to_disk2": serialize.to_document(boundary_inclusion(D)),
        "identity_sphere1": serialize.to_document(identity_map(sphere(1, D, F))),
        "no_lift_square": serialize.to_document(LiftingSquare(zero_map(Z, S1), p, zero_map(Z, Dk), identity_map(S1))),
    }
    # d_2 d_3 != 0: a complex K <- K <- K with both differentials the identity
    bad = serialize.to_document(disk(2, D, F))
    bad["object"]["dims"] = [0, 1, 1, 1, 0]
    one = {"shape": [1, 1], "rows": [["1"]]}
    bad["object"]["d"] = [{"shape": [0, 1], "rows": []}, one, one, {"shape": [1, 0], "rows": [[]]}]
    docs["bad_d2"] = bad
    gf4 = serialize.to_document(sphere(2, D, F))
    gf4["field"] = "GFp:4"
    docs["gf4"] = gf4
    return docs


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=str(Path(__file__).resolve().parent.parent / "fixtures"))
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, doc in build().items():
        (out / f"{name}.json").write_text(serialize.canonical(doc) + "\n", encoding="utf-8")
        print(name)


if __name__ == "__main__":
    main()
