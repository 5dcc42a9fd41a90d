#!/usr/bin/env python3
"""Smoke test for the rotlat_py extension module.

Builds nothing itself: it loads target/{release,debug}/librotlat_py.so from
the workspace. Build the module first with

    cargo build -p rotlat-python            # or --release

then run

    python3 python/smoke_test.py
"""

import importlib.util
import json
import pathlib
import sys


def load_module():
    root = pathlib.Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / profile / name
        for profile in ("release", "debug")
        for name in ("librotlat_py.so", "rotlat_py.so", "librotlat_py.dylib")
    ]
    for path in candidates:
        if path.exists():
            spec = importlib.util.spec_from_file_location("rotlat_py", path)
            module = importlib.util.module_from_spec(spec)
            spec.loader.exec_module(module)
            print(f"loaded {path}")
            return module
    sys.exit("librotlat_py not found; run `cargo build -p rotlat-python` first")


def main():
    rl = load_module()

    # cubes
    b3 = rl.cube(3)
    assert b3.size() == 8 and b3.order() == 3
    assert b3.is_simple() and b3.is_subdirectly_irreducible()
    assert b3.recognize_cube() == 3
    assert b3.monolith().is_full()
    assert len(b3.congruences()) == 2
    assert b3.stable_elements() == [b3.zero(), b3.one()]

    # products and subdirect decomposition
    p = rl.product([rl.cube(2), rl.cube(3)])
    assert p.size() == 32 and p.order() == 6
    assert not p.is_subdirectly_irreducible()
    dims = sorted(q.recognize_cube() for _, q in p.subdirect_factors())
    assert dims == [2, 3]

    # generated subalgebras inside the six-cube
    b6 = rl.cube(6)
    lat = b6.lattice()
    atom0, atom3 = lat.atoms()[0], lat.atoms()[3]
    spread = b6.join(atom0, atom3)
    assert len(b6.orbit(spread)) == 3
    sub, inclusion = b6.generated_subalgebra([spread])
    assert sub.recognize_cube() == 3
    assert b6.is_spanning(inclusion)

    # free algebras
    sizes = [rl.free_one_generated(n)[0].size() for n in (1, 2, 3)]
    assert sizes == [1, 4, 18]
    free2, gen = rl.free_one_generated(2)
    assert free2.is_isomorphic(rl.cube(2)) is not None
    assert len(free2.orbit(gen)) == 2

    # the divisibility calculus
    assert rl.hs_cube(2, 6) and not rl.hs_cube(4, 6)
    assert len(rl.embed_cube(2, 6)) == 4
    assert len(rl.ideals_upto(6)) == 17
    d6 = rl.Ideal.divisors(6)
    assert d6.members() == [1, 2, 3, 6]
    cert = json.loads(d6.contains_algebra(p))
    assert cert["contained"]
    cert = json.loads(rl.Ideal([1, 2]).contains_algebra(p))
    assert not cert["contained"] and cert["missing"] == [3]

    # posets and serialization
    posets = rl.enumerate_posets(4)
    assert sum(1 for q in posets if q.size() == 4) == 16
    square = rl.Poset.antichain(2).downset_lattice()
    assert square.is_distributive() and square.length() == 2
    roundtrip = rl.Algebra.from_json(b3.to_json())
    assert roundtrip.is_isomorphic(b3) is not None
    assert "digraph" in b3.to_dot()

    # verification sweeps
    report = json.loads(rl.verify_si(3))
    assert report["counterexamples"] == []
    report = json.loads(rl.verify_varieties(4))
    assert report["counterexamples"] == []

    print("smoke test ok")


if __name__ == "__main__":
    main()
