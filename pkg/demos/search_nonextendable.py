"""Hunt for probabilities on pre-Dynkin systems that admit no extension.

Random generator sets are closed into pre-Dynkin systems; measures are
assigned by picking values for the blocks' partition atoms from a small
grid and checking that the result is additive.  Instances whose credal
LP is infeasible are printed together with the smallest Horn-Tarski
family that certifies it.

    python3 demos/search_nonextendable.py --trials 3000 --seed 7
"""

import argparse
import random
from fractions import Fraction

from predynkin import (
    GroundSet,
    PartialProbability,
    SetSystem,
    blocks,
    horn_tarski_falsify,
    is_extendable,
    pre_dynkin_hull,
    validate_measure,
)


def random_measure(rng: random.Random, g: GroundSet, D: SetSystem, grid: int):
    """Try to assign values on D by choosing them on partition atoms of
    each block; returns None if the choices clash."""
    vals = {}
    for alg in blocks(D):
        nonempty = [e for e in alg.events if e]
        atoms = [a for a in nonempty if not any(b != a and b & a == b for b in nonempty)]
        cuts = sorted(rng.randint(0, grid) for _ in range(len(atoms) - 1))
        parts = [b - a for a, b in zip([0] + cuts, cuts + [grid])]
        for e in alg.events:
            v = Fraction(sum(p for a, p in zip(atoms, parts) if a & e == a), grid)
            if vals.setdefault(e, v) != v:
                return None
    mu = PartialProbability.of(D, vals)
    return mu if validate_measure(mu).ok else None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=3000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--depth", type=int, default=6)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    hits = 0
    for _ in range(args.trials):
        n = rng.randint(3, args.max_n)
        g = GroundSet(n)
        gens = [rng.randrange(1, g.full) for _ in range(rng.randint(2, 5))]
        D = pre_dynkin_hull(SetSystem(g, tuple(gens)))
        if len(blocks(D)) < 2:
            continue
        mu = random_measure(rng, g, D, grid=rng.choice([1, 2, 3, 4]))
        if mu is None:
            continue
        ok, _ = is_extendable(mu)
        if ok:
            continue
        hits += 1
        fam = horn_tarski_falsify(mu, args.depth)
        print(f"n={n} D={D.labels()}")
        print("   mu:", {g.label(e): str(v) for e, v in mu.table.items()})
        if fam:
            B, A = fam
            print("   B:", [g.label(e) for e in B], " A:", [g.label(e) for e in A])
        else:
            print(f"   no family up to depth {args.depth}")
    print(f"{hits} non-extendable instances in {args.trials} trials")


if __name__ == "__main__":
    main()
