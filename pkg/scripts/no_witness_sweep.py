"""Build NO witnesses for random small non-bounds and check them with homomorphism search."""
import argparse
import random
import time

from girthbound.bound import check_bound, no_certificate
from girthbound.errors import CapExceeded
from girthbound.graph import Graph, odd_girth
from girthbound.sp import hom_search, is_k4_minor_free


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--count", type=int, default=10)
    ap.add_argument("--max-n", type=int, default=9)
    ap.add_argument("--cap", type=int, default=10**4)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    done = 0
    print("n  trace  witness  k4free  oddgirth  no_hom  seconds")
    while done < args.count:
        n = rng.randint(2 * args.k + 1, args.max_n)
        b = Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.45])
        if odd_girth(b) != 2 * args.k + 1:
            continue
        v = check_bound(b, args.k)
        if v.is_yes:
            continue
        done += 1
        t = time.perf_counter()
        try:
            w = no_certificate(b, args.k, v, vertex_cap=args.cap)
        except CapExceeded:
            print(f"{n:<2} {len(v.trace):>5}  cap")
            continue
        row = (is_k4_minor_free(w), odd_girth(w), hom_search(w, b) is None)
        print(f"{n:<2} {len(v.trace):>5}  {w.n:>7}  {row[0]!s:<6}  {row[1]!s:<8}  {row[2]!s:<6}  "
              f"{time.perf_counter() - t:7.2f}")


if __name__ == "__main__":
    main()
