"""Time check_bound on a family and fit log(time) against log(order)."""
import argparse
import math
import statistics
import time

from girthbound.bound import check_bound
from girthbound.families import augmented_toroidal, kneser, mycielski_level, projective_cube

FAMILY = {
    "kneser": lambda k: kneser(2 * k + 1, k),
    "pc": projective_cube,
    "at": augmented_toroidal,
    "mycielski": mycielski_level,
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("family", choices=sorted(FAMILY))
    ap.add_argument("--kmin", type=int, default=2)
    ap.add_argument("--kmax", type=int, default=5)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()
    xs, ys = [], []
    print("k      n   verdict   best_s")
    for k in range(args.kmin, args.kmax + 1):
        b = FAMILY[args.family](k)
        best, answer = math.inf, None
        for _ in range(args.repeats):
            t = time.perf_counter()
            answer = check_bound(b, k).answer
            best = min(best, time.perf_counter() - t)
        print(f"{k:<3} {b.n:>5}   {answer:<7} {best:9.4f}")
        xs.append(math.log(b.n))
        ys.append(math.log(best))
    if len(xs) >= 2:
        print(f"fitted exponent {statistics.linear_regression(xs, ys).slope:.2f}")


if __name__ == "__main__":
    main()
