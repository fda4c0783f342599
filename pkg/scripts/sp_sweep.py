"""Map random K4-minor-free graphs into a bound, via its certificate and via plain search."""
import argparse
import time

from girthbound.bound import check_bound
from girthbound.families import named
from girthbound.sp import hom_search, hom_via_certificate, is_hom, random_sp_instance


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("bound", help="family name, e.g. c8pp or x15")
    ap.add_argument("--k", type=int, required=True)
    ap.add_argument("--seeds", type=int, default=100)
    ap.add_argument("--n", type=int, default=60)
    args = ap.parse_args()
    b = named(args.bound)
    verdict = check_bound(b, args.k)
    if not verdict.is_yes:
        raise SystemExit(f"{args.bound} does not pass the check for k={args.k}")
    cert_ok = search_ok = 0
    t_cert = t_search = 0.0
    for seed in range(args.seeds):
        g = random_sp_instance(args.k, args.n, seed)
        t = time.perf_counter()
        cert_ok += is_hom(g, b, hom_via_certificate(g, b, verdict.certificate, args.k))
        t_cert += time.perf_counter() - t
        t = time.perf_counter()
        m = hom_search(g, b)
        search_ok += m is not None and is_hom(g, b, m)
        t_search += time.perf_counter() - t
    print(f"certificate maps {cert_ok}/{args.seeds} in {t_cert:.2f}s")
    print(f"search maps      {search_ok}/{args.seeds} in {t_search:.2f}s")


if __name__ == "__main__":
    main()
