"""Print the verdict table, optionally in parallel."""
import argparse
import sys

from girthbound.reproduce import reproduce


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--level", choices=("quick", "full"), default="full")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()
    report = reproduce(args.level, jobs=args.jobs)
    print("\n".join(report.lines()))
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
