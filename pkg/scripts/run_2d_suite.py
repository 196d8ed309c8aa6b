#!/usr/bin/env python3
"""Drive the 2D benchmark cases through the CLI.

By default runs the quick subset (slip-flow, oblique-reflection,
ramp-channel, both cylinders); --full adds forward-step and
shock-diffraction at their published resolutions (slow).
"""
import argparse
import subprocess
import sys

QUICK = ["slip-flow", "oblique-reflection", "ramp-channel",
         "half-cylinder-m6", "half-cylinder-m20"]
FULL = QUICK + ["forward-step", "shock-diffraction"]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--scheme", default="movers-le")
    ap.add_argument("--order", type=int, default=1)
    ap.add_argument("--full", action="store_true")
    ap.add_argument("--out", default="out/2d")
    args = ap.parse_args()

    names = FULL if args.full else QUICK
    for name in names:
        cmd = [sys.executable, "-m", "movers.cli", "run", "--case", name,
               "--scheme", args.scheme, "--order", str(args.order),
               "--out", f"{args.out}/{name}"]
        print("+", " ".join(cmd), flush=True)
        rc = subprocess.call(cmd)
        if rc != 0:
            print(f"{name} failed with exit code {rc}", file=sys.stderr)
            return rc
    return 0


if __name__ == "__main__":
    sys.exit(main())
