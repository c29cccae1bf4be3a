#!/usr/bin/env python3
"""Full brute-force verification of the q=8 automorphism action (same
checks as `maxcurve verify-group --s 1`)."""

import sys

from maxcurve.cli import main

if __name__ == "__main__":
    sys.exit(main(["verify-group", "--s", "1"]))
