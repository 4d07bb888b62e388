#!/usr/bin/env python3
"""Reproduce the twelve reference crossing shifts delta(m, n) at alpha=4
and print the comparison against the embedded published values."""

import sys

from multiwell.cli import main

if __name__ == "__main__":
    sys.exit(main(["table1", "--alpha", "4", "--compare"]))
