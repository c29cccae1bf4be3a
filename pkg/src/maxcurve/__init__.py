"""Toolkit for the Skabelund maximal curves: point counts over the relevant
field towers, the automorphism action realized as explicit permutations at
desk scale, ramification accounting, and the quotient-genus catalog."""

__version__ = "0.1.0"
