"""Exact computations for the stabilization of the trace formula of GSp_2n:
root data, endoscopic data, Satake transforms, nilradical cohomology and
the signed ordered-partition identities behind them."""

__version__ = "0.1.0"
