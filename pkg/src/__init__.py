"""
Schur Idempotent Norms

Computes, certifies and classifies the Schur multiplier norms of finite 0-1
matrices viewed as bipartite graphs.
"""

__version__ = "0.1.0"
__author__ = "Schur Norms Team"
