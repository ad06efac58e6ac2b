"""Schur Idempotent Norms Test Suite."""
