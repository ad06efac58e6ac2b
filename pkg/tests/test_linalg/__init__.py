"""Tests for the linalg package."""
