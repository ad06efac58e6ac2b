"""Tests for the exact package."""
