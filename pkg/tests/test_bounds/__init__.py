"""Tests for the bounds package."""
