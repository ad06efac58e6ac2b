"""Tests for the classify package."""
