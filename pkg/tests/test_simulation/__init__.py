"""
Tests for the Simulation Module
"""
