"""Tests for hmcat."""
