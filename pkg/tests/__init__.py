"""Tests package for mock_eisenstein."""
