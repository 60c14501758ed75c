"""Unit tests for disk-criterion."""
