"""Tests for disk-criterion."""
