"""Utility modules for disk-criterion."""
