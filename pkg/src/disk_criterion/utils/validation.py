"""Digest helpers for report provenance."""

import hashlib


def compute_text_digest(text: str, algorithm: str = "sha256") -> str:
    """
    Digest of shape text.

    Args:
        text: Decoded ShapeFile text
        algorithm: Hash algorithm (md5, sha1, sha256, etc.)

    Returns:
        Digest formatted as ``algorithm:hex``
    """
    hash_func = hashlib.new(algorithm)
    hash_func.update(text.encode("utf-8"))
    return f"{algorithm}:{hash_func.hexdigest()}"
