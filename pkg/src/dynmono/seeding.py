"""Deterministic derivation of independent RNG seeds.

The stable hash is SHA-256 over the '|'-joined string forms of the parts,
truncated to 64 bits.  It does not depend on process hash randomization, so
identical coordinates always yield identical streams, and adding new
coordinates never perturbs existing ones.
"""

from __future__ import annotations

import hashlib


def stable_seed(*parts: object) -> int:
    text = "|".join(str(p) for p in parts)
    return int.from_bytes(hashlib.sha256(text.encode("utf-8")).digest()[:8], "big")
