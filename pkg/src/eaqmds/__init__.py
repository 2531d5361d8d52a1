"""Entanglement-assisted quantum MDS codes from constacyclic codes over GF(q^2)."""

__version__ = "0.1.0"
