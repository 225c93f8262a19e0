"""hmcat: exact Hochschild-Mitchell (co)homology of finite k-linear G-categories."""

__version__ = "0.1.0"
