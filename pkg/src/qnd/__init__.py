"""Exact algebra for quantum network dynamics: Grassmann actors, lattice
Poincaré generators, the hyperdiamond vacuum, chronon algebras and S(4)."""

__version__ = "0.1.0"
