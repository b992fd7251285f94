"""Exact combinatorics of nilpotent orbits in classical Lie algebras:
partition calculus, component groups, duality maps on marked data, unipotent
infinitesimal characters, and brute-force minimality certificates, with the
exceptional-type results shipped as verified tables.
"""

__version__ = "0.1.0"
