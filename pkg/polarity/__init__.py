"""
Wiener Polarity Toolkit

Distance-three pair counting for simple connected graphs with:
- BFS oracle and the Zagreb/small-cycle closed formula
- Catacondensed benzenoid and phenylene construction on the hexagonal lattice
- Extremal family generation and exhaustive small-h verification
"""

__version__ = "0.1.0"
