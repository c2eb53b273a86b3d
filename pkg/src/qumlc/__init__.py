"""qumlc: UML models of hybrid quantum-classical systems to multi-QPL programs."""

__version__ = "0.1.0"
