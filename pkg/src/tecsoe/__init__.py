"""Component-framework compiler with call-flow driven lock optimization."""

__version__ = "0.1.0"
