"""bvquery: finite Boolean-valued models of first order theories."""

__version__ = "1.0.0"
