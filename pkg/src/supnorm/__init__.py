"""Sharp supnorm inequalities in H^s(R^n): constants, extremizers, numerical checks."""

__version__ = "0.1.0"
