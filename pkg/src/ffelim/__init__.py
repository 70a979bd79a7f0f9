"""ffelim - resultant-based elimination and root counting over finite prime fields."""

__version__ = "0.1.0"
