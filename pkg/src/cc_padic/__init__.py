"""cc_padic - Exact p-adic distributions and linear-form independence"""

__version__ = "1.0.0"
