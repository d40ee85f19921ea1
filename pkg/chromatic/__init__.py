"""
Exact chromatic-number solvers.
"""
