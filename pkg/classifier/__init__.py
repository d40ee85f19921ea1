"""
Complexity classifier for pairs of forbidden induced subgraphs.
"""
