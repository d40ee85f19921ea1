"""
Induced-subgraph embedding and graph-family tests.
"""
