"""
Core package for the graph coloring toolkit: graphs, canonical forms, named graphs.
"""
