"""
Tests package for the graph coloring toolkit.
"""
