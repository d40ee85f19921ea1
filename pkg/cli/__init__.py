"""
Command-line interface for the graph coloring toolkit.
"""
