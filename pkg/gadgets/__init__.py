"""
NP-hardness reduction gadgets.
"""
