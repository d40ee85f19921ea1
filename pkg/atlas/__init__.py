"""
Small-graph enumeration and the limit classes F, S, T, T-prime and co(T).
"""
