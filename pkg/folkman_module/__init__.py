"""
Graph construction and exact search for vertex Folkman number bounds.
Pure Python, no Django imports: the apps wrap it.
"""
__version__ = '0.1.0'
