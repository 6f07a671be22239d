"""
cyclo - exact spectral classification of digraphs by Hermitian spectral radius
"""

__version__ = "1.0.0"
__author__ = "cyclo contributors"
