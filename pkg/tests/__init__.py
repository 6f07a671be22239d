"""
Test suite for cyclo
"""
