"""
Django settings and helpers used only by the qplanar test suite.
"""
