"""
Management commands of the qplanar toolkit.
"""
