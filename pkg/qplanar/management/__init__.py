"""
Django management integration for qplanar.
"""
