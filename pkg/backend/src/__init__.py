"""
intersector engine package
Exact Quot-scheme and moduli-space intersection numbers
"""

ENGINE_VERSION = "1.0.0"
