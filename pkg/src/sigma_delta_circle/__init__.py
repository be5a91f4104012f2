"""
Sigma-Delta Circle - one-bit Sigma-Delta quantization of bandlimited functions on the unit circle
"""

__version__ = "1.0.0"
__all__ = ['features', 'shared']
