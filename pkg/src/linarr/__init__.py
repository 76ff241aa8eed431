"""Exact tools for line arrangements: Jacobian syzygies, saturation defects, Pascal octics."""
