class BoundExceeded(Exception):
    """A desk-scale size cap was hit (group order, vertex count, depth)."""
