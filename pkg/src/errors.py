class InvariantViolation(AssertionError):
    """An exact computation contradicted a proven identity or a theorem being checked."""
