class ConvergenceError(RuntimeError):
    """A numerical optimization stopped before meeting its tolerance."""
