"""Exception types raised across the package."""


class Acs6Error(ValueError):
    pass


class Singular(Acs6Error):
    """Matrix is not invertible at the requested tolerance."""


class NotCompatible(Acs6Error):
    """A 2-form whose skew matrix is not an orthogonal almost complex structure."""


class OutsideChart(Acs6Error):
    """Structure lies on the face z0 = 0, where the affine chart [1, a, b, c] is undefined."""


class NotOnSphere(Acs6Error):
    """Edge coordinates violate r^2 + u^2 + x^2 = 1."""


class InvalidAlgebra(Acs6Error):
    """Structure constants fail antisymmetry or the Jacobi identity."""
