"""
Partition function routes package

This package contains the routes that compute the DWBC partition function:
exact Hankel determinants, exhaustive enumeration and the large-n asymptote.
"""

from sixvertex.asymptotics.constants import AsymptoticRoute
from sixvertex.routes.enumerate import BruteForceRoute
from sixvertex.routes.exact import ExactRoute

# Registry of available routes
ROUTES = {
    "exact": ExactRoute,
    "brute": BruteForceRoute,
    "asym": AsymptoticRoute,
}


def list_routes():
    """Return a list of available route names."""
    return list(ROUTES.keys())


def get_route(route_name):
    """Get a route class by name.

    Args:
        route_name: Name of the route.

    Returns:
        The route class or None if not found.
    """
    return ROUTES.get(route_name.lower())
