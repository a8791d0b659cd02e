"""isovset - finite isovariant simplicial sets.

Builds and verifies presheaves over the isovariant simplex category: horns,
boundaries, the exact cylinder, anodyne filtrations and geometric realization.
"""

__version__ = "1.0.0"
__author__ = "isovset developers"
