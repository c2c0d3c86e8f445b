"""Homogeneous almost complex structures on six-dimensional spaces with semisimple isotropy.

Exact computations over Q and Q(sqrt 3): catalog models, their Nijenhuis tensors,
invariant forms, curvature and Gray-Hervella classes, and claim verification suites.
"""

__version__ = "0.1.0"
