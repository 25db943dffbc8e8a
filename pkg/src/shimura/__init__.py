"""Explicit computations on quaternionic modular curves over Q.

Subpackages cover exact arithmetic (`exact`), the involution calculus on
P^1 (`involution`), the four rational quaternion algebras (`quatalg`),
their real embeddings and CM elements (`realize`), the analytic
uniformization engine (`unify`), the registry of modular covers
(`covers`), supersingular polynomials (`ssing`), the CM-point catalogue
and its arithmetic validation (`cmcat`), and a CLI (`cli`).
"""

__version__ = "0.1.0"
