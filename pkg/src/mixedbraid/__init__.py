"""Exact monodromy representations of mixed braid groups.

Given a partition of n marked points into m colour blocks and cyclic degrees
d_1..d_m, this package builds the unitary representation of the mixed braid
group on a character eigenspace of the cohomology of the associated Abelian
cover of the sphere, together with the intersection form, the multivariate
Burau representation and the checks that relate them.
"""

from .cyclotomic import CycNum, eval_complex, real_sign, root_of_unity
from .kernels import BACKEND

__all__ = ["BACKEND", "CycNum", "eval_complex", "real_sign", "root_of_unity"]
