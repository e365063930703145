from idealclose.closures.framework import ClosureOperation
from idealclose.closures.framework import Verdict
from idealclose.closures.framework import check_axioms
from idealclose.closures.framework import check_basics
from idealclose.closures.framework import semiprime_check
from idealclose.closures.framework import compare
from idealclose.closures.framework import construct_from_module
from idealclose.closures.framework import construct_contraction
from idealclose.closures.framework import construct_intersection
from idealclose.closures.framework import construct_directed_union
from idealclose.closures.framework import idempotent_hull
from idealclose.closures.framework import finite_type_cf
from idealclose.closures.framework import construct_cw
from idealclose.closures.standard import identity
from idealclose.closures.standard import indiscrete
from idealclose.closures.standard import radical
from idealclose.closures.standard import saturation
from idealclose.closures.standard import frobenius
from idealclose.closures.standard import integral_closure
from idealclose.closures.standard import basically_full
from idealclose.closures.standard import delta
from idealclose.closures.standard import v_operation
from idealclose.closures.standard import t_operation
from idealclose.closures.standard import w_operation
from idealclose.closures.preclosures import Preclosure
from idealclose.closures.preclosures import preclosure_suite
