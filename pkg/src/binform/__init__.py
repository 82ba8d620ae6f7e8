"""Determinants built from the binary form i^2 + c*i*j + d*j^2.

Jacobi-symbol matrices and prime-field power matrices over several index
ranges, exact and multi-modular determinant engines, closed-form predictions
for the power families, and verification campaigns tying them together.
"""

from .arith import (Factorization, Residue, factorize, is_prime, is_squarefree,
                    jacobi, legendre_of_padic, mod_pow, moebius, primes_up_to,
                    rational_mod_p, totient)
from .detkit import IntMatrix, det_exact, det_exact_crt, det_mod_m, det_mod_p
from .families import (FamilyKind, FormFamily, brace_cd, bracket_cd, paren_cd,
                       power_det_mod_p, power_matrix, rational_matrix_det_mod_p,
                       shifted_power_det_mod_p, shifted_power_matrix, symbol_matrix)
from .formulas import (Dp11Case, Dp11Prediction, poly_grid_det_identity,
                       predict_dp11, rational_det_closed_form, shift_closed_form,
                       sigma_sums, trinomial_power_coeffs, x_independence_applicable)
from .harness import (CampaignConfig, ReportWriter, ScanSummary, SUITES,
                      VerificationRecord, Verdict, exit_code_for, run_suite,
                      scan_conjecture, write_report)

__version__ = "0.1.0"

__all__ = [
    "CampaignConfig", "Dp11Case", "Dp11Prediction", "Factorization",
    "FamilyKind", "FormFamily", "IntMatrix", "ReportWriter", "Residue",
    "SUITES", "ScanSummary", "VerificationRecord", "Verdict", "brace_cd",
    "bracket_cd", "det_exact", "det_exact_crt", "det_mod_m", "det_mod_p",
    "exit_code_for", "factorize", "is_prime", "is_squarefree", "jacobi",
    "legendre_of_padic", "mod_pow", "moebius", "paren_cd",
    "poly_grid_det_identity", "power_det_mod_p", "power_matrix",
    "predict_dp11", "primes_up_to", "rational_det_closed_form",
    "rational_matrix_det_mod_p", "rational_mod_p", "run_suite",
    "scan_conjecture", "shift_closed_form", "shifted_power_det_mod_p",
    "shifted_power_matrix", "sigma_sums", "symbol_matrix", "totient",
    "trinomial_power_coeffs", "write_report", "x_independence_applicable",
]
