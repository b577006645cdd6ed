"""The orchestrated verification suite and its machine-readable reports.

Every check instantiates its quantifiers exhaustively over a window
[-N, N] and reports exact residuals; a numeric run at a rational e is
the symbolic run evaluated at e, byte for byte.
"""

from fractions import Fraction

from mhv import CHECK_ORDER, EpsMode, RunConfig, run_suite
from mhv.reports import reports_to_json, reports_to_text

print("available checks:", ", ".join(CHECK_ORDER))
print()

config = RunConfig(window=3, checks=("jacobi", "compatibility",
                                     "postlie-grid", "solve-theta"))
reports = run_suite(config)
print(reports_to_text(reports))

print()
print("== one report as JSON (the machine contract) ==")
print(reports_to_json([reports[3]]))

print()
print("== numeric coherence ==")
eps = Fraction(2, 5)
numeric = run_suite(RunConfig(window=3, eps=EpsMode.numeric(eps),
                              checks=("compatibility",)))
evaluated = [r.evaluated_at(eps)
             for r in run_suite(RunConfig(window=3,
                                          checks=("compatibility",)))]
print(f"numeric run at e={eps} equals evaluated symbolic run:",
      reports_to_json(numeric) == reports_to_json(evaluated))
