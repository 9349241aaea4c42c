"""Process-wide size caps.

Library calls may pass caps explicitly; when they do not, these module
attributes apply.  The CLI adjusts them from flags or the
CONGRUENCE_LAB_CAP environment variable.
"""

DEFAULT_CON_CAP = 100_000
DEFAULT_MATRIX_CAP = 10**6

CON_CAP = DEFAULT_CON_CAP
MATRIX_CAP = DEFAULT_MATRIX_CAP
