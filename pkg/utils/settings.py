from decouple import config

# Default worker count for --threads in verify/table; the flag overrides it.
CYCLO_THREADS = config("CYCLO_THREADS", default=1, cast=int)

CYCLO_LOG_LEVEL = config("CYCLO_LOG_LEVEL", default="WARNING")

# Largest extension degree the S-matrix route will build a field for.
CYCLO_SMATRIX_MAX_DEGREE = config("CYCLO_SMATRIX_MAX_DEGREE", default=128, cast=int)
