# Verification suites and parameter sweeps
