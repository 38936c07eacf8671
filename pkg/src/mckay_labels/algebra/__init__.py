# Exact finite-field and modular integer arithmetic
