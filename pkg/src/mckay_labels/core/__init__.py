# Core shared modules
