# Brute-force local and global oracles
