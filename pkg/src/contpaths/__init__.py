"""Continuous analogues of lattice-path counts and their discretization."""
