"""Exact connected-domination criticality toolkit."""
