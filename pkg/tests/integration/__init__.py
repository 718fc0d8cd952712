"""Desk-scale acceptance runs of the estimators and the CLI."""
