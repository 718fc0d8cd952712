"""
Property-based tests for channel profiles, Gaussian machinery and bounds using Hypothesis.
"""
