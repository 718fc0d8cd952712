"""Tests package for fadingcap."""
