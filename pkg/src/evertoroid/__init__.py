"""Quasistatic models and planar simulation of an everting toroidal robot."""
