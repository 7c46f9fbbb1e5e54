"""
Configuration package for the poe_robotics toolkit.

This package contains the typed toolkit configuration and the loader for the
project-root application configuration.
"""

from .poe_config import CONFIG

__all__ = ['CONFIG']
