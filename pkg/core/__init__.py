"""
Rainbowless - Core
=====================
Configuration, logging, errors and file storage shared by every package.
"""
