"""
Rainbowless - Services
=========================
File formats, certificate files, test corpora and the job runner behind
the command line.
"""
