"""
Command-line front end: the ``tracepi`` management command, the polynomial
text grammar and the JSON input documents.
"""
