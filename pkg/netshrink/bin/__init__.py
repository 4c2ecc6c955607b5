"""
Command-line front end of netshrink. Every library operation that reads or
writes files has a verb here, and experiment configs run the whole
reduce / simulate / compare pipeline in one call.
"""
