"""Expression language, REPL and property-suite driver."""
