"""Core finite-word and eventually periodic word toolkit."""
