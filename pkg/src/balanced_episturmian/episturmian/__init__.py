"""Standard episturmian words: directive specs, the Pal operator and the balanced families."""
