"""Core game model, machines, analytic calculator and experiment harnesses."""
