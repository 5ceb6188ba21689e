"""Build lens space diagrams and classify them."""
from shd.builders import lens_space_diagram
from shd.classify import classify
from shd.diagram import validate

for p in range(1, 8):
    d = lens_space_diagram(p)
    assert validate(d).ok
    c = classify(d)
    print(f"L({p},1): |H1| = {c.h1}, generators = {c.generator_count}, "
          f"strong = {c.strong_diagram}, witness = {c.strong_lspace_witness}")
