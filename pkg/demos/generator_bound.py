"""Generator counts as upper bounds, checked against sign assignments."""
from shd import corpus
from shd.tangle import shi_upper_bound

for name in ("s3", "rp3", "lens3", "lens4", "lens5", "s1s2-admissible", "s1s2-inadmissible"):
    b = shi_upper_bound(corpus.load(name))
    if not b.admissible:
        print(f"{name:18} no bound (witness {dict(b.witness)})")
        continue
    print(f"{name:18} bound {b.bound}  strands {b.tangle.total_strands}  "
          f"sign assignments {b.sign_count}")
