"""Walk one degeneration certificate through the verification pipeline.

Each bundled algebra file carries a filiform bracket mu, a codimension-1
ideal with a diagonal derivation D, and a matrix family g_t.  The toolkit
rebuilds the linear deformation mu_t = mu + t*mu_D and checks, as exact
polynomial identities, that g_t conjugates the deformation at t = 1 onto the
whole family.  Run me with:  python demos/02_verify_certificate.py
"""

from filicert import (DeformationSpec, ScalarMatrix, SubspaceSpec,
                      certificate_matrix, deform, go_cocycle, load_corpus,
                      run_certificate_checks, structure_constants)

corpus = load_corpus()
alg = corpus["mu11"]
mu = structure_constants(alg)
g = certificate_matrix(alg)
block = alg.deformation

print("algebra:", alg.name, " dimension:", alg.dim)
print("bracket entries:")
for (i, j), column in sorted(mu.entries.items()):
    terms = [f"{c}*Y{k}" for k, c in enumerate(column, 1) if not c.is_zero()]
    print(f"  [Y{i}, Y{j}] = {' + '.join(terms)}")

spec = DeformationSpec(mu, SubspaceSpec(block.ideal), block.outside,
                       ScalarMatrix.diagonal(block.diagonal))
phi = go_cocycle(spec)
mu_t = deform(mu, phi)
print("\ndeformed bracket sample: [Y1, Y5] becomes",
      " + ".join(f"({c})*Y{k}" for k, c in enumerate(mu_t.bracket(1, 5), 1)
                 if not c.is_zero()))

report = run_certificate_checks(alg.name, mu, SubspaceSpec(block.ideal),
                                block.outside,
                                ScalarMatrix.diagonal(block.diagonal), g)
print("\nstage verdicts:")
for stage, result in report.stages.items():
    note = f"  [{result.note}]" if result.note else ""
    print(f"  {stage:10s} {'pass' if result.ok else 'FAIL'}{note}")
print("\noverall:", "PASS" if report.passed else "FAIL")
print("det(g_t) =", g.det(), " (a Laurent unit: invertible for every t != 0)")
