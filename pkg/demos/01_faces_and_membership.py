"""
Faces of quasiadjunction and ideal membership
=============================================

A germ with non-normal-crossing singularities is described to the library by
one blowup chart: exceptional multiplicities a_i, adjoint level c, and a basis
of germs with their exceptional valuations.  The builtin cone families build
that chart for weighted cones; everything downstream is exact.
"""

from fractions import Fraction

from quasiadj import QuasiArray, cone_over, faces_of_quasiadjunction, lct_face, membership

# the cone over a degree (2, 3) pair, germs tracked up to degree 3
data = cone_over((2, 3), 2, 3)
print("branches:", data.r, " chart:", data.exceptional[0])

# The unit cube of weights (x1, x2) breaks into membership regions, one
# inequality per exceptional component and germ.  The closures of the jumps
# are the faces of quasiadjunction.
for face in faces_of_quasiadjunction(data):
    (coeffs, level), = face.span
    print("face on %s . x = %s  dim %d  quotient dims %s" % (coeffs, level, face.dim, face.labels))

# Membership of a germ in the ideal A(j|m) is a strict inequality at the
# rational point x_i = (j_i + 1)/m_i; the weak inequality gives the log ideal.
verdict = membership(data, "1", QuasiArray((0, 0), (2, 3)))
print("unit germ at (j|m) = (0,0 | 2,3):", verdict)

# On the boundary the verdict carries the fold weight of the tight stratum.
assert not verdict.in_ideal and verdict.in_log_ideal and verdict.weight == 1

# The log canonical threshold is the first jump along the diagonal.
lct = lct_face(data)
print("lct gamma =", lct.gamma)
assert lct.gamma == Fraction(3, 5)
