"""Chamber faces, witness vectors, and stabilizer codimensions.

A face class is a subset S of the simple roots; on it exactly the
positive roots inside span(S) vanish.  Each face carries an exact
integer witness built from the fundamental coweights, and the stabilizer
codimension of the witness equals the total multiplicity of the
surviving roots.  The codimension bound depends on the type of K.
"""

from rootmatch import (
    enumerate_faces,
    space,
    stabilizer_codim,
    verify_codim_bounds,
)

sl4 = space("SL(4,R)")
print(f"faces of {sl4.name} (rank {sl4.rank} gives {2 ** sl4.rank} classes)")
for face in enumerate_faces(sl4):
    print(
        f"  S={face.simple_subset!s:10s} kills {face.vanishing_count} roots,"
        f" codim {face.codim}, witness {face.witness}"
    )
print()

# The two maximal walls kill a full A_2 subsystem; their witnesses have
# a triple coordinate and stabilizer codimension equal to the rank.
v = (1, 1, 1, -3)
print("witness", v, "has stabilizer codimension", stabilizer_codim(sl4, v))
print()

for name in ("SL(5,R)", "SO(3,5)", "Sp(6,R)", "SU(3,2)"):
    report = verify_codim_bounds(space(name))
    walls = [e.simple_subset for e in report.faces_at_rank]
    print(
        f"{name:9s} ktype {report.ktype:22s} min codim {report.min_codim:2d}"
        f" pass={report.passed}" + (f"  walls at rank: {walls}" if walls else "")
    )
