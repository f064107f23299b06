"""From a frame to its selection matrix to a doubled column choice.

Rows of the selection matrix are frame vectors, columns are root
multiplicity slots, and an entry is 1 when the root does not vanish on
the vector.  The greedy pass then picks two 1-entries per row, all in
distinct columns, repairing earlier choices in the two known failure
modes; an exact augmenting-path matching cross-checks existence.
"""

from rootmatch import (
    build_matrix,
    greedy_match,
    make_frame,
    oracle_match,
    space,
    verify_properties,
)
from rootmatch.cli import column_label
from rootmatch.matcher import validate

sl4 = space("SL(4,R)")
frame = make_frame(sl4, [(1, 1, 1, -3), (-3, 1, 1, 1), (1, -1, 1, -1)])
matrix = build_matrix(frame)

labels = [column_label(root, slot) for root, slot in matrix.col_labels]
print("columns:", " ".join(labels))
for i, row in enumerate(matrix.entries):
    print(f"row {i} {frame.vectors[i]!s:18s}", row)
print()

report = verify_properties(matrix, sl4)
print("five structural properties:", report.verdicts)
print()

result, trace = greedy_match(matrix)
for stage in trace.stages:
    chosen = [labels[c] for c in stage.chosen]
    print(f"stage {stage.stage} (phase {stage.phase}): row {stage.top_row} takes {chosen}")
print("repairs:", trace.repairs or "none")
print("valid:", validate(matrix, result))
print("oracle agrees:", oracle_match(matrix) is not None)
print()

# A frame of three maximal walls forces the phase-1 repair: the final
# row would be starved, so the first row revises its stage-1 choice.
wall_frame = make_frame(sl4, [(-3, 1, 1, 1), (1, -3, 1, 1), (1, 1, -3, 1)])
wall_matrix = build_matrix(wall_frame)
result, trace = greedy_match(wall_matrix)
print("all-wall frame pairs:", result.pairs)
for repair in trace.repairs:
    print(
        f"repair {repair.kind}: row {repair.donor_row} returned column"
        f" {repair.column_restored} to row {repair.failing_row} and took"
        f" column {repair.column_taken}"
    )
