"""Walk through the cellular automaton and the side-effect score on tiny boards.

Run: python demos/life_and_side_effects.py
"""

from auplab.ca import CellKind, parse_board, serialize_board, step_board
from auplab.metrics import score_episode

BLINKER = """[terrain]
.....
.....
.aaa.
.....
.....
"""

print("A gray blinker flips between horizontal and vertical:")
b = parse_board(BLINKER)
for t in range(3):
    print(f"t={t}\n{serialize_board(b)}")
    b = step_board(b)

print("The agent freezes its eight neighbours: with the agent just above the middle cell,")
print("the three blinker cells stay put while the cells outside the ring still update.")
print(serialize_board(step_board(parse_board(BLINKER), frozen_center=(2, 1))))

block = parse_board("[terrain]\n......\n.gg...\n.gg...\n......\n")
cleared = block.with_cells({p: (CellKind.EMPTY, 0) for p in block.cells_of(CellKind.LIFE)})
print("Destroying a green block costs one unit per missing cell:")
print("side-effect score =", score_episode(block, cleared, t=10))
print("Leaving it alone costs nothing:", score_episode(block, block, t=10))
