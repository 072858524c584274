import math
import logging
import numpy as np
from pyturncalc import (
    Turn, compose_turns, gate_from_turn, multiply, random_gates, turn_from_gate,
    SphericalPolygon, polygon_area, midpoint_turn, jones_from_point, closing_phase,
)

logging.basicConfig(format='%(asctime)s %(threadName)s [%(name)s %(levelname)s] %(message)s', level=logging.DEBUG)

rng = np.random.default_rng(7)

# geometric composition against the quaternion product
worst = 0.0
for first_gate, second_gate in zip(random_gates(rng, 20), random_gates(rng, 20)):
    first, second = turn_from_gate(first_gate), turn_from_gate(second_gate)
    geometric = gate_from_turn(compose_turns(first, second))
    algebraic = multiply(second_gate, first_gate)
    worst = max(worst, float(np.linalg.norm(geometric.components - algebraic.components)))
logging.info('largest composition discrepancy over 20 pairs: {:.3e}'.format(worst))

# the octant triangle: half its area is the length of the midpoint turn
octant = SphericalPolygon([(0, 0, 1), (1, 0, 0), (0, 1, 0)])
area = polygon_area(octant)
logging.info('octant area {:.6f} (pi/2 = {:.6f})'.format(area, 0.5 * math.pi))
logging.info('midpoint turn {}'.format(midpoint_turn(octant)))

# carrying a state around the octant in phase picks up exp(-i area / 2)
state = jones_from_point((0, 0, 1))
logging.info('closing phase {:.6f} (-area/2 = {:.6f})'.format(closing_phase(state, octant), -0.5 * area))
