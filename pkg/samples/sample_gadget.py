import math
import logging
import numpy as np
from pyturncalc import UniversalGadget, random_gates, simulate_pulses, CONFIGS

logging.basicConfig(format='%(asctime)s %(threadName)s [%(name)s %(levelname)s] %(message)s', level=logging.DEBUG)

rng = np.random.default_rng(11)

for target in random_gates(rng, 3):
    logging.info('*' * 80)
    logging.info('target {}'.format(target))
    for config in CONFIGS:
        gadget = UniversalGadget(config=config)
        setting = gadget.program(target)
        realized = gadget.gate()
        pulsed = simulate_pulses(gadget.pulses())
        logging.info('{}: dials {} (degrees), sign {:+d}, plate error {:.2e}, pulse error {:.2e}'.format(
            config,
            ', '.join('{:.2f}'.format(math.degrees(a)) for a in setting.angles),
            setting.sign,
            float(np.linalg.norm(realized.components - setting.sign * target.components)),
            float(np.linalg.norm(pulsed.components - realized.components)),
        ))
