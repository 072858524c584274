import logging
from pyturncalc import UniversalGadget, FileSystemDocumentStorageAdapter, named_gate

logging.basicConfig(format='%(asctime)s %(threadName)s [%(name)s %(levelname)s] %(message)s', level=logging.DEBUG)

storage_adapter = FileSystemDocumentStorageAdapter()

def build_gadget():
    return UniversalGadget(config='QQH', storage_adapter=storage_adapter)

gadget = build_gadget()
gadget.program(named_gate('hadamard'))
logging.info('programmed {}'.format(gadget.setting))

# store to disk
gadget.flush()

# create a fresh gadget and restore its dials from the storage adapter
gadget = build_gadget()
gadget.restore()
logging.info('restored {}'.format(gadget.setting))
logging.info('realized gate {}'.format(gadget.gate()))
