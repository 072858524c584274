from typing import Any, Optional
from abc import abstractmethod
import os, json, math

import numpy as np


def format_float(value: float) -> str:
    """9 significant digits, '-0' written as '0'."""
    text = '{:.9g}'.format(float(value))
    if text in ('-0', '-0.0'):
        return '0'
    return text


def normalize_floats(document: Any) -> Any:
    """Copy of document with every float rounded to 9 significant digits."""
    if isinstance(document, (bool, np.bool_)):
        return bool(document)
    if isinstance(document, (int, np.integer)):
        return int(document)
    if isinstance(document, (float, np.floating)):
        value = float(document)
        if not math.isfinite(value):
            return str(value)
        return float(format_float(value)) + 0.0
    if isinstance(document, (complex, np.complexfloating)):
        return [normalize_floats(document.real), normalize_floats(document.imag)]
    if isinstance(document, np.ndarray):
        return normalize_floats(document.tolist())
    if isinstance(document, dict):
        return {str(k): normalize_floats(v) for k, v in document.items()}
    if isinstance(document, (list, tuple)):
        return [normalize_floats(v) for v in document]
    return document


def dumps_document(document: Any) -> str:
    """Byte-deterministic JSON text of a document."""
    return json.dumps(normalize_floats(document), sort_keys=True, indent=2) + '\n'


class DocumentStorageAdapter():

    @abstractmethod
    def save(self, document: dict):
        pass

    @abstractmethod
    def read(self) -> Optional[dict]:
        pass


class InMemoryDocumentStorageAdapter(DocumentStorageAdapter):
    def __init__(self):
        self.stored: Optional[dict] = None
        super().__init__()

    def save(self, document: dict):
        self.stored = json.loads(dumps_document(document))

    def read(self) -> Optional[dict]:
        return self.stored


class FileSystemDocumentStorageAdapter(DocumentStorageAdapter):
    def __init__(self, file_location: Optional[str] = None):
        self.encoding = 'utf-8'
        self.file_location = file_location if file_location is not None else './.turncalc.json'
        super().__init__()

    def save(self, document: dict):
        with open(self.file_location, 'w', encoding=self.encoding) as f:
            f.write(dumps_document(document))

    def read(self) -> Optional[dict]:
        if not os.path.exists(self.file_location):
            return None

        with open(self.file_location, encoding=self.encoding) as f:
            return json.load(f)
