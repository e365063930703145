__all__ = [
    'to_disk',
    'from_disk',
    'to_json',
    'from_json',
    'to_jsonl',
    'from_jsonl',
]

from idealclose.io.__io import to_disk
from idealclose.io.__io import from_disk
from idealclose.io.__io import to_json
from idealclose.io.__io import from_json
from idealclose.io.__io import to_jsonl
from idealclose.io.__io import from_jsonl
