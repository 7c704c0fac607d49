from .base import BaseSubject
from .lemma28 import Lemma28Subject
from .theorem1 import Theorem1Subject
from .theorem2 import Theorem2Subject
from .theorem3 import Theorem3Subject

__all__ = [
    "BaseSubject",
    "Lemma28Subject",
    "Theorem1Subject",
    "Theorem2Subject",
    "Theorem3Subject",
]
