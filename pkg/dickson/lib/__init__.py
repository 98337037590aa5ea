from abc import ABCMeta, abstractmethod
from enum import Enum

import json


class Family(str, Enum):
    """Free D_n-module families with an explicit basis"""

    HN: str = "hn"
    P1N1: str = "p1n1"
    PN11: str = "pn11"
    SYLOW: str = "sylow"
    WR1: str = "wr1"
    WR2: str = "wr2"

    @staticmethod
    def from_str(famstr):
        if isinstance(famstr, Family):
            return famstr
        for v in Family.__members__.values():
            if v.value == str(famstr).lower():
                return v
        return None

    def __str__(self):
        return self.value


class GroupTag(str, Enum):
    """Subgroups of GL(n, F_p) the library knows generators and cosets for"""

    GL: str = "gl"
    BN: str = "bn"
    UN: str = "un"
    P1N1: str = "p1n1"
    PN11: str = "pn11"
    SYLOW: str = "sylow"

    @staticmethod
    def from_str(tagstr):
        if isinstance(tagstr, GroupTag):
            return tagstr
        for v in GroupTag.__members__.values():
            if v.value == str(tagstr).lower():
                return v
        return None

    def __str__(self):
        return self.value


class SymbolKind(str, Enum):
    X: str = "x"
    Y: str = "y"
    H: str = "h"
    H_OMIT: str = "hom"
    H_SWAP: str = "hsw"
    L: str = "L"
    D: str = "d"
    D_PARAB: str = "dI"
    M: str = "M"

    def __str__(self):
        return self.value


class BasisFamily(metaclass=ABCMeta):
    """A free D_n-module with a finite basis and a way to rewrite onto it"""

    @abstractmethod
    def enumerate(self):
        pass

    @abstractmethod
    def rewrite(self, expr):
        pass

    @abstractmethod
    def xi(self, expr):
        pass

    @abstractmethod
    def rank(self):
        pass


class CheckResult(object):
    """Outcome of one verification item
    """

    def __init__(self, tag, p, n, passed, detail="", seconds=0.0):
        self.tag = tag
        self.p = p
        self.n = n
        self.passed = bool(passed)
        self.detail = detail
        self.seconds = seconds

    def to_dict(self):
        """Convert the object to dict
        """
        return {
            "tag": self.tag,
            "p": self.p,
            "n": self.n,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }

    def __bool__(self):
        return self.passed

    def __repr__(self):
        return json.dumps(self.to_dict(), sort_keys=True)
