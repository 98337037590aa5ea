"""Text syntax for generator expressions

    expr    := term (("+" | "-") term)*
    term    := factor (["*"] factor)*
    factor  := "-" factor | atom ("^" INT)*
    atom    := INT | "(" expr ")" | symbol
    symbol  := NAME [index] "^"*

Names are x<i>, y<i>, h[i], hom[i,j], hsw[i,j], d[m,i], d[m,i;I=1,m-1],
dI[m,i], L[m], L[m,i], L[m,i;t], M[m;s1,...] and M[m;S;t]; a ``hat`` suffix
on the name (dhat[2,0]) or a bare ``^`` after the symbol (d[2,0]^) marks the
omega-twisted variant. Coefficients are reduced mod p.
"""
import re

from dickson.lib import SymbolKind
from dickson.lib.genexpr import GenExpr, GenSymbol, L_sym, M_sym, d_sym, dI_sym
from dickson.lib.superpoly import field
from dickson.lib.utils import ExpressionError

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]+)|(?P<op>[-+*^()\[\],;=]))")

_KINDS = {
    "x": SymbolKind.X,
    "y": SymbolKind.Y,
    "h": SymbolKind.H,
    "hom": SymbolKind.H_OMIT,
    "hsw": SymbolKind.H_SWAP,
    "d": SymbolKind.D,
    "dI": SymbolKind.D_PARAB,
    "L": SymbolKind.L,
    "M": SymbolKind.M,
}


def tokenize(text):
    """Split text into (kind, value, offset) triples ending with an "end" token"""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            offset = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ExpressionError("Unexpected character {!r}".format(text[offset]), offset)
        kind = match.lastgroup
        value = match.group(kind)
        tokens.append((kind, int(value) if kind == "int" else value, match.start(kind)))
        pos = match.end()
    tokens.append(("end", None, len(text)))
    return tokens


class Parser(object):
    def __init__(self, text, p, n):
        field(p)
        self.text = text
        self.p = p
        self.n = n
        self.tokens = tokenize(text)
        self.pos = 0

    def peek(self, ahead=0):
        return self.tokens[min(self.pos + ahead, len(self.tokens) - 1)]

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, value):
        kind, got, offset = self.take()
        if got != value:
            raise ExpressionError("Expected {!r}".format(value), offset)

    def integer(self):
        kind, value, offset = self.take()
        if kind != "int":
            raise ExpressionError("Expected an integer", offset)
        return value

    def parse(self):
        if self.peek()[0] == "end":
            raise ExpressionError("Empty expression", 0)
        value = self.expr()
        kind, _, offset = self.peek()
        if kind != "end":
            raise ExpressionError("Unexpected trailing input", offset)
        return value

    def expr(self):
        value = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while True:
            kind, tok, _ = self.peek()
            if tok == "*":
                self.take()
            elif not (kind == "name" or tok == "("):
                return value
            value = value * self.factor()

    def factor(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.factor()
        value = self.atom()
        while self.peek()[1] == "^" and self.peek(1)[0] == "int":
            self.take()
            value = value ** self.integer()
        return value

    def atom(self):
        kind, value, offset = self.peek()
        if kind == "int":
            self.take()
            return GenExpr.const(self.p, self.n, value)
        if value == "(":
            self.take()
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "name":
            return GenExpr.symbol(self.p, self.n, self.symbol())
        raise ExpressionError("Unexpected {}".format(value if value is not None else "end of input"), offset)

    def _index_list(self):
        """Comma separated integers up to the next ';' or ']'"""
        out = [self.integer()]
        while self.peek()[1] == ",":
            self.take()
            out.append(self.integer())
        return out

    def symbol(self):
        _, name, offset = self.take()
        hat = False
        if name.endswith("hat") and len(name) > 3:
            name, hat = name[:-3], True
        kind = _KINDS.get(name)
        if kind is None:
            raise ExpressionError("Unknown symbol {!r}".format(name), offset)
        if kind in (SymbolKind.X, SymbolKind.Y):
            sym = GenSymbol(kind, 0, (self.integer(),))
        else:
            sym = self._bracketed(kind, hat, offset)
        while self.peek()[1] == "^" and self.peek(1)[0] != "int":
            self.take()
            sym = GenSymbol(sym.kind, sym.size, sym.idx, sym.omit, True)
        if self.p == 2 and sym.kind in (SymbolKind.X, SymbolKind.M):
            raise ExpressionError("Exterior generators need an odd prime", offset)
        return sym

    def _bracketed(self, kind, hat, offset):
        self.expect("[")
        first = self._index_list()
        groups = [first]
        while self.peek()[1] == ";":
            self.take()
            if self.peek()[1] == "I":
                groups.append(self._parabolic_marker())
            else:
                groups.append(self._index_list())
        self.expect("]")
        if kind in (SymbolKind.H, SymbolKind.H_OMIT, SymbolKind.H_SWAP):
            if len(groups) != 1:
                raise ExpressionError("h takes one index group", offset)
            return GenSymbol(kind, 0, tuple(first), 0, hat)
        if kind in (SymbolKind.D, SymbolKind.D_PARAB):
            if len(first) != 2 or len(groups) > 2:
                raise ExpressionError("d takes [m,i]", offset)
            m, i = first
            parabolic = kind == SymbolKind.D_PARAB
            if len(groups) == 2:
                if groups[1] != ("I", (1, m - 1)):
                    raise ExpressionError("Only the composition I=1,m-1 is supported", offset)
                parabolic = True
            return dI_sym(m, i, hat) if parabolic else d_sym(m, i, hat)
        if kind == SymbolKind.L:
            if len(first) > 2 or len(groups) > 2:
                raise ExpressionError("L takes [m], [m,i] or [m,i;t]", offset)
            omit = groups[1][0] if len(groups) == 2 else 0
            return L_sym(first[0], first[1] if len(first) == 2 else None, omit, hat)
        if len(first) != 1 or len(groups) not in (2, 3):
            raise ExpressionError("M takes [m;s1,...] or [m;S;t]", offset)
        omit = groups[2][0] if len(groups) == 3 else 0
        return M_sym(first[0], tuple(groups[1]), omit, hat)

    def _parabolic_marker(self):
        self.take()
        self.expect("=")
        return ("I", tuple(self._index_list()))


def parse_expr(text, p, n):
    """Parse text into a GenExpr over F_p with n variables"""
    return Parser(text, p, n).parse()
