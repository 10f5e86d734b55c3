"""Text form of group descriptions.

Grammar::

    spec  := atom { "*" atom }
    atom  := "C" int | "D" int | "Dic" int
           | "A[" prime ":" parts { ";" prime ":" parts } "]"
           | "SD(" prime "^" int "," int "," int ")"
           | "file:" path
    parts := int { "," int }

``D18`` is the dihedral group with 36 elements.  ``*`` is the direct product.
"""

from __future__ import annotations

import re

from .groups import (
    Abelian,
    AbelianPPrimary,
    CayleyTable,
    Cyclic,
    Dicyclic,
    Dihedral,
    DirectProduct,
    GroupSpec,
    GroupSpecError,
    SemidirectCyclic,
)


class SpecParseError(ValueError):
    def __init__(self, text: str, pos: int, message: str):
        self.text, self.pos, self.message = text, pos, message
        super().__init__(f"{message} at position {pos}\n  {text}\n  {' ' * pos}^")


class _Parser:
    _int = re.compile(r"\d+")

    def __init__(self, text: str, cayley_check: str):
        self.text, self.pos, self.cayley_check = text, 0, cayley_check

    def fail(self, message: str, pos: int | None = None):
        raise SpecParseError(self.text, self.pos if pos is None else pos, message)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def accept(self, token: str) -> bool:
        self.skip_ws()
        if self.text.startswith(token, self.pos):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str):
        if not self.accept(token):
            self.fail(f"expected {token!r}")

    def integer(self) -> int:
        self.skip_ws()
        m = self._int.match(self.text, self.pos)
        if not m:
            self.fail("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def parts(self) -> tuple[int, ...]:
        out = [self.integer()]
        while self.accept(","):
            out.append(self.integer())
        return tuple(out)

    def atom(self) -> GroupSpec:
        self.skip_ws()
        start = self.pos
        try:
            if self.accept("file:"):
                from .cayley import load_cayley

                path = self.text[self.pos :].split("*", 1)[0].strip()
                if not path:
                    self.fail("expected a path after 'file:'")
                self.pos += len(self.text[self.pos :].split("*", 1)[0])
                return load_cayley(path, self.cayley_check)
            if self.accept("Dic"):
                return Dicyclic(self.integer())
            if self.accept("D"):
                return Dihedral(self.integer())
            if self.accept("C"):
                return Cyclic(self.integer())
            if self.accept("A["):
                comps = {}
                while True:
                    at = self.pos
                    p = self.integer()
                    self.expect(":")
                    if p in comps:
                        self.fail(f"prime {p} listed twice", at)
                    comps[p] = self.parts()
                    if not self.accept(";"):
                        break
                self.expect("]")
                return Abelian(comps)
            if self.accept("SD("):
                p = self.integer()
                self.expect("^")
                r = self.integer()
                self.expect(",")
                m = self.integer()
                self.expect(",")
                a = self.integer()
                self.expect(")")
                return SemidirectCyclic(p, r, m, a)
        except GroupSpecError as exc:
            self.fail(f"invalid group parameters: {exc}", start)
        self.fail("expected one of C, D, Dic, A[, SD(, file:")

    def parse(self) -> GroupSpec:
        atoms = [self.atom()]
        while self.accept("*"):
            atoms.append(self.atom())
        self.skip_ws()
        if self.pos != len(self.text):
            self.fail("unexpected trailing text")
        return atoms[0] if len(atoms) == 1 else DirectProduct(tuple(atoms))


def parse_spec(text: str, cayley_check: str = "auto") -> GroupSpec:
    return _Parser(text, cayley_check).parse()


def _parts(parts) -> str:
    return ",".join(map(str, parts))


def render(spec: GroupSpec) -> str:
    if isinstance(spec, Cyclic):
        return f"C{spec.n}"
    if isinstance(spec, Dihedral):
        return f"D{spec.m}"
    if isinstance(spec, Dicyclic):
        return f"Dic{spec.m}"
    if isinstance(spec, AbelianPPrimary):
        return f"A[{spec.p}:{_parts(spec.parts)}]"
    if isinstance(spec, Abelian):
        return "A[" + ";".join(f"{p}:{_parts(pt)}" for p, pt in spec.components) + "]"
    if isinstance(spec, SemidirectCyclic):
        return f"SD({spec.p}^{spec.r},{spec.m},{spec.a})"
    if isinstance(spec, DirectProduct):
        return "*".join(render(f) for f in spec.factors)
    if isinstance(spec, CayleyTable):
        return f"file:{spec.source}" if spec.source else f"cayley[{spec.n}]"
    raise TypeError(f"unknown group spec {spec!r}")


def canonical(spec: GroupSpec) -> GroupSpec:
    """Normal form used for cache keys: flattened, sorted products; p-primary as Abelian."""
    if isinstance(spec, AbelianPPrimary):
        return Abelian({spec.p: spec.parts})
    if isinstance(spec, DirectProduct):
        flat = []
        for f in spec.factors:
            f = canonical(f)
            flat.extend(f.factors if isinstance(f, DirectProduct) else [f])
        if len(flat) == 1:
            return flat[0]
        return DirectProduct(tuple(sorted(flat, key=render)))
    return spec


def canonical_text(spec: GroupSpec) -> str:
    return render(canonical(spec))
