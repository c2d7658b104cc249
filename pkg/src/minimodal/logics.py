"""Registry of the axiomatic systems: identities, axiom/rule schemata,
schema instantiation and matching, and the inclusion preorder.

Naming scheme: the classical systems are M, MN, MC, K, MP, MNP, MD, MND,
MCD, KD, MT, MNT, MCT, KT; their minimal counterparts carry an extra M
prefix (MM, ..., MK, MKD, MKT); the constructive ones a C prefix (CM,
..., CK, CKD, CKT); WK is the single Wijesekera-style system; MPL, IPL
and CPL are the propositional bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .formula import And, Atom, BOT, Box, Dia, Imp, Or, TOP, neg, iff

FAMILIES = ("propbase", "minimal", "constructive", "wijesekera", "classical")
SIGMA_LETTERS = ("C", "N", "P", "D", "T")

# family rank along the chain base -> +efq -> +mnc -> +em
_FAMILY_RANK = {
    "minimal": 0,
    "constructive": 1,
    "wijesekera": 2,
    "classical": 3,
}
_PROPBASE_RANK = {"MPL": 0, "IPL": 1, "CPL": 3}


def _admissible(sigma: frozenset) -> bool:
    if not sigma <= set(SIGMA_LETTERS):
        return False
    if len(sigma & {"P", "D", "T"}) > 1:
        return False
    # C with bare P is dropped: it coincides with the C,D system
    if {"C", "P"} <= sigma:
        return False
    return True


@dataclass(frozen=True)
class LogicId:
    family: str
    sigma: frozenset = frozenset()
    base: str | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "propbase":
            if self.base not in ("MPL", "IPL", "CPL") or self.sigma:
                raise ValueError("propbase logics are MPL, IPL, CPL with empty sigma")
        else:
            if self.base is not None:
                raise ValueError("base is only for propbase logics")
            if not _admissible(self.sigma):
                raise ValueError(f"inadmissible axiom set {set(self.sigma)}")
            if self.family == "wijesekera" and self.sigma != frozenset("CN"):
                raise ValueError("the Wijesekera-style system is defined for C,N only")

    @property
    def name(self) -> str:
        if self.family == "propbase":
            return self.base
        if self.family == "wijesekera":
            return "WK"
        cl = _CLASSICAL_NAME[self.sigma]
        if self.family == "classical":
            return cl
        if self.family == "minimal":
            return "M" + cl
        return "C" + cl

    def __repr__(self):
        return f"LogicId({self.name})"


_CLASSICAL_NAME = {
    frozenset(): "M",
    frozenset("N"): "MN",
    frozenset("C"): "MC",
    frozenset("CN"): "K",
    frozenset("P"): "MP",
    frozenset("NP"): "MNP",
    frozenset("D"): "MD",
    frozenset("ND"): "MND",
    frozenset("CD"): "MCD",
    frozenset("CND"): "KD",
    frozenset("T"): "MT",
    frozenset("NT"): "MNT",
    frozenset("CT"): "MCT",
    frozenset("CNT"): "KT",
}

ADMISSIBLE_SIGMAS = tuple(sorted(_CLASSICAL_NAME, key=lambda s: (len(s), sorted(s))))


def _build_registry() -> dict[str, LogicId]:
    logics = {}
    for base in ("MPL", "IPL", "CPL"):
        logics[base] = LogicId("propbase", frozenset(), base)
    for sigma in ADMISSIBLE_SIGMAS:
        for family in ("minimal", "constructive", "classical"):
            l = LogicId(family, sigma)
            logics[l.name] = l
    logics["WK"] = LogicId("wijesekera", frozenset("CN"))
    return logics


LOGICS: dict[str, LogicId] = _build_registry()

MINIMAL_LOGICS = tuple(l for l in LOGICS.values() if l.family == "minimal")
CONSTRUCTIVE_LOGICS = tuple(l for l in LOGICS.values() if l.family == "constructive")
CLASSICAL_LOGICS = tuple(l for l in LOGICS.values() if l.family == "classical")


def logic_by_name(name: str) -> LogicId:
    try:
        return LOGICS[name]
    except KeyError:
        raise ValueError(f"unknown logic {name!r}") from None


# ---------------------------------------------------------------------------
# Schemata

@dataclass(frozen=True)
class AxiomSchema:
    name: str
    template: object
    metavars: frozenset


@dataclass(frozen=True)
class RuleSchema:
    name: str
    premises: tuple
    conclusion: object
    metavars: frozenset


A, B, C = Atom("A"), Atom("B"), Atom("C")
_AB = frozenset("AB")
_A = frozenset("A")
_ABC = frozenset("ABC")


def _ax(name, template, metavars):
    return AxiomSchema(name, template, frozenset(metavars))


SCHEMAS: dict[str, AxiomSchema] = {
    s.name: s
    for s in [
        _ax("and-el", Imp(And(A, B), A), _AB),
        _ax("and-er", Imp(And(A, B), B), _AB),
        _ax("or-il", Imp(A, Or(A, B)), _AB),
        _ax("or-ir", Imp(B, Or(A, B)), _AB),
        _ax("and-pair", Imp(Imp(A, B), Imp(Imp(A, C), Imp(A, And(B, C)))), _ABC),
        _ax("or-case", Imp(Imp(A, C), Imp(Imp(B, C), Imp(Or(A, B), C))), _ABC),
        _ax("imp-dist", Imp(Imp(A, Imp(B, C)), Imp(Imp(A, B), Imp(A, C))), _ABC),
        _ax("imp-k", Imp(A, Imp(B, A)), _AB),
        _ax("efq", Imp(BOT, A), _A),
        _ax("em", Or(A, neg(A)), _A),
        _ax("dual", iff(Box(A), neg(Dia(neg(A)))), _A),
        _ax("dual-dia", iff(Dia(A), neg(Box(neg(A)))), _A),
        _ax("k-box", Imp(Box(Imp(A, B)), Imp(Box(A), Box(B))), _AB),
        _ax("k-dia", Imp(Box(Imp(A, B)), Imp(Dia(A), Dia(B))), _AB),
        _ax("c-box", Imp(And(Box(A), Box(B)), Box(And(A, B))), _AB),
        _ax("c-dia", Imp(Dia(Or(A, B)), Or(Dia(A), Dia(B))), _AB),
        _ax("d", Imp(Box(A), Dia(A)), _A),
        _ax("n-box", Box(TOP), frozenset()),
        _ax("n-dia", neg(Dia(BOT)), frozenset()),
        _ax("t-box", Imp(Box(A), A), _A),
        _ax("t-dia", Imp(A, Dia(A)), _A),
        _ax("p-box", neg(Box(BOT)), frozenset()),
        _ax("p-dia", Dia(TOP), frozenset()),
        _ax("mnc", neg(And(Box(A), Dia(neg(A)))), _A),
        _ax("mem", Or(Box(A), Dia(neg(A))), _A),
    ]
}

RULES: dict[str, RuleSchema] = {
    r.name: r
    for r in [
        RuleSchema("mp", (Imp(A, B), A), B, _AB),
        RuleSchema("mon-box", (Imp(A, B),), Imp(Box(A), Box(B)), _AB),
        RuleSchema("mon-dia", (Imp(A, B),), Imp(Dia(A), Dia(B)), _AB),
        RuleSchema("nec", (A,), Box(A), _A),
    ]
}

MPL_AXIOMS = (
    "and-el", "and-er", "or-il", "or-ir",
    "and-pair", "or-case", "imp-dist", "imp-k",
)


def _modal_axioms_minimal(sigma: frozenset) -> list[str]:
    if {"C", "N"} <= sigma:
        # normal kernel: the K pair with necessitation
        names = ["k-box", "k-dia"]
        if "D" in sigma:
            names.append("d")
        if "T" in sigma:
            names += ["t-box", "t-dia"]
        return names
    names = []
    if "C" in sigma:
        names += ["c-box", "k-dia"]
    if "N" in sigma:
        names.append("n-box")
    if "P" in sigma:
        names.append("p-dia")
    if "D" in sigma:
        names.append("d")
        if "N" not in sigma:
            names.append("p-dia")
    if "T" in sigma:
        names += ["t-box", "t-dia"]
    return names


def axioms_of(l: LogicId) -> list[AxiomSchema]:
    """Axiom schemata of the system, in a fixed presentation order."""
    names: list[str] = list(MPL_AXIOMS)
    if l.family == "propbase":
        if l.base in ("IPL", "CPL"):
            names.append("efq")
        if l.base == "CPL":
            names.append("em")
    elif l.family == "classical":
        names += ["efq", "em", "dual", "dual-dia"]
        for letter, ax in (("C", "c-box"), ("N", "n-box"), ("P", "p-box"),
                           ("D", "d"), ("T", "t-box")):
            if letter in l.sigma:
                names.append(ax)
    else:
        names += _modal_axioms_minimal(l.sigma)
        if l.family in ("constructive", "wijesekera"):
            names.append("efq")
        if l.family == "wijesekera":
            names.append("mnc")
    return [SCHEMAS[n] for n in names]


def rules_of(l: LogicId) -> list[RuleSchema]:
    if l.family == "propbase":
        names = ["mp"]
    elif l.family == "classical":
        names = ["mp", "mon-box"]
    elif l.family == "wijesekera" or {"C", "N"} <= l.sigma:
        names = ["mp", "nec"]
    else:
        names = ["mp", "mon-box", "mon-dia"]
    return [RULES[n] for n in names]


# ---------------------------------------------------------------------------
# Instantiation and matching

def instantiate(schema, subst: dict):
    """Homomorphic substitution of metavariables; subst must be total."""
    missing = schema.metavars - set(subst)
    if missing:
        raise ValueError(f"missing bindings for {sorted(missing)}")

    def go(t):
        if isinstance(t, Atom) and t.name in schema.metavars:
            return subst[t.name]
        if isinstance(t, (And, Or, Imp)):
            return type(t)(go(t.left), go(t.right))
        if isinstance(t, (Box, Dia)):
            return type(t)(go(t.body))
        return t

    return go(schema.template)


def match_schema(schema: AxiomSchema, f) -> dict | None:
    """Most general substitution making the template equal to f, or None."""
    subst: dict = {}

    def go(t, g) -> bool:
        if isinstance(t, Atom) and t.name in schema.metavars:
            if t.name in subst:
                return subst[t.name] == g
            subst[t.name] = g
            return True
        if type(t) is not type(g):
            return False
        if isinstance(t, (And, Or, Imp)):
            return go(t.left, g.left) and go(t.right, g.right)
        if isinstance(t, (Box, Dia)):
            return go(t.body, g.body)
        return t == g

    return subst if go(schema.template, f) else None


# ---------------------------------------------------------------------------
# Inclusion preorder

_AXIS_ORDER = {"": 0, "P": 1, "D": 2, "T": 3}


def _axis(sigma: frozenset) -> str:
    for letter in ("T", "D", "P"):
        if letter in sigma:
            return letter
    return ""


def _sigma_reachable(s1: frozenset, s2: frozenset) -> bool:
    return (s1 & {"C", "N"}) <= (s2 & {"C", "N"}) and _AXIS_ORDER[_axis(s1)] <= _AXIS_ORDER[_axis(s2)]


def extends(l1: LogicId, l2: LogicId) -> bool:
    """True when every theorem of l1 is a theorem of l2, per the inclusion
    diagram: pointwise C/N growth, the none < P < D < T axis, and the family
    chain minimal -> constructive -> Wijesekera -> classical."""
    if l1.family == "propbase":
        rank1 = _PROPBASE_RANK[l1.base]
        rank2 = _PROPBASE_RANK[l2.base] if l2.family == "propbase" else _FAMILY_RANK[l2.family]
        return rank1 <= rank2
    if l2.family == "propbase":
        return False
    if _FAMILY_RANK[l1.family] > _FAMILY_RANK[l2.family]:
        return False
    return _sigma_reachable(l1.sigma, l2.sigma)


def diagram_edges() -> list[tuple[LogicId, LogicId]]:
    """Covering edges of the inclusion diagram, all families, plus the
    family-chain edges at equal sigma."""
    edges = []
    for family in ("minimal", "constructive", "classical"):
        by_sigma = {l.sigma: l for l in LOGICS.values() if l.family == family}
        for sigma in ADMISSIBLE_SIGMAS:
            src = by_sigma[sigma]
            for letter in ("C", "N"):
                bigger = frozenset(sigma | {letter})
                if letter not in sigma and bigger in by_sigma:
                    edges.append((src, by_sigma[bigger]))
            axis = _axis(sigma)
            nxt = {"": "P", "P": "D", "D": "T"}.get(axis)
            while nxt is not None:
                bigger = frozenset((sigma - {"P", "D", "T"}) | {nxt})
                if bigger in by_sigma:
                    edges.append((src, by_sigma[bigger]))
                    break
                nxt = {"P": "D", "D": "T"}.get(nxt)
    for sigma in ADMISSIBLE_SIGMAS:
        ml = LOGICS[LogicId("minimal", sigma).name]
        cl = LOGICS[LogicId("constructive", sigma).name]
        classical = LOGICS[_CLASSICAL_NAME[sigma]]
        edges.append((ml, cl))
        if sigma == frozenset("CN"):
            edges.append((cl, LOGICS["WK"]))
            edges.append((LOGICS["WK"], classical))
        else:
            edges.append((cl, classical))
    edges.append((LOGICS["MPL"], LOGICS["IPL"]))
    edges.append((LOGICS["IPL"], LOGICS["CPL"]))
    return edges


def derivable_letters(l: LogicId) -> frozenset:
    """Letters whose axioms the system derives, per the inclusion diagram:
    C and N pointwise, and everything at or below the P < D < T axis."""
    letters = set(l.sigma & {"C", "N"})
    axis_rank = _AXIS_ORDER[_axis(l.sigma)]
    for letter in ("P", "D", "T"):
        if _AXIS_ORDER[letter] <= axis_rank:
            letters.add(letter)
    return frozenset(letters)


# Axiom formulas used when checking a letter on the minimal/constructive side.
LETTER_AXIOMS = {
    "C": ("c-box", "k-dia"),
    "N": ("n-box",),
    "P": ("p-dia",),
    "D": ("d",),
    "T": ("t-box", "t-dia"),
}
