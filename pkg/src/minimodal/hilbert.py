"""Hilbert-style derivation checking and construction.

A derivation is a list of steps, each a formula with a justification:
an axiom-schema instance, a hypothesis, or a rule application pointing
at earlier steps.  The checker validates every step against a basis
(the axiom/rule schemata of a registered logic, or an explicit one) and
pinpoints the first bad step.

ProofBuilder assembles fully expanded derivations from combinators; the
witness catalog at the bottom stores derivations that justify the
inclusion edges of the diagram and the equivalence of alternative
presentations.  The checker stays independent of the builder.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .formula import And, Atom, BOT, Box, Dia, Imp, Or, TOP, neg, parse, pretty
from .logics import (
    AxiomSchema,
    LogicId,
    RULES,
    RuleSchema,
    SCHEMAS,
    axioms_of,
    instantiate,
    match_schema,
    rules_of,
)


@dataclass(frozen=True)
class ByAxiom:
    name: str
    subst: tuple | None = None  # optional ((metavar, formula), ...) pairs


@dataclass(frozen=True)
class ByHyp:
    index: int


@dataclass(frozen=True)
class ByMP:
    imp: int
    arg: int


@dataclass(frozen=True)
class ByRule:
    name: str
    premises: tuple


Step = tuple  # (formula, justification)


@dataclass(frozen=True)
class Basis:
    axioms: tuple
    rules: tuple

    @classmethod
    def for_logic(cls, l: LogicId) -> "Basis":
        return cls(tuple(axioms_of(l)), tuple(rules_of(l)))

    @classmethod
    def named(cls, axiom_names, rule_names) -> "Basis":
        return cls(
            tuple(SCHEMAS[n] for n in axiom_names),
            tuple(RULES[n] for n in rule_names),
        )

    def axiom(self, name: str):
        for a in self.axioms:
            if a.name == name:
                return a
        return None

    def has_rule(self, name: str) -> bool:
        return any(r.name == name for r in self.rules)


@dataclass
class HilbertReport:
    ok: bool
    bad_step: int | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def check_hilbert_derivation(logic, steps, hypotheses=(), basis=None) -> HilbertReport:
    """Validate a Hilbert derivation in the given logic (or explicit basis).

    Every step must be a literal axiom instance, one of the hypotheses, or
    a rule application whose premise indices point strictly backwards.
    """
    if basis is None:
        basis = Basis.for_logic(logic)
    hypotheses = tuple(hypotheses)

    def fail(i, msg):
        return HilbertReport(False, i, f"step {i + 1}: {msg}")

    for i, (formula, just) in enumerate(steps):
        if isinstance(just, ByAxiom):
            schema = basis.axiom(just.name)
            if schema is None:
                return fail(i, f"axiom {just.name!r} is not part of this system")
            if just.subst is not None:
                expected = instantiate(schema, dict(just.subst))
                if expected != formula:
                    return fail(i, f"not the stated instance of {just.name}")
            elif match_schema(schema, formula) is None:
                return fail(i, f"not an instance of axiom {just.name}")
        elif isinstance(just, ByHyp):
            if not 0 <= just.index < len(hypotheses):
                return fail(i, f"hypothesis {just.index + 1} does not exist")
            if hypotheses[just.index] != formula:
                return fail(i, "formula differs from the cited hypothesis")
        elif isinstance(just, ByMP):
            if not (0 <= just.imp < i and 0 <= just.arg < i):
                return fail(i, "mp premises must point backwards")
            major = steps[just.imp][0]
            minor = steps[just.arg][0]
            if not isinstance(major, Imp) or major.left != minor or major.right != formula:
                return fail(i, "mp premises do not fit")
        elif isinstance(just, ByRule):
            if not basis.has_rule(just.name):
                return fail(i, f"rule {just.name!r} is not part of this system")
            if any(not 0 <= k < i for k in just.premises):
                return fail(i, "rule premises must point backwards")
            prems = [steps[k][0] for k in just.premises]
            if just.name == "nec":
                if len(prems) != 1 or formula != Box(prems[0]):
                    return fail(i, "nec premise does not fit")
            elif just.name in ("mon-box", "mon-dia"):
                wrap = Box if just.name == "mon-box" else Dia
                if (
                    len(prems) != 1
                    or not isinstance(prems[0], Imp)
                    or formula != Imp(wrap(prems[0].left), wrap(prems[0].right))
                ):
                    return fail(i, f"{just.name} premise does not fit")
            else:
                return fail(i, f"rule {just.name!r} has no checker")
        else:
            return fail(i, f"unknown justification {just!r}")
    return HilbertReport(True, None, "accepted")


def _fold_and(formulas):
    formulas = list(formulas)
    acc = formulas[-1]
    for g in reversed(formulas[:-1]):
        acc = And(g, acc)
    return acc


def check_local_derivation(logic, assumptions, conclusion, steps, basis=None) -> HilbertReport:
    """Check local derivability: the steps must derive, without hypotheses,
    the implication from the conjunction of the assumptions to the conclusion."""
    goal = Imp(_fold_and(assumptions), conclusion) if assumptions else conclusion
    report = check_hilbert_derivation(logic, steps, hypotheses=(), basis=basis)
    if not report.ok:
        return report
    if not steps or steps[-1][0] != goal:
        return HilbertReport(False, len(steps) - 1 if steps else None,
                             f"derivation does not end with {pretty(goal)}")
    return report


# ---------------------------------------------------------------------------
# Text format: "index. formula ; justification"

_JUST_RE = re.compile(
    r"^(axiom\s+(?P<ax>[\w-]+)"
    r"|hyp\s+(?P<hyp>\d+)"
    r"|mp\s+(?P<mp1>\d+)\s+(?P<mp2>\d+)"
    r"|(?P<rule>mon-box|mon-dia|nec)\s+(?P<rp>\d+))$"
)


def parse_hilbert_text(text: str) -> list[Step]:
    """Parse the line-oriented derivation format (1-based indices)."""
    steps: list[Step] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        head, sep, just_src = line.partition(";")
        if not sep:
            raise ValueError(f"line {lineno}: missing ';' separator")
        m = re.match(r"^(\d+)\.\s*(.*)$", head.strip())
        if not m:
            raise ValueError(f"line {lineno}: expected 'index. formula'")
        index = int(m.group(1))
        if index != len(steps) + 1:
            raise ValueError(f"line {lineno}: expected index {len(steps) + 1}")
        formula = parse(m.group(2))
        jm = _JUST_RE.match(just_src.strip())
        if not jm:
            raise ValueError(f"line {lineno}: bad justification {just_src.strip()!r}")
        if jm.group("ax"):
            just = ByAxiom(jm.group("ax"))
        elif jm.group("hyp"):
            just = ByHyp(int(jm.group("hyp")) - 1)
        elif jm.group("mp1"):
            just = ByMP(int(jm.group("mp1")) - 1, int(jm.group("mp2")) - 1)
        else:
            just = ByRule(jm.group("rule"), (int(jm.group("rp")) - 1,))
        steps.append((formula, just))
    return steps


def format_hilbert_text(steps) -> str:
    lines = []
    for i, (formula, just) in enumerate(steps):
        if isinstance(just, ByAxiom):
            j = f"axiom {just.name}"
        elif isinstance(just, ByHyp):
            j = f"hyp {just.index + 1}"
        elif isinstance(just, ByMP):
            j = f"mp {just.imp + 1} {just.arg + 1}"
        else:
            j = f"{just.name} {just.premises[0] + 1}"
        lines.append(f"{i + 1}. {pretty(formula)} ; {j}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Proof construction

class ProofBuilder:
    """Assembles checker-ready derivations; every method returns the index of
    the step that proves its result.  Repeated formulas are shared."""

    def __init__(self, basis: Basis, hypotheses=()):
        self.basis = basis
        self.hypotheses = tuple(hypotheses)
        self.steps: list[Step] = []
        self._index: dict = {}

    def formula(self, i: int):
        return self.steps[i][0]

    def _add(self, formula, just) -> int:
        if formula in self._index:
            return self._index[formula]
        self.steps.append((formula, just))
        self._index[formula] = len(self.steps) - 1
        return len(self.steps) - 1

    # primitive steps ------------------------------------------------------

    def ax(self, name: str, **subst) -> int:
        schema = self.basis.axiom(name)
        if schema is None:
            raise ValueError(f"axiom {name!r} not in basis")
        sub = dict(subst)
        return self._add(instantiate(schema, sub), ByAxiom(name, tuple(sorted(sub.items(), key=lambda kv: kv[0]))))

    def hyp(self, k: int) -> int:
        return self._add(self.hypotheses[k], ByHyp(k))

    def mp(self, i: int, j: int) -> int:
        major = self.formula(i)
        if not isinstance(major, Imp) or major.left != self.formula(j):
            raise ValueError("mp premises do not fit")
        return self._add(major.right, ByMP(i, j))

    def mon_box(self, i: int) -> int:
        f = self.formula(i)
        return self._add(Imp(Box(f.left), Box(f.right)), ByRule("mon-box", (i,)))

    def mon_dia(self, i: int) -> int:
        f = self.formula(i)
        return self._add(Imp(Dia(f.left), Dia(f.right)), ByRule("mon-dia", (i,)))

    def nec(self, i: int) -> int:
        return self._add(Box(self.formula(i)), ByRule("nec", (i,)))

    # derived combinators --------------------------------------------------

    def imp_id(self, a) -> int:
        """a -> a"""
        i1 = self.ax("imp-k", A=a, B=Imp(a, a))
        i2 = self.ax("imp-dist", A=a, B=Imp(a, a), C=a)
        i3 = self.mp(i2, i1)
        i4 = self.ax("imp-k", A=a, B=a)
        return self.mp(i3, i4)

    def top(self) -> int:
        return self.imp_id(BOT)

    def add_ante(self, i: int, b) -> int:
        """from X: b -> X"""
        k = self.ax("imp-k", A=self.formula(i), B=b)
        return self.mp(k, i)

    def trans(self, i: int, j: int) -> int:
        """from X -> Y and Y -> Z: X -> Z"""
        x = self.formula(i).left
        fj = self.formula(j)
        t1 = self.add_ante(j, x)
        t2 = self.ax("imp-dist", A=x, B=fj.left, C=fj.right)
        t3 = self.mp(t2, t1)
        return self.mp(t3, i)

    def lcomp(self, i: int, a) -> int:
        """from Y -> Z: (a -> Y) -> (a -> Z)"""
        fi = self.formula(i)
        l1 = self.add_ante(i, a)
        l2 = self.ax("imp-dist", A=a, B=fi.left, C=fi.right)
        return self.mp(l2, l1)

    def swap(self, i: int) -> int:
        """from X -> (Y -> Z): Y -> (X -> Z)"""
        fi = self.formula(i)
        x, y, z = fi.left, fi.right.left, fi.right.right
        s1 = self.ax("imp-dist", A=x, B=y, C=z)
        s2 = self.mp(s1, i)
        s3 = self.ax("imp-k", A=y, B=x)
        return self.trans(s3, s2)

    def comp_thm(self, a, b, c) -> int:
        """(a -> b) -> ((b -> c) -> (a -> c))"""
        t1 = self.ax("imp-k", A=Imp(b, c), B=a)
        t2 = self.ax("imp-dist", A=a, B=b, C=c)
        t3 = self.trans(t1, t2)
        return self.swap(t3)

    def contrapose_thm(self, a, b) -> int:
        """(a -> b) -> (~b -> ~a)"""
        return self.comp_thm(a, b, BOT)

    def rcomp(self, i: int, c) -> int:
        """from X -> Y: (Y -> c) -> (X -> c)"""
        fi = self.formula(i)
        return self.mp(self.comp_thm(fi.left, fi.right, c), i)

    def contrapose(self, i: int) -> int:
        return self.rcomp(i, BOT)

    def discharge(self, i: int, j: int) -> int:
        """from X -> (W -> V) and W: X -> V"""
        fi = self.formula(i)
        g1 = self.ax("imp-dist", A=fi.left, B=fi.right.left, C=fi.right.right)
        g2 = self.mp(g1, i)
        g3 = self.add_ante(j, fi.left)
        return self.mp(g2, g3)

    def pair(self, i: int, j: int) -> int:
        """from X -> A and X -> B: X -> A & B"""
        fi, fj = self.formula(i), self.formula(j)
        p1 = self.ax("and-pair", A=fi.left, B=fi.right, C=fj.right)
        return self.mp(self.mp(p1, i), j)

    def conj(self, i: int, j: int) -> int:
        """from P and Q: P & Q"""
        p = self.formula(i)
        c1 = self.imp_id(p)
        c2 = self.add_ante(j, p)
        return self.mp(self.pair(c1, c2), i)

    def imp_and(self, i: int) -> int:
        """importation: from X -> (Y -> Z): X & Y -> Z"""
        fi = self.formula(i)
        x, y, z = fi.left, fi.right.left, fi.right.right
        m1 = self.ax("and-el", A=x, B=y)
        m2 = self.ax("and-er", A=x, B=y)
        m3 = self.trans(m1, i)
        m4 = self.ax("imp-dist", A=And(x, y), B=y, C=z)
        return self.mp(self.mp(m4, m3), m2)

    def and_curry(self, x, y) -> int:
        """x -> (y -> x & y)"""
        n1 = self.ax("and-pair", A=y, B=x, C=y)
        n2 = self.swap(n1)
        n3 = self.mp(n2, self.imp_id(y))
        n4 = self.ax("imp-k", A=x, B=y)
        return self.trans(n4, n3)

    def and_exp(self, i: int) -> int:
        """exportation: from X & Y -> Z: X -> (Y -> Z)"""
        fi = self.formula(i)
        x, y = fi.left.left, fi.left.right
        x1 = self.and_curry(x, y)
        x2 = self.lcomp(i, y)
        return self.trans(x1, x2)

    def dni(self, a) -> int:
        """a -> ~~a"""
        return self.swap(self.imp_id(neg(a)))

    def dne(self, a) -> int:
        """~~a -> a  (needs efq and em)"""
        q1 = self.ax("efq", A=a)
        q2 = self.lcomp(q1, neg(a))
        q3 = self.ax("or-case", A=a, B=neg(a), C=a)
        q4 = self.mp(q3, self.imp_id(a))
        q5 = self.trans(q2, q4)
        return self.discharge(q5, self.ax("em", A=a))

    def iff_elim_l(self, i: int) -> int:
        fi = self.formula(i)
        return self.mp(self.ax("and-el", A=fi.left, B=fi.right), i)

    def iff_elim_r(self, i: int) -> int:
        fi = self.formula(i)
        return self.mp(self.ax("and-er", A=fi.left, B=fi.right), i)

    def refute_pair(self, i: int, j: int) -> int:
        """from X -> Y and X -> ~Y: ~X"""
        fi = self.formula(i)
        g1 = self.ax("imp-dist", A=fi.left, B=fi.right, C=BOT)
        return self.mp(self.mp(g1, j), i)


# ---------------------------------------------------------------------------
# Stored witnesses

P_, Q_ = Atom("p"), Atom("q")


def _dia_from_not_box_not(b: ProofBuilder, i: int) -> int:
    """from X -> ~box ~a: X -> dia a (via the diamond duality axiom)"""
    target = self.formula(i) if False else b.formula(i)
    a = target.right.left.body.left  # X -> ((box ~a) -> bot)
    d = b.iff_elim_r(b.ax("dual-dia", A=a))
    return b.trans(i, d)


def witness_p_dia(b: ProofBuilder) -> int:
    """dia top, in a system that derives it."""
    if b.basis.axiom("t-dia") is not None:
        inst = b.ax("t-dia", A=TOP)
        return b.mp(inst, b.top())
    # via box top and the d axiom
    if b.basis.axiom("n-box") is not None:
        box_top = b.ax("n-box")
    elif b.basis.has_rule("nec"):
        box_top = b.nec(b.top())
    else:
        raise ValueError("no route to box top")
    return b.mp(b.ax("d", A=TOP), box_top)


def witness_d_from_t(b: ProofBuilder) -> int:
    """box p -> dia p from the two t axioms."""
    return b.trans(b.ax("t-box", A=P_), b.ax("t-dia", A=P_))


def witness_n_box_via_nec(b: ProofBuilder) -> int:
    return b.nec(b.top())


def witness_c_box_via_nec(b: ProofBuilder) -> int:
    """box p & box q -> box (p & q) with nec and the box K axiom."""
    c1 = b.and_curry(P_, Q_)
    c2 = b.nec(c1)
    c3 = b.ax("k-box", A=P_, B=Imp(Q_, And(P_, Q_)))
    c4 = b.mp(c3, c2)
    c5 = b.ax("k-box", A=Q_, B=And(P_, Q_))
    c6 = b.lcomp(c5, Box(P_))
    c7 = b.mp(c6, c4)
    return b.imp_and(c7)


def witness_k_box_via_mon_c(b: ProofBuilder) -> int:
    """box (p -> q) -> (box p -> box q) with mon-box and the box C axiom."""
    x = And(Imp(P_, Q_), P_)
    e1 = b.ax("and-el", A=Imp(P_, Q_), B=P_)
    e2 = b.ax("and-er", A=Imp(P_, Q_), B=P_)
    e3 = b.ax("imp-dist", A=x, B=P_, C=Q_)
    k1 = b.mp(b.mp(e3, e1), e2)
    k2 = b.mon_box(k1)
    k3 = b.ax("c-box", A=Imp(P_, Q_), B=P_)
    k4 = b.trans(k3, k2)
    return b.and_exp(k4)


def witness_mon_box_rule(b: ProofBuilder) -> int:
    """hypothesis p -> q yields box p -> box q, with nec and k-box."""
    h = b.hyp(0)
    return b.mp(b.ax("k-box", A=P_, B=Q_), b.nec(h))


def witness_mon_dia_rule(b: ProofBuilder) -> int:
    h = b.hyp(0)
    return b.mp(b.ax("k-dia", A=P_, B=Q_), b.nec(h))


def witness_nec_rule(b: ProofBuilder) -> int:
    """hypothesis p yields box p, with mon-box and n-box."""
    h = b.hyp(0)
    t1 = b.add_ante(h, TOP)
    m = b.mon_box(t1)
    return b.mp(m, b.ax("n-box"))


def witness_mon_dia_classical(b: ProofBuilder) -> int:
    """hypothesis p -> q yields dia p -> dia q, via duality and mon-box."""
    h = b.hyp(0)
    c1 = b.mp(b.contrapose_thm(P_, Q_), h)          # ~q -> ~p
    m = b.mon_box(c1)                               # box ~q -> box ~p
    c2 = b.mp(b.contrapose_thm(Box(neg(Q_)), Box(neg(P_))), m)  # ~box ~p -> ~box ~q
    z6 = b.iff_elim_l(b.ax("dual-dia", A=P_))       # dia p -> ~box ~p
    z7 = b.iff_elim_r(b.ax("dual-dia", A=Q_))       # ~box ~q -> dia q
    return b.trans(b.trans(z6, c2), z7)


def witness_k_dia_classical(b: ProofBuilder) -> int:
    """box (p -> q) -> (dia p -> dia q), via duality, mon-box and c-box."""
    x = And(Imp(P_, Q_), neg(Q_))
    e1 = b.ax("and-el", A=Imp(P_, Q_), B=neg(Q_))
    e2 = b.ax("and-er", A=Imp(P_, Q_), B=neg(Q_))
    t = b.comp_thm(P_, Q_, BOT)                      # (p->q) -> (~q -> ~p)
    z0 = b.trans(e1, t)                              # x -> (~q -> ~p)
    z1 = b.mp(b.mp(b.ax("imp-dist", A=x, B=neg(Q_), C=neg(P_)), z0), e2)  # x -> ~p
    z2 = b.mon_box(z1)
    z3 = b.ax("c-box", A=Imp(P_, Q_), B=neg(Q_))
    z4 = b.trans(z3, z2)                             # box(p->q) & box ~q -> box ~p
    z5a = b.and_exp(z4)                              # box(p->q) -> (box ~q -> box ~p)
    contr = b.contrapose_thm(Box(neg(Q_)), Box(neg(P_)))
    z5 = b.trans(z5a, contr)                         # box(p->q) -> (~box ~p -> ~box ~q)
    z6 = b.iff_elim_l(b.ax("dual-dia", A=P_))        # dia p -> ~box ~p
    z7 = b.iff_elim_r(b.ax("dual-dia", A=Q_))        # ~box ~q -> dia q
    c2 = b.rcomp(z6, neg(Box(neg(Q_))))              # (~box~p -> ~box~q) -> (dia p -> ~box~q)
    c3 = b.trans(z5, c2)
    c4 = b.lcomp(z7, Dia(P_))
    return b.trans(c3, c4)


def witness_p_box_classical(b: ProofBuilder) -> int:
    """~box bot, in a classical system with the d axiom."""
    d1 = b.ax("d", A=BOT)
    d2 = b.iff_elim_l(b.ax("dual-dia", A=BOT))       # dia bot -> ~box ~bot
    d3 = b.trans(d1, d2)                             # box bot -> (box top -> bot)
    d4 = b.ax("imp-k", A=BOT, B=BOT)                 # bot -> top
    d5 = b.mon_box(d4)                               # box bot -> box top
    d6 = b.ax("imp-dist", A=Box(BOT), B=Box(TOP), C=BOT)
    return b.mp(b.mp(d6, d3), d5)


def witness_p_dia_classical(b: ProofBuilder) -> int:
    """dia top, in a classical system where ~box bot is available."""
    if b.basis.axiom("p-box") is not None:
        pbox = b.ax("p-box")
    else:
        pbox = witness_p_box_classical(b)
    nn = b.mp(b.dni(TOP), b.top())                   # ~top -> bot
    m = b.mon_box(nn)                                # box ~top -> box bot
    ct = b.mp(b.contrapose_thm(Box(neg(TOP)), Box(BOT)), m)
    nbn = b.mp(ct, pbox)                             # ~box ~top
    return b.mp(b.iff_elim_r(b.ax("dual-dia", A=TOP)), nbn)


def witness_t_dia_classical(b: ProofBuilder) -> int:
    """p -> dia p, in a classical system with t-box."""
    t1 = b.ax("t-box", A=neg(P_))                    # box ~p -> ~p
    t2 = b.mp(b.contrapose_thm(Box(neg(P_)), neg(P_)), t1)  # ~~p -> ~box ~p
    t4 = b.trans(b.dni(P_), t2)                      # p -> ~box ~p
    t5 = b.iff_elim_r(b.ax("dual-dia", A=P_))
    return b.trans(t4, t5)


def witness_d_classical_t(b: ProofBuilder) -> int:
    """box p -> dia p, in a classical system with t-box."""
    return b.trans(b.ax("t-box", A=P_), witness_t_dia_classical(b))


def witness_mnc_classical(b: ProofBuilder) -> int:
    """~(box p & dia ~p), in a classical normal system."""
    x = And(Box(P_), Dia(neg(P_)))
    e1 = b.ax("and-el", A=Box(P_), B=Dia(neg(P_)))
    e2 = b.ax("and-er", A=Box(P_), B=Dia(neg(P_)))
    dl = b.iff_elim_l(b.ax("dual", A=P_))            # box p -> ~dia ~p
    z1 = b.trans(e1, dl)                             # x -> ~dia ~p
    return b.refute_pair(b.trans(e2, b.imp_id(Dia(neg(P_)))), z1) if False else \
        b.refute_pair(e2, z1)


def witness_d_from_p_box_hyp(b: ProofBuilder) -> int:
    """hypothesis ~box bot yields box p -> dia p, with mon-box and c-box."""
    h = b.hyp(0)
    e1 = b.ax("and-el", A=P_, B=neg(P_))
    e2 = b.ax("and-er", A=P_, B=neg(P_))
    c1 = b.mp(b.mp(b.ax("imp-dist", A=And(P_, neg(P_)), B=P_, C=BOT), e2), e1)  # p & ~p -> bot
    c2 = b.mon_box(c1)
    c3 = b.ax("c-box", A=P_, B=neg(P_))
    c5 = b.trans(b.trans(c3, c2), h)                 # box p & box ~p -> bot
    c6 = b.and_exp(c5)                               # box p -> ~box ~p
    c7 = b.iff_elim_r(b.ax("dual-dia", A=P_))
    return b.trans(c6, c7)


# The alternative normal-kernel presentation: mon rules, the C axiom pair
# and box top, used to cross-validate the registered K-pair presentation.
MK_MONOTONE_BASIS = Basis.named(
    ("and-el", "and-er", "or-il", "or-ir", "and-pair", "or-case", "imp-dist",
     "imp-k", "c-box", "k-dia", "n-box"),
    ("mp", "mon-box", "mon-dia"),
)


def _needs(src_items, dst_items):
    dst_names = {x.name for x in dst_items}
    return [x for x in src_items if x.name not in dst_names]


def edge_witnesses(src: LogicId, dst: LogicId):
    """For a direct inclusion edge, derivations (in dst) of every axiom and
    rule of src that is not literally part of dst.  Axiom witnesses are
    representative instances over p, q; rule witnesses carry hypotheses.

    Returns a list of (item_name, hypotheses, steps, final_formula).
    """
    dst_basis = Basis.for_logic(dst)
    out = []
    for schema in _needs(axioms_of(src), dst_basis.axioms):
        b = ProofBuilder(dst_basis)
        idx = _AXIOM_WITNESSES[schema.name](b)
        out.append((schema.name, (), b.steps, b.formula(idx)))
    for rule in _needs(rules_of(src), dst_basis.rules):
        hyps, fn = _RULE_WITNESSES[rule.name]
        b = ProofBuilder(dst_basis, hypotheses=hyps)
        idx = fn(b)
        out.append((rule.name, hyps, b.steps, b.formula(idx)))
    return out


def _axiom_witness_p_dia(b: ProofBuilder) -> int:
    if b.basis.axiom("dual-dia") is not None:
        return witness_p_dia_classical(b)
    return witness_p_dia(b)


def _axiom_witness_d(b: ProofBuilder) -> int:
    if b.basis.axiom("dual-dia") is not None:
        return witness_d_classical_t(b)
    return witness_d_from_t(b)


_AXIOM_WITNESSES = {
    "p-dia": _axiom_witness_p_dia,
    "p-box": witness_p_box_classical,
    "d": _axiom_witness_d,
    "n-box": witness_n_box_via_nec,
    "c-box": witness_c_box_via_nec,
    "k-box": witness_k_box_via_mon_c,
    "k-dia": witness_k_dia_classical,
    "t-dia": witness_t_dia_classical,
    "mnc": witness_mnc_classical,
}

_RULE_WITNESSES = {
    "mon-box": ((Imp(P_, Q_),), witness_mon_box_rule),
    "mon-dia": ((Imp(P_, Q_),),
                lambda b: witness_mon_dia_classical(b)
                if b.basis.axiom("dual-dia") is not None
                else witness_mon_dia_rule(b)),
    "nec": ((P_,), witness_nec_rule),
}
