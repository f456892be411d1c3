"""Derivations, the rule checker and backward proof search.

The ten rules are stored as schemas over the metavariables a, b, c, d. The
checker matches a node's conclusion and premises against its rule's schema
with one consistent assignment; backward expansion matches a sequent against
each conclusion pattern and instantiates the premises. Both therefore read
the same table and cannot drift apart.

Search always terminates. Read backwards no rule adds an & occurrence, and a
premise is only generated when its orthocomplement count (both sides) stays
within the root's count plus ``ortho_slack``, so the reachable space is
finite. It is explored once, then ranked bottom-up by the height of the
shortest derivation; cycles simply never receive a rank.

Premises that fail in the pruning model (``prune_model``, MO2 by default)
are never generated. Every rule is sound in orthomodular lattices, so no
derivation is lost. Ranked sequents are kept per weight limit and pruning
model and reused by later queries.
"""

import heapq
import sys
from dataclasses import dataclass, field
from enum import Enum
from itertools import count
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from src.lattice.catalog import DEFAULT_COUNTERMODEL_CATALOG, get_structure
from src.lattice.lattice import OrthoposetError
from src.logging_config import get_logger
from src.metrics import (
    derivation_check_duration_seconds,
    measure_duration,
    proof_search_duration_seconds,
    search_nodes_total,
)
from src.semantics.semantics import Countermodel, Refuter, SemanticsError, find_countermodel
from src.settings import Settings, load_settings
from src.terms.terms import (
    Atom,
    Ortho,
    Sasaki,
    Sequent,
    Term,
    atoms,
    format_sequent,
    ortho_count,
    sequent_from_json,
    sequent_to_json,
    subterms,
)

logger = get_logger(__name__)

INF = float("inf")


class Rule(str, Enum):
    A = "A"
    S = "S"
    G = "G"
    N_L = "N_L"
    N_R = "N_R"
    T = "T"
    O_L = "O_L"
    O_R = "O_R"
    R = "R"
    M = "M"


class ProofError(Exception):
    """Base class for derivation and search errors."""


class DerivationError(ProofError):
    """A node does not instantiate its rule.

    Attributes:
        path (Tuple[int, ...]): Premise indices from the root to the node.
        expected (str): The rule schema, printed.
    """

    def __init__(self, path: Tuple[int, ...], message: str, expected: str = ""):
        self.path = path
        self.expected = expected
        where = "root" + "".join(f"/{i}" for i in path)
        suffix = f"; expected {expected}" if expected else ""
        super().__init__(f"At {where}: {message}{suffix}")


class DerivationFormatError(ProofError):
    """A proof file is not a well-formed derivation tree."""


class SearchBudgetExceeded(ProofError):
    """The search hit its node or depth budget before closing the space."""

    def __init__(self, sequent: Sequent, reason: str, limit: int, nodes: int):
        self.sequent, self.reason, self.limit, self.nodes = sequent, reason, limit, nodes
        super().__init__(f"Search for {format_sequent(sequent)} exceeded {reason} budget {limit} after {nodes} nodes")


# Rule schemas


@dataclass(frozen=True)
class Meta:
    """Metavariable in a rule schema."""

    name: str


@dataclass(frozen=True)
class Schema:
    premises: Tuple[Sequent, ...]
    conclusion: Sequent


_a, _b, _c, _d = (Meta(x) for x in "abcd")

RULE_SCHEMAS: Dict[Rule, Schema] = {
    Rule.A: Schema((), Sequent(_a, _a)),
    Rule.S: Schema((Sequent(Ortho(_b), Ortho(_a)),), Sequent(_a, _b)),
    Rule.G: Schema((Sequent(Sasaki(Ortho(_c), _b), Ortho(_a)),), Sequent(Sasaki(_a, _b), _c)),
    Rule.N_L: Schema((Sequent(_a, _b),), Sequent(Ortho(Ortho(_a)), _b)),
    Rule.N_R: Schema((Sequent(_a, _b),), Sequent(_a, Ortho(Ortho(_b)))),
    Rule.T: Schema((Sequent(_a, _b), Sequent(_b, _c)), Sequent(_a, _c)),
    Rule.O_L: Schema((Sequent(_a, _b), Sequent(_a, _c)), Sequent(Sasaki(_a, _b), _c)),
    Rule.O_R: Schema((Sequent(_a, _b), Sequent(_a, _c)), Sequent(_a, Sasaki(_b, _c))),
    Rule.R: Schema((Sequent(_b, _c),), Sequent(Sasaki(_a, _b), _c)),
    Rule.M: Schema(
        (Sequent(_a, _c), Sequent(_b, _d), Sequent(_d, _b)),
        Sequent(Sasaki(_a, _b), Sasaki(_c, _d)),
    ),
}

ARITY: Dict[Rule, int] = {rule: len(schema.premises) for rule, schema in RULE_SCHEMAS.items()}

# Axioms and &-decreasing rules first, structural rules last.
SEARCH_ORDER: Tuple[Rule, ...] = (
    Rule.A,
    Rule.R,
    Rule.O_L,
    Rule.O_R,
    Rule.M,
    Rule.G,
    Rule.N_L,
    Rule.N_R,
    Rule.S,
)


def _match(pattern, term: Term, bindings: Dict[str, Term]) -> bool:
    if isinstance(pattern, Meta):
        bound = bindings.get(pattern.name)
        if bound is None:
            bindings[pattern.name] = term
            return True
        return bound == term
    if isinstance(pattern, Ortho):
        return isinstance(term, Ortho) and _match(pattern.inner, term.inner, bindings)
    if isinstance(pattern, Sasaki):
        return (
            isinstance(term, Sasaki)
            and _match(pattern.left, term.left, bindings)
            and _match(pattern.right, term.right, bindings)
        )
    return pattern == term


def _match_sequent(pattern: Sequent, s: Sequent, bindings: Dict[str, Term]) -> bool:
    return _match(pattern.lhs, s.lhs, bindings) and _match(pattern.rhs, s.rhs, bindings)


def _instantiate(pattern, bindings: Dict[str, Term]) -> Term:
    if isinstance(pattern, Meta):
        return bindings[pattern.name]
    if isinstance(pattern, Ortho):
        return Ortho(_instantiate(pattern.inner, bindings))
    if isinstance(pattern, Sasaki):
        return Sasaki(_instantiate(pattern.left, bindings), _instantiate(pattern.right, bindings))
    return pattern


def _instantiate_sequent(pattern: Sequent, bindings: Dict[str, Term]) -> Sequent:
    return Sequent(_instantiate(pattern.lhs, bindings), _instantiate(pattern.rhs, bindings))


def instantiate_schema(rule: Rule, bindings: Dict[str, Term]) -> Tuple[Tuple[Sequent, ...], Sequent]:
    """Premises and conclusion of ``rule`` with metavariables a, b, c, d replaced by ``bindings``."""
    schema = RULE_SCHEMAS[rule]
    premises = tuple(_instantiate_sequent(p, bindings) for p in schema.premises)
    return premises, _instantiate_sequent(schema.conclusion, bindings)


def format_schema(rule: Rule) -> str:
    """Print a schema as ``premise, premise / conclusion``."""
    schema = RULE_SCHEMAS[rule]
    names = {m: Atom(m) for m in "abcd"}
    premises = ", ".join(format_sequent(_instantiate_sequent(p, names)) for p in schema.premises)
    return f"{premises} / {format_sequent(_instantiate_sequent(schema.conclusion, names))} ({rule.value})"


# Derivations


@dataclass(frozen=True)
class Derivation:
    """A rule node or a hypothesis leaf (``hypothesis`` set, ``rule`` None)."""

    conclusion: Sequent
    rule: Optional[Rule] = None
    premises: Tuple["Derivation", ...] = ()
    hypothesis: Optional[str] = None

    @classmethod
    def hyp(cls, label: str, conclusion: Sequent) -> "Derivation":
        return cls(conclusion, hypothesis=label)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"conclusion": sequent_to_json(self.conclusion)}
        if self.hypothesis is not None:
            data["hyp"] = self.hypothesis
        else:
            data["rule"] = self.rule.value if self.rule else None
            data["premises"] = [p.to_dict() for p in self.premises]
        return data

    @staticmethod
    def from_dict(data: Any) -> "Derivation":
        if not isinstance(data, dict) or "conclusion" not in data:
            raise DerivationFormatError(f"Derivation node needs a 'conclusion', got {data!r}")
        conclusion = sequent_from_json(data["conclusion"])
        if "hyp" in data:
            if data.get("premises"):
                raise DerivationFormatError("Hypothesis leaves take no premises")
            return Derivation.hyp(str(data["hyp"]), conclusion)
        try:
            rule = Rule(data.get("rule"))
        except ValueError:
            raise DerivationFormatError(f"Unknown rule {data.get('rule')!r}")
        premises = data.get("premises", [])
        if not isinstance(premises, list):
            raise DerivationFormatError("'premises' must be a list")
        return Derivation(conclusion, rule, tuple(Derivation.from_dict(p) for p in premises))


def rule_trace(d: Derivation) -> List[str]:
    """Rule names in pre-order; hypothesis leaves appear as ``hyp:<label>``."""
    head = f"hyp:{d.hypothesis}" if d.hypothesis is not None else d.rule.value
    return [head] + [name for p in d.premises for name in rule_trace(p)]


def format_derivation(d: Derivation, indent: str = "") -> str:
    """Indented tree, conclusion first, with the rule label on each line."""
    label = f"hyp {d.hypothesis}" if d.hypothesis is not None else d.rule.value
    lines = [f"{indent}{format_sequent(d.conclusion)}   [{label}]"]
    lines += [format_derivation(p, indent + "  ") for p in d.premises]
    return "\n".join(lines)


def derivation_height(d: Derivation) -> int:
    return 1 + max((derivation_height(p) for p in d.premises), default=0)


@dataclass
class CheckResult:
    """A derivation that checked; ``open_hypotheses`` lists (label, sequent) leaves in order."""

    open_hypotheses: List[Tuple[str, Sequent]] = field(default_factory=list)
    nodes: int = 0

    @property
    def closed(self) -> bool:
        return not self.open_hypotheses


@measure_duration(derivation_check_duration_seconds)
def check_derivation(d: Derivation, allow_T: bool = False) -> CheckResult:
    """Verify that every node instantiates its rule.

    Args:
        d (Derivation): Tree to check.
        allow_T (bool): Accept T (cut) nodes.

    Returns:
        CheckResult: The open hypothesis leaves.

    Raises:
        DerivationError: First failing node in pre-order, with its path.
    """
    result = CheckResult()

    def visit(node: Derivation, path: Tuple[int, ...]):
        result.nodes += 1
        if node.hypothesis is not None:
            if node.premises:
                raise DerivationError(path, "hypothesis leaf has premises")
            result.open_hypotheses.append((node.hypothesis, node.conclusion))
            return
        if node.rule is None:
            raise DerivationError(path, "node has neither rule nor hypothesis label")
        rule = Rule(node.rule)
        if rule is Rule.T and not allow_T:
            raise DerivationError(path, "rule T is not allowed in RSOL/T", format_schema(rule))
        schema = RULE_SCHEMAS[rule]
        if len(node.premises) != len(schema.premises):
            raise DerivationError(
                path, f"rule {rule.value} takes {len(schema.premises)} premises, got {len(node.premises)}",
                format_schema(rule),
            )
        bindings: Dict[str, Term] = {}
        if not _match_sequent(schema.conclusion, node.conclusion, bindings):
            raise DerivationError(
                path, f"conclusion {format_sequent(node.conclusion)} does not fit rule {rule.value}",
                format_schema(rule),
            )
        for i, (pattern, premise) in enumerate(zip(schema.premises, node.premises)):
            if not _match_sequent(pattern, premise.conclusion, bindings):
                raise DerivationError(
                    path, f"premise {i} {format_sequent(premise.conclusion)} does not fit rule {rule.value}",
                    format_schema(rule),
                )
        for i, premise in enumerate(node.premises):
            visit(premise, path + (i,))

    visit(d, ())
    return result


# Backward expansion


@dataclass(frozen=True)
class Expansion:
    rule: Rule
    premises: Tuple[Sequent, ...]


def backward_expand(s: Sequent, rules: Sequence[Rule] = SEARCH_ORDER) -> List[Expansion]:
    """Every instance of ``rules`` (in order) whose conclusion is s.

    T is never produced here: its middle term is not determined by s.
    """
    expansions = []
    for rule in rules:
        if rule is Rule.T:
            continue
        schema = RULE_SCHEMAS[rule]
        bindings: Dict[str, Term] = {}
        if _match_sequent(schema.conclusion, s, bindings):
            premises = tuple(_instantiate_sequent(p, bindings) for p in schema.premises)
            expansions.append(Expansion(rule, premises))
    return expansions


def default_cut_terms(s: Sequent) -> List[Term]:
    """Subterms of both sides and their single orthocomplements, in first-seen order."""
    terms: Dict[Term, None] = {}
    for t in subterms(s.lhs) + subterms(s.rhs):
        terms.setdefault(t, None)
    for t in list(terms):
        terms.setdefault(Ortho(t), None)
    return list(terms)


# Search


class ProofStatus(str, Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    EXHAUSTED = "exhausted"


@dataclass
class SearchStats:
    """Counters for one ``prove`` call; ``max_depth`` is the height of the returned derivation."""

    nodes_visited: int = 0
    memo_size: int = 0
    max_depth: int = 0
    pruned: int = 0
    refuted: int = 0

    def to_dict(self) -> Dict[str, int]:
        return {
            "nodes_visited": self.nodes_visited,
            "memo_size": self.memo_size,
            "max_depth": self.max_depth,
            "pruned": self.pruned,
            "refuted": self.refuted,
        }


@dataclass
class ProofResult:
    """Proved(derivation), Refuted(countermodel) or Exhausted (with the searched space when refutation ran)."""

    status: ProofStatus
    sequent: Sequent
    derivation: Optional[Derivation] = None
    countermodel: Any = None
    not_found: Any = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def proved(self) -> bool:
        return self.status is ProofStatus.PROVED

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"result": self.status.value, "sequent": format_sequent(self.sequent)}
        if self.derivation is not None:
            data["rule_trace"] = rule_trace(self.derivation)
            data["derivation"] = self.derivation.to_dict()
        if self.countermodel is not None:
            data.update(self.countermodel.to_dict())
        if self.not_found is not None:
            data["search_space"] = self.not_found.to_dict()
        data["stats"] = self.stats.to_dict()
        return data


def sequent_weight(s: Sequent) -> int:
    """Orthocomplement occurrences on both sides of s."""
    return ortho_count(s.lhs) + ortho_count(s.rhs)


@dataclass
class _Node:
    rank: float
    choice: Optional[Expansion] = None


@dataclass
class _Layer:
    """Settled sequents for one weight limit and one pruning model."""

    limit: int
    nodes: Dict[Sequent, _Node] = field(default_factory=dict)
    derivations: Dict[Sequent, Derivation] = field(default_factory=dict)


class ProofSearch:
    """Backward search whose results persist across ``prove`` calls.

    One instance searches one rule set: RSOL/T by default, or RSOL/T with T
    applied at the conclusion end when ``allow_cut`` is set. Cut middles range
    over ``cut_terms`` (default: per query, ``default_cut_terms``) and cuts
    nest at most ``cut_depth`` deep.

    Pass ``share`` to reuse another instance's settled layers and pruning
    models; both must run on the same settings.
    """

    def __init__(
        self,
        settings: Optional[Settings] = None,
        allow_cut: bool = False,
        cut_terms: Optional[Sequence[Term]] = None,
        cut_depth: Optional[int] = None,
        share: Optional["ProofSearch"] = None,
    ):
        self.settings = settings or load_settings()
        self.allow_cut = allow_cut
        self.fixed_cut_terms = tuple(cut_terms) if cut_terms is not None else None
        self.cut_depth = self.settings.cut_depth if cut_depth is None else cut_depth
        self._layers: Dict[Tuple[int, Optional[Refuter]], _Layer] = share._layers if share else {}
        self._refuters: Dict[Tuple[str, Tuple[str, ...]], Optional[Refuter]] = share._refuters if share else {}
        self._cut_failed: set = set()
        self._cut_terms: Tuple[Term, ...] = ()
        self._stats = SearchStats()
        self._root: Optional[Sequent] = None

    @property
    def memo_size(self) -> int:
        return sum(len(layer.nodes) for layer in self._layers.values())

    def limit_for(self, s: Sequent) -> int:
        return sequent_weight(s) + self.settings.ortho_slack

    def refuter_for(self, s: Sequent) -> Optional[Refuter]:
        """The pruning model for s's atoms, or None when pruning is off or unusable."""
        model = self.settings.prune_model
        if not model:
            return None
        key = (model, tuple(atoms(s)))
        if key in self._refuters:
            return self._refuters[key]
        refuter = None
        try:
            poset = get_structure(model)
            valuations = poset.n ** len(key[1])
            if valuations > self.settings.max_valuations:
                logger.warning(f"Not pruning with {model}: {valuations} valuations exceed budget {self.settings.max_valuations}")
            else:
                refuter = Refuter(poset, key[1])
        except (OrthoposetError, SemanticsError) as e:
            logger.warning(f"Not pruning with {model}: {e}")
        self._refuters[key] = refuter
        return refuter

    def _admissible(self, s: Sequent, limit: int, refuter: Optional[Refuter]) -> bool:
        if sequent_weight(s) > limit:
            self._stats.pruned += 1
            return False
        if refuter is not None and refuter.refutes(s):
            self._stats.refuted += 1
            return False
        return True

    def _visit(self) -> None:
        self._stats.nodes_visited += 1
        if self._stats.nodes_visited > self.settings.node_budget:
            raise SearchBudgetExceeded(self._root, "node", self.settings.node_budget, self._stats.nodes_visited)

    def _explore(self, layer: _Layer, start: Sequent, refuter: Optional[Refuter]) -> Dict[Sequent, List[Expansion]]:
        """Every sequent reachable from start that the layer has not settled, with its admissible expansions."""
        pending: Dict[Sequent, List[Expansion]] = {}
        stack = [start]
        while stack:
            s = stack.pop()
            if s in pending or s in layer.nodes:
                continue
            self._visit()
            kept = []
            for expansion in backward_expand(s):
                if all(self._admissible(p, layer.limit, refuter) for p in expansion.premises):
                    kept.append(expansion)
                    stack.extend(p for p in expansion.premises if p not in pending and p not in layer.nodes)
            pending[s] = kept
        return pending

    @staticmethod
    def _settle(layer: _Layer, pending: Dict[Sequent, List[Expansion]]) -> None:
        """Rank each pending sequent by the height of its shortest derivation (INF if none).

        Expansions fire once all their premises are ranked, lowest rank first,
        so the first rank a sequent receives is final.
        """
        tiebreak = count()
        heap: List[Tuple[float, int, Sequent]] = []
        watchers: Dict[Sequent, List[Tuple[Sequent, List]]] = {}
        for s, expansions in pending.items():
            for expansion in expansions:
                premises = set(expansion.premises)
                settled = [layer.nodes[p].rank for p in premises if p not in pending]
                if INF in settled:
                    continue
                # [premises still unranked, highest premise rank so far]
                waiting = [len(premises) - len(settled), max(settled, default=0)]
                if waiting[0] == 0:
                    heapq.heappush(heap, (waiting[1] + 1, next(tiebreak), s))
                for p in premises:
                    if p in pending:
                        watchers.setdefault(p, []).append((s, waiting))

        ranks: Dict[Sequent, float] = {}
        while heap:
            rank, _, s = heapq.heappop(heap)
            if s in ranks:
                continue
            ranks[s] = rank
            for conclusion, waiting in watchers.get(s, ()):
                waiting[0] -= 1
                waiting[1] = max(waiting[1], rank)
                if waiting[0] == 0 and conclusion not in ranks:
                    heapq.heappush(heap, (waiting[1] + 1, next(tiebreak), conclusion))

        def rank_of(p: Sequent) -> float:
            return ranks.get(p, INF) if p in pending else layer.nodes[p].rank

        for s, expansions in pending.items():
            rank = ranks.get(s, INF)
            choice = None
            if rank < INF:
                # First expansion in search order whose premises are all strictly lower.
                choice = next(e for e in expansions if all(rank_of(p) < rank for p in e.premises))
            layer.nodes[s] = _Node(rank, choice)

    def _derivation(self, layer: _Layer, s: Sequent) -> Derivation:
        found = layer.derivations.get(s)
        if found is None:
            choice = layer.nodes[s].choice
            found = Derivation(s, choice.rule, tuple(self._derivation(layer, p) for p in choice.premises))
            layer.derivations[s] = found
        return found

    def _prove_plain(self, s: Sequent, refuter: Optional[Refuter]) -> Optional[Derivation]:
        limit = self.limit_for(s)
        layer = self._layers.setdefault((limit, refuter), _Layer(limit))
        if s not in layer.nodes:
            self._settle(layer, self._explore(layer, s, refuter))
        rank = layer.nodes[s].rank
        if rank == INF:
            return None
        if rank > self.settings.max_depth:
            raise SearchBudgetExceeded(self._root, "depth", self.settings.max_depth, self._stats.nodes_visited)
        self._stats.max_depth = max(self._stats.max_depth, int(rank))
        return self._derivation(layer, s)

    def _prove_cut(self, s: Sequent, depth: int, limit: int, refuter: Optional[Refuter]) -> Optional[Derivation]:
        found = self._prove_plain(s, refuter)
        if found is not None or depth <= 0:
            return found
        key = (limit, depth, s)
        if key in self._cut_failed:
            return None
        for middle in self._cut_terms:
            if middle == s.lhs or middle == s.rhs:
                continue
            left, right = Sequent(s.lhs, middle), Sequent(middle, s.rhs)
            if not (self._admissible(left, limit, refuter) and self._admissible(right, limit, refuter)):
                continue
            self._visit()
            left_proof = self._prove_cut(left, depth - 1, limit, refuter)
            if left_proof is None:
                continue
            right_proof = self._prove_cut(right, depth - 1, limit, refuter)
            if right_proof is not None:
                return Derivation(s, Rule.T, (left_proof, right_proof))
        self._cut_failed.add(key)
        return None

    @measure_duration(proof_search_duration_seconds)
    def prove(self, s: Sequent) -> ProofResult:
        """Search for a derivation of s.

        Returns:
            ProofResult: PROVED with a checked derivation, or EXHAUSTED.

        Raises:
            SearchBudgetExceeded: Node or depth budget hit first.
        """
        needed = self.settings.max_depth + 500
        if sys.getrecursionlimit() < needed:
            sys.setrecursionlimit(needed)
        self._stats = SearchStats()
        self._root = s
        refuter = self.refuter_for(s)
        try:
            if refuter is not None and refuter.refutes(s):
                self._stats.nodes_visited = 1
                self._stats.refuted = 1
                derivation = None
            elif self.allow_cut:
                if self.fixed_cut_terms is None:
                    # Failures found with another root's cut terms do not carry over.
                    self._cut_terms = tuple(default_cut_terms(s))
                    self._cut_failed = set()
                else:
                    self._cut_terms = self.fixed_cut_terms
                derivation = self._prove_cut(s, self.cut_depth, self.limit_for(s), refuter)
            else:
                derivation = self._prove_plain(s, refuter)
        except SearchBudgetExceeded:
            logger.warning(
                f"Budget exceeded proving {format_sequent(s)}",
                extra={"context": self._stats.to_dict()},
            )
            raise
        finally:
            search_nodes_total.inc(self._stats.nodes_visited)
            self._stats.memo_size = self.memo_size

        if derivation is None:
            logger.debug(f"Exhausted {format_sequent(s)}", extra={"context": self._stats.to_dict()})
            return ProofResult(ProofStatus.EXHAUSTED, s, stats=self._stats)
        # Kernel check: every search result is re-verified against the schemas.
        check = check_derivation(derivation, allow_T=self.allow_cut)
        if not check.closed:
            raise ProofError(f"Search produced open hypotheses for {format_sequent(s)}")
        logger.debug(f"Proved {format_sequent(s)}", extra={"context": self._stats.to_dict()})
        return ProofResult(ProofStatus.PROVED, s, derivation=derivation, stats=self._stats)


def prove_rsol_t(s: Sequent, settings: Optional[Settings] = None, search: Optional[ProofSearch] = None) -> ProofResult:
    """Decide s in RSOL/T (no T rule). Pass ``search`` to share a memo across calls."""
    return (search or ProofSearch(settings)).prove(s)


def prove_with_cut(
    s: Sequent,
    cut_terms: Optional[Sequence[Term]] = None,
    depth: Optional[int] = None,
    settings: Optional[Settings] = None,
    search: Optional[ProofSearch] = None,
) -> ProofResult:
    """Search with T at the conclusion end, middles from ``cut_terms``, nested at most ``depth`` deep."""
    search = search or ProofSearch(settings, allow_cut=True, cut_terms=cut_terms, cut_depth=depth)
    return search.prove(s)


def decide(
    s: Sequent,
    settings: Optional[Settings] = None,
    catalog: Optional[Sequence[Union[str, Any]]] = None,
    search: Optional[ProofSearch] = None,
) -> ProofResult:
    """Prove in RSOL/T; when the space closes without a proof, look for a countermodel.

    Returns:
        ProofResult: PROVED, REFUTED, or EXHAUSTED carrying the searched model space.
    """
    settings = settings or load_settings()
    result = prove_rsol_t(s, settings, search)
    if result.proved:
        return result
    found = find_countermodel(
        s,
        catalog if catalog is not None else DEFAULT_COUNTERMODEL_CATALOG,
        max_atoms=settings.max_atoms,
        max_valuations=settings.max_valuations,
    )
    if isinstance(found, Countermodel):
        return ProofResult(ProofStatus.REFUTED, s, countermodel=found, stats=result.stats)
    return ProofResult(ProofStatus.EXHAUSTED, s, not_found=found, stats=result.stats)
