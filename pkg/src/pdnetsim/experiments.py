"""Experiment assignment recipes and deterministic sweep orchestration.

Two assignment families are supported: proportional groups (shuffle the
nodes, then cut at cumulative boundaries in fixed Defector, Cooperator,
Tit-for-Tat, Random order) and degree-ranked groups (rank nodes by
degree, cut into thirds, assign one kind per third, then overwrite a
quarter of each third with Random agents).

A suite is the cross product networks x groups x bank settings x
replicates. Every run gets sub-seeds derived by hashing its run key, so
any single run of a sweep can be reproduced in isolation.
"""

import hashlib
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .engine import LIVE, Bank, PayoffParams, SimConfig, shuffle_order, run
from .errors import ConfigError, PDNetSimError
from .graph import Graph, degree_ranked_nodes, load_graph
from .strategies import KIND_LETTERS, LETTER_OF_KIND, AgentKind


@dataclass(frozen=True, slots=True)
class ProportionGroup:
    """Strategy mix in eighths (12.5% steps) of the population, summing to 8.

    Stored as eighths so the grid the experiments walk is exact by
    construction; label format is 'D:C:T:R' style, e.g. '3:1:2:2'.
    """

    defector: int
    cooperator: int
    tit_for_tat: int
    random: int

    def __post_init__(self):
        parts = (self.defector, self.cooperator, self.tit_for_tat, self.random)
        if any(not isinstance(p, int) or p < 0 for p in parts):
            raise ConfigError(f"proportions must be non-negative eighths, got {parts}")
        if sum(parts) != 8:
            raise ConfigError(f"proportions must sum to 8 eighths (100%), got {parts}")

    @property
    def label(self) -> str:
        return f"{self.defector}:{self.cooperator}:{self.tit_for_tat}:{self.random}"

    @classmethod
    def parse(cls, text: str) -> "ProportionGroup":
        fields = text.strip().split(":")
        if len(fields) != 4:
            raise ConfigError(f"expected D:C:T:R eighths like '3:1:2:2', got {text!r}")
        try:
            d, c, t, r = (int(f) for f in fields)
        except ValueError:
            raise ConfigError(f"non-integer proportion in {text!r}") from None
        return cls(d, c, t, r)


@dataclass(frozen=True, slots=True)
class DegreeGroup:
    """Kinds for the top, middle, and bottom degree-ranked thirds.

    The triple must be a permutation of Defector, Cooperator, Tit-for-Tat;
    within each third, `random_fraction` of the nodes are overwritten with
    Random agents. Label format is 'D,C,T' style.
    """

    top: AgentKind
    middle: AgentKind
    bottom: AgentKind
    random_fraction: float = 0.25

    def __post_init__(self):
        expected = {AgentKind.DEFECTOR, AgentKind.COOPERATOR, AgentKind.TIT_FOR_TAT}
        if {self.top, self.middle, self.bottom} != expected:
            raise ConfigError("degree group must be a permutation of Defector, Cooperator, Tit-for-Tat")
        if not 0.0 <= self.random_fraction < 1.0:
            raise ConfigError(f"random_fraction must be in [0, 1), got {self.random_fraction}")

    @property
    def label(self) -> str:
        return ",".join(LETTER_OF_KIND[k] for k in (self.top, self.middle, self.bottom))

    @classmethod
    def parse(cls, text: str) -> "DegreeGroup":
        letters = [f.strip().upper() for f in text.strip().split(",")]
        if len(letters) != 3 or any(l not in ("D", "C", "T") for l in letters):
            raise ConfigError(f"expected a permutation of D,C,T like 'C,T,D', got {text!r}")
        return cls(*(KIND_LETTERS[l] for l in letters))


EXPERIMENT1_GROUPS = tuple(
    ProportionGroup.parse(label)
    for label in ("2:2:2:2", "3:1:2:2", "3:2:1:2", "2:3:1:2", "1:3:2:2", "2:1:3:2", "1:2:3:2")
)

EXPERIMENT2_GROUPS = tuple(
    DegreeGroup.parse(label) for label in ("D,C,T", "D,T,C", "C,D,T", "C,T,D", "T,C,D", "T,D,C")
)


@dataclass(frozen=True, slots=True)
class BankSetting:
    label: str
    bank: Bank


DEFAULT_BANK_SETTINGS = (
    BankSetting("0", Bank(balance=0)),
    BankSetting("10000", Bank(balance=10000)),
    BankSetting("inf", Bank(infinite=True)),
)


@dataclass(frozen=True, slots=True)
class NetworkSpec:
    name: str
    path: str
    fmt: str


@dataclass(frozen=True, slots=True)
class SuiteSpec:
    networks: tuple
    experiment: int
    groups: tuple
    banks: tuple = DEFAULT_BANK_SETTINGS
    base_seed: int = 0
    replicates: int = 5
    iterations: int = 1000
    initial_balance: int = 100
    payoff: PayoffParams = PayoffParams()
    balance_semantics: str = LIVE

    def __post_init__(self):
        if self.experiment not in (1, 2):
            raise ConfigError(f"experiment must be 1 or 2, got {self.experiment!r}")
        if not self.networks or not self.groups or not self.banks:
            raise ConfigError("suite requires at least one network, group, and bank setting")
        if self.replicates < 1:
            raise ConfigError(f"replicates must be >= 1, got {self.replicates!r}")
        wanted = ProportionGroup if self.experiment == 1 else DegreeGroup
        for group in self.groups:
            if not isinstance(group, wanted):
                raise ConfigError(
                    f"experiment {self.experiment} takes {wanted.__name__} groups, got {type(group).__name__}"
                )


def round_half_up(value: float) -> int:
    return math.floor(value + 0.5)


def assign_proportional(node_count: int, group: ProportionGroup, rng: random.Random) -> list[AgentKind]:
    """Random assignment matching the group's proportions as exactly as rounding allows.

    Node ids are shuffled, then cut at cumulative boundaries
    round_half_up(cumulative_fraction * node_count) in fixed D, C, T, R
    order, so every kind's count is within one node of its exact share.
    Works for any node count >= 1 (tiny graphs pair naturally with
    single-kind mixes such as 0:8:0:0).
    """
    if node_count < 1:
        raise ConfigError(f"proportional assignment needs at least 1 node, got {node_count}")
    order = shuffle_order(range(node_count), rng)
    assignment: list[AgentKind] = [AgentKind.RANDOM] * node_count
    kinds = (AgentKind.DEFECTOR, AgentKind.COOPERATOR, AgentKind.TIT_FOR_TAT, AgentKind.RANDOM)
    eighths = (group.defector, group.cooperator, group.tit_for_tat, group.random)
    cumulative = 0
    lo = 0
    for kind, share in zip(kinds, eighths):
        cumulative += share
        hi = (cumulative * node_count + 4) // 8  # round_half_up(cumulative/8 * n), exactly
        for v in order[lo:hi]:
            assignment[v] = kind
        lo = hi
    return assignment


def assign_by_degree(graph: Graph, group: DegreeGroup, rng: random.Random) -> list[AgentKind]:
    """Degree-ranked assignment: one kind per third, then Random overwrites.

    Thirds split the degree-descending ranking at round_half_up(n/3) and
    round_half_up(2n/3). Within each third, round_half_up(fraction * size)
    nodes are drawn without replacement and overwritten with Random.
    """
    n = graph.node_count
    if n < 12:
        raise ConfigError(f"degree-ranked assignment needs at least 12 nodes, got {n}")
    ranked = degree_ranked_nodes(graph)
    b1 = round_half_up(n / 3)
    b2 = round_half_up(2 * n / 3)
    thirds = (ranked[:b1], ranked[b1:b2], ranked[b2:])
    assignment: list[AgentKind] = [AgentKind.RANDOM] * n
    for third, kind in zip(thirds, (group.top, group.middle, group.bottom)):
        for v in third:
            assignment[v] = kind
        random_count = round_half_up(group.random_fraction * len(third))
        for v in rng.sample(third, random_count):
            assignment[v] = AgentKind.RANDOM
    return assignment


def derive_seed(base_seed: int, *parts) -> int:
    """Stable 63-bit sub-seed from the base seed and any hashable run-key parts."""
    key = "\x1f".join([str(int(base_seed)), *(str(p) for p in parts)])
    digest = hashlib.sha256(key.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big") & ((1 << 63) - 1)


@dataclass(frozen=True, slots=True)
class RunTask:
    """Pickle-friendly description of one suite run."""

    network: str
    path: str
    fmt: str
    experiment: int
    group_label: str
    bank_label: str
    bank_balance: int
    bank_infinite: bool
    replicate: int
    assign_seed: int
    run_seed: int
    iterations: int
    initial_balance: int
    coop_reward: int
    defect_penalty: int
    betrayal_transfer: int
    balance_semantics: str
    series_path: str | None


@dataclass(slots=True)
class SuiteRow:
    network: str
    group: str
    bank: str
    replicate: int
    final_gini: float | None
    converged_at: int | None
    status: str
    series_path: str | None = None


def suite_tasks(spec: SuiteSpec, series_path_for=None) -> list[RunTask]:
    """Expand a suite spec into tasks in canonical network/group/bank/replicate order."""
    tasks = []
    for net in spec.networks:
        for group in spec.groups:
            for setting in spec.banks:
                for rep in range(spec.replicates):
                    key = (net.name, group.label, setting.label, rep)
                    series_path = series_path_for(*key) if series_path_for else None
                    tasks.append(
                        RunTask(
                            network=net.name,
                            path=net.path,
                            fmt=net.fmt,
                            experiment=spec.experiment,
                            group_label=group.label,
                            bank_label=setting.label,
                            bank_balance=setting.bank.balance,
                            bank_infinite=setting.bank.infinite,
                            replicate=rep,
                            assign_seed=derive_seed(spec.base_seed, *key, "assign"),
                            run_seed=derive_seed(spec.base_seed, *key, "run"),
                            iterations=spec.iterations,
                            initial_balance=spec.initial_balance,
                            coop_reward=spec.payoff.coop_reward,
                            defect_penalty=spec.payoff.defect_penalty,
                            betrayal_transfer=spec.payoff.betrayal_transfer,
                            balance_semantics=spec.balance_semantics,
                            series_path=series_path,
                        )
                    )
    return tasks


# One graph cache per worker process; suites run tasks grouped by network,
# so each worker loads each file once.
_graph_cache: dict = {}


def _cached_graph(path: str, fmt: str) -> Graph:
    key = (path, fmt)
    graph = _graph_cache.get(key)
    if graph is None:
        graph = load_graph(path, fmt)
        _graph_cache[key] = graph
    return graph


def execute_task(task: RunTask) -> SuiteRow:
    """Run one suite task, trapping per-run input errors into the row status."""
    try:
        graph = _cached_graph(task.path, task.fmt)
        rng = random.Random(task.assign_seed)
        if task.experiment == 1:
            group = ProportionGroup.parse(task.group_label)
            assignment = assign_proportional(graph.node_count, group, rng)
        else:
            group = DegreeGroup.parse(task.group_label)
            assignment = assign_by_degree(graph, group, rng)
        cfg = SimConfig(
            iterations=task.iterations,
            initial_balance=task.initial_balance,
            payoff=PayoffParams(task.coop_reward, task.defect_penalty, task.betrayal_transfer),
            bank=Bank(balance=task.bank_balance, infinite=task.bank_infinite),
            seed=task.run_seed,
            balance_semantics=task.balance_semantics,
        )
        result = run(graph, assignment, cfg)
        if task.series_path is not None:
            from .output import write_gini_series_csv

            write_gini_series_csv(task.series_path, result)
    except (PDNetSimError, OSError) as exc:
        return SuiteRow(
            network=task.network,
            group=task.group_label,
            bank=task.bank_label,
            replicate=task.replicate,
            final_gini=None,
            converged_at=None,
            status=f"error: {exc}",
        )
    return SuiteRow(
        network=task.network,
        group=task.group_label,
        bank=task.bank_label,
        replicate=task.replicate,
        final_gini=result.gini_series[-1],
        converged_at=result.converged_at,
        status="ok",
        series_path=task.series_path,
    )


def run_suite(spec: SuiteSpec, series_path_for=None, workers: int = 1, progress=None) -> list[SuiteRow]:
    """Execute every run of the suite and return rows in canonical task order.

    series_path_for(network, group_label, bank_label, replicate), when
    given, names the per-run Gini series CSV each worker writes. Rows come
    back in task order regardless of worker completion order, so repeated
    invocations produce identical summaries. Per-run input errors land in
    the row's status; sibling runs proceed.
    """
    tasks = suite_tasks(spec, series_path_for)
    rows: list[SuiteRow] = []
    if workers > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (workers * 4))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            iterator = pool.map(execute_task, tasks, chunksize=chunk)
            for done, row in enumerate(iterator, start=1):
                rows.append(row)
                if progress is not None:
                    progress(done, len(tasks), row)
    else:
        for done, task in enumerate(tasks, start=1):
            row = execute_task(task)
            rows.append(row)
            if progress is not None:
                progress(done, len(tasks), row)
    return rows
