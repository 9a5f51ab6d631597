"""Named graph families with canonical labelings, and their known alpha_1 values."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graph_core import Graph, join

# family -> (number of parameters, accepted aliases)
_FAMILIES = {
    "complete": (1, ("complete", "k")),
    "empty": (1, ("empty", "edgeless")),
    "path": (1, ("path", "p")),
    "cycle": (1, ("cycle", "c")),
    "wheel": (1, ("wheel", "w")),
    "star": (1, ("star",)),
    "complete_bipartite": (2, ("complete_bipartite", "bip", "bipartite")),
    "broom": (2, ("broom",)),
    "unicyclic_star": (1, ("unicyclic_star", "ustar", "u1")),
    "one_edge_plus_isolates": (1, ("one_edge_plus_isolates", "one_edge", "k2_plus_isolates")),
}
_ALIASES = {alias: name for name, (_, aliases) in _FAMILIES.items() for alias in aliases}


class UnsupportedFamilyError(DomainError):
    """The family has no closed-form alpha_1 value."""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.family not in _FAMILIES:
            raise DomainError(f"unknown family {self.family!r}")
        arity = _FAMILIES[self.family][0]
        if len(self.params) != arity:
            raise DomainError(f"{self.family} takes {arity} parameter(s), got {len(self.params)}")
        _check_params(self.family, self.params)

    @property
    def order(self) -> int:
        if self.family == "complete_bipartite":
            return self.params[0] + self.params[1]
        return self.params[0]

    def __str__(self) -> str:
        return f"{self.family}:{','.join(map(str, self.params))}"

    @classmethod
    def parse(cls, text: str) -> "FamilySpec":
        """Parse ``name:a[,b]`` strings such as ``path:9``, ``broom:6,3`` or ``bip:2,3``."""
        name, sep, rest = text.strip().partition(":")
        if not sep:
            raise DomainError(f"family spec {text!r} must look like name:params")
        family = _ALIASES.get(name.strip().lower())
        if family is None:
            raise DomainError(f"unknown family {name!r}")
        try:
            params = tuple(int(p) for p in rest.split(","))
        except ValueError:
            raise DomainError(f"non-integer parameter in family spec {text!r}") from None
        return cls(family, params)


def _check_params(family: str, params: tuple[int, ...]) -> None:
    n = params[0]
    minimum = {
        "complete": 1, "empty": 0, "path": 1, "cycle": 3, "wheel": 4,
        "star": 1, "unicyclic_star": 3, "one_edge_plus_isolates": 2,
    }
    if family == "broom":
        n, k = params
        if not n >= k >= 2:
            raise DomainError(f"broom requires n >= k >= 2, got n={n}, k={k}")
    elif family == "complete_bipartite":
        r, s = params
        if r < 1 or s < 1:
            raise DomainError(f"complete_bipartite requires r, s >= 1, got r={r}, s={s}")
    elif n < minimum[family]:
        raise DomainError(f"{family} requires n >= {minimum[family]}, got n={n}")


def _path_edges(n: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(n - 1)]


def generate(spec: FamilySpec) -> Graph:
    fam, p = spec.family, spec.params
    n = p[0]
    if fam == "complete":
        return Graph.from_edges(n, [(i, j) for j in range(n) for i in range(j)])
    if fam == "empty":
        return Graph.empty(n)
    if fam == "path":
        return Graph.from_edges(n, _path_edges(n))
    if fam == "cycle":
        return Graph.from_edges(n, _path_edges(n) + [(0, n - 1)])
    if fam == "wheel":
        # Hub n-1 over the rim cycle 0..n-2.
        rim = _path_edges(n - 1) + [(0, n - 2)]
        return Graph.from_edges(n, rim + [(i, n - 1) for i in range(n - 1)])
    if fam == "star":
        return Graph.from_edges(n, [(0, i) for i in range(1, n)])
    if fam == "complete_bipartite":
        return join(Graph.empty(p[0]), Graph.empty(p[1]))
    if fam == "broom":
        k = p[1]
        return Graph.from_edges(n, _path_edges(k) + [(k - 1, i) for i in range(k, n)])
    if fam == "unicyclic_star":
        return Graph.from_edges(n, [(0, i) for i in range(1, n)] + [(1, 2)])
    if fam == "one_edge_plus_isolates":
        return Graph.from_edges(n, [(0, 1)])
    raise DomainError(f"unknown family {fam!r}")


def closed_form_alpha1(spec: FamilySpec) -> int:
    fam, p = spec.family, spec.params
    n = p[0]
    if fam == "complete" and n >= 2:
        return 2
    if fam == "path" and n >= 2:
        return (n + 2) // 2
    if fam == "cycle":
        return (n + 1) // 2
    if fam == "wheel":
        return n // 2
    if fam == "star" and n >= 2:
        return 2
    if fam == "empty":
        return 0
    if fam == "broom" and p[1] == 3:
        return n - 1
    if fam == "unicyclic_star":
        return n - 1
    if fam == "one_edge_plus_isolates":
        return n
    raise UnsupportedFamilyError(f"no closed form for alpha_1 of {spec}")


def closed_form_alpha0_path(n: int) -> int:
    if n < 1:
        raise DomainError(f"path requires n >= 1, got n={n}")
    return (n + 1) // 2
