"""Registry and runner for every enumerative identity and structural claim.

Checks come in three modes:

* symbolic    - both sides expanded as exact polynomials in x, y and compared
                term by term; the family side always comes from a transfer
                recursion or an enumeration, never from the formula under test;
* enumerative - the identity instantiated with concrete label groups, every
                family cardinality obtained by exhaustive generation;
* structural  - bijectivity, orbit and rank statements checked by exhaustive
                image comparison.

All arithmetic is exact; a failing check carries a minimal witness.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb

from . import action, maps, poly
from .core import classify, ground_a
from .families import FamilySpec, count_by, enumerate_dyck, enumerate_family, family_shapes
from .groups import DirectSum, GroupSpec
from .poly import BiPoly, X, Y, catalan, transfer_family

Z2 = GroupSpec((2,))
Z3 = GroupSpec((3,))
Z2xZ2 = GroupSpec((2, 2))

GROUP_PAIRS = ((Z2, Z2), (Z2, Z3), (Z3, Z2), (Z2xZ2, Z2))


@dataclass(frozen=True)
class CheckResult:
    id: str
    mode: str
    params: str
    status: str
    millis: int
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"


@dataclass(frozen=True)
class Check:
    id: str
    mode: str
    statement: str
    fn: object
    desk: dict
    quick: dict


_REGISTRY: dict[str, Check] = {}


def _register(id, mode, statement, desk, quick=None):
    def wrap(fn):
        _REGISTRY[id] = Check(id, mode, statement, fn, desk, quick or desk)
        return fn

    return wrap


def registry_ids() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY))


def statement(id: str) -> str:
    return _REGISTRY[id].statement


def run(id: str, profile: str = "desk", **overrides) -> CheckResult:
    if id not in _REGISTRY:
        raise ValueError(f"unknown check id {id!r}")
    check = _REGISTRY[id]
    params = dict(check.desk if profile == "desk" else check.quick)
    params.update(overrides)
    start = time.perf_counter()
    witnesses = check.fn(**params)
    millis = int((time.perf_counter() - start) * 1000)
    text = "; ".join(str(p) for p in sorted(params.items()))
    if witnesses:
        return CheckResult(id, check.mode, text, "fail", millis, witnesses[0])
    return CheckResult(id, check.mode, text, "pass", millis)


@dataclass(frozen=True)
class Report:
    results: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json_dict(self) -> dict:
        return {
            "ok": self.ok,
            "results": [
                {
                    "id": r.id,
                    "mode": r.mode,
                    "range": r.params,
                    "status": r.status,
                    "millis": r.millis,
                    **({"witness": r.witness} if r.witness else {}),
                }
                for r in self.results
            ],
        }


def run_all(profile: str = "desk", jobs: int | None = None, ids=None) -> Report:
    ids = registry_ids() if ids is None else tuple(ids)
    if jobs and jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda i: run(i, profile), ids))
    else:
        results = [run(i, profile) for i in ids]
    return Report(tuple(sorted(results, key=lambda r: r.id)))


# ---------------------------------------------------------------------------
# helpers


def _mismatch(tag, lhs, rhs):
    return f"{tag}: {lhs} != {rhs}"


def _eq(witnesses, tag, *values):
    first = values[0]
    for other in values[1:]:
        if other != first:
            witnesses.append(_mismatch(tag, first, other))
            return


def _yp1(k: int) -> BiPoly:
    return (Y + 1) ** k


def _cnt(family, n, groups) -> int:
    return len(tuple(enumerate_family(FamilySpec(family, n, groups))))


def _cnt_flag(family, n, groups, flag) -> int:
    return sum(
        1
        for p in enumerate_family(FamilySpec(family, n, groups))
        if getattr(classify(p), flag)
    )


def _embed_a(p, ds: DirectSum):
    """Relabel an A-group partition inside the direct sum."""
    from .core import LabeledSetPartition

    labels = {arc: ds.embed_a(v) for arc, v in p.label_map().items()}
    return LabeledSetPartition(p.ground, ds.spec, p.blocks, labels)


# ---------------------------------------------------------------------------
# symbolic checks


@_register(
    "coker",
    "symbolic",
    "sum(k) binom(n+1,k) binom(n+1,k+1)/(n+1) x^k"
    " == sum(k) C_k binom(n,2k) x^k (1+x)^(n-2k)",
    {"n_max": 10},
)
def _coker(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = BiPoly.zero()
        for k in range(n + 1):
            num = comb(n + 1, k) * comb(n + 1, k + 1)
            assert num % (n + 1) == 0
            lhs = lhs + BiPoly.term(num // (n + 1), k)
        rhs = sum(
            (
                catalan(k) * comb(n, 2 * k) * BiPoly.term(1, k) * (X + 1) ** (n - 2 * k)
                for k in range(n // 2 + 1)
            ),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, rhs)
    return out


@_register(
    "riordan",
    "symbolic",
    "sum(k) binom(n,k)^2 x^k == sum(k) binom(2k,k) binom(n,2k) x^k (x+1)^(n-2k)",
    {"n_max": 10},
)
def _riordan(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = poly.catb_closed(n)
        rhs = sum(
            (
                comb(2 * k, k)
                * comb(n, 2 * k)
                * BiPoly.term(1, k)
                * (X + 1) ** (n - 2 * k)
                for k in range(n // 2 + 1)
            ),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, rhs)
    return out


@_register(
    "A-identities-1",
    "symbolic",
    "Bell[n+1](x,y) == sum binom(n,k) Bell[k](x) y^(n-k)"
    " == sum binom(n,k) F[k](x) (y+1)^(n-k)",
    {"n_max": 10},
    {"n_max": 6},
)
def _a_identities_1(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Bell", n + 1)
        mid = sum(
            (
                comb(n, k) * poly.bell_univariate(k) * Y ** (n - k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        rhs = sum(
            (comb(n, k) * poly.feasible_closed(k) * _yp1(n - k) for k in range(n + 1)),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, mid, rhs)
    return out


@_register(
    "A-identities-2",
    "symbolic",
    "Cat[n+1](x,y) == sum binom(n,k) M[k](x) y^(n-k)"
    " == sum C_k binom(n,2k) x^k (y+1)^(n-2k)",
    {"n_max": 10},
    {"n_max": 6},
)
def _a_identities_2(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Cat", n + 1)
        mid = sum(
            (
                comb(n, k) * poly.motzkin_closed(k) * Y ** (n - k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        rhs = sum(
            (
                catalan(k) * comb(n, 2 * k) * BiPoly.term(1, k) * _yp1(n - 2 * k)
                for k in range(n // 2 + 1)
            ),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, mid, rhs)
    return out


@_register(
    "A-incl-excl-1",
    "symbolic",
    "sum (-1)^(n-k) binom(n,k) (y+1)^(n-k) Bell[k+1](x,y) == F[n](x)",
    {"n_max": 10},
    {"n_max": 6},
)
def _a_incl_excl_1(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = sum(
            (
                (-1) ** (n - k)
                * comb(n, k)
                * _yp1(n - k)
                * transfer_family("Bell", k + 1)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, poly.feasible_closed(n))
    return out


@_register(
    "A-incl-excl-2",
    "symbolic",
    "sum (-1)^(n-k) binom(n,k) (y+1)^(n-k) Cat[k+1](x,y)"
    " == C_(n/2) x^(n/2) for even n, else 0",
    {"n_max": 10},
    {"n_max": 6},
)
def _a_incl_excl_2(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = sum(
            (
                (-1) ** (n - k)
                * comb(n, k)
                * _yp1(n - k)
                * transfer_family("Cat", k + 1)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        rhs = (
            BiPoly.term(catalan(n // 2), n // 2) if n % 2 == 0 else BiPoly.zero()
        )
        _eq(out, f"n={n}", lhs, rhs)
    return out


@_register(
    "motzkin-closed",
    "symbolic",
    "M[n](x) == sum C_k binom(n,2k) x^k",
    {"n_max": 10},
)
def _motzkin_closed(n_max):
    out = []
    for n in range(n_max + 1):
        _eq(out, f"n={n}", transfer_family("M", n), poly.motzkin_closed(n))
    return out


@_register(
    "bell-binom-transform",
    "symbolic",
    "Bell[n](x) == sum binom(n,k) F[k](x)",
    {"n_max": 10},
)
def _bell_binom_transform(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Bell", n).subst_y_diag()
        rhs = sum(
            (comb(n, k) * poly.feasible_closed(k) for k in range(n + 1)),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, rhs)
    return out


@_register(
    "touchard",
    "symbolic",
    "C_(n+1) == sum C_k binom(n,2k) 2^(n-2k)",
    {"n_max": 10},
)
def _touchard(n_max):
    out = []
    for n in range(n_max + 1):
        rhs = sum(
            catalan(k) * comb(n, 2 * k) * 2 ** (n - 2 * k) for k in range(n // 2 + 1)
        )
        _eq(out, f"n={n}", catalan(n + 1), rhs)
    return out


@_register(
    "bellD-eq",
    "symbolic",
    "Bell_D[n](x) == Bell[n](2x)",
    {"n_max": 10},
)
def _belld_eq(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Bell_D", n).subst_y_diag()
        _eq(out, f"n={n}", lhs, poly.bell_univariate(n).scale_x(2))
    return out


@_register(
    "spivey-1",
    "symbolic",
    "Bell[m+n](x) == sum(j,k) x^(m+n-j-k) j^(n-k) binom(n,k) S(m,j) Bell[k](x)",
    {"m_max": 4, "n_max": 4},
)
def _spivey_1(m_max, n_max):
    out = []
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            rhs = BiPoly.zero()
            for j in range(m + 1):
                for k in range(n + 1):
                    c = j ** (n - k) * comb(n, k) * poly.stirling2(m, j)
                    rhs = rhs + c * BiPoly.term(1, m + n - j - k) * poly.bell_univariate(k)
            _eq(out, f"m={m},n={n}", poly.bell_univariate(m + n), rhs)
    return out


@_register(
    "spivey-2",
    "symbolic",
    "Bell_B[m+n](x) == sum(j,k) x^(m+n-j-k) (2j+1)^(n-k) binom(n,k) W(m,j) Bell[k](2x)",
    {"m_max": 4, "n_max": 4},
)
def _spivey_2(m_max, n_max):
    out = []
    for m in range(m_max + 1):
        for n in range(n_max + 1):
            rhs = BiPoly.zero()
            for j in range(m + 1):
                for k in range(n + 1):
                    c = (2 * j + 1) ** (n - k) * comb(n, k) * poly.whitney2_B(m, j)
                    rhs = rhs + c * BiPoly.term(1, m + n - j - k) * poly.bell_univariate(
                        k
                    ).scale_x(2)
            _eq(out, f"m={m},n={n}", poly.bellb_univariate(m + n), rhs)
    return out


@_register(
    "catB-closed",
    "symbolic",
    "Cat_B[n](x) == sum binom(n,k)^2 x^k",
    {"n_max": 10},
)
def _catb_closed(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Cat_B", n).subst_y_diag()
        _eq(out, f"n={n}", lhs, poly.catb_closed(n))
    return out


@_register(
    "catD-closed",
    "symbolic",
    "Cat_D[n+1](x) == sum binom(n,k) binom(n+1,k) x^k",
    {"n_max": 10},
)
def _catd_closed(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Cat_D", n + 1).subst_y_diag()
        _eq(out, f"n={n}", lhs, poly.catd_closed(n + 1))
    return out


@_register(
    "motzkinB-closed",
    "symbolic",
    "M_B[n](x) == M_D[n](x) == sum binom(2k,k) binom(n,2k) x^k",
    {"n_max": 10},
)
def _motzkinb_closed(n_max):
    out = []
    for n in range(n_max + 1):
        closed = poly.motzkinb_closed(n)
        _eq(out, f"n={n}", transfer_family("M_B", n), closed)
        _eq(out, f"n={n} (enumerated B vs D)",
            poly.enumerated_family("M_B", n) if n <= 4 else closed,
            poly.enumerated_family("M_D", n) if n <= 4 else closed)
    return out


@_register(
    "mob-rec",
    "symbolic",
    "M_B[n+2](x) == M_B[n+1](x) + 2(n+1) x M[n](x)",
    {"n_max": 10},
)
def _mob_rec(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("M_B", n + 2)
        rhs = transfer_family("M_B", n + 1) + 2 * (n + 1) * X * transfer_family("M", n)
        _eq(out, f"n={n}", lhs, rhs)
    return out


@_register(
    "tilde-1",
    "symbolic",
    "F~_B[n](x) == F_B[n](x) + F[n](2x) == sum binom(n,k) F[k](2x) x^(n-k)",
    {"n_max": 10},
)
def _tilde_1(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("F_B_tilde", n)
        mid = transfer_family("F_B", n) + poly.feasible_closed(n).scale_x(2)
        _eq(out, f"n={n}", lhs, mid, poly.feasibleb_tilde_closed(n))
    return out


@_register(
    "tilde-2",
    "symbolic",
    "M~_B[n](x) == M_B[n](x) + n x M[n-1](x) == sum binom(n,k) binom(n+1-k,k) x^k",
    {"n_max": 10},
)
def _tilde_2(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("M_B_tilde", n)
        mid = transfer_family("M_B", n)
        if n >= 1:
            mid = mid + n * X * transfer_family("M", n - 1)
        _eq(out, f"n={n}", lhs, mid, poly.motzkinb_tilde_closed(n))
    return out


@_register(
    "B-identities-1",
    "symbolic",
    "Bell_B[n](x,y) == sum binom(n,k) Bell[k](2x) y^(n-k)"
    " == sum binom(n,k) F[k](2x) (y+1)^(n-k)",
    {"n_max": 10},
    {"n_max": 6},
)
def _b_identities_1(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Bell_B", n)
        mid = sum(
            (
                comb(n, k) * poly.bell_univariate(k).scale_x(2) * Y ** (n - k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        rhs = sum(
            (
                comb(n, k) * poly.feasible_closed(k).scale_x(2) * _yp1(n - k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, mid, rhs)
    return out


@_register(
    "B-identities-2",
    "symbolic",
    "Bell_D[n+1](x,y) == sum binom(n,k) Bell_B[k](x) y^(n-k)"
    " == sum binom(n,k) F~_B[k](x) (y+1)^(n-k)",
    {"n_max": 10},
    {"n_max": 6},
)
def _b_identities_2(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Bell_D", n + 1)
        mid = sum(
            (
                comb(n, k) * poly.bellb_univariate(k) * Y ** (n - k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        rhs = sum(
            (
                comb(n, k) * poly.feasibleb_tilde_closed(k) * _yp1(n - k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, mid, rhs)
    return out


@_register(
    "B-identities-3",
    "symbolic",
    "Cat_B[n](x,y) == sum binom(n,k) M_B[k](x) y^(n-k)"
    " == sum binom(2k,k) binom(n,2k) x^k (y+1)^(n-2k)",
    {"n_max": 10},
    {"n_max": 6},
)
def _b_identities_3(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Cat_B", n)
        mid = sum(
            (
                comb(n, k) * poly.motzkinb_closed(k) * Y ** (n - k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        rhs = sum(
            (
                comb(2 * k, k)
                * comb(n, 2 * k)
                * BiPoly.term(1, k)
                * _yp1(n - 2 * k)
                for k in range(n // 2 + 1)
            ),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, mid, rhs)
    return out


@_register(
    "B-identities-4",
    "symbolic",
    "Cat_D[n+1](x,y) == sum binom(n,k) M~_B[k](x) y^(n-k)"
    " == sum binom(n,k) binom(k,floor(k/2)) x^ceil(k/2) (y+1)^(n-k)",
    {"n_max": 10},
    {"n_max": 6},
)
def _b_identities_4(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Cat_D", n + 1)
        mid = sum(
            (
                comb(n, k) * poly.motzkinb_tilde_closed(k) * Y ** (n - k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        rhs = sum(
            (
                comb(n, k)
                * comb(k, k // 2)
                * BiPoly.term(1, (k + 1) // 2)
                * _yp1(n - k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, mid, rhs)
    return out


@_register(
    "hanging-1",
    "symbolic",
    "Cat_B[n+1](x,y) == (y+1) Cat_B[n](x,y) + 2n x Cat[n](x,y)",
    {"n_max": 10},
    {"n_max": 6},
)
def _hanging_1(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Cat_B", n + 1)
        rhs = (Y + 1) * transfer_family("Cat_B", n) + 2 * n * X * transfer_family(
            "Cat", n
        )
        _eq(out, f"n={n}", lhs, rhs)
    return out


@_register(
    "hanging-2",
    "symbolic",
    "Cat_D[n+1](x,y) == Cat_B[n](x,y) + n x Cat[n](x,y)",
    {"n_max": 10},
    {"n_max": 6},
)
def _hanging_2(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = transfer_family("Cat_D", n + 1)
        rhs = transfer_family("Cat_B", n) + n * X * transfer_family("Cat", n)
        _eq(out, f"n={n}", lhs, rhs)
    return out


@_register(
    "B-incl-excl-1",
    "symbolic",
    "sum (-1)^(n-k) binom(n,k) (y+1)^(n-k) Bell_B[k](x,y) == F[n](2x)",
    {"n_max": 10},
    {"n_max": 6},
)
def _b_incl_excl_1(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = sum(
            (
                (-1) ** (n - k)
                * comb(n, k)
                * _yp1(n - k)
                * transfer_family("Bell_B", k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, poly.feasible_closed(n).scale_x(2))
    return out


@_register(
    "B-incl-excl-2",
    "symbolic",
    "sum (-1)^(n-k) binom(n,k) (y+1)^(n-k) Bell_D[k+1](x,y) == F~_B[n](x)",
    {"n_max": 10},
    {"n_max": 6},
)
def _b_incl_excl_2(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = sum(
            (
                (-1) ** (n - k)
                * comb(n, k)
                * _yp1(n - k)
                * transfer_family("Bell_D", k + 1)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, poly.feasibleb_tilde_closed(n))
    return out


@_register(
    "B-incl-excl-3",
    "symbolic",
    "sum (-1)^(n-k) binom(n,k) (y+1)^(n-k) Cat_B[k](x,y)"
    " == binom(n,n/2) x^(n/2) for even n, else 0",
    {"n_max": 10},
    {"n_max": 6},
)
def _b_incl_excl_3(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = sum(
            (
                (-1) ** (n - k)
                * comb(n, k)
                * _yp1(n - k)
                * transfer_family("Cat_B", k)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        rhs = (
            BiPoly.term(comb(n, n // 2), n // 2) if n % 2 == 0 else BiPoly.zero()
        )
        _eq(out, f"n={n}", lhs, rhs)
    return out


@_register(
    "B-incl-excl-4",
    "symbolic",
    "sum (-1)^(n-k) binom(n,k) (y+1)^(n-k) Cat_D[k+1](x,y)"
    " == binom(n,floor(n/2)) x^ceil(n/2)",
    {"n_max": 10},
    {"n_max": 6},
)
def _b_incl_excl_4(n_max):
    out = []
    for n in range(n_max + 1):
        lhs = sum(
            (
                (-1) ** (n - k)
                * comb(n, k)
                * _yp1(n - k)
                * transfer_family("Cat_D", k + 1)
                for k in range(n + 1)
            ),
            BiPoly.zero(),
        )
        _eq(out, f"n={n}", lhs, BiPoly.term(comb(n, n // 2), (n + 1) // 2))
    return out


@_register(
    "three-term-1",
    "symbolic",
    "(n+1) Cat[n] == (y+1)(2n-1) Cat[n-1] + (4x-(y+1)^2)(n-2) Cat[n-2]",
    {"n_min": 2, "n_max": 10},
)
def _three_term_1(n_min, n_max):
    out = []
    for n in range(n_min, n_max + 1):
        lhs = (n + 1) * transfer_family("Cat", n)
        rhs = (Y + 1) * (2 * n - 1) * transfer_family("Cat", n - 1) + (
            4 * X - (Y + 1) ** 2
        ) * (n - 2) * transfer_family("Cat", n - 2)
        _eq(out, f"n={n}", lhs, rhs)
    return out


@_register(
    "three-term-2",
    "symbolic",
    "n Cat_B[n] == (y+1)(2n-1) Cat_B[n-1] + (4x-(y+1)^2)(n-1) Cat_B[n-2]",
    {"n_min": 2, "n_max": 10},
)
def _three_term_2(n_min, n_max):
    out = []
    for n in range(n_min, n_max + 1):
        lhs = n * transfer_family("Cat_B", n)
        rhs = (Y + 1) * (2 * n - 1) * transfer_family("Cat_B", n - 1) + (
            4 * X - (Y + 1) ** 2
        ) * (n - 1) * transfer_family("Cat_B", n - 2)
        _eq(out, f"n={n}", lhs, rhs)
    return out

# ---------------------------------------------------------------------------
# enumerative instantiations
#
# Each bivariate identity is replayed with concrete label groups: the family
# side becomes an exhaustive count and the formula side an integer evaluation
# at x = |A|-1, y = |B|-1.

ENUM_A_NMAX = 5
ENUM_BD_NMAX = 3


def _register_enum(id, statement, a_type):
    def wrap(fn):
        desk = {"n_max": ENUM_A_NMAX if a_type else ENUM_BD_NMAX, "pairs": GROUP_PAIRS}
        quick = {"n_max": 2, "pairs": GROUP_PAIRS[:2]}
        _register(id, "enumerative", statement, desk, quick)(fn)
        return fn

    return wrap


def _enum_check(fn_per_instance):
    def runner(n_max, pairs):
        out = []
        for ga, gb in pairs:
            a, b = ga.order - 1, gb.order - 1
            for n in range(n_max + 1):
                fn_per_instance(out, n, ga, gb, a, b)
        return out

    return runner


@_register_enum(
    "A-identities-1-enum",
    "|PI(n+1,A,B)| == sum binom(n,k) |PI(k,A)| b^(n-k)"
    " == sum binom(n,k) #feasible(k,A) (b+1)^(n-k)",
    True,
)
@_enum_check
def _a_identities_1_enum(out, n, ga, gb, a, b):
    lhs = _cnt("PI_AB", n + 1, (ga, gb))
    mid = sum(comb(n, k) * _cnt("PI", k, (ga,)) * b ** (n - k) for k in range(n + 1))
    rhs = sum(
        comb(n, k) * _cnt_flag("PI", k, (ga,), "feasible") * (b + 1) ** (n - k)
        for k in range(n + 1)
    )
    _eq(out, f"n={n},A={ga},B={gb}", lhs, mid, rhs)


@_register_enum(
    "A-identities-2-enum",
    "|NC(n+1,A,B)| == sum binom(n,k) #poor-NC(k,A) b^(n-k)"
    " == sum C_k binom(n,2k) a^k (b+1)^(n-2k)",
    True,
)
@_enum_check
def _a_identities_2_enum(out, n, ga, gb, a, b):
    lhs = _cnt("NC_AB", n + 1, (ga, gb))
    mid = sum(
        comb(n, k) * _cnt_flag("NC", k, (ga,), "poor") * b ** (n - k)
        for k in range(n + 1)
    )
    rhs = sum(
        catalan(k) * comb(n, 2 * k) * a**k * (b + 1) ** (n - 2 * k)
        for k in range(n // 2 + 1)
    )
    _eq(out, f"n={n},A={ga},B={gb}", lhs, mid, rhs)


@_register_enum(
    "A-incl-excl-1-enum",
    "sum (-1)^(n-k) binom(n,k) (b+1)^(n-k) |PI(k+1,A,B)| == #feasible(n,A)",
    True,
)
@_enum_check
def _a_incl_excl_1_enum(out, n, ga, gb, a, b):
    lhs = sum(
        (-1) ** (n - k) * comb(n, k) * (b + 1) ** (n - k) * _cnt("PI_AB", k + 1, (ga, gb))
        for k in range(n + 1)
    )
    _eq(out, f"n={n},A={ga},B={gb}", lhs, _cnt_flag("PI", n, (ga,), "feasible"))


@_register_enum(
    "A-incl-excl-2-enum",
    "sum (-1)^(n-k) binom(n,k) (b+1)^(n-k) |NC(k+1,A,B)|"
    " == C_(n/2) a^(n/2) for even n, else 0",
    True,
)
@_enum_check
def _a_incl_excl_2_enum(out, n, ga, gb, a, b):
    lhs = sum(
        (-1) ** (n - k) * comb(n, k) * (b + 1) ** (n - k) * _cnt("NC_AB", k + 1, (ga, gb))
        for k in range(n + 1)
    )
    rhs = catalan(n // 2) * a ** (n // 2) if n % 2 == 0 else 0
    _eq(out, f"n={n},A={ga},B={gb}", lhs, rhs)


@_register_enum(
    "B-identities-1-enum",
    "|P_B(n,A,B)| == sum binom(n,k) |P_D(k,A)| b^(n-k)"
    " == sum binom(n,k) #feasible-P_D(k,A) (b+1)^(n-k)",
    False,
)
@_enum_check
def _b_identities_1_enum(out, n, ga, gb, a, b):
    lhs = _cnt("P_B_AB", n, (ga, gb))
    mid = sum(comb(n, k) * _cnt("P_D", k, (ga,)) * b ** (n - k) for k in range(n + 1))
    rhs = sum(
        comb(n, k) * _cnt_flag("P_D", k, (ga,), "feasible") * (b + 1) ** (n - k)
        for k in range(n + 1)
    )
    _eq(out, f"n={n},A={ga},B={gb}", lhs, mid, rhs)


@_register_enum(
    "B-identities-2-enum",
    "|P_D(n+1,A,B)| == sum binom(n,k) |P_B(k,A)| b^(n-k)"
    " == sum binom(n,k) #B-feasible-P_B(k,A) (b+1)^(n-k)",
    False,
)
@_enum_check
def _b_identities_2_enum(out, n, ga, gb, a, b):
    lhs = _cnt("P_D_AB", n + 1, (ga, gb))
    mid = sum(comb(n, k) * _cnt("P_B", k, (ga,)) * b ** (n - k) for k in range(n + 1))
    rhs = sum(
        comb(n, k) * _cnt_flag("P_B", k, (ga,), "b_feasible") * (b + 1) ** (n - k)
        for k in range(n + 1)
    )
    _eq(out, f"n={n},A={ga},B={gb}", lhs, mid, rhs)


@_register_enum(
    "B-identities-3-enum",
    "|NC~_B(n,A,B)| == sum binom(n,k) #poor-NC~_B(k,A) b^(n-k)"
    " == sum binom(2k,k) binom(n,2k) a^k (b+1)^(n-2k)",
    False,
)
@_enum_check
def _b_identities_3_enum(out, n, ga, gb, a, b):
    lhs = _cnt("NC_TILDE_B_AB", n, (ga, gb))
    mid = sum(
        comb(n, k) * _cnt_flag("NC_TILDE_B", k, (ga,), "poor") * b ** (n - k)
        for k in range(n + 1)
    )
    rhs = sum(
        comb(2 * k, k) * comb(n, 2 * k) * a**k * (b + 1) ** (n - 2 * k)
        for k in range(n // 2 + 1)
    )
    _eq(out, f"n={n},A={ga},B={gb}", lhs, mid, rhs)


@_register_enum(
    "B-identities-4-enum",
    "|NC~_D(n+1,A,B)| == sum binom(n,k) #B-poor-NC~_B(k,A) b^(n-k)"
    " == sum binom(n,k) binom(k,floor(k/2)) a^ceil(k/2) (b+1)^(n-k)",
    False,
)
@_enum_check
def _b_identities_4_enum(out, n, ga, gb, a, b):
    lhs = _cnt("NC_TILDE_D_AB", n + 1, (ga, gb))
    mid = sum(
        comb(n, k) * _cnt_flag("NC_TILDE_B", k, (ga,), "b_poor") * b ** (n - k)
        for k in range(n + 1)
    )
    rhs = sum(
        comb(n, k) * comb(k, k // 2) * a ** ((k + 1) // 2) * (b + 1) ** (n - k)
        for k in range(n + 1)
    )
    _eq(out, f"n={n},A={ga},B={gb}", lhs, mid, rhs)


@_register_enum(
    "hanging-1-enum",
    "|NC~_B(n+1,A,B)| == (b+1) |NC~_B(n,A,B)| + 2n a |NC(n,A,B)|",
    False,
)
@_enum_check
def _hanging_1_enum(out, n, ga, gb, a, b):
    lhs = _cnt("NC_TILDE_B_AB", n + 1, (ga, gb))
    rhs = (b + 1) * _cnt("NC_TILDE_B_AB", n, (ga, gb)) + 2 * n * a * _cnt(
        "NC_AB", n, (ga, gb)
    )
    _eq(out, f"n={n},A={ga},B={gb}", lhs, rhs)


@_register_enum(
    "hanging-2-enum",
    "|NC~_D(n+1,A,B)| == |NC~_B(n,A,B)| + n a |NC(n,A,B)|",
    False,
)
@_enum_check
def _hanging_2_enum(out, n, ga, gb, a, b):
    lhs = _cnt("NC_TILDE_D_AB", n + 1, (ga, gb))
    rhs = _cnt("NC_TILDE_B_AB", n, (ga, gb)) + n * a * _cnt("NC_AB", n, (ga, gb))
    _eq(out, f"n={n},A={ga},B={gb}", lhs, rhs)


@_register_enum(
    "B-incl-excl-1-enum",
    "sum (-1)^(n-k) binom(n,k) (b+1)^(n-k) |P_B(k,A,B)| == #feasible-P_D(n,A)",
    False,
)
@_enum_check
def _b_incl_excl_1_enum(out, n, ga, gb, a, b):
    lhs = sum(
        (-1) ** (n - k) * comb(n, k) * (b + 1) ** (n - k) * _cnt("P_B_AB", k, (ga, gb))
        for k in range(n + 1)
    )
    _eq(out, f"n={n},A={ga},B={gb}", lhs, _cnt_flag("P_D", n, (ga,), "feasible"))


@_register_enum(
    "B-incl-excl-2-enum",
    "sum (-1)^(n-k) binom(n,k) (b+1)^(n-k) |P_D(k+1,A,B)| == #B-feasible-P_B(n,A)",
    False,
)
@_enum_check
def _b_incl_excl_2_enum(out, n, ga, gb, a, b):
    lhs = sum(
        (-1) ** (n - k)
        * comb(n, k)
        * (b + 1) ** (n - k)
        * _cnt("P_D_AB", k + 1, (ga, gb))
        for k in range(n + 1)
    )
    _eq(out, f"n={n},A={ga},B={gb}", lhs, _cnt_flag("P_B", n, (ga,), "b_feasible"))


@_register_enum(
    "B-incl-excl-3-enum",
    "sum (-1)^(n-k) binom(n,k) (b+1)^(n-k) |NC~_B(k,A,B)|"
    " == binom(n,n/2) a^(n/2) for even n, else 0",
    False,
)
@_enum_check
def _b_incl_excl_3_enum(out, n, ga, gb, a, b):
    lhs = sum(
        (-1) ** (n - k)
        * comb(n, k)
        * (b + 1) ** (n - k)
        * _cnt("NC_TILDE_B_AB", k, (ga, gb))
        for k in range(n + 1)
    )
    rhs = comb(n, n // 2) * a ** (n // 2) if n % 2 == 0 else 0
    _eq(out, f"n={n},A={ga},B={gb}", lhs, rhs)


@_register_enum(
    "B-incl-excl-4-enum",
    "sum (-1)^(n-k) binom(n,k) (b+1)^(n-k) |NC~_D(k+1,A,B)|"
    " == binom(n,floor(n/2)) a^ceil(n/2)",
    False,
)
@_enum_check
def _b_incl_excl_4_enum(out, n, ga, gb, a, b):
    lhs = sum(
        (-1) ** (n - k)
        * comb(n, k)
        * (b + 1) ** (n - k)
        * _cnt("NC_TILDE_D_AB", k + 1, (ga, gb))
        for k in range(n + 1)
    )
    _eq(out, f"n={n},A={ga},B={gb}", lhs, comb(n, n // 2) * a ** ((n + 1) // 2))


@_register_enum(
    "three-term-1-enum",
    "(n+1)|NC(n,A,B)| == (b+1)(2n-1)|NC(n-1,A,B)| + (4a-(b+1)^2)(n-2)|NC(n-2,A,B)|",
    True,
)
@_enum_check
def _three_term_1_enum(out, n, ga, gb, a, b):
    if n < 2:
        return
    lhs = (n + 1) * _cnt("NC_AB", n, (ga, gb))
    rhs = (b + 1) * (2 * n - 1) * _cnt("NC_AB", n - 1, (ga, gb)) + (
        4 * a - (b + 1) ** 2
    ) * (n - 2) * _cnt("NC_AB", n - 2, (ga, gb))
    _eq(out, f"n={n},A={ga},B={gb}", lhs, rhs)


@_register_enum(
    "three-term-2-enum",
    "n|NC~_B(n,A,B)| == (b+1)(2n-1)|NC~_B(n-1,A,B)|"
    " + (4a-(b+1)^2)(n-1)|NC~_B(n-2,A,B)|",
    False,
)
@_enum_check
def _three_term_2_enum(out, n, ga, gb, a, b):
    if n < 2:
        return
    lhs = n * _cnt("NC_TILDE_B_AB", n, (ga, gb))
    rhs = (b + 1) * (2 * n - 1) * _cnt("NC_TILDE_B_AB", n - 1, (ga, gb)) + (
        4 * a - (b + 1) ** 2
    ) * (n - 1) * _cnt("NC_TILDE_B_AB", n - 2, (ga, gb))
    _eq(out, f"n={n},A={ga},B={gb}", lhs, rhs)

# ---------------------------------------------------------------------------
# structural checks


@_register(
    "NNB-counts",
    "enumerative",
    "NN_B(n) has binom(n,k)^2 members with 2k or 2k+1 blocks"
    " and binom(2n,n) members in total",
    {"n_max": 5},
    {"n_max": 3},
)
def _nnb_counts(n_max):
    out = []
    for n in range(n_max + 1):
        hist = count_by(FamilySpec("NN_B", n), "blocks")
        total = sum(hist.values())
        _eq(out, f"n={n} total", total, comb(2 * n, n))
        for k in range(n + 1):
            got = hist.get(2 * k, 0) + hist.get(2 * k + 1, 0)
            _eq(out, f"n={n},k={k}", got, comb(n, k) ** 2)
    return out


@_register(
    "sym-dyck",
    "enumerative",
    "binom(2n,n) symmetric Dyck paths with 4n steps",
    {"n_max": 5},
    {"n_max": 3},
)
def _sym_dyck(n_max):
    out = []
    for n in range(n_max + 1):
        got = sum(1 for p in enumerate_dyck(2 * n) if p.is_symmetric())
        _eq(out, f"n={n}", got, comb(2 * n, n))
    return out


@_register(
    "2blocks-1",
    "enumerative",
    "NC~_D(2n) has binom(2n,n) members whose blocks all have size two",
    {"n_max": 3},
    {"n_max": 2},
)
def _two_blocks_1(n_max):
    out = []
    for n in range(n_max + 1):
        got = sum(
            1
            for blocks in family_shapes("NC_TILDE_D", 2 * n)
            if all(len(b) == 2 for b in blocks)
        )
        _eq(out, f"n={n}", got, comb(2 * n, n))
    return out


@_register(
    "2blocks-2",
    "enumerative",
    "NC~_D(2n+1) has no members whose blocks all have size two",
    {"n_max": 2},
)
def _two_blocks_2(n_max):
    out = []
    for n in range(n_max + 1):
        got = sum(
            1
            for blocks in family_shapes("NC_TILDE_D", 2 * n + 1)
            if all(len(b) == 2 for b in blocks)
        )
        _eq(out, f"n={n}", got, 0)
    return out


@_register(
    "2blocks-3",
    "enumerative",
    "binom(n,floor(n/2)) B-poor members of NC~_B(n) without nonzero singletons",
    {"n_max": 5},
)
def _two_blocks_3(n_max):
    from .core import ground_b, unlabeled

    out = []
    for n in range(n_max + 1):
        got = 0
        for blocks in family_shapes("NC_TILDE_B", n):
            p = unlabeled(ground_b(n), blocks)
            if not classify(p).b_poor:
                continue
            if any(len(b) == 1 and b[0] != 0 for b in blocks):
                continue
            got += 1
        _eq(out, f"n={n}", got, comb(n, n // 2))
    return out


@_register(
    "uncrossB-props",
    "structural",
    "uncross_b bijects NC~_B(n) onto symmetric noncrossing partitions of"
    " the D ground; uncross bijects NC~_D(n) onto those with an even number"
    " of self-negative blocks; block counts drop by at most one",
    {"n_max": 4},
    {"n_max": 3},
)
def _uncross_b_props(n_max):
    from .core import ground_b, ground_d, negate, unlabeled
    from .families import symmetric_partitions

    out = []
    for n in range(n_max + 1):
        dom_b = [
            unlabeled(ground_b(n), blocks) for blocks in family_shapes("NC_TILDE_B", n)
        ]
        sym_nc = [
            unlabeled(ground_d(n), blocks)
            for blocks in sorted(set(symmetric_partitions(n, False, True)))
            if classify(unlabeled(ground_d(n), blocks)).noncrossing
        ]
        images = [maps.uncross_b(p) for p in dom_b]
        _eq(out, f"n={n} b-image", sorted(q.blocks for q in images), sorted(q.blocks for q in sym_nc))
        _eq(out, f"n={n} b-inj", len(set(images)), len(dom_b))
        for p, q in zip(dom_b, images):
            k = (len(p.blocks) - 1) // 2
            if len(q.blocks) not in (2 * k, 2 * k + 1):
                out.append(f"n={n}: block count {len(p.blocks)}->{len(q.blocks)}")
                return out
            if maps.uncross_b_inverse(q) != p:
                out.append(f"n={n}: uncross_b inverse fails on {p.text()}")
                return out
        dom_d = [
            unlabeled(ground_d(n), blocks) for blocks in family_shapes("NC_TILDE_D", n)
        ]
        codom_d = [
            q
            for q in sym_nc
            if sum(1 for b in q.blocks if tuple(sorted(-x for x in b)) == b) % 2 == 0
        ]
        images_d = [maps.uncross(p) for p in dom_d]
        _eq(out, f"n={n} d-image", sorted(q.blocks for q in images_d), sorted(q.blocks for q in codom_d))
        _eq(out, f"n={n} d-inj", len(set(images_d)), len(dom_d))
        for p, q in zip(dom_d, images_d):
            if maps.uncross_d_inverse(q) != p:
                out.append(f"n={n}: uncross inverse fails on {p.text()}")
                return out
        for p in dom_d:
            if maps.uncross(negate(p)) != negate(maps.uncross(p)):
                out.append(f"n={n}: uncross does not commute with negation")
                return out
    return out


def _orbit_checker(out, tag, family, n, groups, rep_source, size_exponent, expected_orbits):
    """Shared orbit-theorem verification for one instantiated family."""
    spec = FamilySpec(family, n, groups)
    ds = DirectSum(groups[0], groups[1])
    reports = action.orbit_decomposition(spec)
    total = sum(r.size for r in reports)
    _eq(out, f"{tag} partition", total, _cnt(family, n, groups))
    for r in reports:
        if len(r.two_regular_members) != 1:
            out.append(f"{tag}: orbit with {len(r.two_regular_members)} two-regular members")
            return
    _eq(out, f"{tag} orbit count", len(reports), expected_orbits)
    expected_reps = {_embed_a(maps.shift(p), ds) for p in rep_source}
    got_reps = {r.representative for r in reports}
    _eq(out, f"{tag} representatives", len(got_reps & expected_reps), len(reports))
    for r in reports:
        unshifted = maps.unshift(r.representative)
        s = len(unshifted.singleton_blocks())
        _eq(out, f"{tag} orbit size (s={s})", r.size, groups[1].order ** size_exponent(s))


@_register(
    "orbit-main",
    "structural",
    "shift induces a bijection from PI(n-1,A) [poor NC(n-1,A)] onto the"
    " linear-family orbits of PI(n,A,B) [NC(n,A,B)]; orbit sizes are |B|^s",
    {"n_max": 4, "pairs": GROUP_PAIRS},
    {"n_max": 3, "pairs": GROUP_PAIRS[:2]},
)
def _orbit_main(n_max, pairs):
    out = []
    for ga, gb in pairs:
        a = ga.order - 1
        for n in range(1, n_max + 1):
            base = list(enumerate_family(FamilySpec("PI", n - 1, (ga,))))
            _orbit_checker(
                out, f"PI n={n} A={ga} B={gb}", "PI_AB", n, (ga, gb),
                base, lambda s: s, poly.bell_univariate(n - 1).eval_int(a),
            )
            poor_nc = [
                p
                for p in enumerate_family(FamilySpec("NC", n - 1, (ga,)))
                if classify(p).poor
            ]
            _orbit_checker(
                out, f"NC n={n} A={ga} B={gb}", "NC_AB", n, (ga, gb),
                poor_nc, lambda s: s, poly.motzkin_closed(n - 1).eval_int(a),
            )
            if out:
                return out
    return out


@_register(
    "orbit-B",
    "structural",
    "shift induces a bijection from P_D(n,A) [poor NC~_D(n,A)] onto the"
    " linear-family orbits of P_B(n,A,B) [NC~_B(n,A,B)]; orbit sizes are |B|^(s/2)",
    {"n_max": 4, "pairs": GROUP_PAIRS},
    {"n_max": 2, "pairs": GROUP_PAIRS[:2]},
)
def _orbit_b(n_max, pairs):
    out = []
    for ga, gb in pairs:
        a = ga.order - 1
        for n in range(1, n_max + 1):
            base = list(enumerate_family(FamilySpec("P_D", n, (ga,))))
            _orbit_checker(
                out, f"P_B n={n} A={ga} B={gb}", "P_B_AB", n, (ga, gb),
                base, lambda s: s // 2,
                poly.bell_univariate(n).scale_x(2).eval_int(a),
            )
            poor = [
                p
                for p in enumerate_family(FamilySpec("NC_TILDE_D", n, (ga,)))
                if classify(p).poor
            ]
            _orbit_checker(
                out, f"NC~_B n={n} A={ga} B={gb}", "NC_TILDE_B_AB", n, (ga, gb),
                poor, lambda s: s // 2, poly.motzkinb_closed(n).eval_int(a),
            )
            if out:
                return out
    return out


@_register(
    "orbit-D",
    "structural",
    "shift induces a bijection from P_B(n-1,A) [B-poor NC~_B(n-1,A)] onto the"
    " linear-family orbits of P_D(n,A,B) [NC~_D(n,A,B)]; orbit sizes are"
    " |B|^floor(s/2)",
    {"n_max": 4, "pairs": GROUP_PAIRS},
    {"n_max": 2, "pairs": GROUP_PAIRS[:2]},
)
def _orbit_d(n_max, pairs):
    out = []
    for ga, gb in pairs:
        a = ga.order - 1
        for n in range(1, n_max + 1):
            base = list(enumerate_family(FamilySpec("P_B", n - 1, (ga,))))
            _orbit_checker(
                out, f"P_D n={n} A={ga} B={gb}", "P_D_AB", n, (ga, gb),
                base, lambda s: s // 2,
                poly.bellb_univariate(n - 1).eval_int(a),
            )
            bpoor = [
                p
                for p in enumerate_family(FamilySpec("NC_TILDE_B", n - 1, (ga,)))
                if classify(p).b_poor
            ]
            _orbit_checker(
                out, f"NC~_D n={n} A={ga} B={gb}", "NC_TILDE_D_AB", n, (ga, gb),
                bpoor, lambda s: s // 2,
                poly.motzkinb_tilde_closed(n - 1).eval_int(a),
            )
            if out:
                return out
    return out


@_register(
    "rank-invert-A",
    "structural",
    "the full-block action is an involution, and on NC(n) it sends k blocks"
    " to n+1-k blocks",
    {"n_max": 8},
    {"n_max": 5},
)
def _rank_invert_a(n_max):
    from .core import unlabeled

    out = []
    for n in range(1, n_max + 1):
        for blocks in family_shapes("PI", n):
            p = unlabeled(ground_a(n), blocks)
            q = action.plus_involution(p)
            if action.plus_involution(q) != p:
                out.append(f"n={n}: not an involution at {p.text()}")
                return out
            if classify(p).noncrossing:
                _eq(out, f"n={n} {p.text()}", len(q.blocks), n + 1 - len(p.blocks))
                if out:
                    return out
    return out


@_register(
    "rank-invert-B",
    "structural",
    "on NC~_B(n), 2k+1 blocks map to 2(n-k)+1 blocks under the involution",
    {"n_max": 5},
    {"n_max": 3},
)
def _rank_invert_b(n_max):
    from .core import ground_b, unlabeled

    out = []
    for n in range(n_max + 1):
        for blocks in family_shapes("NC_TILDE_B", n):
            p = unlabeled(ground_b(n), blocks)
            q = action.plus_involution(p)
            k = (len(p.blocks) - 1) // 2
            _eq(out, f"n={n} {p.text()}", len(q.blocks), 2 * (n - k) + 1)
            if out:
                return out
            if action.plus_involution(q) != p:
                out.append(f"n={n}: not an involution at {p.text()}")
                return out
    return out


@_register(
    "rank-invert-D",
    "structural",
    "on NC~_D(n) the involution sends m blocks to 2n+2-m when -1 tops its"
    " block, else to 2n-m",
    {"n_max": 5},
    {"n_max": 3},
)
def _rank_invert_d(n_max):
    from .core import ground_d, unlabeled

    out = []
    for n in range(1, n_max + 1):
        for blocks in family_shapes("NC_TILDE_D", n):
            p = unlabeled(ground_d(n), blocks)
            q = action.plus_involution(p)
            tops = max(p.block_of(-1)) == -1
            want = 2 * n + 2 - len(p.blocks) if tops else 2 * n - len(p.blocks)
            _eq(out, f"n={n} {p.text()}", len(q.blocks), want)
            if out:
                return out
    return out


@_register(
    "shift-bij-A",
    "structural",
    "shift bijects feasible partitions onto two-regular ones with no block"
    " following another, and poor noncrossing onto two-regular noncrossing",
    {"n_max": 5, "group": Z3},
    {"n_max": 4, "group": Z2},
)
def _shift_bij_a(n_max, group):
    out = []
    for n in range(n_max + 1):
        everything = list(enumerate_family(FamilySpec("PI", n, (group,))))
        target = list(enumerate_family(FamilySpec("PI", n + 1, (group,))))
        _check_shift_restriction(
            out, f"A n={n} feasible", everything, target,
            lambda p: classify(p).feasible,
            lambda q: classify(q).two_regular and _no_adjacent_blocks(q),
        )
        _check_shift_restriction(
            out, f"A n={n} poor-nc", everything, target,
            lambda p: classify(p).poor and classify(p).noncrossing,
            lambda q: classify(q).two_regular and classify(q).noncrossing,
        )
        # image of shift is exactly the two-regular members
        _check_shift_restriction(
            out, f"A n={n} all", everything, target,
            lambda p: True, lambda q: classify(q).two_regular,
        )
        if out:
            return out
    return out


@_register(
    "shift-bij-BD",
    "structural",
    "shift bijects: feasible P_D(n) onto gap two-regular P_B(n); B-feasible"
    " P_B(n) onto gap two-regular P_D(n+1); poor NC~_D(n) onto two-regular"
    " NC~_B(n); B-poor NC~_B(n) onto two-regular NC~_D(n+1)",
    {"n_max": 3, "group": Z3},
    {"n_max": 2, "group": Z2},
)
def _shift_bij_bd(n_max, group):
    out = []
    for n in range(n_max + 1):
        p_d = list(enumerate_family(FamilySpec("P_D", n, (group,))))
        p_b = list(enumerate_family(FamilySpec("P_B", n, (group,))))
        p_d_next = list(enumerate_family(FamilySpec("P_D", n + 1, (group,))))
        _check_shift_restriction(
            out, f"BD n={n} (1)", p_d, p_b,
            lambda p: classify(p).feasible,
            lambda q: classify(q).two_regular and _no_adjacent_blocks(q),
        )
        _check_shift_restriction(
            out, f"BD n={n} (2)", p_b, p_d_next,
            lambda p: classify(p).b_feasible,
            lambda q: classify(q).two_regular and _no_adjacent_blocks(q),
        )
        nct_d = [p for p in p_d if classify(p).nc_tilde]
        nct_b = [p for p in p_b if classify(p).nc_tilde]
        nct_d_next = [p for p in p_d_next if classify(p).nc_tilde]
        _check_shift_restriction(
            out, f"BD n={n} (3)", nct_d, nct_b,
            lambda p: classify(p).poor,
            lambda q: classify(q).two_regular,
        )
        _check_shift_restriction(
            out, f"BD n={n} (4)", nct_b, nct_d_next,
            lambda p: classify(p).b_poor,
            lambda q: classify(q).two_regular,
        )
        # images land exactly on the two-regular members
        _check_shift_restriction(
            out, f"BD n={n} 2reg-B", p_d, p_b,
            lambda p: True, lambda q: classify(q).two_regular,
        )
        _check_shift_restriction(
            out, f"BD n={n} 2reg-D", p_b, p_d_next,
            lambda p: True, lambda q: classify(q).two_regular,
        )
        if out:
            return out
    return out


def _no_adjacent_blocks(q) -> bool:
    mins = {min(b) for b in q.blocks}
    return all(max(b) + 1 not in mins for b in q.blocks)


def _check_shift_restriction(out, tag, domain, codomain, dom_pred, cod_pred):
    selected = [p for p in domain if dom_pred(p)]
    images = [maps.shift(p) for p in selected]
    target = {q for q in codomain if cod_pred(q)}
    if len(set(images)) != len(images):
        out.append(f"{tag}: shift is not injective")
        return
    if set(images) != target:
        missing = sorted(q.text() for q in target - set(images))[:1]
        extra = sorted(q.text() for q in set(images) - target)[:1]
        out.append(f"{tag}: image mismatch missing={missing} extra={extra}")
