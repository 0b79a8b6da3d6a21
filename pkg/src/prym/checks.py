"""Self-check suites behind the CLI: each returns named pass/fail lines."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"[{'PASS' if self.ok else 'FAIL'}] {self.name}" + (f": {self.detail}" if self.detail else "")


def _run(name: str, fn) -> Check:
    try:
        ok, detail = fn()
    except Exception as e:  # a crashed check is a failed check
        return Check(name, False, f"{type(e).__name__}: {e}")
    return Check(name, bool(ok), detail)


def roots_selfcheck() -> list[Check]:
    from . import roots as R

    def counts():
        return (len(R.e6().roots), len(R.f4().roots)) == (72, 48), f"|E6| = {len(R.e6().roots)}, |F4| = {len(R.f4().roots)}"

    def folding():
        same = set(R.f4().roots) == set(R.f4_from_cartan().roots)
        cartan = R.f4().cartan_matrix() == R.F4_BOURBAKI_CARTAN
        return same and cartan, "folded roots equal the Cartan-generated F4 roots" if same else "root sets differ"

    def table():
        rows = R.phi_v_table()
        return len(rows) == 28, "28 odd-height roots match the stored weight table"

    def hasse():
        rel = R.covering_relations(R.HASSE_SUBPOSET)
        return rel == R.HASSE_EDGES, f"{len(rel)} covering relations"

    def weyl():
        r = R.weyl_mod2_report()
        ok = (
            r.order_w == 51840
            and r.order_centralizer == 1152
            and (r.image_dim, r.fixed_dim) == (2, 4)
            and r.coxeter_fixed_dim == 0
            and not r.identity_in_c
            and r.eta < 1
        )
        return ok, f"|W| = {r.order_w}, |C(zeta)| = {r.order_centralizer}, dims ({r.image_dim}, {r.fixed_dim}), eta = {r.eta}"

    return [_run(n, f) for n, f in (("root counts", counts), ("folding", folding), ("weight table", table), ("Hasse diagram", hasse), ("Weyl mod 2", weyl))]


def _random_c(rng: random.Random, bound: int = 20) -> tuple[int, ...]:
    return tuple(rng.randint(-bound, bound) for _ in range(4))


def lie_selfcheck(samples: int = 100, seed: int = 0) -> list[Check]:
    from . import lie as L

    def e6():
        t = L.e6_table()
        t.check_antisymmetry()
        t.check_jacobi()
        L.check_zeta_automorphism()
        return True, "antisymmetry, Jacobi and zeta-invariance of the E6 table"

    def dims():
        a = L.build_folded_f4()
        return (a.dim, a.g_dim, a.v_dim) == (52, 24, 28), f"({a.dim}, {a.g_dim}, {a.v_dim})"

    def triple():
        L.sl2_triple()
        return True, "[X,E] = 2E, [X,F] = -2F, [E,F] = X"

    def slice_checks():
        rng = random.Random(seed)
        bad_ker, bad_inv, n = 0, 0, 0
        while n < samples:
            c = _random_c(rng)
            v = L.slice_point(c)
            if L.lie_discriminant(v) == 0:
                continue
            n += 1
            bad_ker += L.adjoint_kernel_dim(v) != 4
            bad_inv += tuple(L.slice_coordinates(v)) != tuple(Fraction(x) for x in c)
        return bad_ker == 0 and bad_inv == 0, f"{n} slice points: {bad_ker} kernel failures, {bad_inv} chart failures"

    def psi():
        res = L.equivariance_residuals()
        bad = sum(1 for r in res if r[2])
        return bad == 0, f"{len(res)} generator/basis residuals, {bad} nonzero"

    def anchor():
        from .sp6 import WVector

        v = [0] * 28
        v[L.ANCHOR_ROW - 1] = 1
        img = L.psi(v)
        want = WVector.from_wedge({(2, 3, 4): 1})
        return img.w1 == want and not any(img.w2.coords()), f"row {L.ANCHOR_ROW} -> (e4^e2^e3, 0)"

    return [
        _run(n, f)
        for n, f in (
            ("E6 table", e6), ("graded dimensions", dims), ("sl2 triple", triple),
            ("slice", slice_checks), ("equivariance of Psi", psi), ("anchor of Psi", anchor),
        )
    ]


def resolvent_covariance(samples: int = 100, seed: int = 0, bound: int = 3) -> tuple[int, int]:
    """(checked, failures) for Q_{g v} = Q_v((x, y) A) with g a product of root-group elements."""
    from . import lie as L
    from .quartics import pgl2_act
    from .sp6 import resolvent_quartic

    alg = L.build_folded_f4()
    gens = [g for g in L.g_generators() if g.name[0] in "ef"]
    rng = random.Random(seed)
    fails = 0
    for _ in range(samples):
        v = [rng.randint(-bound, bound) for _ in range(28)]
        x = alg.embed_v(v)
        A = [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
        for _ in range(3):
            gen = rng.choice(gens)
            t = rng.randint(-2, 2)
            x = L.exp_ad([t * a for a in gen.element], x)
            _, N = L.group_element_images(gen, t)
            A = [[sum(N[i][k] * A[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
        lhs = resolvent_quartic(L.psi(alg.v_part(x)))
        rhs = pgl2_act(A, resolvent_quartic(L.psi(v)))
        fails += lhs != rhs
    return samples, fails
