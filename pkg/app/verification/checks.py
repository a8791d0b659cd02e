"""The executable acceptance checks run by the verification runner.

Each check takes its bound parameters from the suite entry and returns
(passed, detail).
"""

import logging
from typing import Callable, Dict, Tuple

import numpy as np

from anodyne.filtration import build_filtration, verify_filtration
from anodyne.retract import retract_witness
from config.limits import TOLERANCE
from cylinder.bundle import cylinder, verify_exactness
from cylinder.interval import interval_of_representable, top_census
from gdelta.cospan import chain_cospan, complete_cospan, factorizations
from gdelta.decompose import decompose
from gdelta.maps import compose, enumerate_hom, identity
from gdelta.objects import SimplexObject
from gdelta.oracles import naive_hom
from gdelta.relations import check_cosimplicial_relations, generating_maps, objects_up_to
from homotopy.admissibility import admissibility_table, is_admissible
from homotopy.deformation import certify_horn
from homotopy.homotopies import is_elementary_homotopy_equivalence
from homotopy.normality import aut_group, is_normal
from objects.standard import boundary, horn, horns
from presheaf.constructions import generated, representable
from presheaf.maps import inclusion
from realization.geometry import naturality_residual, random_point, realize, theta_star

logger = logging.getLogger(__name__)

CheckOutcome = Tuple[bool, str]


def kernel(max_n: int = 3, **_) -> CheckOutcome:
    objects = list(objects_up_to(max_n))
    morphisms = 0
    for src in objects:
        for tgt in objects:
            fast = enumerate_hom(src, tgt)
            if set(fast) != set(naive_hom(src, tgt)):
                return False, f"hom({src}, {tgt}) differs from the oracle"
            for theta in fast:
                if decompose(theta).recompose() != theta:
                    return False, f"decompose does not recompose {theta}"
            morphisms += len(fast)
    return True, f"{morphisms} morphisms over {len(objects)} objects"


def relations(max_n: int = 4, **_) -> CheckOutcome:
    report = check_cosimplicial_relations(max_n)
    failures = report.failures
    if failures:
        first = failures[0]
        return False, f"{len(failures)} failures, first {first.family} at {first.obj}: {first.detail}"
    return True, f"all {len(report.instances)} instances pass"


def _expected_faces(n: int, k: int) -> Dict[SimplexObject, int]:
    expected = {SimplexObject(n - 1, k): n - k + 1, SimplexObject(n - 1, k - 1): k}
    return {d: count for d, count in expected.items() if count}


def cospans(max_n: int = 3, samples: int = 100, seed: int = 0, **_) -> CheckOutcome:
    rng = np.random.default_rng(seed)
    objects = list(objects_up_to(max_n))

    def pick(items):
        return items[rng.integers(len(items))]

    for _ in range(samples):
        base = pick(objects)
        u = pick([f for o in objects for f in enumerate_hom(base, o)])
        x = pick([f for o in objects for f in enumerate_hom(u.tgt, o)])
        beta = compose(x, u)
        w, y = pick(factorizations(beta, pick(objects)) or [(identity(base), beta)])
        cospan = chain_cospan(u, x, w, y, int(rng.integers(base.n + 2)))
        if not complete_cospan(cospan).commutes(cospan):
            return False, f"cospan over {base} through {u} and {w} does not complete"
    return True, f"{samples} sampled cospans complete"


def boundary_census(max_n: int = 4, **_) -> CheckOutcome:
    checked = 0
    for n in range(1, max_n + 1):
        for k in range(n + 2):
            found = top_census(boundary(n, k))
            if found != _expected_faces(n, k):
                return False, f"boundary({n},{k}) has top census {found}"
            checked += 1
    return True, f"{checked} boundaries"


def admissibility(max_n: int = 6, **_) -> CheckOutcome:
    agree, disagree = admissibility_table(max_n)
    if disagree:
        return False, f"closed form and definition disagree on {disagree[:3]}"
    bad = {(n, k, l) for n, k, l, ok in agree if not ok}
    expected = {(n, 1, 0) for n in range(1, max_n + 1)} | {(n, n, n) for n in range(1, max_n + 1)}
    if bad != expected:
        return False, f"non-admissible set {sorted(bad)}"
    return True, f"{len(agree)} horns, {len(bad)} non-admissible"


def horn_equivalences(max_n: int = 3, refute_max_n: int = 2, **_) -> CheckOutcome:
    certified = refuted = 0
    for n, k, l in horns(max_n):
        if is_admissible(n, k, l):
            if not certify_horn(n, k, l):
                return False, f"Lambda^{n},{k}_{l} not certified"
            certified += 1
        elif n <= refute_max_n:
            iota = inclusion(horn(n, k, l), representable(n, k))
            if is_elementary_homotopy_equivalence(iota):
                return False, f"non-admissible Lambda^{n},{k}_{l} is an equivalence"
            refuted += 1
    return True, f"{certified} certified, {refuted} refuted"


def cylinder_exactness(max_n: int = 3, **_) -> CheckOutcome:
    checked = 0
    for n in range(1, max_n + 1):
        for k in range(n + 2):
            delta = representable(n, k)
            if not cylinder(delta).sections_hold():
                return False, f"rho . d_eps is not the identity over Delta^{n},{k}"
            subs = [boundary(n, k)] + [horn(n, k, l) for l in range(n + 1)]
            for sub in subs:
                if not verify_exactness(inclusion(sub, delta)).ok:
                    return False, f"exactness fails for {sub.name}"
                checked += 1
    return True, f"{checked} inclusions"


def interval_census(max_n: int = 4, **_) -> CheckOutcome:
    for n in range(max_n + 1):
        for k in range(n + 2):
            expected = {SimplexObject(n + 1, k): n - k + 1, SimplexObject(n + 1, k + 1): k}
            expected = {d: count for d, count in expected.items() if count}
            found = top_census(interval_of_representable(n, k))
            if found != expected:
                return False, f"I^{n},{k} has top census {found}"
    return True, f"intervals up to n={max_n}"


def saturation(max_n: int = 3, **_) -> CheckOutcome:
    stages = witnesses = 0
    for n in range(1, max_n + 1):
        for k in range(1, n + 1):
            for report in verify_filtration(build_filtration(n, k)):
                if not report.ok:
                    return False, f"filtration ({n},{k}) fails at stage {report.step}: {report.notes}"
                stages += 1
    for n, k, l in horns(max_n):
        if is_admissible(n, k, l):
            if not retract_witness(n, k, l).ok:
                return False, f"no retract witness for Lambda^{n},{k}_{l}"
            witnesses += 1
    return True, f"{stages} stages, {witnesses} retracts"


def normality(max_n: int = 4, samples: int = 50, seed: int = 0, **_) -> CheckOutcome:
    for n in range(max_n + 1):
        for k in range(n + 2):
            if len(aut_group(n, k)) != (2 if k else 1):
                return False, f"Aut([{n}]_{k}) has {len(aut_group(n, k))} elements"
            if not is_normal(representable(n, k)):
                return False, f"Delta^{n},{k} is not normal"
    rng = np.random.default_rng(seed)
    objects = list(objects_up_to(min(max_n, 3)))
    for _ in range(samples):
        obj = objects[rng.integers(len(objects))]
        delta = representable(obj.n, obj.k)
        cells = [c for c in delta.cells if rng.random() < 0.3]
        sub = generated(delta, cells)
        if not is_normal(sub):
            return False, f"subobject of Delta{obj} on {cells} is not normal"
    return True, f"{samples} sampled subobjects"


def realization(max_n: int = 3, points: int = 100, seed: int = 0, **_) -> CheckOutcome:
    mesh = realize(representable(2, 1))
    if mesh.census() != (4, 5, 2) or mesh.euler() != 1 or not mesh.is_connected():
        return False, f"|Delta^2,1| has census {mesh.census()}"
    rng = np.random.default_rng(seed)
    worst = 0.0
    for theta in generating_maps(max_n):
        for _ in range(points):
            if theta.src.k <= theta.src.n:
                real = random_point(theta.src.n - theta.src.k + 1, rng)
                worst = max(worst, naturality_residual(theta, real))
            image = theta_star(theta, random_point(theta.src.n + 1, rng))
            if (image < -TOLERANCE).any() or abs(image.sum() - 1.0) > 1e-9:
                return False, f"{theta} leaves the simplex"
    if worst >= TOLERANCE:
        return False, f"naturality residual {worst:.3e}"
    return True, f"naturality residual {worst:.1e}"


CHECKS: Dict[str, Callable[..., CheckOutcome]] = {
    "kernel": kernel,
    "relations": relations,
    "cospans": cospans,
    "boundary_census": boundary_census,
    "admissibility": admissibility,
    "horn_equivalences": horn_equivalences,
    "cylinder_exactness": cylinder_exactness,
    "interval_census": interval_census,
    "saturation": saturation,
    "normality": normality,
    "realization": realization,
}
