import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List

from config import Config
from deformation import quadratic_dimension_bound, special_locus_report
from errors import PhantomError, UnknownBundle
from hom import CurveSheaf, LineBundle, Skyscraper, hom
from interp import case_list, verify_generality
from lattice import D, F, genus_of_multiple
from objects import N_POINTS, BundleName
from projection import ExceptionalCollection, curve_projection_report, curve_report, normal_bundle_report, \
    numclass_of, project_numclass, skyscraper_report
from systems import ample_slope_check, uniqueness_report


@dataclass
class BundleItem:
    name: str
    # operation and inputs that produced the payload
    provenance: str
    payload: Dict = field(default_factory=dict)
    passed: bool = False
    error: str | None = None

    def to_dict(self) -> Dict:
        d = {"name": self.name, "provenance": self.provenance, "passed": self.passed, "payload": self.payload}
        if self.error is not None:
            d["error"] = self.error
        return d


@dataclass
class ReportBundle:
    name: BundleName
    items: List[BundleItem] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(item.passed for item in self.items)

    def summary(self) -> Dict:
        return {"total": len(self.items), "failed": [item.name for item in self.items if not item.passed]}

    def to_dict(self) -> Dict:
        return {
            "bundle": self.name.value,
            "passed": self.passed,
            "summary": self.summary(),
            "items": [item.to_dict() for item in self.items],
        }


def _item(name: str, provenance: str, run: Callable[[], tuple]) -> BundleItem:
    """``run`` returns (payload, passed); PhantomErrors fail the item instead of the bundle."""
    try:
        payload, passed = run()
        return BundleItem(name=name, provenance=provenance, payload=payload, passed=bool(passed))
    except PhantomError as e:
        logging.warning(f"bundle item {name} failed: {e}")
        return BundleItem(name=name, provenance=provenance, passed=False, error=f"{type(e).__name__}: {e}")


def _degrees(graded, top: int) -> List:
    return [graded[k] if isinstance(graded[k], int) else str(graded[k]) for k in range(top + 1)]


def _krah_bundle(config: Config) -> List[BundleItem]:
    def collection():
        coll = ExceptionalCollection.default()
        return {"length": len(coll), "objects": [str(o) for o in coll]}, len(coll) == 13

    def vanishing():
        pairs = dict()
        for i in range(1, N_POINTS + 1):
            for j in range(i + 1, N_POINTS + 1):
                pairs[f"{i},{j}"] = str(hom(LineBundle(-D(i)), LineBundle(-D(j))))
        return {"Hom*(O(-D_i), O(-D_j))": sorted(set(pairs.values()))}, set(pairs.values()) == {"0"}

    def phantom():
        coll = ExceptionalCollection.default()
        projected = {
            "k(x)": project_numclass(numclass_of(Skyscraper("x")), coll),
            f"G(n={config.curve_n})": project_numclass(numclass_of(CurveSheaf(config.curve_n)), coll),
        }
        return {k: str(v) for k, v in projected.items()}, all(v.is_zero() for v in projected.values())

    def h2_f():
        f = hom(LineBundle(-F()), LineBundle(-2 * F()))
        return {"Hom*(O(-2F), O(-F))": f.to_dict()}, f.as_dict() == {2: 3}

    def unique():
        report = uniqueness_report()
        return report.to_dict(), report.ok

    def ample():
        report = ample_slope_check()
        return report.to_dict(), report.ok

    return [
        _item("exceptional collection", "ExceptionalCollection.default()", collection),
        _item("vanishing", "hom(O(-D_i), O(-D_j)), i < j", vanishing),
        _item("h2(F) = 3", "hom(O(-2F), O(-F))", h2_f),
        _item("numerically trivial projections", "project_numclass(k(x)), project_numclass(G)", phantom),
        _item("|-3F| is a single curve", "uniqueness_report()", unique),
        _item("-F is ample", "ample_slope_check()", ample),
    ]


def _skyscraper_bundle(config: Config) -> List[BundleItem]:
    def run(same: bool, expected: List[int]):
        def inner():
            report = skyscraper_report(same)
            degrees = _degrees(report.totals, 4)
            payload = report.to_dict()
            payload["degrees"] = degrees
            return payload, degrees == expected and report.alternating_sum == 0
        return inner

    return [
        _item("same point", "einfty_total(e1_page(k(x), k(x)), {(-1,2): 1})", run(True, [1, 14, 92, 139, 60])),
        _item("distinct points", "einfty_total(e1_page(k(x), k(y)))", run(False, [0, 13, 92, 139, 60])),
    ]


def _curve_bundle(config: Config) -> List[BundleItem]:
    n = config.curve_n

    def genus():
        g = genus_of_multiple(n)
        return {"n": n, "genus": g}, g == (n * n + 3 * n + 2) // 2

    def dims():
        report = curve_report(n)
        degrees = _degrees(report.totals, 3)
        payload = report.to_dict()
        payload["degrees"] = degrees
        payload["generic"] = True
        page = report.page
        return payload, (page[(-1, 3)] == 4 * n * n and page[(-2, 5)] == 3 * n * n and report.alternating_sum == 0)

    def sheaves():
        report = curve_projection_report(n)
        return report.to_dict(), report.ok and report.h1_multiplicity == 3 * n and report.h0_quotient == (n, 2 * n)

    def normal():
        report = normal_bundle_report(n)
        return report.to_dict(), report.ok

    return [
        _item("genus", f"genus_of_multiple({n})", genus),
        _item("Hom*(P, P)", f"einfty_total(e1_page(G, G)), n = {n}", dims),
        _item("cohomology sheaves", f"curve_projection_report({n})", sheaves),
        _item("normal bundle", f"normal_bundle_report({n})", normal),
    ]


def _special_locus_bundle(config: Config) -> List[BundleItem]:
    def run():
        report = special_locus_report()
        return report.to_dict(), report.ok

    return [_item("special locus", "special_locus_report()", run)]


def _hull_bundle(config: Config) -> List[BundleItem]:
    def run():
        bound = quadratic_dimension_bound()
        return bound.to_dict(), bound.ok

    return [_item("quadratic hull", "quadratic_dimension_bound()", run)]


def _generality_bundle(config: Config) -> List[BundleItem]:
    def run():
        report = verify_generality(case_list(config.case_list), prime=config.prime, seed=config.seed,
                                   workers=config.workers, max_retries=config.max_point_retries,
                                   progress=config.progress)
        return report.to_dict(), report.ok

    return [_item(f"generality ({config.case_list.value})",
                  f"verify_generality({config.case_list.value}, p = {config.prime}, seed = {config.seed})", run)]


_BUNDLES: Dict[BundleName, Callable[[Config], List[BundleItem]]] = {
    BundleName.Krah: _krah_bundle,
    BundleName.Skyscraper: _skyscraper_bundle,
    BundleName.Curve: _curve_bundle,
    BundleName.SpecialLocus: _special_locus_bundle,
    BundleName.Hull: _hull_bundle,
    BundleName.Generality: _generality_bundle,
}


def run_bundle(name: BundleName | str, config: Config | None = None) -> ReportBundle:
    config = Config() if config is None else config
    if isinstance(name, str):
        try:
            name = BundleName.from_str(name)
        except ValueError as e:
            raise UnknownBundle(str(e))
    now = time.time()
    logging.info(f"bundle {name.value} starts.")
    bundle = ReportBundle(name=name, items=_BUNDLES[name](config))
    logging.info(f"bundle {name.value} ends. passed = {bundle.passed}, duration = {time.time() - now:.2f}s.")
    return bundle
