"""Scene files: JSON descriptions of a ring, named ideals, and checks to run.

Schema version 1.  A scene holds one ring (any kernel), a dictionary of named
ideals, and a list of checks; each check may carry an expected outcome, and the
runner reports whether every expectation matched.  Parsing is strict: unknown
kinds, dangling ideal names and malformed payloads raise SceneError.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import finite, predicates, series
from .exponents import CofiniteSet, numerical_semigroup, shifted_ideal
from .fields import RATIONALS, BaseField, ExtensionField, prime_field, sqrt2_sqrt3_field
from .monomials import MonomialIdeal, mi_contains, mi_equal, mi_power
from .subspaces import Subspace
from .verdicts import Candidates

SCHEMA_VERSION = 1


class SceneError(ValueError):
    pass


@dataclass(frozen=True)
class CheckSpec:
    id: str
    op: str
    params: dict
    expect: dict | None = None

    def to_dict(self) -> dict:
        out = {"id": self.id, "op": self.op, **self.params}
        if self.expect is not None:
            out["expect"] = self.expect
        return out


@dataclass(frozen=True)
class Scene:
    ring_spec: dict
    ideal_specs: dict
    checks: tuple
    schema: int = SCHEMA_VERSION

    @classmethod
    def from_dict(cls, data: dict) -> "Scene":
        if not isinstance(data, dict):
            raise SceneError("scene must be a JSON object")
        if data.get("schema") != SCHEMA_VERSION:
            raise SceneError(f"unsupported schema: {data.get('schema')!r}")
        if "ring" not in data:
            raise SceneError("scene is missing 'ring'")
        checks = []
        for k, raw in enumerate(data.get("checks", [])):
            raw = dict(raw)
            cid = raw.pop("id", f"check-{k + 1}")
            op = raw.pop("op", None)
            if not op:
                raise SceneError(f"check {cid}: missing 'op'")
            expect = raw.pop("expect", None)
            checks.append(CheckSpec(cid, op, raw, expect))
        return cls(dict(data["ring"]), dict(data.get("ideals", {})), tuple(checks))

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "ring": self.ring_spec,
            "ideals": self.ideal_specs,
            "checks": [c.to_dict() for c in self.checks],
        }


# -- ring construction -----------------------------------------------------------


def _parse_base(spec) -> BaseField:
    if spec in (None, "Q", "q"):
        return RATIONALS
    if isinstance(spec, dict) and "p" in spec:
        return prime_field(int(spec["p"]))
    raise SceneError(f"bad base field spec: {spec!r}")


def _parse_scalar(v):
    if isinstance(v, str):
        return Fraction(v)
    return v


def _parse_field(spec: dict) -> ExtensionField:
    base = _parse_base(spec.get("base"))
    ext = spec.get("extension")
    if ext is None:
        return ExtensionField.line(base)
    if "preset" in ext:
        if ext["preset"] == "sqrt2_sqrt3":
            return sqrt2_sqrt3_field(base)
        raise SceneError(f"unknown field preset: {ext['preset']!r}")
    if "minpoly" in ext:
        coeffs = [_parse_scalar(c) for c in ext["minpoly"]]
        return ExtensionField.from_minpoly(base, coeffs, ext.get("name", "t"))
    if "table" in ext:
        return ExtensionField.from_table(base, ext["table"], tuple(ext["names"]))
    raise SceneError(f"bad extension spec: {ext!r}")


def _parse_subspace(spec, ambient: ExtensionField) -> Subspace:
    if spec == "zero":
        return Subspace.zero(ambient)
    if spec == "full":
        return Subspace.full(ambient)
    if isinstance(spec, list):
        return Subspace.span(ambient, [[_parse_scalar(c) for c in v] for v in spec])
    raise SceneError(f"bad subspace spec: {spec!r}")


def _parse_profile(spec, ambient: ExtensionField) -> series.ProfileModule:
    if spec == "full":
        return series.ProfileModule(ambient, (), Subspace.full(ambient))
    if spec == "zero":
        return series.ProfileModule.zero(ambient)
    if "exponents" in spec:
        e = spec["exponents"]
        cof = CofiniteSet.make(set(e.get("members", [])), int(e["conductor"]))
        return series.ProfileModule.from_exponents(ambient, cof)
    if "table" in spec:
        table = [_parse_subspace(s, ambient) for s in spec["table"]]
        tail = _parse_subspace(spec.get("tail", "zero"), ambient)
        return series.ProfileModule(ambient, table, tail)
    raise SceneError(f"bad profile spec: {spec!r}")


class SceneContext:
    """A built scene: the ring object, the kernel tag, and resolved ideals."""

    def __init__(self, scene: Scene):
        self.scene = scene
        self.kernel, self.ring, self.ambient = self._build_ring(scene.ring_spec)
        self.ideals = {}
        for name, spec in scene.ideal_specs.items():
            self.ideals[name] = self._build_ideal(spec)

    def _build_ring(self, spec: dict):
        kind = spec.get("kind")
        if kind == "semigroup":
            ambient = ExtensionField.line(_parse_base(spec.get("base")))
            ring = series.SeriesRing(
                series.ProfileModule.from_exponents(
                    ambient, numerical_semigroup(spec["gens"])
                )
            )
            return "series", ring, ambient
        if kind == "series":
            ambient = _parse_field(spec)
            ring = series.SeriesRing(_parse_profile(spec["profile"], ambient))
            return "series", ring, ambient
        if kind == "monomial":
            return "monomial", int(spec["dim"]), None
        if kind == "zmod":
            return "finite", finite.zmod(int(spec["n"])), None
        if kind == "gf":
            return "finite", finite.gf(int(spec["p"])), None
        if kind == "product":
            factors = spec.get("factors", [])
            if len(factors) < 2:
                raise SceneError("product needs at least two factors")
            rings = [self._build_ring(f)[1] for f in factors]
            for r in rings:
                if not isinstance(r, finite.FiniteRing):
                    raise SceneError("product factors must be finite rings")
            acc = rings[0]
            for r in rings[1:]:
                acc = finite.product_ring(acc, r)
            return "finite", acc, None
        if kind == "idealization":
            _, base_ring, _ = self._build_ring(spec["ring"])
            if not isinstance(base_ring, finite.FiniteRing):
                raise SceneError("idealization base must be a finite ring")
            module = finite.CyclicModule.over_zmod(base_ring, int(spec["module"]["cyclic"]))
            return "finite", finite.idealization(base_ring, module), None
        if kind == "split_z":
            return "split_z", int(spec["module"]["cyclic"]), None
        raise SceneError(f"unknown ring kind: {kind!r}")

    def _build_ideal(self, spec: dict):
        if self.kernel == "series":
            if "exp_gens" in spec:
                sg = self.ring.profile.exponent_set()
                if sg is None:
                    raise SceneError("exp_gens requires an exponent-set ring")
                return series.ProfileModule.from_exponents(
                    self.ambient, shifted_ideal(sg, spec["exp_gens"])
                )
            if "principal" in spec:
                p = spec["principal"]
                x = self.ambient.coerce_vector([_parse_scalar(c) for c in p["coeffs"]])
                return series.principal_module(self.ring, x, int(p["offset"]))
            if spec == {"unit": True} or spec.get("unit"):
                return self.ring.unit_ideal()
            return _parse_profile(spec.get("profile", spec), self.ambient)
        if self.kernel == "monomial":
            if "power" in spec:
                p = spec["power"]
                return mi_power(MonomialIdeal.make(self.ring, p["gens"]), int(p["n"]))
            return MonomialIdeal.make(self.ring, spec["gens"])
        if self.kernel == "finite":
            if spec.get("unit"):
                return self.ring.unit_ideal()
            gens = [self._encode_element(g) for g in spec.get("gens", [])]
            return finite.FiniteIdeal.generated(self.ring, gens)
        if self.kernel == "split_z":
            if spec.get("unit"):
                return finite.SplitIdealZ.unit(self.ring)
            return finite.SplitIdealZ.make(self.ring, int(spec["n"]), spec.get("f_gens", []))
        raise SceneError(f"no ideal builder for kernel {self.kernel!r}")

    def _encode_element(self, g) -> int:
        ring = self.ring
        if isinstance(g, int):
            if ring.kind.startswith(("Z/", "GF")):
                return g % ring.size
            raise SceneError("integer elements only make sense for Z/n and GF(p)")
        if isinstance(g, (list, tuple)) and len(g) == 2:
            name = f"({ring.parts[0].names[int(g[0]) % ring.parts[0].size]},{int(g[1])})" \
                if finite.is_idealization(ring) else f"({g[0]},{g[1]})"
            try:
                return ring.names.index(name)
            except ValueError:
                raise SceneError(f"element {g!r} not found in ring")
        raise SceneError(f"bad element spec: {g!r}")

    def ideal(self, name: str):
        if name not in self.ideals:
            raise SceneError(f"unknown ideal name: {name!r}")
        return self.ideals[name]

    # -- candidates ------------------------------------------------------------

    def candidates(self, spec: dict, target) -> Candidates:
        mode = spec.get("mode")
        if mode == "witness":
            pool = [self.ideal(n) for n in spec["ideals"]]
            return Candidates.witness_list(pool, "supplied candidates")
        if self.kernel == "series":
            window = int(spec["window"])
            if mode == "submodules":
                pool = series.enumerate_submodules(target, self.ring, window)
                return Candidates.complete_pool(
                    pool, f"all submodules within window {window}"
                )
            if mode == "supermodules":
                pool = series.enumerate_supermodules(target, self.ring, window)
                return Candidates.complete_pool(
                    pool, f"all supermodules within window {window} inside K[[X]]"
                )
        if self.kernel == "finite":
            lattice = finite.enumerate_ideals(self.ring)
            if mode == "all-sub":
                pool = [i for i in lattice if i <= target]
                return Candidates.complete_pool(pool, "all subideals")
            if mode == "all-super":
                pool = [i for i in lattice if target <= i]
                return Candidates.complete_pool(pool, "all superideals")
        raise SceneError(f"bad candidates spec: {spec!r}")

    # -- check execution ---------------------------------------------------------

    def run_check(self, check: CheckSpec) -> dict:
        started = time.perf_counter()
        result = self._dispatch(check)
        elapsed = (time.perf_counter() - started) * 1000.0
        match = self._matches(check.expect, result)
        record = {
            "id": check.id,
            "op": check.op,
            "inputs": check.params,
            "result": result,
            "expect": check.expect,
            "match": match,
            "wall_ms": round(elapsed, 3),
        }
        return record

    def _dispatch(self, check: CheckSpec) -> dict:
        op = check.op
        p = check.params
        n_max = int(p.get("n_max", predicates.DEFAULT_N_MAX))
        if op == "contains":
            a, b = self.ideal(p["a"]), self.ideal(p["b"])
            value = b <= a
            if p.get("strict"):
                value = value and a != b
            return {"value": value}
        if op == "equal":
            a, b = self.ideal(p["a"]), self.ideal(p["b"])
            if "pow_a" in p:
                a = a ** int(p["pow_a"])
            if "pow_b" in p:
                b = b ** int(p["pow_b"])
            return {"value": a == b, "lhs": repr(a), "rhs": repr(b)}
        if op == "colon":
            a, b = self.ideal(p["a"]), self.ideal(p["b"])
            out = a.colon(b)
            return {"value": repr(out), "object": out}
        if op == "is_reduction":
            v = predicates.is_reduction(self.ideal(p["j"]), self.ideal(p["i"]), n_max)
            return {"verdict": v}
        if op in ("is_basic", "is_c_ideal", "is_big", "is_upper_big"):
            target = self.ideal(p["ideal"])
            cands = self.candidates(p["candidates"], target)
            fn = getattr(predicates, op)
            return {"verdict": fn(target, cands, n_max)}
        if op == "ratliff_rush":
            target = self.ideal(p["ideal"])
            rr = predicates.ratliff_rush(target, self.ring, n_max)
            return {
                "closure": repr(rr.closure),
                "object": rr.closure,
                "stabilized": rr.stabilized,
                "stabilized_at": rr.stabilized_at,
            }
        if op == "is_strongly_stable":
            if self.kernel != "series":
                raise SceneError("is_strongly_stable runs on the series kernel")
            return {"verdict": series.is_strongly_stable(self.ideal(p["ideal"]), self.ring)}
        if op == "power_escapes":
            if self.kernel != "series":
                raise SceneError("power_escapes runs on the series kernel")
            w = Subspace.span(
                self.ambient, [[_parse_scalar(c) for c in v] for v in p["subspace"]]
            )
            return {"verdict": series.submodule_power_escapes(w, n_max)}
        raise SceneError(f"unknown check op: {op!r}")

    def _matches(self, expect, result: dict) -> bool:
        if expect is None:
            return True
        if "value" in result and not isinstance(expect, dict):
            return result["value"] == expect
        if "verdict" in result:
            v = result["verdict"]
            ok = True
            if "outcome" in expect:
                ok = ok and v.outcome == expect["outcome"]
            if "holds" in expect:
                ok = ok and v.holds == expect["holds"]
            if "n" in expect:
                ok = ok and v.n == expect["n"]
            if "witness" in expect:
                ok = ok and v.witness == self.ideal(expect["witness"])
            return ok
        if "closure" in result:
            ok = True
            if "equals" in expect:
                ok = ok and result["object"] == self.ideal(expect["equals"])
            if "stabilized_at" in expect:
                ok = ok and result["stabilized_at"] == expect["stabilized_at"]
            if "stabilized" in expect:
                ok = ok and result["stabilized"] == expect["stabilized"]
            return ok
        if "object" in result and "equals" in expect:
            return result["object"] == self.ideal(expect["equals"])
        return False


def run_scene(scene: Scene, n_max_override: int | None = None):
    """Execute every check; returns (records, all_matched)."""
    ctx = SceneContext(scene)
    records = []
    ok = True
    for check in scene.checks:
        if n_max_override is not None:
            check = CheckSpec(
                check.id, check.op, {**check.params, "n_max": n_max_override}, check.expect
            )
        rec = ctx.run_check(check)
        ok = ok and rec["match"]
        records.append(rec)
    return records, ok
