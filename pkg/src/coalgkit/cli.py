"""Command-line front end.

Subcommands parse the JSON interchange documents, dispatch to the kernel and
emit a report in text or canonical JSON (identical inputs and seed give
byte-identical output).  Exit codes: 0 success, 2 parse error, 3 validation
error, 4 computation error.
"""

import argparse
import os
import sys

from . import day as day_mod
from . import dayclosure as closure_mod
from . import galois as galois_mod
from . import jsonio
from . import structure as structure_mod
from . import suites as suites_mod
from .coalgebra import Coalgebra, CoalgebraMorphism, generated_subcoalgebra, validate
from .errors import (
    CoalgkitError,
    ComputationError,
    ParseError,
    ValidationError,
)

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_COMPUTATION = 4


class Workspace:
    """Named entities loaded from files; names are unique and every entity
    is validated on load."""

    def __init__(self, seed):
        self.seed = seed
        self.entities = {}

    def add(self, name, entity):
        if name in self.entities:
            raise ParseError(f"duplicate workspace name {name!r}")
        _validate_entity(entity)
        self.entities[name] = entity

    def resolve(self, name):
        if name not in self.entities:
            raise ParseError(f"unknown workspace name {name!r}")
        return self.entities[name]


def _validate_entity(entity):
    if isinstance(entity, (Coalgebra, CoalgebraMorphism)):
        bad = validate(entity)
        if bad:
            raise ValidationError(f"invalid entity: {bad[:4]}")
    if isinstance(entity, day_mod.LinearMonoidalCategory):
        bad = entity.validate()
        if bad:
            raise ValidationError(f"invalid category: {bad[:4]}")
    if isinstance(entity, day_mod.DayPresheaf):
        bad = entity.validate()
        if bad:
            raise ValidationError(f"invalid presheaf: {bad[:4]}")


def _load_file(path, workspace=None, check=True):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"{path}: {exc}") from None
    obj = jsonio.load_document(text, path)
    resolve = workspace.resolve if workspace else None
    entity = jsonio.parse_entity(obj, resolve=resolve)
    if check:
        _validate_entity(entity)
    return entity


def _argument_entity(arg, workspace, check=True):
    if workspace and arg in workspace.entities:
        return workspace.resolve(arg)
    return _load_file(arg, workspace, check=check)


def _emit(report, fmt):
    if fmt == "json":
        sys.stdout.write(jsonio.canonical_json(report))
    else:
        _emit_text(report)


def _emit_text(report, indent=0):
    pad = "  " * indent
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            print(f"{pad}{key}:")
            _emit_text(value, indent + 1)
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            for i, item in enumerate(value):
                print(f"{pad}{key}[{i}]:")
                _emit_text(item, indent + 1)
        else:
            print(f"{pad}{key}: {value}")


def _report(kind, **fields):
    out = {"schema": jsonio.SCHEMA, "report": kind}
    out.update(fields)
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="coalgkit",
        description="exact kernel for cocommutative coalgebras: etale "
        "decomposition, Galois descent, Day convolution",
    )
    parser.add_argument("--seed", type=int, default=None, help="RNG seed (fallback: COALG_KERNEL_SEED, then 0)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--degree-cap", type=int, default=16, help="rational factorization degree cap")
    parser.add_argument("--load", action="append", default=[], metavar="NAME=PATH", help="preload a named entity")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_text, nargs in [
        ("validate", "check the axioms of an entity", 1),
        ("etale", "simple subcoalgebras, etale part and retraction", 1),
        ("decompose", "irreducible components / dual local decomposition", 1),
        ("grouplikes", "group-like elements", 1),
        ("retract", "the coalgebra retraction onto the etale part", 1),
        ("subgen", "subcoalgebra generated by a subspace", 2),
        ("adjunction-gp", "pointwise/group-like adjunction checks", 1),
        ("galois-functor", "value of the equivariant-functions coalgebra functor", 2),
        ("galois-adjunction", "unit/counit checks for the Galois adjunction", 2),
        ("day-convolve", "Day convolution of two presheaves", 3),
        ("day-hom", "internal hom of two presheaves", 3),
        ("day-subgen", "generated Day subcoalgebra", 2),
    ]:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("args", nargs=nargs)

    p = sub.add_parser("suite", help="run the verification suites")
    p.add_argument("--suite", action="append", dest="suites", metavar="NAME", help=f"one of {', '.join(suites_mod.SUITES)}")

    opts = parser.parse_args(argv)
    seed = opts.seed
    if seed is None:
        seed = int(os.environ.get("COALG_KERNEL_SEED", "0"))

    from . import factor as factor_mod

    factor_mod.DEFAULT_DEGREE_CAP = opts.degree_cap
    workspace = Workspace(seed)
    try:
        for item in opts.load:
            name, _, path = item.partition("=")
            if not path:
                raise ParseError(f"--load expects NAME=PATH, got {item!r}")
            workspace.add(name, _load_file(path, workspace))
        report = _dispatch(opts, workspace, seed)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ValidationError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except (ComputationError, CoalgkitError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    _emit(report, opts.format)
    return EXIT_OK if report.get("ok", True) else EXIT_VALIDATION


def _dispatch(opts, workspace, seed):
    cmd = opts.command
    if cmd == "suite":
        result = suites_mod.run_all(seed, opts.suites)
        result["report"] = "suite"
        return result
    simple = {
        "validate": 1, "etale": 1, "decompose": 1, "grouplikes": 1,
        "retract": 1, "subgen": 2, "galois-functor": 2, "galois-adjunction": 2,
    }
    args = []
    if cmd in simple:
        # the validate command reports violations instead of failing on load
        check = cmd != "validate"
        args = [_argument_entity(a, workspace, check=check) for a in opts.args]
    if cmd == "validate":
        entity = args[0]
        if isinstance(entity, (day_mod.LinearMonoidalCategory, day_mod.DayPresheaf, day_mod.DayCoalgebra)):
            bad = entity.validate()
        elif isinstance(entity, (galois_mod.GaloisDatum, galois_mod.FiniteGSet)):
            bad = []  # validated during construction
        else:
            bad = validate(entity)
        kind = type(entity).__name__
        dim = getattr(entity, "dim", None)
        return _report(
            "validate",
            ok=not bad,
            entity=kind,
            dim=dim,
            violations=[str(b) for b in bad[:10]],
        )
    if cmd == "etale":
        C = args[0]
        data = structure_mod.etale_part(C)
        return _report(
            "etale",
            ok=True,
            dim=C.dim,
            etale_dim=data.etale.dim,
            simple_dims=[s.dim for s, _ in data.simples],
            split=data.is_split(),
            inclusion=jsonio.matrix_to_json(data.inclusion.matrix),
            retraction=jsonio.matrix_to_json(data.retraction.matrix),
        )
    if cmd == "decompose":
        C = args[0]
        from .coalgebra import dual_algebra

        comps, iso = structure_mod.irreducible_components(C)
        dec = structure_mod.local_decomposition(dual_algebra(C))
        return _report(
            "decompose",
            ok=True,
            dim=C.dim,
            component_dims=[c.dim for c, _ in comps],
            residue_degrees=[c.residue.dim for c in dec.components],
            nilpotency=[c.nilpotency_index for c in dec.components],
            iso=jsonio.matrix_to_json(iso.matrix),
        )
    if cmd == "grouplikes":
        C = args[0]
        gl = structure_mod.group_likes(C)
        return _report(
            "grouplikes",
            ok=True,
            dim=C.dim,
            count=len(gl.elements),
            elements=[jsonio.vector_to_json(C.field, v) for v in gl.elements],
        )
    if cmd == "retract":
        C = args[0]
        data = structure_mod.etale_part(C)
        return _report(
            "retract",
            ok=True,
            etale_dim=data.etale.dim,
            retraction=jsonio.matrix_to_json(data.retraction.matrix),
            splits_inclusion=bool(
                data.retraction.matrix @ data.inclusion.matrix
                == _identity(C.field, data.etale.dim)
            ),
        )
    if cmd == "subgen":
        C, S = args
        D, incl = generated_subcoalgebra(C, S)
        return _report(
            "subgen",
            ok=True,
            ambient_dim=C.dim,
            generated_dim=D.dim,
            coalgebra=jsonio.coalgebra_to_json(D),
            inclusion=jsonio.matrix_to_json(incl.matrix),
        )
    if cmd == "adjunction-gp":
        entity = _argument_entity(opts.args[0], workspace)
        rep = structure_mod.gp_adjunction_checks(C=entity)
        return _report("adjunction-gp", ok=rep["ok"], checks=[[n, v] for n, v in rep["checks"]])
    if cmd == "galois-functor":
        D, X = args
        if not isinstance(D, galois_mod.GaloisDatum):
            raise ParseError("first argument must be a galois document")
        X = galois_mod.FiniteGSet(X.size, X.action, D.table)
        k = galois_mod.kbar_functor(D, X)
        orbits = galois_mod.orbits_and_stabilizers(D, X)
        return _report(
            "galois-functor",
            ok=True,
            gset_size=X.size,
            orbit_sizes=[len(o) for o, _, _ in orbits],
            stabilizer_orders=[len(s) for _, s, _ in orbits],
            coalgebra=jsonio.coalgebra_to_json(k.coalgebra),
        )
    if cmd == "galois-adjunction":
        D, other = args
        if isinstance(other, galois_mod.FiniteGSet):
            other = galois_mod.FiniteGSet(other.size, other.action, D.table)
            rep = galois_mod.adjunction_checks(D, X=other)
        else:
            rep = galois_mod.adjunction_checks(D, C=other)
        return _report(
            "galois-adjunction", ok=rep["ok"], checks=[[n, v] for n, v in rep["checks"]]
        )
    if cmd == "day-convolve":
        cat, F, G = _day_triple(opts.args, workspace)
        T = day_mod.day_convolve(F, G)
        verification = {
            "presheaf-valid": not T.presheaf.validate(),
            "dims": T.presheaf.dims,
        }
        return _report(
            "day-convolve",
            ok=verification["presheaf-valid"],
            convolution=jsonio.day_presheaf_to_json(T.presheaf, category_name="category"),
            verification=verification,
        )
    if cmd == "day-hom":
        cat, F, G = _day_triple(opts.args, workspace)
        IH = day_mod.internal_hom(F, G)
        return _report(
            "day-hom",
            ok=not IH.presheaf.validate(),
            hom=jsonio.day_presheaf_to_json(IH.presheaf, category_name="category"),
        )
    if cmd == "day-subgen":
        FC = _argument_entity(opts.args[0], workspace)
        if not isinstance(FC, day_mod.DayCoalgebra):
            raise ParseError("first argument must be a day-coalgebra document")
        with open(opts.args[1], "r", encoding="utf-8") as fh:
            obj = jsonio.load_document(fh.read(), opts.args[1])
        sub0 = jsonio.day_subpresheaf_from_json(obj, FC.presheaf)
        subc, incl, spaces = closure_mod.generated_day_subcoalgebra(FC, sub0)
        return _report(
            "day-subgen",
            ok=not subc.validate(),
            dims=spaces.dims(),
            subcoalgebra=jsonio.day_coalgebra_to_json(subc, category_name="category"),
        )
    raise ParseError(f"unknown command {cmd!r}")


def _day_triple(paths, workspace):
    cat = _argument_entity(paths[0], workspace)
    if not isinstance(cat, day_mod.LinearMonoidalCategory):
        raise ParseError("first argument must be a day-category document")
    fs = []
    for p in paths[1:]:
        with open(p, "r", encoding="utf-8") as fh:
            obj = jsonio.load_document(fh.read(), p)
        fs.append(jsonio.day_presheaf_from_json(obj, category=cat))
    for F in fs:
        bad = F.validate()
        if bad:
            raise ValidationError(f"invalid presheaf: {bad[:4]}")
    return cat, fs[0], fs[1]


def _identity(field, n):
    from .linalg import Matrix

    return Matrix.identity(field, n)


if __name__ == "__main__":
    sys.exit(main())
