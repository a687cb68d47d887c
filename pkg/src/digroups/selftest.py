"""Quick built-in checks behind ``digroups selftest``."""

from .compare import oracle_compare
from .digroup import check_axioms, check_laws, decompose
from .free_product import FactorPair
from .groups import fp_group_reduce
from .oracle import Presentation, build_classes
from .samples import ALL, T2, W4, Z2


def _perturbations_fail(D):
    n = len(D)
    for table in ("vdash", "dashv"):
        for a in range(n):
            for b in range(n):
                old = getattr(D, f"{table}_table")[a][b]
                if not check_axioms(D.with_entry(table, a, b, (old + 1) % n)).ok:
                    return True
    return False


def _random_merge_reduce(raw, groups, rng):
    word = list(raw)
    while True:
        moves = [("drop", i) for i, (f, a) in enumerate(word) if a == groups[f - 1].identity]
        moves += [("merge", i) for i in range(len(word) - 1) if word[i][0] == word[i + 1][0]]
        if not moves:
            return tuple(word)
        kind, i = rng.choice(moves)
        if kind == "drop":
            del word[i]
        else:
            f = word[i][0]
            word[i: i + 2] = [(f, groups[f - 1].mul(word[i][1], word[i + 1][1]))]


def run_selftest(rng):
    results = []
    for name, make in ALL.items():
        D = make()
        results.append((f"axioms {name}", check_axioms(D).ok))
        results.append((f"perturbation detected {name}", _perturbations_fail(D) if len(D) > 1 else True))
        try:
            decompose(D)
            results.append((f"decompose {name}", True))
        except Exception:
            results.append((f"decompose {name}", False))

    A, B = W4(), Z2(("f", "b"))
    ctx = FactorPair(A, B)
    results.append(("free product laws W4*Z2 (length <= 3)", check_laws(ctx, ctx.normal_forms(3)).ok))

    ok = True
    for _ in range(200):
        raw = [(f, rng.randrange(2)) for f in (rng.choice((1, 2)) for _ in range(rng.randrange(9)))]
        groups = ctx.groups
        ok &= fp_group_reduce(raw, groups) == _random_merge_reduce(raw, groups, rng)
    results.append(("free product reduction confluent (random merge orders)", ok))

    P = Presentation(T2(), Z2(("f", "b")))
    base = build_classes(P, 3)
    shuffled = build_classes(P, 3, order_seed=rng.randrange(2**32))
    results.append(("oracle deterministic under shuffled unions", base.class_of == shuffled.class_of))
    results.append(("oracle agrees with normal forms T2*Z2 (L = 3)", oracle_compare(T2(), Z2(("f", "b")), 3).ok))
    return results
