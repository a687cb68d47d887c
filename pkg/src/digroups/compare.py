"""Cross-check of the normal-form construction against the congruence oracle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .free_product import FactorPair, fp_eval_word
from .oracle import DEFAULT_SLACK, DEFAULT_WORD_CAP, Presentation, all_pointed_words, build_classes


@dataclass
class CompareReport:
    words: int = 0
    classes: int = 0
    normal_forms_hit: int = 0
    pairs_checked: int = 0
    pair_disagreements: list = field(default_factory=list)
    moves_checked: int = 0
    unsound_moves: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.pair_disagreements and not self.unsound_moves

    def lines(self):
        out = [
            f"words: {self.words}",
            f"classes: {self.classes}",
            f"normal_forms_hit: {self.normal_forms_hit}",
            f"pairs_checked: {self.pairs_checked}",
            f"pair_disagreements: {len(self.pair_disagreements)}",
            f"moves_checked: {self.moves_checked}",
            f"unsound_moves: {len(self.unsound_moves)}",
        ]
        out += [f"{k}: {v}" for k, v in self.stats.items() if k not in ("words", "classes")]
        out.append(f"agreement: {'yes' if self.ok else 'no'}")
        return out


def oracle_compare(A1, A2, max_len, slack=DEFAULT_SLACK, word_cap=DEFAULT_WORD_CAP, check_moves=True):
    """Check ``fp_eval_word(u) == fp_eval_word(v)`` iff the oracle puts u and v
    in one class, for every pair of pointed words of length <= max_len.

    With ``check_moves`` every contraction used by the closure (over the
    whole slack universe) is also checked to preserve the normal form.
    """
    P = Presentation(A1, A2)
    ctx = FactorPair(A1, A2)
    table = build_classes(P, max_len, slack, word_cap)
    report = CompareReport(words=len(table.words), classes=table.stats["classes"], stats=dict(table.stats))

    nf = {w: fp_eval_word(w, ctx) for w in table.words}
    report.normal_forms_hit = len(set(nf.values()))
    for u, v in itertools.combinations(table.words, 2):
        report.pairs_checked += 1
        if (nf[u] == nf[v]) != (table.class_of[u] == table.class_of[v]):
            report.pair_disagreements.append((u, v))

    if check_moves:
        cache = dict(nf)

        def value(w):
            if w not in cache:
                cache[w] = fp_eval_word(w, ctx)
            return cache[w]

        for w in all_pointed_words(P.alphabet, max_len + slack):
            for branch, v in P.contractions(w):
                report.moves_checked += 1
                if value(w) != value(v):
                    report.unsound_moves.append((branch, w, v))
    return report
