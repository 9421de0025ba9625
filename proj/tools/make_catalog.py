"""Builds data/catalog.jsonl from the link tables bundled with spherogram.

Each named link is loaded from the Thistlethwaite table, a chosen set of
components is reversed, and the result is converted to a braid word.  The
orientation tag {a_2,...,a_m} lists, for components 2..m in the table's
numbering, whether that component is reversed (1) relative to the table's
orientation.

Words are emitted for the mirror image of the table diagram (every letter
negated) unless --native-chirality is given; the mirrored chirality is the
one whose θ differences agree with the published values for pairs 1-4.

Usage: python3 tools/make_catalog.py [--tries N] [--all-tags] > data/catalog.jsonl
"""

import argparse
import itertools
import json
import random
import sys
import warnings

warnings.filterwarnings("ignore")

import spherogram  # noqa: E402

LINKS = {
    "L11n358": [(0, 1)],
    "L11n418": [(0, 0)],
    "L11a467": [(0, 1)],
    "L11a527": [(0, 0)],
    "L11n325": [(1, 1)],
    "L11n424": [(0, 0)],
    "L10n79": [(1, 1)],
    "L10n95": [(1, 0)],
    "L11a404": [(1, 1)],
    "L11a428": [(0, 1)],
    "L10n76": [(1, 1)],
    "L11n425": [(1, 0)],
}


def components_of(pd):
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b, c, d in pd:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    groups = {}
    for x in list(parent):
        groups.setdefault(find(x), set()).add(x)
    return list(groups.values())


def reverse_components(link, reversed_components):
    """PD code of `link` with the given components (table numbering) reversed."""
    pd = [tuple(x) for x in link.PD_code()]
    comps = components_of(pd)
    # order components as the table does: by their smallest edge label
    comps.sort(key=min)
    relabel = {}
    flipped = set()
    for index, labels in enumerate(comps):
        lo, hi = min(labels), max(labels)
        if sorted(labels) != list(range(lo, hi + 1)):
            raise ValueError("component labels are not contiguous")
        for x in labels:
            relabel[x] = lo + hi - x if index in reversed_components else x
        if index in reversed_components:
            flipped.update(labels)
    out = []
    for a, b, c, d in pd:
        t = tuple(relabel[x] for x in (a, b, c, d))
        if a in flipped:
            t = (t[2], t[3], t[0], t[1])
        out.append(t)
    return out, comps


def linking_signature(link):
    m = link.linking_matrix()
    return sorted(abs(v) for row in m for v in row)


def best_braid(pd, tries, rng):
    best = None
    for attempt in range(tries):
        link = spherogram.Link(pd)
        if attempt:
            link.simplify("global")
            for _ in range(attempt % 4):
                link.backtrack(steps=rng.randint(5, 20))
                link.simplify("global")
        word = link.braid_word()
        strands = max(abs(x) for x in word) + 1 if word else 1
        key = (strands, len(word))
        if best is None or key < best[0]:
            best = (key, word)
    return best[1]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--tries", type=int, default=24)
    ap.add_argument("--all-tags", action="store_true", help="emit every orientation, not only the ones in use")
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--native-chirality", action="store_true", help="keep the table's chirality")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    for name, tags in LINKS.items():
        base = spherogram.Link(name)
        m = len(base.link_components)
        if args.all_tags:
            tags = list(itertools.product((0, 1), repeat=m - 1))
        for tag in tags:
            rev = {i + 1 for i, bit in enumerate(tag) if bit}
            pd, _ = reverse_components(base, rev)
            check = spherogram.Link(pd)
            if len(check.link_components) != m or linking_signature(check) != linking_signature(base):
                raise SystemExit(f"{name}: orientation reversal changed the link")
            word = best_braid(pd, args.tries, rng)
            if not args.native_chirality:
                word = [-x for x in word]
            entry = {
                "name": f"{name}{{{','.join(map(str, tag))}}}",
                "strands": max(abs(x) for x in word) + 1,
                "word": word,
                "orientation_tag": "{" + ",".join(map(str, tag)) + "}",
                "source": "spherogram Thistlethwaite table, components reversed per tag"
                + ("" if args.native_chirality else ", mirrored"),
            }
            print(json.dumps(entry))
            sys.stdout.flush()


if __name__ == "__main__":
    main()
