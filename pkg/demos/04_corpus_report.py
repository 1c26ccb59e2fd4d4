"""Running the whole corpus and reading the bound table for one entry.

Each corpus entry carries a front, facts about the smooth knot and pinned
results. The check recomputes everything and insists that no bound is
beaten by the shipped representative.
"""

from leglab.corpus import corpus_check, default_corpus_dir, load_entry
from leglab.diagram import front_to_pd
from leglab.front import orient
from leglab.skein import homfly, kauffman
from leglab.tau import bound_table, tau_from_metadata

report = corpus_check()
print(report.to_table())
print()

entry = load_entry(default_corpus_dir() / "trefoil_left.json")
f = orient(entry.front)
pd = front_to_pd(f)
table = bound_table(f.invariants, entry.metadata, tau_from_metadata(entry.metadata), (homfly(pd), kauffman(pd)))
print(f"{entry.name}: tb={table.tb}, r={table.r}, tb + |r| = {table.tb + abs(table.r)}")
for b in table.bounds:
    if b.applicable:
        print(f"  {b.name:<10} {b.quantity:<7} <= {b.value:>3}   slack {b.slack}")
for note in table.notes:
    print("  note:", note)
