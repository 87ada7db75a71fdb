#!/usr/bin/env python3
"""Tabulate the Killing form over all 32 real input configurations."""

from magicsq.qform import killing_grid


def main():
    print(f"{'Q':9} {'O':9} {'gamma':12} {'dim':>4} {'signature':>10} {'witt':>5}")
    for q_def, o_def, gamma, form in killing_grid():
        q = "definite" if q_def else "split"
        o = "definite" if o_def else "split"
        g = ",".join("+" if s > 0 else "-" for s in gamma)
        print(f"{q:9} {o:9} {g:12} {form.dim:>4} {form.signature:>10} "
              f"{form.witt_index:>5}")
    forms = [f for *_cfg, f in killing_grid()]
    assert all(f.dim == 133 for f in forms)
    anisotropic = sum(1 for f in forms if f.is_anisotropic)
    print(f"\n133-dimensional in all {len(forms)} cases; "
          f"{anisotropic} anisotropic configuration(s)")


if __name__ == "__main__":
    main()
