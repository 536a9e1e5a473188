"""CSV writers: 17 significant digits, '.' decimal, LF line endings."""

from __future__ import annotations

import numpy as np

__all__ = [
    "fmt",
    "write_rows",
    "write_trajectory_csv",
    "write_conserved_csv",
    "write_report_csv",
]


def fmt(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, str):
        return x
    return f"{float(x):.17g}"


def write_rows(path, header, rows):
    with open(path, "w", newline="\n") as out:
        out.write(",".join(header) + "\n")
        for row in rows:
            out.write(",".join(fmt(v) for v in row) + "\n")


def write_trajectory_csv(path, trajectory):
    """One row per snapshot: time, then re/im coefficient pairs per field,
    with the header naming each frequency."""
    grid = trajectory[0].u.grid
    freqs = sorted(grid.freqs)
    header = ["time"]
    for name in ("u", "n", "dn"):
        for k in freqs:
            header.append(f"{name}_re[{k}]")
            header.append(f"{name}_im[{k}]")
    rows = []
    for st in trajectory:
        row = [st.time]
        for f in (st.u, st.n, st.dn):
            for k in freqs:
                c = f.coeffs[grid.index(k)]
                row.append(c.real)
                row.append(c.imag)
        rows.append(row)
    write_rows(path, header, rows)


def write_conserved_csv(path, times, quantities):
    header = [
        "t",
        "mass",
        "energy",
        "e_alpha_dxu",
        "e_eps_dxxu",
        "e_half_n",
        "e_dtn_hm1",
        "e_eps_dxn",
        "e_cubic",
    ]
    rows = [
        [t, q.mass, q.energy, *q.terms()]
        for t, q in zip(times, quantities)
    ]
    write_rows(path, header, rows)


def write_report_csv(path, report):
    """One row per scanned N (or a single lhs/rhs row), then a summary line."""
    with open(path, "w", newline="\n") as out:
        if report.N_values:
            out.write("N,ratio\n")
            for n, r in zip(report.N_values, report.ratios):
                out.write(f"{fmt(n)},{fmt(r)}\n")
        else:
            out.write("lhs,rhs,ratio\n")
            out.write(f"{fmt(report.lhs)},{fmt(report.rhs)},{fmt(report.ratio)}\n")
        out.write(
            "summary,"
            + ",".join(
                fmt(v)
                for v in (report.lhs, report.rhs, report.ratio, report.fitted_exponent, report.fit_residual)
            )
            + f",{report.description}\n"
        )
