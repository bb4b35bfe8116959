#pragma once

// Recomputes the reference tables under data/golden and diffs them entry
// by entry. Shared by the command line tool and the acceptance runner.

#include <string>
#include <vector>

namespace rsos {

struct DiffRow {
    std::string name;
    std::string got;
    std::string want;
    bool ok = false;
};

struct DiffReport {
    std::string target;
    bool ok = true;
    std::vector<DiffRow> rows;

    void add(std::string name, std::string got, std::string want, bool ok);
    int failures() const;
};

/// Vacuum coefficients of every listed pattern class, solved on `window`.
DiffReport reproduce_vacuum(int window = 18);
/// The twelve embedding coefficients with their l-stability.
DiffReport reproduce_iota(int intermediate_degree = 4);
/// X actions listed in x1.tsv ("X1") or y1.tsv ("Y1").
DiffReport reproduce_x_table(const std::string& which);
/// The two leading coefficients of Z(x_1^{(0)}), compared exactly.
DiffReport reproduce_z_expansion();
/// Lattice and algebraic sides against oneket.tsv (m = 1) or twoket.tsv
/// (m = 2), with the fitted f_N against the tabulated one.
DiffReport reproduce_conjecture(int m, const std::vector<int>& windows);

} // namespace rsos
