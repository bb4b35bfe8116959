#pragma once

// Paths, the corner transfer matrix vacuum, the embedding of highest weight
// vectors into path space, and half-infinite columns of mixed face weights.
//
// Weights on paths are level-k dominant weights given by their a-label
// (the coefficient of Lambda_1). Only vertical spin n = 1 is handled.

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "rsos/intertwiners.hpp"
#include "rsos/series.hpp"
#include "rsos/weight.hpp"

namespace rsos {

/// Boundary data (xi, eta; lam) of a path space: p(1) = lam and
/// p(l) -> xi + sigma^{l-1}(eta).
struct Boundary {
    WeightIndex xi;
    WeightIndex eta;
    int lam = 0;

    int k() const { return xi.k + eta.k; }
    /// a-label of xi + sigma^{l-1}(eta).
    int ground(int l) const;
};

/// (2 Lambda_0, Lambda_0; 3 Lambda_0) at level 3.
Boundary vacuum_boundary();

/// p(1), ..., p(N+1) stored from p(1) upward.
struct FinitePath {
    std::vector<int> p;

    int window() const { return static_cast<int>(p.size()) - 1; }
    int at(int l) const { return p[l - 1]; }
    auto operator<=>(const FinitePath&) const = default;
};

using PathVector = std::map<FinitePath, QSeries>;

/// Positions (descending) and values where a path leaves the ground state.
struct DefectPattern {
    std::vector<std::pair<int, int>> sites;

    int size() const { return static_cast<int>(sites.size()); }
    int max_position() const { return sites.empty() ? 1 : sites.front().first; }
    auto operator<=>(const DefectPattern&) const = default;
};

/// Ket notation by positions, e.g. "|7,5,3>", and "|0>" for the ground state.
std::string to_string(const DefectPattern& d);

DefectPattern defects(const Boundary& b, const FinitePath& p);

/// The path of the given window that differs from the ground state exactly
/// at the given positions. The values there are forced by admissibility;
/// InadmissibleConfig if no such path or more than one.
FinitePath path_at(const Boundary& b, int window, const std::vector<int>& positions);
DefectPattern pattern_at(const Boundary& b, const std::vector<int>& positions);

/// All admissible paths with p(1) = lam, p(N+1) on the ground state and at
/// most defect_bound sites away from it.
std::vector<FinitePath> enumerate_paths(const Boundary& b, int window, int defect_bound);

/// The zeta-derivatives at 1 of the B and C weights of the (1,1) model
/// at level k: script B^{a+-} and script C^{a+-}.
struct CtmCoefficients {
    int k = 0;
    int order = 0;
    std::vector<QSeries> b_plus, b_minus, c_plus, c_minus;

    const QSeries& b(int a, bool plus) const { return plus ? b_plus[a] : b_minus[a]; }
    const QSeries& c(int a, bool plus) const { return plus ? c_plus[a] : c_minus[a]; }
};
const CtmCoefficients& ctm_coefficients(int k, int order);

/// O_l on the triple (p(l+2), p(l+1), p(l)).
PathVector ctm_O(int l, const PathVector& pv, int k, int order);

/// Ground state of H = sum_l l (R_l - O_l) on one window, with
/// <0|vac> = 1, to q^order, over paths with at most `order` defects.
PathVector solve_vacuum_window(const Boundary& b, int order, int window);

struct Vacuum {
    Boundary boundary;
    int order = 0;
    int window = 0;
    PathVector vec;
    /// Coefficient by pattern, read on this window.
    std::map<DefectPattern, QSeries> by_pattern;

    QSeries coefficient(const std::vector<int>& positions) const;
    /// Restriction to a shorter window (paths on the ground state beyond it).
    PathVector restrict_to(int window) const;
};

/// Solves on `window` and window + 2 and requires the patterns that stay
/// more than 2*order sites from the far end to agree (StabilizationFailure).
Vacuum solve_vacuum(int order, int window = 16, const Boundary& b = vacuum_boundary());

/// A finite combination of Omega basis vectors.
using OmegaCombination = std::vector<std::pair<OmegaVector, QSeries>>;

/// The embedding coefficient c(p, v), from chains of X operators at zeta = 1.
class IotaEvaluator {
public:
    explicit IotaEvaluator(int intermediate_degree = 4) : degree_(intermediate_degree) {}

    /// <v_{xi, sigma^l eta}| X^{p_gs(l+1)}_{p(l)}(1) ... X^{p(2)}_{p(1)}(1) |v>
    /// for a single basis vector v, as a series at zeta = 1 below u^order.
    QSeries chain(const OmegaVector& v, const Boundary& b, const FinitePath& p, int l, int order);

    struct Result {
        QSeries value;
        int stable_from = 0;
        std::vector<QSeries> history; // c^l ratios for l = first .. l_max
    };

    /// c^l(p, v) / c^l(p_gs, v_{xi,eta}) for l up to l_max; StabilizationFailure
    /// unless the last two ratios agree below q^order.
    Result coefficient(const OmegaCombination& v, const Boundary& b, const std::vector<int>& positions,
                       int order, int l_max);

    int intermediate_degree() const { return degree_; }

private:
    struct Slot {
        OmegaVector vec;
        QSeries coeff;
    };
    using Action = std::map<int, std::vector<std::tuple<std::string, OmegaVector, QSeries>>>;
    const Action& x_all(const OmegaVector& v, int order);
    std::string key(const OmegaVector& v) const;

    int degree_;
    std::map<std::string, Action> cache_;
};

/// The boundary of the Omega space holding a basis vector, with lam = xi + eta.
Boundary boundary_of(const OmegaVector& v);

/// Degree 0 basis vector of Omega_{xi,eta;xi+eta}.
OmegaVector ground_vector(WeightIndex xi, WeightIndex eta);

/// The half-infinite column
///   <p'| Z |p> = prod_{l=1}^{N} W^{(m,1)}(p'(l+1), p(l+1), p'(l), p(l); zeta)
/// applied to pv and read on the given target paths (all paths of `out`
/// within `order` defects when targets is empty).
PathVector lattice_Z_apply(int m, const Boundary& out, int window, const PathVector& pv, int order,
                           const std::vector<FinitePath>& targets = {});

/// The partner column prod_l W^{(1,m)}(p'(l+1), p'(l), p''(l+1), p''(l); zeta^{-1}),
/// inverse to lattice_Z_apply when p' runs over every path with p'(N+1) fixed
/// and p''(1) = p(1).
PathVector lattice_Z_partner(int k, int m, int window, const PathVector& pv, int order,
                             const std::vector<FinitePath>& targets);

/// Every admissible path with p(N+1) = top and any p(1).
std::vector<FinitePath> all_paths(int k, int window, int top);

/// The normalizer f_N^{(m,n)} for the vacuum boundary, known below q^4.
QSeries f_norm(int m, int n, int window);

/// A representative path pattern in a target path space.
struct PatternSpec {
    std::string name;
    std::vector<int> positions;
};

/// The patterns compared by conjecture_check: |0>, |2>, |4>, |6> for m = 1;
/// |0>, |2>, |3>, |5>, |4>, |6> for m = 2.
std::vector<PatternSpec> conjecture_patterns(int m);

/// Target boundary of _N Z for the vacuum boundary: (2L0, L1; 1) for m = 1
/// and (L1+L0, L1; 2) for m = 2.
Boundary conjecture_target(int m);

struct ConjectureRow {
    int window = 0;
    std::string pattern;
    QSeries lattice;   // <p| Z rho_N |vac> / <0| Z rho_N |vac>
    QSeries algebraic; // c(p, Z x)
    bool ok = false;
};

struct ConjectureReport {
    bool ok = true;
    int m = 0;
    int order = 0;
    std::vector<ConjectureRow> rows;
    std::map<int, QSeries> f_fitted; // <0| Z rho_N |vac> per window
    std::map<int, bool> f_matches_table;
    std::string first_failure;

    /// The lattice value of a pattern on a window.
    const ConjectureRow* find(int window, const std::string& pattern) const;
};

/// Compares (1/f_N) _N Z rho_N iota(x_1^{(0)}) with iota Z(x_1^{(0)}) on the
/// vacuum boundary, for m = 1 (X) and m = 2 (Z to Lambda_1 + Lambda_0).
/// f_N is fitted from the ground state coefficient and compared with f_norm.
ConjectureReport conjecture_check(int m, const std::vector<int>& windows, int order,
                                  int intermediate_degree = 4);

} // namespace rsos
