#pragma once

// Vertex operators solved order by order from the intertwining conditions,
// and the X and Z operators they induce on spaces of highest weight vectors.

#include <map>
#include <vector>

#include "rsos/uq.hpp"

namespace rsos {

/// The image of a highest weight vector (type 1) or of u_i (x) v_lambda
/// (type 2) under a vertex operator, up to a principal degree.
///
/// `image` lives in V(target) (x) V^{(target_eval)} on the basis w_j with the
/// leading coefficient 1. The true operator is a multiple of it; the
/// coefficient of f..v (x) u_j in the principal basis is
/// image[w (x) w_j] * sqrt(radicand_base / c_j^2).
struct IntertwinerExpansion {
    WeightIndex source;
    WeightIndex target;
    int source_eval = 0;  // spin 2j of the source evaluation leg; 0 for type 1
    int source_index = 0; // i of u_i in the source (type 2)
    int target_eval = 0;
    int max_degree = 0;
    std::vector<Factor> factors;
    TensorElement image;
    RatFunc radicand_base{1};

    /// Coefficient of w v (x) u_j zeta^zexp in the principal basis.
    SurdCoeff u_coefficient(const Word& w, int j, int zexp) const;
    /// Terms of one principal degree.
    TensorElement degree_part(int d) const;
    /// Same as image when the normalization is rational, else UnsupportedFusion.
    TensorElement rational_image() const;
};

/// Phi_lam^{lam' V^{(N)}}(zeta) v_lam, normalized so that v_lam' (x) u_j has
/// coefficient 1.
IntertwinerExpansion type1_expand(WeightIndex lam, WeightIndex lamp, int N, int max_degree);

/// Phi_lam^{(N, N+k)}(zeta)(u_i (x) v_lam) for every i, normalized so the
/// image of u_N (x) v_lam starts with v_{sigma lam} (x) u_j with coefficient 1.
std::vector<IntertwinerExpansion> type2_solve(WeightIndex lam, int N, int max_degree);
IntertwinerExpansion type2_expand(WeightIndex lam, int N, int i, int max_degree);

/// Checks e_i, f_i, t_i commute with a type 1 expansion below its degree
/// (f_i only where f_i v_lam = 0 by the highest weight property).
bool type1_intertwines(const IntertwinerExpansion& x);

/// A coefficient c * zeta^zexp on one target basis vector.
struct OmegaTerm {
    OmegaVector target;
    RatFunc coeff;
    int zexp = 0;
};

/// X_lam^{lam'}(zeta) applied to a basis vector of Omega_{xi,eta;lam}, for
/// every lam' at once, on the target basis up to max_degree.
std::map<int, std::vector<OmegaTerm>> x_operator_all(const OmegaVector& source, int max_degree);
std::vector<OmegaTerm> x_operator(const OmegaVector& source, int lamp, int max_degree);

/// Z_{xi lam; m}^{xi' lam'}(zeta) on a basis vector of Omega_{xi,eta;lam};
/// the result is indexed by lam'.
std::map<int, std::vector<OmegaTerm>> z_operator_all(const OmegaVector& source, WeightIndex xip, int m,
                                                     int max_degree);
std::vector<OmegaTerm> z_operator(const OmegaVector& source, WeightIndex xip, int m, int lamp,
                                  int max_degree);

/// sum_{lam~} C^{(1,1)}(lam, lam~, lam', lam''; zeta1/zeta2) X_{lam~}^{lam''}(zeta1) X_lam^{lam~}(zeta2)
///   = X_{lam'}^{lam''}(zeta2) X_lam^{lam'}(zeta1)
/// on one source vector, compared below q^order on every target vector of
/// degree <= max_degree. Intermediate vectors are summed up to
/// intermediate_degree.
struct CommutationReport {
    bool ok = true;
    int compared = 0;
    std::string first_failure;
};
CommutationReport x_commutation_check(const OmegaVector& source, int lamp, int lampp, int order,
                                      int max_degree = 2, int intermediate_degree = 4);

/// Exact equality of two surds r sqrt(s), assuming positive radicands.
bool surd_equal(const SurdCoeff& a, const SurdCoeff& b);

} // namespace rsos
