#pragma once

// Matrix elements Psi^{(n,1)} and Psi^{(1,n)} of products of two homogeneous
// vertex operators, written with basic hypergeometric series.

#include <string>
#include <utility>
#include <vector>

#include "rsos/q_special.hpp"

namespace rsos {

/// Which neighbour relation fixes the intermediate weights. The first two
/// describe Psi^{(n,1)} (mu relative to lambda), the last two Psi^{(1,n)}
/// (nu relative to mu).
enum class PsiCase { mu_plus, mu_minus, nu_plus, nu_minus };

std::string to_string(PsiCase c);
/// Accepts "mu+", "mu-", "nu+", "nu-".
PsiCase parse_psi_case(const std::string& s);

struct MatrixElementSpec {
    int k = 3;
    int n = 1;
    PsiCase kind = PsiCase::mu_plus;
    int a = 0; // lambda = lambda^{(k)}_a
    int j = 0;
};

/// a-labels of the intermediate and final weights.
struct PsiWeights {
    int lam = 0, mu = 0, nu = 0;
};
PsiWeights psi_weights(const MatrixElementSpec& s);

/// j from the final weight nu; NoValidJ when no j in [0, n] gives nu.
int determine_j(int k, int n, PsiCase kind, int a, int nu);

/// Checks 0 <= j <= n and that all weights are admissible at level k
/// (InadmissibleConfig / NoValidJ otherwise).
void validate(const MatrixElementSpec& s);

/// Every (case, a, j) at level k and spin n that passes validate.
std::vector<MatrixElementSpec> valid_specs(int k, int n);

/// Parameters (alpha, beta, gamma) of the first series; the second series
/// always uses (1 + alpha, beta, 1 + gamma).
struct PhiParams {
    Rational alpha, beta, gamma;
};
PhiParams psi_params(const MatrixElementSpec& s);

/// Prefactor of the second term as a function of z.
QSeries psi_prefactor(const MatrixElementSpec& s, const QSeries& z, int order);

struct PsiElement {
    QSeries first;
    QSeries second;
    /// Basis labels such as "v^(2)_1 (x) v^(1)_0".
    std::string first_basis;
    std::string second_basis;
};

/// gamma(z) * (phi, prefactor * phi') below u^order.
PsiElement psi_element(const MatrixElementSpec& s, const QSeries& z, int order);

/// The two contiguity relations of 2phi1 with base p:
///   1: (1 - z p^a) phi(pz) - (1 - z) phi(z) = z (p^b - p^c)(1 - p^a)/(1 - p^c) phi'(pz)
///   2: (1 - z p^{a+b-c}) phi(pz) - (1 - z p^{b-c}) phi(z) = -z (1 - p^{b-c})(1 - p^a)/(1 - p^c) phi'(z)
/// with phi' = phi(1 + a, b; 1 + c). Compared below u^order.
bool contiguity_check(int identity, const Rational& alpha, const Rational& beta, const Rational& gamma,
                      const QSeries& z, int k, int order);

/// Relates the two components of psi_element at z and pz through both
/// contiguity relations, z = zeta^2.
bool qkz_shift_check(const MatrixElementSpec& s, int order);

} // namespace rsos
