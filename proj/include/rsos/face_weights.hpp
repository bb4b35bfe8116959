#pragma once

// RSOS Boltzmann weights W^{(m,n)}_k built from the connection
// coefficients C^{(n,1)}_k, and checks of their face properties.

#include <array>
#include <string>
#include <vector>

#include "rsos/q_special.hpp"
#include "rsos/weight.hpp"

namespace rsos {

/// a - b in {N, N-2, ..., -N} and N <= a + b <= 2k - N.
bool admissible(int k, int a, int b, int N);
/// Throws LevelMismatch for weights of different level.
bool admissible(const WeightIndex& x, const WeightIndex& y, int N);

/// Corners (lambda, mu, mu', nu) of a face, given by their a-labels at level k.
struct FaceConfig {
    int k = 3;
    int lam = 0, mu = 0, mup = 0, nu = 0;
    int m = 1, n = 1;
};

/// (lambda,mu), (mu',nu) m-admissible and (lambda,mu'), (mu,nu) n-admissible.
bool face_admissible(const FaceConfig& c);

/// A weight split as integral * u^h * sqrt([x]/[y]); the integral part only
/// contains integer powers of q.
struct WeightParts {
    SeriesFraction integral;
    int h = 0;
    int x = 1;
    int y = 1;

    bool is_zero() const { return integral.is_zero(); }
    /// The full weight as a fraction, accurate below u^order.
    SeriesFraction full(int order) const;
};

/// Default guard digits added to the working order of weight evaluations.
inline constexpr int kWeightGuard = 12;

/// The unnormalized (1,1) weights A, B^{a+-}, C^{a+-} at level k.
SeriesFraction w11_bar_fraction(int k, int a, int b, int c, int d, const Spectral& z, int order);
QSeries w11_bar(int k, int a, int b, int c, int d, const Spectral& z, int order);

/// C^{(n,1)}_k(lambda, mu, mu', nu) including the 1/kappa^{(n,1)} factor.
WeightParts conn_n1_parts(int k, int n, int lam, int mu, int mup, int nu, const Spectral& z, int order);
SeriesFraction conn_n1_fraction(int k, int n, int lam, int mu, int mup, int nu, const Spectral& z, int order);
QSeries conn_n1(int k, int n, int lam, int mu, int mup, int nu, const Spectral& z, int order);
/// C^{(1,n)}(lambda, mu, mu', nu) = C^{(n,1)}(nu, mu, mu', lambda).
QSeries conn_1n(int k, int n, int lam, int mu, int mup, int nu, const Spectral& z, int order);

/// W^{(m,n)} for (m,n) with at least one label equal to 1.
WeightParts face_weight_parts(const FaceConfig& c, const Spectral& z, int order);
SeriesFraction face_weight_fraction(const FaceConfig& c, const Spectral& z, int order);
QSeries face_weight(const FaceConfig& c, const Spectral& z, int order);

/// G(lambda, mu) of the crossing relation, |a - a'| = 1.
QSeries crossing_G(const WeightIndex& lam, const WeightIndex& mu, int order);

struct CheckReport {
    bool ok = true;
    long checked = 0;
    long failures = 0;
    std::string first_failure;
    void fail(const std::string& what) {
        ok = false;
        if (failures++ == 0) first_failure = what;
    }
};

/// Face Yang-Baxter equation for labels (m,n,l) with zeta_i = zeta^{e_i}.
/// An empty boundary list means all boundaries at level k.
CheckReport check_ybe(int m, int n, int l, int k, std::array<int, 3> e, int order,
                      const std::vector<std::array<int, 6>>& boundaries = {});
/// sum_{mu'} W^{(m,n)}(zeta) W^{(n,m)}(1/zeta) = delta for all boundaries.
CheckReport check_inversion(int m, int n, int k, int order);
/// W^{(n,1)} and W^{(1,n)} related by corner reflection.
CheckReport check_symmetry(int n, int k, int order);
/// Crossing W^{(n,1)}(-zeta/q) = G/G * W^{(1,n)}(crossed, 1/zeta).
CheckReport check_crossing(int n, int k, int order);

struct RankedWeight {
    FaceConfig config;
    long double value = 0;
    long double error = 0;
    bool ground_pattern = false;
};

struct ScanResult {
    std::vector<RankedWeight> ranked; // descending by value
    bool maxima_match = false;
};

/// Numeric values of all W^{(n,1)} at real (q, zeta), 0 < -q < 1/zeta < 1.
ScanResult numeric_max_scan(int n, int k, long double q, long double zeta, int order = 60);

struct NamedWeight {
    std::string name;
    FaceConfig first;
    FaceConfig second;
};

/// The seven named (2,1) weights at k = 3 with their paired configurations.
std::vector<NamedWeight> named_21_weights();

/// Rational linear relations among series, as coefficient vectors (basis of
/// the relation space), compared below u^bound.
std::vector<std::vector<Rational>> linear_relations(const std::vector<QSeries>& s, int bound);

} // namespace rsos
