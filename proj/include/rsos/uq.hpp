#pragma once

// Highest weight modules V(lambda) of the quantized affine algebra of sl2,
// evaluation modules, tensor products and spaces of highest weight vectors.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "rsos/linalg.hpp"
#include "rsos/weight.hpp"

namespace rsos {

/// Cartan matrix entries a_ij.
inline int cartan(int i, int j) { return i == j ? 2 : -2; }

/// A product of f_0, f_1 written as a string over {'0','1'}; the leftmost
/// letter acts last, so "01" is f_0 f_1.
using Word = std::string;

/// Exchanges the letters 0 and 1.
Word bar_word(const Word& w);

/// Number of f_0 and f_1 letters.
struct Content {
    int n0 = 0;
    int n1 = 0;
    friend auto operator<=>(const Content&, const Content&) = default;
};
Content content(const Word& w);

/// sum c_w (w v_lambda)
using ModuleElement = std::map<Word, RatFunc>;

void add_to(ModuleElement& x, const Word& w, const RatFunc& c);

/// V(lambda) up to a principal degree: the quotient of the free module on
/// words by the radical of the contravariant form.
class HWModule {
public:
    explicit HWModule(WeightIndex lam, int max_degree = 5);

    const WeightIndex& weight() const { return lam_; }
    int max_degree() const { return max_degree_; }
    /// <h_i, wt(w v)>
    int h_of(int i, const Word& w) const;

    /// Actions computed with the defining relations on free words; the
    /// result is not reduced.
    ModuleElement e_free(int i, const ModuleElement& x) const;
    ModuleElement f_free(int i, const ModuleElement& x) const;

    /// Actions followed by reduction to the quotient basis.
    ModuleElement e(int i, const ModuleElement& x) const;
    ModuleElement f(int i, const ModuleElement& x) const;
    /// t_i^power
    ModuleElement t(int i, const ModuleElement& x, int power = 1) const;

    /// All words of the given content, in lexicographic order.
    static std::vector<Word> words(Content c);
    /// Quotient basis of a weight space: lexicographically first words whose
    /// Gram rows are independent.
    const std::vector<Word>& basis(Content c) const;
    /// Quotient basis words of a principal degree, ordered by content.
    std::vector<Word> basis(int degree) const;

    /// Contravariant form <w v, w' v> with <f_i x, y> = <x, e_i y>.
    RatFunc form(const Word& a, const Word& b) const;
    RMatrix gram(const std::vector<Word>& ws) const;

    /// Coordinates on the quotient basis (DegreeOverflow past max_degree).
    ModuleElement reduce(const ModuleElement& x) const;
    /// Coordinates of a single word.
    const ModuleElement& reduce_word(const Word& w) const;
    bool is_zero(const ModuleElement& x) const { return reduce(x).empty(); }

private:
    void build(Content c) const;

    WeightIndex lam_;
    int max_degree_;
    mutable std::map<Content, std::vector<Word>> basis_;
    mutable std::map<Word, ModuleElement> reduced_;
};

/// Shared module instances keyed by weight and degree.
std::shared_ptr<const HWModule> hw_module(WeightIndex lam, int max_degree = 5);

/// Generators e_i, f_i, t_i.
enum class GenKind { e, f, t };
struct Generator {
    GenKind kind = GenKind::e;
    int i = 0;
};
std::string to_string(const Generator& g);

/// One term of the evaluation action: coeff * zeta^zexp * basis(j).
struct EvalTerm {
    int j = 0;
    RatFunc coeff;
    int zexp = 0;
};

enum class EvalFlavor { homogeneous, principal };

/// Square of c_j^{(N)} = qbinom(N, j)^{1/2} q^{j(N-j)/2}.
RatFunc c_squared(int N, int j);

/// Action on the basis w_j = zeta^j v_j, in which the principal grading
/// holds and all coefficients are rational: e_1 w_j = zeta [j] w_{j-1},
/// f_1 w_j = zeta^{-1} [N-j] w_{j+1}, e_0 w_j = zeta [N-j] w_{j+1},
/// f_0 w_j = zeta^{-1} [j] w_{j-1}, t_1 w_j = q^{N-2j} w_j, t_0 = t_1^{-1}.
std::vector<EvalTerm> eval_action_w(const Generator& g, int N, int j);

/// A coefficient rational * sqrt(radicand).
struct SurdCoeff {
    RatFunc rational;
    RatFunc radicand{1};
};
struct EvalSurdTerm {
    int j = 0;
    SurdCoeff coeff;
    int zexp = 0;
};
/// Homogeneous flavor acts on v_j with zeta^2 = z (zexp counts zeta);
/// principal flavor acts on u_j = c_j w_j.
std::vector<EvalSurdTerm> eval_action(const Generator& g, int N, int j, EvalFlavor flavor);

/// A tensor factor: either V(lambda) or the evaluation module of spin N/2.
struct Factor {
    std::shared_ptr<const HWModule> hw;
    int eval_n = 0;
    bool is_eval() const { return !hw; }
};
Factor hw_factor(WeightIndex lam, int max_degree = 5);
Factor eval_factor(int N);

/// Leg label "u<j>" of the basis vector w_j of an evaluation module.
std::string eval_leg(int j);
int eval_index(const std::string& leg);

/// Basis key of a tensor product: one word (or eval_leg label for an
/// evaluation leg) per factor, plus a power of zeta.
struct TensorKey {
    std::vector<std::string> legs;
    int zexp = 0;
    friend auto operator<=>(const TensorKey&, const TensorKey&) = default;
};
using TensorElement = std::map<TensorKey, RatFunc>;

void add_to(TensorElement& x, const TensorKey& k, const RatFunc& c);
TensorElement scaled(const TensorElement& x, const RatFunc& c);
TensorElement operator+(const TensorElement& a, const TensorElement& b);
TensorElement operator-(const TensorElement& a, const TensorElement& b);

/// Tensor products with the coproduct
///   Delta(e_i) = e_i (x) 1 + t_i (x) e_i, Delta(f_i) = f_i (x) t_i^{-1} + 1 (x) f_i.
class TensorSpace {
public:
    explicit TensorSpace(std::vector<Factor> factors) : f_(std::move(factors)) {}
    const std::vector<Factor>& factors() const { return f_; }

    TensorElement act(const Generator& g, const TensorElement& x) const;
    TensorElement e(int i, const TensorElement& x) const { return act({GenKind::e, i}, x); }
    TensorElement f(int i, const TensorElement& x) const { return act({GenKind::f, i}, x); }
    /// w acting as a product of f's (rightmost letter first).
    TensorElement apply_word(const Word& w, const TensorElement& x) const;
    /// Reduces every V(lambda) leg to its quotient basis.
    TensorElement reduce(const TensorElement& x) const;
    bool is_zero(const TensorElement& x) const { return reduce(x).empty(); }
    /// <h_i, wt> of a basis key.
    int h_of(int i, const TensorKey& k) const;

private:
    std::vector<Factor> f_;
};

/// The key with every leg at its highest vector (index j on evaluation legs).
TensorKey vacuum_key(const std::vector<Factor>& f, const std::vector<int>& eval_index = {});

/// 0 <-> 1 exchange on words, j -> N - j on evaluation legs.
TensorElement bar(const TensorElement& x, const std::vector<Factor>& f);

/// A highest weight vector of V(xi) (x) V(eta) of weight lambda_a.
struct OmegaVector {
    WeightIndex xi, eta;
    int a = 0;
    int degree = 0;
    TensorElement vec;
};

/// Basis of Omega_{xi,eta;lambda_a} up to max_degree, ordered by degree.
/// Each vector is scaled so its leading term (lowest degree on the first
/// leg, then lexicographic) has the tabulated coefficient, 1 by default.
/// Throws EmptySpace when there are no solutions.
std::vector<OmegaVector> omega_basis(WeightIndex xi, WeightIndex eta, int a, int max_degree);

/// Leading coefficient used by omega_basis for the given space and degree.
RatFunc omega_normalization(WeightIndex xi, WeightIndex eta, int a, int degree);

/// Renders an element such as "(1/[2]) v (x) f0 f1 v" with coefficients in q.
std::string to_string(const TensorElement& x);
std::string to_string(const ModuleElement& x);

} // namespace rsos
