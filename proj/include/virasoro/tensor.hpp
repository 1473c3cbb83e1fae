#pragma once

#include "virasoro/envelope.hpp"
#include "virasoro/mpoly.hpp"
#include "virasoro/rational.hpp"
#include "virasoro/verma.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace virasoro {

// Parameters (alpha, beta) of the intermediate series module. Canonical form
// has 0 <= alpha < 1 and beta != 1; (0, 0) then stands for the primed
// quotient V'_{0,0}.
struct ModuleParams {
    Rat alpha;
    Rat beta;
    bool canonical = false;

    bool primed_zero() const { return canonical && alpha.is_zero() && beta.is_zero(); }
    std::string str() const { return "(" + alpha.str() + ", " + beta.str() + ")"; }
    friend bool operator==(const ModuleParams&, const ModuleParams&) = default;
};

ModuleParams canonicalize(const Rat& alpha, const Rat& beta);
inline ModuleParams canonicalize(const ModuleParams& p) { return canonicalize(p.alpha, p.beta); }

// V'_{alpha,beta} is simple, i.e. the params are not (0, 0).
bool intermediate_simple(const ModuleParams& params);

Rat phi_eval(const ModuleParams& params, std::int64_t n, const EnvElem& x);
// The recursion applied to an arbitrary word d_{-w_0} d_{-w_1} ... of the
// tensor algebra, without normal ordering first.
Rat phi_eval_word(const ModuleParams& params, std::int64_t n, std::span<const int> word);

// phi_n(x) with n, a, b all symbolic.
MPoly phi_symbolic(const EnvElem& x);

struct PhiPolynomial {
    MPoly poly;  // in n only
    std::optional<MPoly> symbolic;
    EnvElem source;
};

PhiPolynomial phi_poly(const ModuleParams& params, const EnvElem& x, bool symbolic = false);

// Common integer roots n of phi_n(Q1) and phi_n(Q2).
struct PhiSet {
    bool all_integers = false;
    bool zero_excluded = false;
    std::vector<std::int64_t> roots;
    GenStatus status = GenStatus::two_generators;
    std::vector<std::string> caveats;

    bool empty() const { return !all_integers && roots.empty(); }
    bool contains(std::int64_t n) const;
    std::string str() const;
};

PhiSet phi_set(const MaximalSubmoduleGens& gens, const ModuleParams& params);
PhiSet phi_set(const HighestWeight& hw, const ModuleParams& params, int cap = default_level_cap);

enum class Verdict { simple, not_simple, undetermined };
const char* to_string(Verdict v);

// One proper step W^(n_{i-1}) / W^(n_i) of the filtration; the quotient is a
// highest weight module of highest weight (c, alpha + h + n_i).
struct FiltrationStep {
    std::int64_t n;
    HighestWeight quotient;
};

struct SimplicityReport {
    HighestWeight hw;
    ModuleParams params;
    MaximalSubmoduleGens gens;
    Verdict verdict = Verdict::undetermined;
    PhiSet phi;
    std::vector<FiltrationStep> filtration;
    // Phi is every integer: the chain of highest weight quotients does not end.
    bool infinite_filtration = false;
    // n_r: W^(n_r) is the unique simple submodule.
    std::optional<std::int64_t> minimal_submodule_index;
    std::vector<std::string> caveats;
};

SimplicityReport simplicity(const HighestWeight& hw, const ModuleParams& params, const MaximalSubmoduleGens& gens);
SimplicityReport simplicity(const HighestWeight& hw, const ModuleParams& params, int cap = default_level_cap);

// Canonical (alpha, beta) for which phi_n(Q1) = phi_n(Q2) = 0 has an integer
// solution, found by eliminating s = alpha + n with a resultant in beta.
// Only rational solutions are reported. Needs two distinct generators;
// otherwise the exceptional set is a curve and `finite` is false.
struct ExceptionalPoint {
    ModuleParams params;
    std::vector<std::int64_t> phi;
    friend bool operator==(const ExceptionalPoint&, const ExceptionalPoint&) = default;
};

struct ExceptionalAnalysis {
    bool finite = false;
    MPoly eliminant;  // in b
    std::vector<ExceptionalPoint> points;
};

ExceptionalAnalysis exceptional_parameters(const MaximalSubmoduleGens& gens);

// tau_n(P u) = phi_n(P), extended linearly.
Rat tau_eval(std::int64_t n, const ModuleParams& params, const VermaVector& v);

// Truncation of tensor computations: shifted exponents n in
// [min_exponent, max_exponent] and Verma levels <= max_level.
struct Window {
    std::int64_t min_exponent = -1'000'000;
    std::int64_t max_exponent = 1'000'000;
    int max_level = default_level_cap;
};

class WindowError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// V(c,h) (x) V'_{alpha,beta} with the data needed to act on it.
class TensorModule {
public:
    static std::shared_ptr<const TensorModule> create(HighestWeight hw, ModuleParams params,
                                                      MaximalSubmoduleGens gens, Window window = {});

    const HighestWeight& hw() const { return quotient_.highest_weight(); }
    const ModuleParams& params() const { return params_; }
    const SimpleQuotient& quotient() const { return quotient_; }
    const Window& window() const { return window_; }

private:
    TensorModule(HighestWeight hw, ModuleParams params, MaximalSubmoduleGens gens, Window window);

    ModuleParams params_;
    SimpleQuotient quotient_;
    Window window_;
};

// Finite sum of (P u) (x) v_j with P reduced modulo J. The shifted exponent of
// a term is n = j - |P|, and d_0 acts on it by alpha + h + n.
class TensorVector {
public:
    using Key = std::pair<Partition, std::int64_t>;
    using Terms = std::map<Key, Rat>;

    explicit TensorVector(std::shared_ptr<const TensorModule> module) : module_(std::move(module)) {}

    // (P u) (x) v_j, reduced; u (x) v_j when P is empty.
    static TensorVector basis(std::shared_ptr<const TensorModule> module, const Partition& p, std::int64_t j);
    // u (x) t^n in shifted coordinates, i.e. u (x) v_n.
    static TensorVector highest(std::shared_ptr<const TensorModule> module, std::int64_t n);

    const std::shared_ptr<const TensorModule>& module() const { return module_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Partition& p, std::int64_t j) const;

    // Adds (v (x) v_j) * s after reducing v modulo J. Throws WindowError if a
    // surviving term lies outside the window.
    void add(const VermaVector& v, std::int64_t j, const Rat& s = Rat(1));

    // The part at shifted exponent n, as a sum over Verma levels.
    std::map<int, VermaVector> component(std::int64_t n) const;

    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    TensorVector& operator*=(const Rat& s);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    friend TensorVector operator*(TensorVector a, const Rat& s) { return a *= s; }
    friend bool operator==(const TensorVector& a, const TensorVector& b) { return a.terms_ == b.terms_; }

    // e.g. "3*d(-2)*d(-1) @v(4) + 2 @v(-1)"
    std::string str() const;

private:
    void add_term(const Key& k, const Rat& c);
    void check_module(const TensorVector& o) const;

    std::shared_ptr<const TensorModule> module_;
    Terms terms_;
};

// d_m (P u (x) v_j) = (d_m P u) (x) v_j + (alpha + j + m beta) P u (x) v_{m+j}.
TensorVector tensor_apply(int m, const TensorVector& v);

// Q_k = d_0^2 + k d_0 - d_{-k} d_k.
TensorVector casimir_apply(int k, const TensorVector& v);

struct TensorTuple {
    HighestWeight hw;
    ModuleParams params;
};

// V(c,h) (x) V'_{alpha,beta} are isomorphic iff the canonical tuples agree.
bool classify_isomorphism(const TensorTuple& a, const TensorTuple& b);

}  // namespace virasoro
