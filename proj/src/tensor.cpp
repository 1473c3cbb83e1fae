#include "virasoro/tensor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace virasoro {

ModuleParams canonicalize(const Rat& alpha, const Rat& beta) {
    ModuleParams p{alpha.frac(), beta, true};
    if (p.beta == Rat(1)) p.beta = Rat(0);
    return p;
}

bool intermediate_simple(const ModuleParams& params) {
    const ModuleParams p = params.canonical ? params : canonicalize(params);
    return !(p.alpha.is_zero() && p.beta.is_zero());
}

namespace {

const MPoly var_n = MPoly::variable(Var::N);
const MPoly var_a = MPoly::variable(Var::Alpha);
const MPoly var_b = MPoly::variable(Var::Beta);

// Peels factors from the right: phi_n(d_{-k} P) = -(a + n + k + |P| - k b) phi_n(P).
template <typename It>
Rat phi_word_value(const Rat& alpha, const Rat& beta, const Rat& n, It rbegin, It rend) {
    Rat acc(1);
    long size = 0;
    for (auto it = rbegin; it != rend; ++it) {
        const Rat k(static_cast<long>(*it));
        acc *= -(alpha + n + k + Rat(size) - k * beta);
        if (acc.is_zero()) return acc;
        size += *it;
    }
    return acc;
}

MPoly phi_monomial_symbolic(const Partition& p) {
    MPoly acc(1);
    long size = 0;
    const auto parts = p.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        const int k = *it;
        acc *= -(var_a + var_n + MPoly(Rat(k + size)) - MPoly(Rat(k)) * var_b);
        size += k;
    }
    return acc;
}

}  // namespace

Rat phi_eval(const ModuleParams& params, std::int64_t n, const EnvElem& x) {
    const Rat nn(static_cast<long>(n));
    Rat out(0);
    for (const auto& [p, c] : x.terms()) {
        const auto parts = p.parts();
        out += c * phi_word_value(params.alpha, params.beta, nn, parts.rbegin(), parts.rend());
    }
    return out;
}

Rat phi_eval_word(const ModuleParams& params, std::int64_t n, std::span<const int> word) {
    for (int k : word) {
        if (k < 1) throw std::invalid_argument("word letters must be lowering indices >= 1");
    }
    return phi_word_value(params.alpha, params.beta, Rat(static_cast<long>(n)), word.rbegin(), word.rend());
}

MPoly phi_symbolic(const EnvElem& x) {
    MPoly out;
    for (const auto& [p, c] : x.terms()) {
        MPoly term = phi_monomial_symbolic(p);
        out += term.scale(c);
    }
    return out;
}

PhiPolynomial phi_poly(const ModuleParams& params, const EnvElem& x, bool symbolic) {
    const MPoly sym = phi_symbolic(x);
    PhiPolynomial out{sym.partial_eval({{Var::Alpha, params.alpha}, {Var::Beta, params.beta}}), std::nullopt, x};
    if (symbolic) out.symbolic = sym;
    return out;
}

bool PhiSet::contains(std::int64_t n) const {
    if (all_integers) return !(zero_excluded && n == 0);
    return std::binary_search(roots.begin(), roots.end(), n);
}

std::string PhiSet::str() const {
    if (all_integers) return zero_excluded ? "all integers except 0" : "all integers";
    std::string s = "{";
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(roots[i]);
    }
    return s + "}";
}

PhiSet phi_set(const MaximalSubmoduleGens& gens, const ModuleParams& params) {
    PhiSet out;
    out.status = gens.status;
    out.zero_excluded = params.primed_zero();
    if (!gens.has_generators()) {
        out.all_integers = true;
        if (gens.status == GenStatus::undetermined_beyond_cap) {
            out.caveats.push_back("no singular vector up to level " + std::to_string(gens.cap) +
                                  "; Phi is all integers only if M(c,h) is simple");
        }
        return out;
    }
    if (gens.status == GenStatus::single_generator && gens.cap > 0) {
        out.caveats.push_back("one generator found up to level " + std::to_string(gens.cap) +
                              "; a second generator above the cap would shrink Phi");
    }
    IntegerRoots common{true, {}};
    for (const auto& q : gens.distinct()) {
        const IntegerRoots r = integer_roots(phi_poly(params, q).poly);
        if (r.all_integers) continue;
        if (common.all_integers) {
            common = r;
            continue;
        }
        std::vector<std::int64_t> both;
        std::set_intersection(common.roots.begin(), common.roots.end(), r.roots.begin(), r.roots.end(),
                              std::back_inserter(both));
        common.roots = std::move(both);
    }
    out.all_integers = common.all_integers;
    if (!out.all_integers) {
        for (auto n : common.roots) {
            if (!(out.zero_excluded && n == 0)) out.roots.push_back(n);
        }
    }
    return out;
}

PhiSet phi_set(const HighestWeight& hw, const ModuleParams& params, int cap) {
    return phi_set(maximal_submodule_generators(hw, cap), params);
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::simple: return "simple";
        case Verdict::not_simple: return "not_simple";
        case Verdict::undetermined: return "undetermined";
    }
    return "?";
}

SimplicityReport simplicity(const HighestWeight& hw, const ModuleParams& params, const MaximalSubmoduleGens& gens) {
    SimplicityReport r;
    r.hw = hw;
    r.params = params.canonical ? params : canonicalize(params);
    r.gens = gens;
    r.phi = phi_set(gens, r.params);
    r.caveats = r.phi.caveats;
    if (gens.status == GenStatus::undetermined_beyond_cap) {
        r.verdict = Verdict::undetermined;
        r.caveats.push_back("verdict withheld: generators of J(c,h) undetermined up to the level cap");
        return r;
    }
    if (r.phi.all_integers) {
        r.verdict = Verdict::not_simple;
        r.infinite_filtration = true;
        return r;
    }
    r.verdict = r.phi.roots.empty() ? Verdict::simple : Verdict::not_simple;
    for (auto n : r.phi.roots) {
        r.filtration.push_back({n, HighestWeight{hw.c, r.params.alpha + hw.h + Rat(static_cast<long>(n))}});
    }
    if (!r.phi.roots.empty()) r.minimal_submodule_index = r.phi.roots.back();
    return r;
}

SimplicityReport simplicity(const HighestWeight& hw, const ModuleParams& params, int cap) {
    return simplicity(hw, params, maximal_submodule_generators(hw, cap));
}

ExceptionalAnalysis exceptional_parameters(const MaximalSubmoduleGens& gens) {
    ExceptionalAnalysis out;
    if (gens.status != GenStatus::two_generators) return out;
    // phi depends on alpha and n only through s = alpha + n; with a = 0 the
    // variable n plays the role of s.
    const Assignment zero_alpha{{Var::Alpha, Rat(0)}};
    const MPoly f = phi_symbolic(gens.q1).partial_eval(zero_alpha);
    const MPoly g = phi_symbolic(gens.q2).partial_eval(zero_alpha);
    out.eliminant = resultant(f, g, Var::N);
    if (out.eliminant.is_zero()) return out;  // common factor: a curve of solutions
    out.finite = true;
    std::map<std::pair<Rat, Rat>, std::set<std::int64_t>> found;
    for (const Rat& beta : rational_roots(out.eliminant, Var::Beta)) {
        if (beta == Rat(1)) continue;
        const Assignment at{{Var::Beta, beta}};
        const MPoly common = univariate_gcd(f.partial_eval(at), g.partial_eval(at), Var::N);
        if (common.is_zero()) {
            out.finite = false;
            continue;
        }
        for (const Rat& s : rational_roots(common, Var::N)) {
            const Rat alpha = s.frac();
            const std::int64_t n = (s - alpha).to_int64();
            if (alpha.is_zero() && beta.is_zero() && n == 0) continue;
            found[{alpha, beta}].insert(n);
        }
    }
    for (const auto& [ab, ns] : found) {
        out.points.push_back({ModuleParams{ab.first, ab.second, true}, std::vector<std::int64_t>(ns.begin(), ns.end())});
    }
    return out;
}

Rat tau_eval(std::int64_t n, const ModuleParams& params, const VermaVector& v) {
    return phi_eval(params, n, v.elem());
}

std::shared_ptr<const TensorModule> TensorModule::create(HighestWeight hw, ModuleParams params,
                                                         MaximalSubmoduleGens gens, Window window) {
    return std::shared_ptr<const TensorModule>(
        new TensorModule(std::move(hw), std::move(params), std::move(gens), window));
}

TensorModule::TensorModule(HighestWeight hw, ModuleParams params, MaximalSubmoduleGens gens, Window window)
    : params_(std::move(params)), quotient_(std::move(hw), std::move(gens)), window_(window) {}

TensorVector TensorVector::basis(std::shared_ptr<const TensorModule> module, const Partition& p, std::int64_t j) {
    TensorVector v(module);
    v.add(VermaVector(module->hw(), p.size(), EnvElem(p)), j);
    return v;
}

TensorVector TensorVector::highest(std::shared_ptr<const TensorModule> module, std::int64_t n) {
    return basis(std::move(module), Partition(), n);
}

Rat TensorVector::coeff(const Partition& p, std::int64_t j) const {
    auto it = terms_.find({p, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

void TensorVector::add_term(const Key& k, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void TensorVector::add(const VermaVector& v, std::int64_t j, const Rat& s) {
    if (s.is_zero() || v.is_zero()) return;
    const TensorModule& m = *module_;
    if (m.params().primed_zero() && j == 0) return;
    const Window& w = m.window();
    if (v.level() > w.max_level) {
        throw WindowError("Verma level " + std::to_string(v.level()) + " exceeds the window limit " +
                          std::to_string(w.max_level));
    }
    const VermaVector r = m.quotient().reduce(v);
    if (r.is_zero()) return;
    const std::int64_t n = j - r.level();
    if (n < w.min_exponent || n > w.max_exponent) {
        throw WindowError("shifted exponent " + std::to_string(n) + " outside the window [" +
                          std::to_string(w.min_exponent) + ", " + std::to_string(w.max_exponent) + "]");
    }
    for (const auto& [p, c] : r.elem().terms()) add_term({p, j}, c * s);
}

std::map<int, VermaVector> TensorVector::component(std::int64_t n) const {
    std::map<int, VermaVector> out;
    for (const auto& [key, c] : terms_) {
        const auto& [p, j] = key;
        if (j - p.size() != n) continue;
        auto it = out.try_emplace(p.size(), module_->hw(), p.size()).first;
        it->second += VermaVector(module_->hw(), p.size(), EnvElem(p, c));
    }
    return out;
}

void TensorVector::check_module(const TensorVector& o) const {
    if (module_ != o.module_) throw std::invalid_argument("tensor vectors belong to different modules");
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    check_module(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    check_module(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

TensorVector& TensorVector::operator*=(const Rat& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

std::string TensorVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        const auto& [p, j] = key;
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rat mag = negative ? -c : c;
        const std::string body = p.empty() ? mag.str() : EnvElem(p, mag).str();
        os << body << " @v(" << j << ')';
    }
    return os.str();
}

TensorVector tensor_apply(int m, const TensorVector& v) {
    const auto& module = v.module();
    const ModuleParams& params = module->params();
    const HighestWeight& hw = module->hw();
    const Rat mm(m);
    TensorVector out(module);
    for (const auto& [key, c] : v.terms()) {
        const auto& [p, j] = key;
        const VermaVector pu(hw, p.size(), EnvElem(p));
        if (m <= 0 || p.size() >= m) out.add(apply_generator(m, pu), j, c);
        out.add(pu, j + m, c * (params.alpha + Rat(static_cast<long>(j)) + mm * params.beta));
    }
    return out;
}

TensorVector casimir_apply(int k, const TensorVector& v) {
    if (k < 1) throw std::invalid_argument("Casimir index must be >= 1");
    const TensorVector d0v = tensor_apply(0, v);
    TensorVector out = tensor_apply(0, d0v);
    out += d0v * Rat(k);
    out -= tensor_apply(-k, tensor_apply(k, v));
    return out;
}

bool classify_isomorphism(const TensorTuple& a, const TensorTuple& b) {
    return a.hw == b.hw && canonicalize(a.params) == canonicalize(b.params);
}

}  // namespace virasoro
