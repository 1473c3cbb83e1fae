#include "virasoro/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace virasoro {

const char* var_name(Var v) {
    switch (v) {
        case Var::N: return "n";
        case Var::Alpha: return "a";
        case Var::Beta: return "b";
    }
    return "?";
}

bool GradedLexDesc::operator()(const Exponent& a, const Exponent& b) const {
    const unsigned da = a[0] + a[1] + a[2];
    const unsigned db = b[0] + b[1] + b[2];
    if (da != db) return da > db;
    return a > b;
}

MPoly::MPoly(const Rat& constant) {
    if (!constant.is_zero()) terms_.emplace(Exponent{0, 0, 0}, constant);
}

MPoly MPoly::variable(Var v) {
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(v)] = 1;
    return monomial(Rat(1), e);
}

MPoly MPoly::monomial(const Rat& coeff, Exponent e) {
    MPoly p;
    p.add_term(e, coeff);
    return p;
}

void MPoly::add_term(const Exponent& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0, 0});
}

Rat MPoly::constant_term() const {
    auto it = terms_.find(Exponent{0, 0, 0});
    return it == terms_.end() ? Rat(0) : it->second;
}

unsigned MPoly::degree(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(v)]);
    return d;
}

unsigned MPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
    return d;
}

bool MPoly::only_in(Var v) const {
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (i != static_cast<std::size_t>(v) && e[i] != 0) return false;
        }
    }
    return true;
}

Rat MPoly::eval(const Assignment& at) const {
    for (Var v : {Var::N, Var::Alpha, Var::Beta}) {
        if (mentions(v) && !at.contains(v)) {
            throw std::invalid_argument(std::string("no value assigned to variable '") + var_name(v) + "'");
        }
    }
    return partial_eval(at).constant_term();
}

MPoly MPoly::partial_eval(const Assignment& at) const {
    MPoly out;
    for (const auto& [e, c] : terms_) {
        Rat coeff = c;
        Exponent rest = e;
        for (const auto& [v, value] : at) {
            const auto i = static_cast<std::size_t>(v);
            coeff *= pow(value, e[i]);
            rest[i] = 0;
        }
        out.add_term(rest, coeff);
    }
    return out;
}

MPoly MPoly::substitute(Var v, const MPoly& replacement) const {
    const auto i = static_cast<std::size_t>(v);
    std::vector<MPoly> powers{MPoly(1)};
    MPoly out;
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[i]) powers.push_back(powers.back() * replacement);
        Exponent rest = e;
        rest[i] = 0;
        out += monomial(c, rest) * powers[e[i]];
    }
    return out;
}

std::vector<Rat> MPoly::univariate_coeffs(Var v) const {
    if (!only_in(v)) {
        throw std::invalid_argument(std::string("polynomial ") + str() + " is not univariate in " + var_name(v));
    }
    std::vector<Rat> coeffs(degree(v) + 1, Rat(0));
    for (const auto& [e, c] : terms_) coeffs[e[static_cast<std::size_t>(v)]] = c;
    return coeffs;
}

MPoly MPoly::coeff_of(Var v, unsigned k) const {
    const auto i = static_cast<std::size_t>(v);
    MPoly out;
    for (const auto& [e, c] : terms_) {
        if (e[i] != k) continue;
        Exponent rest = e;
        rest[i] = 0;
        out.add_term(rest, c);
    }
    return out;
}

MPoly MPoly::operator-() const {
    MPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            out.add_term(Exponent{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
        }
    }
    return out;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly& MPoly::scale(const Rat& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rat mag = negative ? -c : c;
        const bool is_const = e == Exponent{0, 0, 0};
        bool need_star = false;
        if (is_const || mag != Rat(1)) {
            os << mag.str();
            need_star = true;
        }
        for (Var v : {Var::N, Var::Alpha, Var::Beta}) {
            const unsigned k = e[static_cast<std::size_t>(v)];
            if (k == 0) continue;
            if (need_star) os << '*';
            os << var_name(v);
            if (k > 1) os << '^' << k;
            need_star = true;
        }
    }
    return os.str();
}

MPoly pow(const MPoly& base, unsigned exponent) {
    MPoly result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

DivRem divrem(const MPoly& dividend, const MPoly& divisor, Var v) {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    const unsigned dd = divisor.degree(v);
    const MPoly lead = divisor.coeff_of(v, dd);
    if (!lead.is_constant()) {
        throw std::invalid_argument("divisor leading coefficient in " + std::string(var_name(v)) +
                                    " is not constant: " + lead.str());
    }
    const Rat lc = lead.constant_term();
    Exponent shift{0, 0, 0};
    DivRem out{MPoly(), dividend};
    while (!out.remainder.is_zero() && out.remainder.degree(v) >= dd) {
        const unsigned dr = out.remainder.degree(v);
        shift[static_cast<std::size_t>(v)] = dr - dd;
        const MPoly step = out.remainder.coeff_of(v, dr) * MPoly::monomial(Rat(1) / lc, shift);
        out.quotient += step;
        out.remainder -= step * divisor;
    }
    return out;
}

bool IntegerRoots::contains(std::int64_t k) const {
    return all_integers || std::binary_search(roots.begin(), roots.end(), k);
}

namespace {

// Integer coefficients (lowest degree first) of a nonzero univariate
// polynomial, scaled by the lcm of the denominators.
std::vector<BigInt> cleared_coeffs(const MPoly& p) {
    const auto coeffs = p.univariate_coeffs(Var::N);
    BigInt l = 1;
    for (const auto& c : coeffs) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    }
    std::vector<BigInt> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) out.push_back(c.num() * (l / c.den()));
    return out;
}

BigInt horner(const std::vector<BigInt>& coeffs, std::int64_t k) {
    BigInt acc = 0;
    const BigInt x = static_cast<long>(k);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

std::int64_t integer_root_bound(const MPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("root bound of the zero polynomial");
    auto coeffs = cleared_coeffs(p);
    // Roots at zero are irrelevant for the bound; strip the n^v factor.
    const auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c != 0; });
    coeffs.erase(coeffs.begin(), first);
    if (coeffs.size() <= 1) return 0;
    const BigInt lead = abs(coeffs.back());
    BigInt max_ratio_ceil = 0;
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        BigInt q;
        const BigInt a = abs(coeffs[i]);
        mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), lead.get_mpz_t());
        if (q > max_ratio_ceil) max_ratio_ceil = q;
    }
    const BigInt bound = max_ratio_ceil + 1;
    if (!bound.fits_slong_p()) throw std::overflow_error("integer root bound exceeds int64");
    return bound.get_si();
}

IntegerRoots integer_roots(const MPoly& p) {
    IntegerRoots out;
    if (p.is_zero()) {
        out.all_integers = true;
        return out;
    }
    const auto coeffs = cleared_coeffs(p);
    const std::int64_t bound = integer_root_bound(p);
    // Lowest nonzero coefficient; every nonzero integer root divides it.
    const BigInt low = *std::find_if(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c != 0; });
    for (std::int64_t k = -bound; k <= bound; ++k) {
        if (k != 0 && !mpz_divisible_ui_p(low.get_mpz_t(), static_cast<unsigned long>(k < 0 ? -k : k))) continue;
        if (horner(coeffs, k) == 0) out.roots.push_back(k);
    }
    return out;
}

namespace {

MPoly derivative(const MPoly& p, Var v) {
    const auto i = static_cast<std::size_t>(v);
    MPoly out;
    for (const auto& [e, c] : p.terms()) {
        if (e[i] == 0) continue;
        Exponent lower = e;
        --lower[i];
        out += MPoly::monomial(c * Rat(static_cast<long>(e[i])), lower);
    }
    return out;
}

MPoly make_monic(const MPoly& p, Var v) {
    if (p.is_zero()) return p;
    const Rat lc = p.coeff_of(v, p.degree(v)).constant_term();
    MPoly out = p;
    return out.scale(Rat(1) / lc);
}

int sign_of(const MPoly& p, Var v, const Rat& x) { return p.eval({{v, x}}).sign(); }

int sign_changes(const std::vector<MPoly>& chain, Var v, const Rat& x) {
    int changes = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = sign_of(q, v, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

MPoly univariate_gcd(MPoly a, MPoly b, Var v) {
    while (!b.is_zero()) {
        MPoly r = divrem(a, b, v).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, v);
}

MPoly resultant(const MPoly& f, const MPoly& g, Var v) {
    const unsigned df = f.degree(v), dg = g.degree(v);
    if (df == 0 || dg == 0) throw std::invalid_argument("resultant needs positive degree in both arguments");
    const std::size_t size = df + dg;
    if (size > 20) throw std::invalid_argument("resultant too large");
    // Sylvester matrix: dg shifted rows of f, then df shifted rows of g,
    // highest coefficient first.
    std::vector<std::vector<MPoly>> rows(size, std::vector<MPoly>(size));
    for (unsigned r = 0; r < dg; ++r) {
        for (unsigned k = 0; k <= df; ++k) rows[r][r + k] = f.coeff_of(v, df - k);
    }
    for (unsigned r = 0; r < df; ++r) {
        for (unsigned k = 0; k <= dg; ++k) rows[dg + r][r + k] = g.coeff_of(v, dg - k);
    }
    // Leibniz expansion with a memo over the set of used columns.
    std::vector<MPoly> dp(std::size_t{1} << size);
    std::vector<bool> reached(dp.size(), false);
    dp[0] = MPoly(1);
    reached[0] = true;
    for (std::size_t mask = 0; mask < dp.size(); ++mask) {
        if (!reached[mask] || dp[mask].is_zero()) continue;
        const auto row = static_cast<std::size_t>(__builtin_popcountll(mask));
        if (row == size) continue;
        for (std::size_t col = 0; col < size; ++col) {
            if (mask & (std::size_t{1} << col) || rows[row][col].is_zero()) continue;
            const int above = __builtin_popcountll(mask >> (col + 1));
            MPoly term = dp[mask] * rows[row][col];
            if (above % 2) term = -term;
            const std::size_t next = mask | (std::size_t{1} << col);
            dp[next] += term;
            reached[next] = true;
        }
    }
    return dp.back();
}

std::vector<Rat> rational_roots(const MPoly& p, Var v) {
    if (p.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
    if (!p.only_in(v)) throw std::invalid_argument("polynomial " + p.str() + " is not univariate in " + var_name(v));
    if (p.degree(v) == 0) return {};

    const MPoly sqf = divrem(p, univariate_gcd(p, derivative(p, v), v), v).quotient;
    std::vector<MPoly> chain{sqf, derivative(sqf, v)};
    while (chain.back().degree(v) > 0) {
        MPoly r = -divrem(chain[chain.size() - 2], chain.back(), v).remainder;
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }

    // A root p/q in lowest terms has q | lead for the primitive integer form,
    // so t = lead * root is an integer.
    const auto coeffs = sqf.univariate_coeffs(v);
    BigInt l = 1;
    for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    const BigInt lead_int = abs(coeffs.back().num() * (l / coeffs.back().den()));
    const Rat lead(lead_int);
    Rat bound(0);
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        const Rat ratio = coeffs[i] / coeffs.back();
        bound = std::max(bound, ratio.sign() < 0 ? -ratio : ratio);
    }
    bound += Rat(2);

    std::vector<Rat> roots;
    struct Interval {
        Rat lo, hi;
        int count;
    };
    std::vector<Interval> todo{{-bound, bound, sign_changes(chain, v, -bound) - sign_changes(chain, v, bound)}};
    while (!todo.empty()) {
        Interval iv = todo.back();
        todo.pop_back();
        if (iv.count == 0) continue;
        if ((iv.hi - iv.lo) * lead < Rat(1)) {
            // (lo, hi] scaled by lead holds at most one integer.
            const BigInt t = (iv.hi * lead).floor();
            const Rat x = Rat(t) / lead;
            if (x > iv.lo && sign_of(sqf, v, x) == 0) roots.push_back(x);
            continue;
        }
        const Rat mid = (iv.lo + iv.hi) / Rat(2);
        const int at_mid = sign_changes(chain, v, mid);
        todo.push_back({iv.lo, mid, sign_changes(chain, v, iv.lo) - at_mid});
        todo.push_back({mid, iv.hi, at_mid - sign_changes(chain, v, iv.hi)});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace virasoro
