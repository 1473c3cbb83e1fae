#pragma once

#include "virasoro/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace virasoro {

// The three variables a polynomial may mention: the integer index n and the
// intermediate-series parameters alpha, beta (printed as n, a, b).
enum class Var : std::uint8_t { N = 0, Alpha = 1, Beta = 2 };

const char* var_name(Var v);

using Exponent = std::array<unsigned, 3>;

// Graded lexicographic, largest first: iteration order is printing order.
struct GradedLexDesc {
    bool operator()(const Exponent& a, const Exponent& b) const;
};

using Assignment = std::map<Var, Rat>;

class MPoly {
public:
    using Terms = std::map<Exponent, Rat, GradedLexDesc>;

    MPoly() = default;
    MPoly(const Rat& constant);
    MPoly(int constant) : MPoly(Rat(constant)) {}

    static MPoly variable(Var v);
    static MPoly monomial(const Rat& coeff, Exponent e);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the constant term (zero if absent).
    Rat constant_term() const;

    unsigned degree(Var v) const;
    unsigned total_degree() const;
    bool mentions(Var v) const { return degree(v) > 0; }
    // True when no variable other than v occurs.
    bool only_in(Var v) const;

    // Exact value; throws std::invalid_argument naming the first variable
    // that occurs in the polynomial but has no assignment.
    Rat eval(const Assignment& at) const;

    // Replaces every variable in `at` by its value, leaving the others symbolic.
    MPoly partial_eval(const Assignment& at) const;

    // Replaces v by an arbitrary polynomial.
    MPoly substitute(Var v, const MPoly& replacement) const;

    // Coefficients c_0..c_d of a polynomial in v alone; throws if other
    // variables occur.
    std::vector<Rat> univariate_coeffs(Var v) const;

    // Coefficient of v^k as a polynomial in the remaining variables.
    MPoly coeff_of(Var v, unsigned k) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const MPoly& o);
    MPoly& scale(const Rat& s);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    void add_term(const Exponent& e, const Rat& c);

    Terms terms_;
};

MPoly pow(const MPoly& base, unsigned exponent);

struct DivRem {
    MPoly quotient;
    MPoly remainder;
};

// Division with remainder in the variable v. The leading coefficient of the
// divisor in v must be a nonzero constant, so the quotient stays polynomial.
DivRem divrem(const MPoly& dividend, const MPoly& divisor, Var v);

// Integer zeros of a univariate polynomial in n. A zero polynomial vanishes on
// every integer, which is reported through `all_integers` rather than as an
// (unrepresentable) list.
struct IntegerRoots {
    bool all_integers = false;
    std::vector<std::int64_t> roots;

    bool contains(std::int64_t k) const;
    friend bool operator==(const IntegerRoots&, const IntegerRoots&) = default;
};

// Bound B such that every integer root k satisfies |k| <= B (Cauchy bound on
// the denominator-cleared polynomial). Zero for constant polynomials.
std::int64_t integer_root_bound(const MPoly& p);

IntegerRoots integer_roots(const MPoly& p);

// Monic gcd of two polynomials in v alone (zero only if both are zero).
MPoly univariate_gcd(MPoly a, MPoly b, Var v);

// Sylvester resultant with respect to v; the coefficients may mention the
// other two variables. Both inputs must have positive degree in v.
MPoly resultant(const MPoly& f, const MPoly& g, Var v);

// Distinct rational zeros, ascending, of a nonzero polynomial in v alone.
// Real roots are isolated with a Sturm sequence until each interval can hold
// at most one candidate t / lead, which is then tested exactly.
std::vector<Rat> rational_roots(const MPoly& p, Var v);

}  // namespace virasoro
