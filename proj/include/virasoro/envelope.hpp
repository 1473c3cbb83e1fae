#pragma once

#include "virasoro/rational.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace virasoro {

// Indices k_r >= ... >= k_1 >= 1 of the PBW monomial d_{-k_r} ... d_{-k_1}.
// parts()[0] is the leftmost factor.
class Partition {
public:
    Partition() = default;
    // Throws std::invalid_argument unless the parts are positive and weakly
    // decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // Sorts arbitrary positive indices into PBW order.
    static Partition from_unsorted(std::vector<int> parts);

    std::span<const int> parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int size() const { return size_; }
    bool empty() const { return parts_.empty(); }
    int leading() const { return parts_.front(); }
    // The partition with the leftmost factor removed.
    Partition tail() const;
    // d_{-k} * this, valid only when k >= leading() (or this is empty).
    Partition prepend(int k) const;
    bool contains_part(int k) const;

    // Smaller size first, then lexicographic on parts.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
    friend bool operator==(const Partition& a, const Partition& b) = default;

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// All partitions of `level`, lexicographically descending:
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> pbw_basis(int level);

// Partition number p(level) by Euler's pentagonal recurrence; independent of
// pbw_basis.
std::size_t partition_count(int level);

// Finite rational combination of PBW monomials in U(Vir_-).
class EnvElem {
public:
    using Terms = std::map<Partition, Rat>;

    EnvElem() = default;
    EnvElem(const Rat& scalar);
    EnvElem(const Partition& p, const Rat& coeff = Rat(1));

    static EnvElem unit() { return EnvElem(Rat(1)); }
    // d_{-k}
    static EnvElem generator(int k);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Partition& p) const;
    void add(const Partition& p, const Rat& c);

    bool is_homogeneous() const;
    // -(common size); requires a nonzero homogeneous element.
    int degree() const;
    // Largest monomial length.
    std::size_t max_length() const;

    EnvElem& operator+=(const EnvElem& o);
    EnvElem& operator-=(const EnvElem& o);
    EnvElem& operator*=(const Rat& s);
    EnvElem operator-() const;

    friend EnvElem operator+(EnvElem a, const EnvElem& b) { return a += b; }
    friend EnvElem operator-(EnvElem a, const EnvElem& b) { return a -= b; }
    friend EnvElem operator*(EnvElem a, const Rat& s) { return a *= s; }
    friend EnvElem operator*(const Rat& s, EnvElem a) { return a *= s; }
    friend bool operator==(const EnvElem&, const EnvElem&) = default;

    // Same syntax the expression parser accepts, e.g.
    // "4*d(-1)^3 + 12*d(-2)*d(-1) + 3*d(-3)".
    std::string str() const;

private:
    Terms terms_;
};

// [d_m, d_n] = coefficient * d_{m+n} + central * C.
struct BracketTerm {
    Rat coefficient;
    int index = 0;
    Rat central;
};

BracketTerm bracket(int m, int n);

// Formal element of Vir: sum of c_k d_k plus a multiple of C.
struct LieElem {
    std::map<int, Rat> d;
    Rat central;

    static LieElem generator(int m);
    bool is_zero() const;
    LieElem& operator+=(const LieElem& o);
    friend bool operator==(const LieElem&, const LieElem&) = default;
};

LieElem lie_bracket(const LieElem& x, const LieElem& y);

// d_{-k} * x in PBW normal form.
EnvElem left_multiply(int k, const EnvElem& x);

// x * y in PBW normal form.
EnvElem multiply(const EnvElem& x, const EnvElem& y);

// Normal form of an arbitrary word d_{-w_0} d_{-w_1} ... by repeatedly
// swapping adjacent out-of-order pairs. Independent of left_multiply.
EnvElem normal_order(std::span<const int> word);

}  // namespace virasoro
