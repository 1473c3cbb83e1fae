#pragma once

#include "virasoro/envelope.hpp"
#include "virasoro/linalg.hpp"
#include "virasoro/rational.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

namespace virasoro {

// Cu = cu and d_0 u = hu for the highest weight vector u.
struct HighestWeight {
    Rat c;
    Rat h;

    friend bool operator==(const HighestWeight&, const HighestWeight&) = default;
    friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;
    std::string str() const { return "(" + c.str() + ", " + h.str() + ")"; }
};

// Homogeneous vector P u of M(c,h) at a fixed level; d_0 acts by h - level.
class VermaVector {
public:
    VermaVector(HighestWeight hw, int level) : hw_(std::move(hw)), level_(level) {}
    // Throws std::invalid_argument if p is not homogeneous of size `level`.
    VermaVector(HighestWeight hw, int level, EnvElem p);

    static VermaVector highest(const HighestWeight& hw);

    const HighestWeight& ambient() const { return hw_; }
    int level() const { return level_; }
    const EnvElem& elem() const { return elem_; }
    bool is_zero() const { return elem_.is_zero(); }
    Rat weight() const { return hw_.h - Rat(level_); }

    VermaVector& operator+=(const VermaVector& o);
    VermaVector& operator-=(const VermaVector& o);
    VermaVector& operator*=(const Rat& s);
    friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
    friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
    friend VermaVector operator*(VermaVector a, const Rat& s) { return a *= s; }
    friend bool operator==(const VermaVector&, const VermaVector&) = default;

    std::string str() const;

private:
    void check_compatible(const VermaVector& o) const;

    HighestWeight hw_;
    int level_;
    EnvElem elem_;
};

// Coordinates at a level use lexicographically ascending partitions, so
// monomials rich in small indices come first and are eliminated first by
// SubspaceReducer.
std::vector<Partition> coordinate_order(int level);
RatVector to_coords(const EnvElem& p, int level);
EnvElem from_coords(const RatVector& x, int level);

VermaVector apply_lowering(int k, const VermaVector& v);
VermaVector apply_raising(int m, const VermaVector& v);
// d_m for any integer m; d_0 acts by the weight.
VermaVector apply_generator(int m, const VermaVector& v);

std::vector<VermaVector> singular_vectors_at_level(const HighestWeight& hw, int level);

enum class GenStatus { verma_simple, single_generator, two_generators, undetermined_beyond_cap };

const char* to_string(GenStatus s);

// Generators of J(c,h) = U(Vir_-) Q1 u + U(Vir_-) Q2 u. A single generator is
// stored with q2 == q1; no generator means q1 == q2 == 0.
struct MaximalSubmoduleGens {
    EnvElem q1;
    EnvElem q2;
    std::pair<int, int> levels{0, 0};
    GenStatus status = GenStatus::undetermined_beyond_cap;
    int cap = 0;

    // Q1 = Q2 = 0 asserted from outside (the scan alone never certifies it).
    static MaximalSubmoduleGens verma_simple();
    static MaximalSubmoduleGens from_pair(EnvElem q1, EnvElem q2);
    static MaximalSubmoduleGens single(EnvElem q);

    bool has_generators() const { return !q1.is_zero(); }
    // Distinct generators (empty, {q1}, or {q1, q2}).
    std::vector<EnvElem> distinct() const;
    friend bool operator==(const MaximalSubmoduleGens&, const MaximalSubmoduleGens&) = default;
};

constexpr int default_level_cap = 12;

// Scans levels 1..cap for primitive singular vectors. Results are memoized
// per (hw, cap) behind a mutex.
MaximalSubmoduleGens maximal_submodule_generators(const HighestWeight& hw, int cap = default_level_cap);

// Spanning set (as coordinates) of the level-`level` piece of
// sum_i U(Vir_-) gens[i] u.
std::vector<RatVector> submodule_span(const std::vector<EnvElem>& gens, int level);

// V(c,h) = M(c,h)/J(c,h), with the level-wise reductions of J cached.
class SimpleQuotient {
public:
    SimpleQuotient(HighestWeight hw, MaximalSubmoduleGens gens);

    const HighestWeight& highest_weight() const { return hw_; }
    const MaximalSubmoduleGens& gens() const { return gens_; }

    VermaVector reduce(const VermaVector& v) const;
    // Partitions that survive reduction; a basis of V(c,h) at this level.
    std::vector<Partition> basis(int level) const;
    std::size_t dimension(int level) const;

private:
    std::shared_ptr<const SubspaceReducer> reducer(int level) const;

    HighestWeight hw_;
    MaximalSubmoduleGens gens_;
    struct Cache {
        std::mutex mutex;
        std::map<int, std::shared_ptr<const SubspaceReducer>> levels;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

VermaVector reduce_mod_J(const VermaVector& v, const MaximalSubmoduleGens& gens);

// h = (m^2 - (p+q)^2) / (4pq), c = 1 + 6 (p+q)^2 / (pq).
HighestWeight ff_weights(int p, int q, int m);

}  // namespace virasoro
