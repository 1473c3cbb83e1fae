#include "virasoro/verma.hpp"

#include <algorithm>
#include <stdexcept>

namespace virasoro {

VermaVector::VermaVector(HighestWeight hw, int level, EnvElem p)
    : hw_(std::move(hw)), level_(level), elem_(std::move(p)) {
    if (level_ < 0) throw std::invalid_argument("negative Verma level");
    for (const auto& [part, c] : elem_.terms()) {
        if (part.size() != level_) {
            throw std::invalid_argument("monomial " + part.str() + " does not lie at level " +
                                        std::to_string(level_));
        }
    }
}

VermaVector VermaVector::highest(const HighestWeight& hw) { return VermaVector(hw, 0, EnvElem::unit()); }

void VermaVector::check_compatible(const VermaVector& o) const {
    if (!(hw_ == o.hw_) || level_ != o.level_) {
        throw std::invalid_argument("adding Verma vectors of different modules or levels");
    }
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
    check_compatible(o);
    elem_ += o.elem_;
    return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
    check_compatible(o);
    elem_ -= o.elem_;
    return *this;
}

VermaVector& VermaVector::operator*=(const Rat& s) {
    elem_ *= s;
    return *this;
}

std::string VermaVector::str() const {
    if (elem_.is_zero()) return "0";
    if (elem_ == EnvElem::unit()) return "u";
    return "(" + elem_.str() + ")u";
}

std::vector<Partition> coordinate_order(int level) {
    auto basis = pbw_basis(level);
    std::reverse(basis.begin(), basis.end());
    return basis;
}

RatVector to_coords(const EnvElem& p, int level) {
    const auto order = coordinate_order(level);
    RatVector x(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) x[i] = p.coeff(order[i]);
    for (const auto& [part, c] : p.terms()) {
        if (part.size() != level) throw std::invalid_argument("element is not at level " + std::to_string(level));
    }
    return x;
}

EnvElem from_coords(const RatVector& x, int level) {
    const auto order = coordinate_order(level);
    if (x.size() != order.size()) throw std::invalid_argument("coordinate vector has wrong dimension");
    EnvElem out;
    for (std::size_t i = 0; i < order.size(); ++i) out.add(order[i], x[i]);
    return out;
}

namespace {

// d_m acting on monomials P u of M(c,h); results memoized for the engine's
// lifetime.
class ActionEngine {
public:
    explicit ActionEngine(const HighestWeight& hw) : hw_(hw) {}

    // d_m P u, an element at level |P| - m.
    EnvElem act(int m, const Partition& p) {
        if (m < 0) return left_multiply(-m, EnvElem(p));
        if (m == 0) return EnvElem(p, hw_.h - Rat(p.size()));
        return raise(m, p);
    }

    EnvElem act(int m, const EnvElem& x) {
        EnvElem out;
        for (const auto& [p, c] : x.terms()) out += act(m, p) * c;
        return out;
    }

private:
    EnvElem raise(int m, const Partition& p) {
        if (p.size() < m) return EnvElem();
        auto key = std::make_pair(m, p);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // d_m d_{-k} R u = d_{-k} (d_m R u) + [d_m, d_{-k}] R u
        const int k = p.leading();
        const Partition rest = p.tail();
        EnvElem out = left_multiply(k, raise(m, rest));
        const BracketTerm b = bracket(m, -k);
        out += act(b.index, rest) * b.coefficient;
        if (!b.central.is_zero()) out += EnvElem(rest, b.central * hw_.c);
        memo_.emplace(std::move(key), out);
        return out;
    }

    HighestWeight hw_;
    std::map<std::pair<int, Partition>, EnvElem> memo_;
};

}  // namespace

VermaVector apply_lowering(int k, const VermaVector& v) {
    if (k < 1) throw std::invalid_argument("lowering index must be >= 1");
    return VermaVector(v.ambient(), v.level() + k, left_multiply(k, v.elem()));
}

VermaVector apply_raising(int m, const VermaVector& v) {
    if (m < 1) throw std::invalid_argument("raising index must be >= 1");
    const int target = v.level() - m;
    if (target < 0) return VermaVector(v.ambient(), 0);
    ActionEngine engine(v.ambient());
    return VermaVector(v.ambient(), target, engine.act(m, v.elem()));
}

VermaVector apply_generator(int m, const VermaVector& v) {
    if (m < 0) return apply_lowering(-m, v);
    if (m == 0) return v * v.weight();
    return apply_raising(m, v);
}

std::vector<VermaVector> singular_vectors_at_level(const HighestWeight& hw, int level) {
    if (level < 1) throw std::invalid_argument("singular vector level must be >= 1");
    const auto cols = coordinate_order(level);
    ActionEngine engine(hw);
    std::vector<RatVector> rows;
    for (int m : {1, 2}) {
        const int target = level - m;
        if (target < 0) continue;
        const std::size_t dim = partition_count(target);
        std::vector<RatVector> images;
        images.reserve(cols.size());
        for (const auto& p : cols) images.push_back(to_coords(engine.act(m, p), target));
        for (std::size_t r = 0; r < dim; ++r) {
            RatVector row(cols.size());
            for (std::size_t j = 0; j < cols.size(); ++j) row[j] = images[j][r];
            rows.push_back(std::move(row));
        }
    }
    std::vector<VermaVector> out;
    for (const auto& x : nullspace(Matrix::from_rows(rows, cols.size()))) {
        out.emplace_back(hw, level, from_coords(x, level));
    }
    return out;
}

const char* to_string(GenStatus s) {
    switch (s) {
        case GenStatus::verma_simple: return "verma_simple";
        case GenStatus::single_generator: return "single_generator";
        case GenStatus::two_generators: return "two_generators";
        case GenStatus::undetermined_beyond_cap: return "undetermined_beyond_cap";
    }
    return "?";
}

MaximalSubmoduleGens MaximalSubmoduleGens::verma_simple() {
    MaximalSubmoduleGens g;
    g.status = GenStatus::verma_simple;
    return g;
}

MaximalSubmoduleGens MaximalSubmoduleGens::from_pair(EnvElem q1, EnvElem q2) {
    if (q1.is_zero() || q2.is_zero() || !q1.is_homogeneous() || !q2.is_homogeneous()) {
        throw std::invalid_argument("generators must be nonzero and homogeneous");
    }
    if (q1 == q2) return single(std::move(q1));
    MaximalSubmoduleGens g;
    g.levels = {-q1.degree(), -q2.degree()};
    g.q1 = std::move(q1);
    g.q2 = std::move(q2);
    g.status = GenStatus::two_generators;
    return g;
}

MaximalSubmoduleGens MaximalSubmoduleGens::single(EnvElem q) {
    if (q.is_zero() || !q.is_homogeneous()) throw std::invalid_argument("generator must be nonzero and homogeneous");
    MaximalSubmoduleGens g;
    g.levels = {-q.degree(), -q.degree()};
    g.q1 = q;
    g.q2 = std::move(q);
    g.status = GenStatus::single_generator;
    return g;
}

std::vector<EnvElem> MaximalSubmoduleGens::distinct() const {
    if (q1.is_zero()) return {};
    if (q1 == q2) return {q1};
    return {q1, q2};
}

std::vector<RatVector> submodule_span(const std::vector<EnvElem>& gens, int level) {
    std::vector<RatVector> out;
    for (const auto& q : gens) {
        const int lq = -q.degree();
        if (lq > level) continue;
        for (const auto& m : pbw_basis(level - lq)) out.push_back(to_coords(multiply(EnvElem(m), q), level));
    }
    return out;
}

namespace {

MaximalSubmoduleGens scan_generators(const HighestWeight& hw, int cap) {
    std::vector<EnvElem> found;
    std::vector<int> levels;
    for (int level = 1; level <= cap && found.size() < 2; ++level) {
        const auto singular = singular_vectors_at_level(hw, level);
        if (singular.empty()) continue;
        const SubspaceReducer known(submodule_span(found, level), partition_count(level));
        for (const auto& s : singular) {
            const RatVector r = known.reduce(to_coords(s.elem(), level));
            if (std::all_of(r.begin(), r.end(), [](const Rat& x) { return x.is_zero(); })) continue;
            found.push_back(from_coords(primitive(r), level));
            levels.push_back(level);
            break;
        }
    }
    MaximalSubmoduleGens g;
    if (found.size() == 2) {
        g = MaximalSubmoduleGens::from_pair(found[0], found[1]);
    } else if (found.size() == 1) {
        g = MaximalSubmoduleGens::single(found[0]);
    } else {
        g.status = GenStatus::undetermined_beyond_cap;
    }
    g.cap = cap;
    return g;
}

}  // namespace

MaximalSubmoduleGens maximal_submodule_generators(const HighestWeight& hw, int cap) {
    if (cap < 1) throw std::invalid_argument("level cap must be >= 1");
    static std::mutex mutex;
    static std::map<std::pair<HighestWeight, int>, MaximalSubmoduleGens> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find({hw, cap}); it != cache.end()) return it->second;
    }
    MaximalSubmoduleGens g = scan_generators(hw, cap);
    std::lock_guard lock(mutex);
    return cache.emplace(std::make_pair(hw, cap), std::move(g)).first->second;
}

SimpleQuotient::SimpleQuotient(HighestWeight hw, MaximalSubmoduleGens gens)
    : hw_(std::move(hw)), gens_(std::move(gens)) {}

std::shared_ptr<const SubspaceReducer> SimpleQuotient::reducer(int level) const {
    {
        std::lock_guard lock(cache_->mutex);
        if (auto it = cache_->levels.find(level); it != cache_->levels.end()) return it->second;
    }
    auto r = std::make_shared<const SubspaceReducer>(submodule_span(gens_.distinct(), level), partition_count(level));
    std::lock_guard lock(cache_->mutex);
    return cache_->levels.emplace(level, std::move(r)).first->second;
}

VermaVector SimpleQuotient::reduce(const VermaVector& v) const {
    if (!gens_.has_generators() || v.is_zero()) return v;
    const auto r = reducer(v.level())->reduce(to_coords(v.elem(), v.level()));
    return VermaVector(v.ambient(), v.level(), from_coords(r, v.level()));
}

std::vector<Partition> SimpleQuotient::basis(int level) const {
    auto order = coordinate_order(level);
    if (!gens_.has_generators()) return order;
    const auto r = reducer(level);
    std::vector<bool> pivot(order.size(), false);
    for (auto c : r->pivots()) pivot[c] = true;
    std::vector<Partition> out;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (!pivot[i]) out.push_back(order[i]);
    }
    return out;
}

std::size_t SimpleQuotient::dimension(int level) const { return basis(level).size(); }

VermaVector reduce_mod_J(const VermaVector& v, const MaximalSubmoduleGens& gens) {
    return SimpleQuotient(v.ambient(), gens).reduce(v);
}

HighestWeight ff_weights(int p, int q, int m) {
    if (p == 0 || q == 0) throw std::invalid_argument("ff_weights requires pq != 0");
    const Rat pq = Rat(p) * Rat(q);
    const Rat s2 = pow(Rat(p + q), 2);
    return HighestWeight{Rat(1) + Rat(6) * s2 / pq, (pow(Rat(m), 2) - s2) / (Rat(4) * pq)};
}

}  // namespace virasoro
