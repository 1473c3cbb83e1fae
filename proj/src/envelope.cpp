#include "virasoro/envelope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace virasoro {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw std::invalid_argument("partition part must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

Partition Partition::tail() const {
    Partition p;
    p.parts_.assign(parts_.begin() + 1, parts_.end());
    p.size_ = size_ - parts_.front();
    return p;
}

Partition Partition::prepend(int k) const {
    if (k < 1 || (!parts_.empty() && k < parts_.front())) {
        throw std::invalid_argument("prepend would break PBW order");
    }
    Partition p;
    p.parts_.reserve(parts_.size() + 1);
    p.parts_.push_back(k);
    p.parts_.insert(p.parts_.end(), parts_.begin(), parts_.end());
    p.size_ = size_ + k;
    return p;
}

bool Partition::contains_part(int k) const {
    return std::find(parts_.begin(), parts_.end(), k) != parts_.end();
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.parts_ <=> b.parts_;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::vector<Partition> pbw_basis(int level) {
    if (level < 0) throw std::invalid_argument("negative level");
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            current.push_back(k);
            rec(remaining - k, k);
            current.pop_back();
        }
    };
    rec(level, level);
    return out;
}

std::size_t partition_count(int level) {
    if (level < 0) return 0;
    std::vector<std::size_t> p(static_cast<std::size_t>(level) + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= level; ++n) {
        long long acc = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            const long long sign = (k % 2 == 1) ? 1 : -1;
            acc += sign * static_cast<long long>(p[n - g1]);
            if (g2 <= n) acc += sign * static_cast<long long>(p[n - g2]);
        }
        p[n] = static_cast<std::size_t>(acc);
    }
    return p[level];
}

EnvElem::EnvElem(const Rat& scalar) {
    if (!scalar.is_zero()) terms_.emplace(Partition(), scalar);
}

EnvElem::EnvElem(const Partition& p, const Rat& coeff) {
    if (!coeff.is_zero()) terms_.emplace(p, coeff);
}

EnvElem EnvElem::generator(int k) { return EnvElem(Partition{k}); }

Rat EnvElem::coeff(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rat(0) : it->second;
}

void EnvElem::add(const Partition& p, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool EnvElem::is_homogeneous() const {
    if (terms_.empty()) return true;
    return terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

int EnvElem::degree() const {
    if (terms_.empty() || !is_homogeneous()) {
        throw std::logic_error("degree of a zero or inhomogeneous element");
    }
    return -terms_.begin()->first.size();
}

std::size_t EnvElem::max_length() const {
    std::size_t r = 0;
    for (const auto& [p, c] : terms_) r = std::max(r, p.length());
    return r;
}

EnvElem& EnvElem::operator+=(const EnvElem& o) {
    for (const auto& [p, c] : o.terms_) add(p, c);
    return *this;
}

EnvElem& EnvElem::operator-=(const EnvElem& o) {
    for (const auto& [p, c] : o.terms_) add(p, -c);
    return *this;
}

EnvElem& EnvElem::operator*=(const Rat& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [p, c] : terms_) c *= s;
    return *this;
}

EnvElem EnvElem::operator-() const { return *this * Rat(-1); }

namespace {

std::string monomial_str(const Partition& p) {
    std::ostringstream os;
    const auto parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (i) os << '*';
        os << "d(-" << parts[i] << ')';
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

}  // namespace

std::string EnvElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rat mag = negative ? -c : c;
        if (p.empty()) {
            os << mag.str();
        } else if (mag == Rat(1)) {
            os << monomial_str(p);
        } else {
            os << mag.str() << '*' << monomial_str(p);
        }
    }
    return os.str();
}

BracketTerm bracket(int m, int n) {
    BracketTerm t;
    t.coefficient = Rat(n - m);
    t.index = m + n;
    if (n == -m) {
        const long long mm = m;
        t.central = Rat(static_cast<long>(mm * mm * mm - mm)) / Rat(12);
    }
    return t;
}

LieElem LieElem::generator(int m) {
    LieElem x;
    x.d.emplace(m, Rat(1));
    return x;
}

bool LieElem::is_zero() const { return d.empty() && central.is_zero(); }

LieElem& LieElem::operator+=(const LieElem& o) {
    for (const auto& [k, c] : o.d) {
        auto [it, inserted] = d.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) d.erase(it);
        }
    }
    central += o.central;
    return *this;
}

LieElem lie_bracket(const LieElem& x, const LieElem& y) {
    LieElem out;
    for (const auto& [m, a] : x.d) {
        for (const auto& [n, b] : y.d) {
            const BracketTerm t = bracket(m, n);
            LieElem piece;
            const Rat s = a * b;
            if (!t.coefficient.is_zero()) piece.d.emplace(t.index, s * t.coefficient);
            piece.central = s * t.central;
            out += piece;
        }
    }
    return out;
}

namespace {

using MemoKey = std::pair<int, Partition>;

const EnvElem& left_multiply_monomial(int k, const Partition& p) {
    thread_local std::map<MemoKey, EnvElem> memo;
    MemoKey key{k, p};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    EnvElem result;
    if (p.empty() || k >= p.leading()) {
        result = EnvElem(p.prepend(k));
    } else {
        // d_{-k} d_{-m} R = d_{-m} (d_{-k} R) + (k - m) d_{-(k+m)} R
        const int m = p.leading();
        const Partition rest = p.tail();
        const EnvElem inner = left_multiply_monomial(k, rest);
        for (const auto& [q, c] : inner.terms()) {
            const EnvElem& moved = left_multiply_monomial(m, q);
            result += moved * c;
        }
        result += left_multiply_monomial(k + m, rest) * Rat(k - m);
    }
    return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

EnvElem left_multiply(int k, const EnvElem& x) {
    if (k < 1) throw std::invalid_argument("left_multiply expects a lowering index k >= 1");
    EnvElem out;
    for (const auto& [p, c] : x.terms()) out += left_multiply_monomial(k, p) * c;
    return out;
}

EnvElem multiply(const EnvElem& x, const EnvElem& y) {
    EnvElem out;
    for (const auto& [p, c] : x.terms()) {
        // d_{-k_r} ... d_{-k_1} y: apply the rightmost factor first.
        EnvElem acc = y * c;
        const auto parts = p.parts();
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) acc = left_multiply(*it, acc);
        out += acc;
    }
    return out;
}

EnvElem normal_order(std::span<const int> word) {
    for (int k : word) {
        if (k < 1) throw std::invalid_argument("word entries must be lowering indices >= 1");
    }
    std::map<std::vector<int>, Rat> pending;
    pending.emplace(std::vector<int>(word.begin(), word.end()), Rat(1));
    EnvElem out;
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        std::vector<int> w = std::move(node.key());
        const Rat c = node.mapped();
        if (c.is_zero()) continue;
        std::size_t i = 0;
        while (i + 1 < w.size() && w[i] >= w[i + 1]) ++i;
        if (i + 1 >= w.size()) {
            out.add(Partition(w), c);
            continue;
        }
        // d_{-a} d_{-b} = d_{-b} d_{-a} + (a - b) d_{-(a+b)}
        const int a = w[i];
        const int b = w[i + 1];
        std::vector<int> contracted;
        contracted.reserve(w.size() - 1);
        contracted.insert(contracted.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        contracted.push_back(a + b);
        contracted.insert(contracted.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 2, w.end());
        std::swap(w[i], w[i + 1]);
        pending[std::move(w)] += c;
        pending[std::move(contracted)] += c * Rat(a - b);
    }
    return out;
}

}  // namespace virasoro
