#pragma once

// Action of the sl(N) generators J_z^(l), J_+^(l), J_-^(l) (l = 1..N-1) in the
// Gelfand-Tsetlin basis of one irrep.

#include "clebsch/detail.hpp"
#include "clebsch/linalg.hpp"
#include "clebsch/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace clebsch {

enum class Direction { lowering, raising, diagonal };

inline const char* to_string(Direction d) {
    switch (d) {
    case Direction::lowering: return "lowering";
    case Direction::raising: return "raising";
    case Direction::diagonal: return "diagonal";
    }
    return "?";
}

namespace detail {

inline void check_ladder_indices(const GTPattern& m, int k, int l) {
    if (l < 1 || l > m.rank() - 1 || k < 1 || k > l) {
        throw std::out_of_range("ladder indices (k=" + std::to_string(k) + ", l=" + std::to_string(l) +
                                ") outside 1 <= k <= l <= " + std::to_string(m.rank() - 1));
    }
}

// sqrt(-num/den) with both products accumulated exactly.
inline double signed_root(std::int64_t num, std::int64_t den) {
    if (den == 0) throw consistency_error("ladder matrix element with vanishing denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (num > 0) throw consistency_error("ladder matrix element with negative radicand");
    return std::sqrt(static_cast<double>(-num) / static_cast<double>(den));
}

} // namespace detail

// <M - M^{k,l}| J_-^(l) |M>; zero when M - M^{k,l} is not a valid pattern.
inline double lowering_element(const GTPattern& m, int k, int l) {
    detail::check_ladder_indices(m, k, l);
    if (!shifted(m, k, l, -1)) return 0.0;
    const std::int64_t mkl = m(k, l);
    std::int64_t num = 1, den = 1;
    for (int kp = 1; kp <= l + 1; ++kp) num = detail::checked_mul(num, m(kp, l + 1) - mkl + k - kp + 1);
    for (int kp = 1; kp <= l - 1; ++kp) num = detail::checked_mul(num, m(kp, l - 1) - mkl + k - kp);
    for (int kp = 1; kp <= l; ++kp) {
        if (kp == k) continue;
        den = detail::checked_mul(den, m(kp, l) - mkl + k - kp + 1);
        den = detail::checked_mul(den, m(kp, l) - mkl + k - kp);
    }
    return detail::signed_root(num, den);
}

// <M + M^{k,l}| J_+^(l) |M>; zero when M + M^{k,l} is not a valid pattern.
inline double raising_element(const GTPattern& m, int k, int l) {
    detail::check_ladder_indices(m, k, l);
    if (!shifted(m, k, l, +1)) return 0.0;
    const std::int64_t mkl = m(k, l);
    std::int64_t num = 1, den = 1;
    for (int kp = 1; kp <= l + 1; ++kp) num = detail::checked_mul(num, m(kp, l + 1) - mkl + k - kp);
    for (int kp = 1; kp <= l - 1; ++kp) num = detail::checked_mul(num, m(kp, l - 1) - mkl + k - kp - 1);
    for (int kp = 1; kp <= l; ++kp) {
        if (kp == k) continue;
        den = detail::checked_mul(den, m(kp, l) - mkl + k - kp);
        den = detail::checked_mul(den, m(kp, l) - mkl + k - kp - 1);
    }
    return detail::signed_root(num, den);
}

// Eigenvalue of J_z^(l) on |M>.
inline double diagonal_element(const GTPattern& m, int l) {
    if (l < 1 || l > m.rank() - 1) throw std::out_of_range("diagonal generator index out of range");
    return 0.5 * (2 * m.row_sum(l) - m.row_sum(l + 1) - m.row_sum(l - 1));
}

// All patterns of one irrep with lookup by pattern and by p-weight.
class IrrepBasis {
public:
    explicit IrrepBasis(IWeight irrep) : irrep_(std::move(irrep)), patterns_(enumerate(irrep_)) {
        for (std::size_t i = 0; i < patterns_.size(); ++i) {
            const auto q = static_cast<std::int64_t>(i + 1);
            lookup_.emplace(patterns_[i].raw(), q);
            state_weights_.push_back(pweight(patterns_[i]));
            by_weight_[state_weights_.back()].push_back(q);
        }
    }

    const IWeight& irrep() const { return irrep_; }
    int rank() const { return irrep_.rank(); }
    std::int64_t dimension() const { return static_cast<std::int64_t>(patterns_.size()); }

    // q = 1..dimension()
    const GTPattern& pattern(std::int64_t q) const { return patterns_.at(static_cast<std::size_t>(q - 1)); }
    const std::vector<GTPattern>& patterns() const { return patterns_; }
    const PWeight& weight_of(std::int64_t q) const { return state_weights_.at(static_cast<std::size_t>(q - 1)); }

    std::int64_t index_of(const GTPattern& m) const {
        auto it = lookup_.find(m.raw());
        if (it == lookup_.end()) throw std::invalid_argument("pattern does not belong to irrep " + to_string(irrep_));
        return it->second;
    }

    // indices of all states with p-weight w, ascending; empty if none
    const std::vector<std::int64_t>& states_with_weight(const PWeight& w) const {
        static const std::vector<std::int64_t> none;
        auto it = by_weight_.find(w);
        return it == by_weight_.end() ? none : it->second;
    }

    const std::map<PWeight, std::vector<std::int64_t>>& weights() const { return by_weight_; }

private:
    IWeight irrep_;
    std::vector<GTPattern> patterns_;
    std::vector<PWeight> state_weights_;
    std::map<std::vector<int>, std::int64_t> lookup_;
    std::map<PWeight, std::vector<std::int64_t>> by_weight_;
};

struct MatrixEntry {
    std::int64_t row;  // Q of the image state
    std::int64_t col;  // Q of the source state
    double value;

    friend bool operator==(const MatrixEntry&, const MatrixEntry&) = default;
};

// Sparse dim x dim matrix of one generator, entries sorted by column then row.
class OperatorMatrix {
public:
    OperatorMatrix(IWeight irrep, int l, Direction direction, std::int64_t dim, std::vector<MatrixEntry> entries)
        : irrep_(std::move(irrep)), l_(l), direction_(direction), dim_(dim), entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(),
                  [](const MatrixEntry& a, const MatrixEntry& b) { return std::tie(a.col, a.row) < std::tie(b.col, b.row); });
    }

    const IWeight& irrep() const { return irrep_; }
    int l() const { return l_; }
    Direction direction() const { return direction_; }
    std::int64_t dimension() const { return dim_; }
    const std::vector<MatrixEntry>& entries() const { return entries_; }

    double operator()(std::int64_t row, std::int64_t col) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), MatrixEntry{row, col, 0.0},
                                   [](const MatrixEntry& a, const MatrixEntry& b) {
                                       return std::tie(a.col, a.row) < std::tie(b.col, b.row);
                                   });
        return it != entries_.end() && it->row == row && it->col == col ? it->value : 0.0;
    }

    linalg::DenseMatrix to_dense() const {
        linalg::DenseMatrix d(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
        for (const auto& e : entries_) d(static_cast<std::size_t>(e.row - 1), static_cast<std::size_t>(e.col - 1)) += e.value;
        return d;
    }

private:
    IWeight irrep_;
    int l_;
    Direction direction_;
    std::int64_t dim_;
    std::vector<MatrixEntry> entries_;
};

inline OperatorMatrix operator_matrix(const IrrepBasis& basis, int l, Direction direction) {
    const int n = basis.rank();
    if (l < 1 || l > n - 1) throw std::out_of_range("generator index l outside 1..N-1");
    std::vector<MatrixEntry> entries;
    for (std::int64_t q = 1; q <= basis.dimension(); ++q) {
        const GTPattern& m = basis.pattern(q);
        if (direction == Direction::diagonal) {
            const double v = diagonal_element(m, l);
            if (v != 0.0) entries.push_back({q, q, v});
            continue;
        }
        const int delta = direction == Direction::raising ? +1 : -1;
        for (int k = 1; k <= l; ++k) {
            auto target = shifted(m, k, l, delta);
            if (!target) continue;
            const double v = direction == Direction::raising ? raising_element(m, k, l) : lowering_element(m, k, l);
            if (v != 0.0) entries.push_back({basis.index_of(*target), q, v});
        }
    }
    return OperatorMatrix(basis.irrep(), l, direction, basis.dimension(), std::move(entries));
}

inline OperatorMatrix operator_matrix(const IWeight& s, int l, Direction direction) {
    return operator_matrix(IrrepBasis(s), l, direction);
}

// p-weight reached by J_+^(l) (w_l + 1, w_{l+1} - 1) or J_-^(l) (the reverse).
// nullopt when a component would become negative: no states carry that weight.
inline std::optional<PWeight> weight_shift(PWeight w, int l, Direction direction) {
    if (l < 1 || l > w.rank() - 1) throw std::out_of_range("generator index l outside 1..N-1");
    if (direction == Direction::diagonal) return w;
    const int delta = direction == Direction::raising ? +1 : -1;
    auto& e = w.entries;
    e[static_cast<std::size_t>(l - 1)] += delta;
    e[static_cast<std::size_t>(l)] -= delta;
    if (e[static_cast<std::size_t>(l - 1)] < 0 || e[static_cast<std::size_t>(l)] < 0) return std::nullopt;
    return w;
}

} // namespace clebsch
