#pragma once

// Clebsch-Gordan coefficients C^{M'',alpha}_{M,M'} for one irrep S'' in S x S'.
//
// The construction runs in two stages:
//  1. Highest-weight state. The coefficients of |H'',alpha> are the null space
//     of the raising operators of the product space restricted to pairs
//     (M, M') with W(M) + W(M') = W(H''). The null space has one vector per
//     outer multiplicity; its reduced row echelon form followed by top-down
//     Gram-Schmidt fixes the multiplicity basis and the signs.
//  2. Lower states. P-weight levels of S'' are visited in order of decreasing
//     height. For each level, every parent |M''+M^{k,l}> is lowered once by
//     J_-^(l) inside S'' and inside the product space; the overdetermined
//     system relating the two sides is solved by least squares.
//
// The target S'' is used with the box count of S plus S' (e.g. (3,2,1)
// rather than (2,1,0)) so that p-weights of product states add literally.

#include "clebsch/algebra.hpp"
#include "clebsch/linalg.hpp"
#include "clebsch/littlewood.hpp"
#include "clebsch/patterns.hpp"
#include "clebsch/weights.hpp"

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace clebsch {

inline constexpr double kReportZero = 1e-11;
inline constexpr double kDescentResidual = 1e-8;

struct ProductPair {
    std::int64_t q;   // state of S
    std::int64_t qp;  // state of S'

    friend auto operator<=>(const ProductPair&, const ProductPair&) = default;
    friend bool operator==(const ProductPair&, const ProductPair&) = default;
};

// Product states |M x M'> with W(M) + W(M') == target, Q-major then Q'-minor.
// A target whose box count differs from that of S plus S' by a multiple of
// N is shifted to match first.
inline std::vector<ProductPair> candidate_pairs(const IrrepBasis& s, const IrrepBasis& s2, PWeight target) {
    const int n = s.rank();
    if (s2.rank() != n || target.rank() != n) throw rank_mismatch("candidate_pairs: rank mismatch");
    int have = 0;
    for (int w : target.entries) have += w;
    const int excess = s.irrep().box_count() + s2.irrep().box_count() - have;
    if (excess % n != 0) return {};
    for (int& w : target.entries) w += excess / n;

    std::vector<ProductPair> pairs;
    for (std::int64_t q = 1; q <= s.dimension(); ++q) {
        for (std::int64_t qp : s2.states_with_weight(target - s.weight_of(q))) pairs.push_back({q, qp});
    }
    return pairs;
}

inline std::vector<ProductPair> candidate_pairs(const IWeight& s, const IWeight& s2, const PWeight& target) {
    return candidate_pairs(IrrepBasis(s), IrrepBasis(s2), target);
}

namespace detail {

inline std::size_t column_of(const std::vector<ProductPair>& pairs, const ProductPair& p) {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
    if (it == pairs.end() || *it != p) {
        throw consistency_error("product state outside the expected weight space");
    }
    return static_cast<std::size_t>(it - pairs.begin());
}

// Applies (J^(l) x 1 + 1 x J^(l)) with J = J_+ (delta = +1) or J_- (delta = -1)
// to the product state (q, qp), calling emit(image, matrix element).
template <typename Emit>
void product_ladder(const IrrepBasis& s, const IrrepBasis& s2, const ProductPair& pq, int l, int delta, Emit&& emit) {
    const GTPattern& m = s.pattern(pq.q);
    const GTPattern& mp = s2.pattern(pq.qp);
    for (int k = 1; k <= l; ++k) {
        if (auto t = shifted(m, k, l, delta)) {
            const double v = delta > 0 ? raising_element(m, k, l) : lowering_element(m, k, l);
            emit(ProductPair{s.index_of(*t), pq.qp}, v);
        }
        if (auto t = shifted(mp, k, l, delta)) {
            const double v = delta > 0 ? raising_element(mp, k, l) : lowering_element(mp, k, l);
            emit(ProductPair{pq.q, s2.index_of(*t)}, v);
        }
    }
}

} // namespace detail

// Homogeneous system sum_c C_c (J_+^(l) x 1 + 1 x J_+^(l)) |pair_c> = 0 for all
// l: one row per product state reached, one column per candidate pair.
struct HighestWeightSystem {
    std::vector<ProductPair> pairs;
    linalg::DenseMatrix matrix;
};

inline HighestWeightSystem highest_weight_system(const IrrepBasis& s, const IrrepBasis& s2, const IWeight& target) {
    HighestWeightSystem sys{candidate_pairs(s, s2, as_pweight(target)), {}};
    std::map<ProductPair, std::size_t> rows;
    std::vector<std::tuple<std::size_t, std::size_t, double>> triplets;
    for (std::size_t c = 0; c < sys.pairs.size(); ++c) {
        for (int l = 1; l < s.rank(); ++l) {
            detail::product_ladder(s, s2, sys.pairs[c], l, +1, [&](const ProductPair& image, double v) {
                auto [it, inserted] = rows.try_emplace(image, rows.size());
                triplets.emplace_back(it->second, c, v);
            });
        }
    }
    sys.matrix = linalg::DenseMatrix(rows.size(), sys.pairs.size());
    for (auto [r, c, v] : triplets) sys.matrix(r, c) += v;
    return sys;
}

// Coefficients of |H'',alpha>: row alpha-1 over the candidate pairs.
struct HighestWeightSolution {
    std::vector<ProductPair> pairs;
    linalg::DenseMatrix coefficients;
};

inline HighestWeightSolution highest_weight_cgc(const IrrepBasis& s, const IrrepBasis& s2, const IWeight& aligned_target,
                                                int multiplicity) {
    auto sys = highest_weight_system(s, s2, aligned_target);
    linalg::DenseMatrix kernel = linalg::null_space(sys.matrix);
    if (static_cast<int>(kernel.rows()) != multiplicity) {
        throw consistency_error("highest-weight system for " + to_string(aligned_target) + " has " +
                                std::to_string(kernel.rows()) + " solutions, expected outer multiplicity " +
                                std::to_string(multiplicity));
    }
    linalg::DenseMatrix normal = linalg::orthonormalize_rows(linalg::rref(std::move(kernel)));
    return {std::move(sys.pairs), std::move(normal)};
}

inline HighestWeightSolution highest_weight_cgc(const IWeight& s, const IWeight& s2, const IWeight& s2pp) {
    const int mult = decompose(s, s2).multiplicity(s2pp);
    if (mult == 0) {
        throw std::domain_error(to_string(normalize(s2pp)) + " does not occur in " + to_string(s) + " x " +
                                to_string(s2));
    }
    return highest_weight_cgc(IrrepBasis(s), IrrepBasis(s2), aligned_target(s, s2, s2pp), mult);
}

// Coefficients of all states of S'' sharing one p-weight.
struct LevelCoefficients {
    PWeight weight;
    std::vector<std::int64_t> states;          // Q'' ascending
    std::vector<ProductPair> pairs;            // candidate pairs of this weight
    std::vector<linalg::DenseMatrix> alphas;   // per alpha: states x pairs

    std::size_t row_of(std::int64_t qpp) const {
        auto it = std::lower_bound(states.begin(), states.end(), qpp);
        if (it == states.end() || *it != qpp) throw std::out_of_range("state not on this level");
        return static_cast<std::size_t>(it - states.begin());
    }
};

struct LevelSolution {
    LevelCoefficients level;
    std::size_t equation_count = 0;
    double residual = 0.0;  // largest least-squares residual over alpha
};

// Solves for every state of weight w from the already known parent levels.
// One equation group per (M'', k, l) with M'' + M^{k,l} a valid pattern:
//   sum_{M'''} <M'''|J_-^(l)|M''+M^{k,l}> C^{M'''} = (J_-^(l) x 1 + 1 x J_-^(l)) C^{M''+M^{k,l}}.
inline LevelSolution descend_level(const IrrepBasis& s, const IrrepBasis& s2, const IrrepBasis& spp,
                                   const std::map<PWeight, LevelCoefficients>& known, const PWeight& w,
                                   double residual_tol = kDescentResidual) {
    const int n = spp.rank();
    LevelSolution out;
    LevelCoefficients& lvl = out.level;
    lvl.weight = w;
    lvl.states = spp.states_with_weight(w);
    lvl.pairs = candidate_pairs(s, s2, w);
    if (lvl.states.empty()) throw std::invalid_argument("no state of S'' has weight " + to_string(w));

    struct Equation {
        std::int64_t parent;
        int l;
    };
    std::vector<Equation> equations;
    for (std::int64_t qpp : lvl.states) {
        const GTPattern& m = spp.pattern(qpp);
        for (int l = 1; l < n; ++l) {
            for (int k = 1; k <= l; ++k) {
                if (auto p = shifted(m, k, l, +1)) equations.push_back({spp.index_of(*p), l});
            }
        }
    }
    out.equation_count = equations.size();
    if (equations.empty()) throw consistency_error("weight " + to_string(w) + " has no parent states");

    linalg::DenseMatrix lhs(equations.size(), lvl.states.size());
    for (std::size_t e = 0; e < equations.size(); ++e) {
        const GTPattern& parent = spp.pattern(equations[e].parent);
        const int l = equations[e].l;
        for (int k = 1; k <= l; ++k) {
            if (auto t = shifted(parent, k, l, -1)) {
                lhs(e, lvl.row_of(spp.index_of(*t))) += lowering_element(parent, k, l);
            }
        }
    }

    const std::size_t alpha_count = known.begin()->second.alphas.size();
    for (std::size_t a = 0; a < alpha_count; ++a) {
        linalg::DenseMatrix rhs(equations.size(), lvl.pairs.size());
        for (std::size_t e = 0; e < equations.size(); ++e) {
            const auto& parent_level = known.at(spp.weight_of(equations[e].parent));
            const auto coeffs = parent_level.alphas[a].row(parent_level.row_of(equations[e].parent));
            for (std::size_t c = 0; c < parent_level.pairs.size(); ++c) {
                const double coeff = coeffs[c];
                if (coeff == 0.0) continue;
                detail::product_ladder(s, s2, parent_level.pairs[c], equations[e].l, -1,
                                       [&](const ProductPair& image, double v) {
                                           rhs(e, detail::column_of(lvl.pairs, image)) += coeff * v;
                                       });
            }
        }
        auto solved = linalg::least_squares(lhs, rhs);
        if (!(solved.residual < residual_tol)) {
            throw consistency_error("lowering to weight " + to_string(w) + " is inconsistent (residual " +
                                    std::to_string(solved.residual) + ")");
        }
        out.residual = std::max(out.residual, solved.residual);
        lvl.alphas.push_back(std::move(solved.x));
    }
    return out;
}

// Sum_l (N - l) w_l; every lowering step decreases it by exactly one.
inline std::int64_t height(const PWeight& w) {
    std::int64_t h = 0;
    for (int l = 1; l <= w.rank(); ++l) h += static_cast<std::int64_t>(w.rank() - l) * w(l);
    return h;
}

// C^{M'',alpha}_{M,M'} for one target irrep, stored sparsely per (alpha, Q'').
class CGCTensor {
public:
    struct Coefficient {
        std::int64_t q;
        std::int64_t qp;
        double value;

        friend bool operator==(const Coefficient&, const Coefficient&) = default;
    };

    CGCTensor(IWeight s, IWeight s2, IWeight aligned_target, int alpha_count)
        : s_(std::move(s)), s2_(std::move(s2)), aligned_(std::move(aligned_target)), alpha_count_(alpha_count),
          dim_s_(dimension(s_)), dim_s2_(dimension(s2_)), dim_spp_(dimension(aligned_)),
          rows_(static_cast<std::size_t>(alpha_count) * static_cast<std::size_t>(dim_spp_)) {}

    const IWeight& left() const { return s_; }
    const IWeight& right() const { return s2_; }
    IWeight target() const { return normalize(aligned_); }
    const IWeight& aligned_target() const { return aligned_; }
    int alpha_count() const { return alpha_count_; }
    std::int64_t dim_left() const { return dim_s_; }
    std::int64_t dim_right() const { return dim_s2_; }
    std::int64_t dim_target() const { return dim_spp_; }

    // alpha = 1..alpha_count, qpp = 1..dim(S''), sorted by (q, qp)
    const std::vector<Coefficient>& row(int alpha, std::int64_t qpp) const { return rows_.at(slot(alpha, qpp)); }

    double operator()(int alpha, std::int64_t qpp, std::int64_t q, std::int64_t qp) const {
        const auto& r = row(alpha, qpp);
        auto it = std::lower_bound(r.begin(), r.end(), std::pair{q, qp}, [](const Coefficient& c, const auto& key) {
            return std::pair{c.q, c.qp} < key;
        });
        return it != r.end() && it->q == q && it->qp == qp ? it->value : 0.0;
    }

    // Overwrites one coefficient; zero removes it.
    void set(int alpha, std::int64_t qpp, std::int64_t q, std::int64_t qp, double value) {
        if (q < 1 || q > dim_s_ || qp < 1 || qp > dim_s2_) throw std::out_of_range("product state index out of range");
        auto& r = rows_.at(slot(alpha, qpp));
        auto it = std::lower_bound(r.begin(), r.end(), std::pair{q, qp}, [](const Coefficient& c, const auto& key) {
            return std::pair{c.q, c.qp} < key;
        });
        const bool present = it != r.end() && it->q == q && it->qp == qp;
        if (value == 0.0) {
            if (present) r.erase(it);
        } else if (present) {
            it->value = value;
        } else {
            r.insert(it, Coefficient{q, qp, value});
        }
    }

    std::int64_t nonzero_count() const {
        std::int64_t c = 0;
        for (const auto& r : rows_) c += static_cast<std::int64_t>(r.size());
        return c;
    }

private:
    std::size_t slot(int alpha, std::int64_t qpp) const {
        if (alpha < 1 || alpha > alpha_count_ || qpp < 1 || qpp > dim_spp_) {
            throw std::out_of_range("coefficient index (alpha, Q'') out of range");
        }
        return static_cast<std::size_t>(alpha - 1) * static_cast<std::size_t>(dim_spp_) + static_cast<std::size_t>(qpp - 1);
    }

    IWeight s_, s2_, aligned_;
    int alpha_count_;
    std::int64_t dim_s_, dim_s2_, dim_spp_;
    std::vector<std::vector<Coefficient>> rows_;
};

// Levels of S'' in processing order: decreasing height, ties by decreasing weight.
inline std::vector<PWeight> descent_order(const IrrepBasis& spp) {
    std::vector<PWeight> order;
    for (const auto& [w, states] : spp.weights()) order.push_back(w);
    std::sort(order.begin(), order.end(), [](const PWeight& a, const PWeight& b) {
        const auto ha = height(a), hb = height(b);
        return ha != hb ? ha > hb : a > b;
    });
    return order;
}

inline CGCTensor compute_tensor(const IrrepBasis& s, const IrrepBasis& s2, const IWeight& s2pp, int multiplicity) {
    const IWeight aligned = aligned_target(s.irrep(), s2.irrep(), s2pp);
    const IrrepBasis spp(aligned);
    const auto hw = highest_weight_cgc(s, s2, aligned, multiplicity);

    std::map<PWeight, LevelCoefficients> known;
    {
        LevelCoefficients top{as_pweight(aligned), {spp.dimension()}, hw.pairs, {}};
        for (std::size_t a = 0; a < hw.coefficients.rows(); ++a) {
            linalg::DenseMatrix row(1, hw.pairs.size());
            for (std::size_t c = 0; c < hw.pairs.size(); ++c) row(0, c) = hw.coefficients(a, c);
            top.alphas.push_back(std::move(row));
        }
        known.emplace(top.weight, std::move(top));
    }
    const auto order = descent_order(spp);
    for (std::size_t i = 1; i < order.size(); ++i) {
        auto sol = descend_level(s, s2, spp, known, order[i]);
        known.emplace(order[i], std::move(sol.level));
    }

    CGCTensor tensor(s.irrep(), s2.irrep(), aligned, multiplicity);
    for (const auto& [w, lvl] : known) {
        for (std::size_t a = 0; a < lvl.alphas.size(); ++a) {
            for (std::size_t r = 0; r < lvl.states.size(); ++r) {
                for (std::size_t c = 0; c < lvl.pairs.size(); ++c) {
                    const double v = lvl.alphas[a](r, c);
                    if (std::abs(v) >= kReportZero) {
                        tensor.set(static_cast<int>(a + 1), lvl.states[r], lvl.pairs[c].q, lvl.pairs[c].qp, v);
                    }
                }
            }
        }
    }
    return tensor;
}

inline CGCTensor compute_tensor(const IWeight& s, const IWeight& s2, const IWeight& s2pp) {
    const int mult = decompose(s, s2).multiplicity(s2pp);
    if (mult == 0) {
        throw std::domain_error(to_string(normalize(s2pp)) + " does not occur in " + to_string(s) + " x " +
                                to_string(s2));
    }
    return compute_tensor(IrrepBasis(s), IrrepBasis(s2), s2pp, mult);
}

// Tensors for every irrep of the decomposition, in decomposition order.
inline std::vector<CGCTensor> compute_all(const IWeight& s, const IWeight& s2, const Decomposition& d) {
    const IrrepBasis bs(s), bs2(s2);
    std::vector<CGCTensor> out;
    for (const auto& term : d.terms()) out.push_back(compute_tensor(bs, bs2, term.irrep, term.multiplicity));
    return out;
}

inline std::vector<CGCTensor> compute_all(const IWeight& s, const IWeight& s2) {
    return compute_all(s, s2, decompose(s, s2));
}

} // namespace clebsch
