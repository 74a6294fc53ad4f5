#pragma once

// Consistency checks over a complete set of coefficient tensors of S x S':
// unitarity, the z-weight selection rule, block-diagonalization of the
// generators and the dimension sum rule.

#include "clebsch/algebra.hpp"
#include "clebsch/coefficients.hpp"
#include "clebsch/linalg.hpp"
#include "clebsch/littlewood.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace clebsch {

struct CheckReport {
    std::string name;
    bool passed = false;
    double deviation = 0.0;  // largest absolute deviation found
    std::string detail;      // offending index tuple or identity, if any
};

inline std::string format_report(const CheckReport& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " max_dev=" << r.deviation;
    if (!r.detail.empty()) os << " " << r.detail;
    return os.str();
}

namespace detail {

inline void require_complete(std::span<const CGCTensor> tensors) {
    if (tensors.empty()) throw std::invalid_argument("no coefficient tensors given");
    const auto& first = tensors.front();
    std::int64_t rows = 0;
    for (const auto& t : tensors) {
        if (t.left() != first.left() || t.right() != first.right()) {
            throw std::invalid_argument("tensors belong to different products");
        }
        rows += t.alpha_count() * t.dim_target();
    }
    if (rows != first.dim_left() * first.dim_right()) {
        throw std::invalid_argument("incomplete set of tensors: " + std::to_string(rows) + " states of " +
                                    std::to_string(first.dim_left() * first.dim_right()));
    }
}

struct RowLabel {
    std::size_t tensor;
    int alpha;
    std::int64_t qpp;
};

// Rows (S'', alpha, Q'') in tensor order, columns (Q-1)*dim(S') + Q'-1.
inline linalg::DenseMatrix coefficient_matrix(std::span<const CGCTensor> tensors, std::vector<RowLabel>* labels = nullptr) {
    require_complete(tensors);
    const auto d2 = static_cast<std::size_t>(tensors.front().dim_right());
    const auto total = static_cast<std::size_t>(tensors.front().dim_left()) * d2;
    linalg::DenseMatrix c(total, total);
    std::size_t r = 0;
    for (std::size_t t = 0; t < tensors.size(); ++t) {
        const auto& tensor = tensors[t];
        for (int a = 1; a <= tensor.alpha_count(); ++a) {
            for (std::int64_t qpp = 1; qpp <= tensor.dim_target(); ++qpp, ++r) {
                for (const auto& e : tensor.row(a, qpp)) {
                    c(r, static_cast<std::size_t>(e.q - 1) * d2 + static_cast<std::size_t>(e.qp - 1)) = e.value;
                }
                if (labels) labels->push_back({t, a, qpp});
            }
        }
    }
    return c;
}

inline double max_deviation(const linalg::DenseMatrix& a, const linalg::DenseMatrix& b, std::size_t* at_row = nullptr,
                            std::size_t* at_col = nullptr) {
    double dev = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const double d = std::abs(a(i, j) - b(i, j));
            if (d > dev || std::isnan(d)) {
                dev = std::isnan(d) ? INFINITY : d;
                if (at_row) *at_row = i;
                if (at_col) *at_col = j;
            }
        }
    }
    return dev;
}

// A x 1 + 1 x B on the composite index (Q-1)*dim(B) + Q'-1.
inline linalg::DenseMatrix kron_sum(const linalg::DenseMatrix& a, const linalg::DenseMatrix& b) {
    const std::size_t da = a.rows(), db = b.rows();
    linalg::DenseMatrix out(da * db, da * db);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            if (a(i, j) != 0.0)
                for (std::size_t k = 0; k < db; ++k) out(i * db + k, j * db + k) += a(i, j);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t k = 0; k < db; ++k)
            for (std::size_t m = 0; m < db; ++m)
                if (b(k, m) != 0.0) out(i * db + k, i * db + m) += b(k, m);
    return out;
}

} // namespace detail

// Max deviation of C C^T and C^T C from the identity.
inline CheckReport check_orthonormality(std::span<const CGCTensor> tensors, double tol) {
    std::vector<detail::RowLabel> labels;
    const auto c = detail::coefficient_matrix(tensors, &labels);
    const auto id = linalg::DenseMatrix::identity(c.rows());
    std::size_t i = 0, j = 0, i2 = 0, j2 = 0;
    const double rows_dev = detail::max_deviation(c * c.transpose(), id, &i, &j);
    const double cols_dev = detail::max_deviation(c.transpose() * c, id, &i2, &j2);
    CheckReport r{"orthonormality", false, std::max(rows_dev, cols_dev), {}};
    r.passed = r.deviation < tol;
    if (!r.passed) {
        std::ostringstream os;
        if (rows_dev >= cols_dev) {
            const auto& a = labels[i];
            const auto& b = labels[j];
            os << "at rows (S''=" << to_string(tensors[a.tensor].target()) << ",alpha=" << a.alpha << ",Q''=" << a.qpp
               << ") x (S''=" << to_string(tensors[b.tensor].target()) << ",alpha=" << b.alpha << ",Q''=" << b.qpp << ")";
        } else {
            os << "at product columns " << i2 + 1 << " x " << j2 + 1;
        }
        r.detail = os.str();
    }
    return r;
}

// Every stored nonzero coefficient must satisfy W_z(M) + W_z(M') == W_z(M'').
inline CheckReport check_selection_rule(const CGCTensor& tensor) {
    const IrrepBasis s(tensor.left()), s2(tensor.right()), spp(tensor.aligned_target());
    CheckReport r{"selection_rule", true, 0.0, {}};
    for (int a = 1; a <= tensor.alpha_count(); ++a) {
        for (std::int64_t qpp = 1; qpp <= spp.dimension(); ++qpp) {
            const ZWeight target = zweight(spp.pattern(qpp));
            for (const auto& e : tensor.row(a, qpp)) {
                if (e.value == 0.0) continue;
                if (zweight(s.pattern(e.q)) + zweight(s2.pattern(e.qp)) != target) {
                    if (r.passed) {
                        std::ostringstream os;
                        os << "S''=" << to_string(tensor.target()) << " at (alpha=" << a << ",Q''=" << qpp
                           << ",Q=" << e.q << ",Q'=" << e.qp << ")";
                        r.detail = os.str();
                    }
                    r.passed = false;
                    r.deviation = std::max(r.deviation, std::abs(e.value));
                }
            }
        }
    }
    return r;
}

inline CheckReport check_selection_rule(std::span<const CGCTensor> tensors) {
    CheckReport total{"selection_rule", true, 0.0, {}};
    for (const auto& t : tensors) {
        auto r = check_selection_rule(t);
        if (!r.passed && total.passed) total.detail = r.detail;
        total.passed = total.passed && r.passed;
        total.deviation = std::max(total.deviation, r.deviation);
    }
    return total;
}

// For every l and J_-, J_+, J_z: C (A x 1 + 1 x A) C^T against the direct sum
// of the S'' matrices, blocks in decomposition order with alpha ascending.
inline CheckReport check_block_diagonalization(const Decomposition& decomposition, std::span<const CGCTensor> tensors,
                                               double tol) {
    std::size_t t = 0;
    for (const auto& term : decomposition.terms()) {
        if (t >= tensors.size() || compare(tensors[t].target(), term.irrep) != 0 ||
            tensors[t].alpha_count() != term.multiplicity) {
            throw std::invalid_argument("tensors do not follow the decomposition order");
        }
        ++t;
    }
    if (t != tensors.size()) throw std::invalid_argument("more tensors than decomposition terms");

    const auto c = detail::coefficient_matrix(tensors);
    const auto ct = c.transpose();
    const IrrepBasis s(tensors.front().left()), s2(tensors.front().right());
    std::vector<IrrepBasis> targets;
    for (const auto& tensor : tensors) targets.emplace_back(tensor.aligned_target());

    CheckReport r{"block_diagonalization", true, 0.0, {}};
    const int n = s.rank();
    for (int l = 1; l < n; ++l) {
        for (Direction dir : {Direction::lowering, Direction::raising, Direction::diagonal}) {
            const auto product = detail::kron_sum(operator_matrix(s, l, dir).to_dense(), operator_matrix(s2, l, dir).to_dense());
            linalg::DenseMatrix expected(c.rows(), c.rows());
            std::size_t offset = 0;
            for (std::size_t i = 0; i < tensors.size(); ++i) {
                const auto block = operator_matrix(targets[i], l, dir).to_dense();
                for (int a = 0; a < tensors[i].alpha_count(); ++a) {
                    for (std::size_t x = 0; x < block.rows(); ++x)
                        for (std::size_t y = 0; y < block.cols(); ++y) expected(offset + x, offset + y) = block(x, y);
                    offset += block.rows();
                }
            }
            std::size_t i = 0, j = 0;
            const double dev = detail::max_deviation(c * product * ct, expected, &i, &j);
            if (dev > r.deviation) {
                r.deviation = dev;
                std::ostringstream os;
                os << "l=" << l << " " << to_string(dir) << " at (" << i + 1 << "," << j + 1 << ")";
                r.detail = os.str();
            }
        }
    }
    r.passed = r.deviation < tol;
    if (r.passed) r.detail.clear();
    return r;
}

// dim(S) dim(S') == sum over terms of multiplicity * dim(S''), exactly.
inline CheckReport check_dimension_sum(const Decomposition& d) {
    const std::int64_t lhs = dimension(d.left()) * dimension(d.right());
    const std::int64_t rhs = d.summed_dimension();
    std::ostringstream os;
    os << dimension(d.left()) << " x " << dimension(d.right()) << " = " << lhs << " =";
    bool first = true;
    for (const auto& term : d.terms()) {
        for (int a = 0; a < term.multiplicity; ++a) {
            os << (first ? " " : " + ") << dimension(term.irrep);
            first = false;
        }
    }
    CheckReport r{"dimension_sum", lhs == rhs, static_cast<double>(lhs > rhs ? lhs - rhs : rhs - lhs), os.str()};
    return r;
}

// Full pipeline for S x S' followed by all four checks.
inline std::vector<CheckReport> verify_product(const IWeight& s, const IWeight& s2, double tol) {
    const auto d = decompose(s, s2);
    std::vector<CheckReport> reports;
    reports.push_back(check_dimension_sum(d));
    const auto tensors = compute_all(s, s2, d);
    reports.push_back(check_selection_rule(tensors));
    reports.push_back(check_orthonormality(tensors, tol));
    reports.push_back(check_block_diagonalization(d, tensors, tol));
    return reports;
}

} // namespace clebsch
