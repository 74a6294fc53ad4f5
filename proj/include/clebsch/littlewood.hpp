#pragma once

// Decomposition of a product of two irreps via the Littlewood-Richardson rule,
// phrased on the Gelfand-Tsetlin patterns of one factor.
//
// For each pattern M of the traversed factor, a trial vector t starts as the
// other factor's i-weight. Walking M diagonal by diagonal (m(1,N), m(1,N-1),
// ..., m(1,1), m(2,N), ..., m(N,N)), the number of l-boxes in tableau row k,
// b(k,l) = m(k,l) - m(k,l-1), is added to t_l. The pattern is discarded as
// soon as t_{l-1} < t_l; otherwise the final t is an irrep of the product.

#include "clebsch/patterns.hpp"
#include "clebsch/weights.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace clebsch {

struct DecompositionTerm {
    IWeight irrep;  // normalized
    int multiplicity;

    friend bool operator==(const DecompositionTerm&, const DecompositionTerm&) = default;
};

class Decomposition {
public:
    Decomposition(IWeight left, IWeight right, std::vector<DecompositionTerm> terms)
        : left_(std::move(left)), right_(std::move(right)), terms_(std::move(terms)) {}

    const IWeight& left() const { return left_; }
    const IWeight& right() const { return right_; }

    // sorted increasingly by compare(), no duplicates
    const std::vector<DecompositionTerm>& terms() const { return terms_; }

    int multiplicity(const IWeight& s) const {
        if (s.rank() != left_.rank()) throw rank_mismatch("irrep rank does not match the decomposition");
        for (const auto& t : terms_) {
            if (compare(t.irrep, s) == 0) return t.multiplicity;
        }
        return 0;
    }

    // Sum of multiplicity * dimension over all terms.
    std::int64_t summed_dimension() const {
        std::int64_t total = 0;
        for (const auto& t : terms_) {
            total = detail::checked_add(total, detail::checked_mul(t.multiplicity, dimension(t.irrep)));
        }
        return total;
    }

private:
    IWeight left_;
    IWeight right_;
    std::vector<DecompositionTerm> terms_;
};

// The trial vector after the initial value and after each visited entry.
struct LittlewoodTrace {
    GTPattern pattern;
    std::vector<std::vector<int>> steps;
    bool discarded = false;
    std::optional<IWeight> result;  // un-normalized final t when not discarded
};

inline LittlewoodTrace trace_pattern(const GTPattern& m, const IWeight& start) {
    const int n = m.rank();
    if (start.rank() != n) throw rank_mismatch("Littlewood-Richardson factors differ in rank");
    LittlewoodTrace trace{m, {}, false, std::nullopt};
    std::vector<int> t(start.entries().begin(), start.entries().end());
    trace.steps.push_back(t);
    for (int k = 1; k <= n; ++k) {
        for (int l = n; l >= k; --l) {
            const int below = l > k ? m(k, l - 1) : 0;
            t[static_cast<std::size_t>(l - 1)] += m(k, l) - below;
            trace.steps.push_back(t);
            if (l > 1 && t[static_cast<std::size_t>(l - 2)] < t[static_cast<std::size_t>(l - 1)]) {
                trace.discarded = true;
                return trace;
            }
        }
    }
    trace.result = IWeight(t);
    return trace;
}

// Traces every pattern of `traversed` (normalized first) against `start`.
inline std::vector<LittlewoodTrace> trace_littlewood_richardson(const IWeight& traversed, const IWeight& start) {
    if (traversed.rank() != start.rank()) throw rank_mismatch("Littlewood-Richardson factors differ in rank");
    std::vector<LittlewoodTrace> out;
    for (const auto& m : enumerate(normalize(traversed))) out.push_back(trace_pattern(m, start));
    return out;
}

inline Decomposition decompose(const IWeight& s, const IWeight& s2) {
    if (s.rank() != s2.rank()) {
        throw rank_mismatch("cannot decompose product of rank " + std::to_string(s.rank()) + " and rank " +
                            std::to_string(s2.rank()) + " irreps");
    }
    // traverse the factor with fewer states; ties go to the left one
    const bool swap = dimension(s2) < dimension(s);
    const IWeight& traversed = swap ? s2 : s;
    const IWeight& other = swap ? s : s2;
    std::map<IWeight, int, IWeightLess> counts;
    for (const auto& tr : trace_littlewood_richardson(traversed, other)) {
        if (tr.result) ++counts[normalize(*tr.result)];
    }
    std::vector<DecompositionTerm> terms;
    for (const auto& [w, c] : counts) terms.push_back({w, c});
    return Decomposition(s, s2, std::move(terms));
}

inline int multiplicity(const Decomposition& d, const IWeight& s) { return d.multiplicity(s); }

// The un-normalized label of s2pp whose box count equals that of s plus s2,
// so that p-weights of the product add literally. Throws when no shift of
// s2pp has the right box count.
inline IWeight aligned_target(const IWeight& s, const IWeight& s2, const IWeight& s2pp) {
    const int n = s.rank();
    if (s2.rank() != n || s2pp.rank() != n) throw rank_mismatch("irreps differ in rank");
    const int excess = s.box_count() + s2.box_count() - s2pp.box_count();
    if (excess % n != 0) {
        throw std::invalid_argument(to_string(s2pp) + " cannot occur in " + to_string(s) + " x " + to_string(s2));
    }
    return shift(s2pp, excess / n);
}

} // namespace clebsch
