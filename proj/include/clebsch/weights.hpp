#pragma once

// Irrep labels (i-weights) of su(N): a nonincreasing sequence of N integers.

#include "clebsch/detail.hpp"

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clebsch {

class IWeight {
public:
    IWeight() = default;

    explicit IWeight(std::vector<int> entries) : entries_(std::move(entries)) {
        if (entries_.empty()) {
            throw std::invalid_argument("i-weight needs at least one entry");
        }
        for (std::size_t k = 1; k < entries_.size(); ++k) {
            if (entries_[k - 1] < entries_[k]) {
                throw std::invalid_argument("i-weight entries must be nonincreasing");
            }
        }
    }

    IWeight(std::initializer_list<int> entries) : IWeight(std::vector<int>(entries)) {}

    int rank() const { return static_cast<int>(entries_.size()); }

    // k = 1, ..., N
    int operator()(int k) const { return entries_.at(static_cast<std::size_t>(k - 1)); }

    std::span<const int> entries() const { return entries_; }

    bool is_normalized() const { return !entries_.empty() && entries_.back() == 0; }

    int box_count() const {
        int s = 0;
        for (int m : entries_) s += m;
        return s;
    }

    // exact equality of entries; use compare() for equality as irreps
    friend bool operator==(const IWeight&, const IWeight&) = default;

private:
    std::vector<int> entries_;
};

inline IWeight normalize(const IWeight& s) {
    std::vector<int> e(s.entries().begin(), s.entries().end());
    const int last = e.back();
    for (int& m : e) m -= last;
    return IWeight(std::move(e));
}

// Adds c to every entry; the result labels the same irrep.
inline IWeight shift(const IWeight& s, int c) {
    std::vector<int> e(s.entries().begin(), s.entries().end());
    for (int& m : e) m += c;
    return IWeight(std::move(e));
}

// Lexicographic order on normalized entries: the smaller weight is the one
// with the smaller first differing entry.
inline std::strong_ordering compare(const IWeight& a, const IWeight& b) {
    if (a.rank() != b.rank()) {
        throw rank_mismatch("cannot compare i-weights of rank " + std::to_string(a.rank()) +
                            " and " + std::to_string(b.rank()));
    }
    const int na = a.entries().back();
    const int nb = b.entries().back();
    for (int k = 1; k <= a.rank(); ++k) {
        if (auto c = (a(k) - na) <=> (b(k) - nb); c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

// Ordering functor for ordered containers keyed by irrep.
struct IWeightLess {
    bool operator()(const IWeight& a, const IWeight& b) const { return compare(a, b) < 0; }
};

// Number of states of the irrep: prod_{k<k'} (1 + (m_k - m_k') / (k' - k)).
inline std::int64_t dimension(const IWeight& s) {
    detail::RationalProduct p;
    const int n = s.rank();
    for (int k = 1; k <= n; ++k) {
        for (int kp = k + 1; kp <= n; ++kp) {
            p.multiply(static_cast<std::int64_t>(s(k)) - s(kp) + (kp - k), kp - k);
        }
    }
    return p.integer();
}

// Position P(S) of a normalized weight in the increasing list of all
// normalized weights of the same rank.
inline std::uint64_t index(const IWeight& s) {
    if (!s.is_normalized()) {
        throw std::invalid_argument("weight index is defined for normalized weights only");
    }
    const int n = s.rank();
    std::uint64_t p = 0;
    for (int k = 1; k <= n - 1; ++k) {
        const std::uint64_t term = detail::binomial(n - k + s(k) - 1, n - k);
        if (p + term < p) {
            throw std::overflow_error("weight index exceeds 64 bits");
        }
        p += term;
    }
    return p;
}

// Inverse of index(): the unique normalized weight of rank n at position p.
inline IWeight weight_from_index(int n, std::uint64_t p) {
    if (n < 1) {
        throw std::invalid_argument("rank must be at least 1");
    }
    if (n == 1 && p != 0) {
        throw std::out_of_range("su(1) has a single irrep");
    }
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n - 1; ++k) {
        const int r = n - k;
        // largest m with binom(r + m - 1, r) <= p; the count is monotone in m
        auto fits = [&](std::int64_t m) { return detail::binomial(r + m - 1, r) <= p; };
        std::int64_t lo = 0, hi = 1;
        while (fits(hi)) {
            lo = hi;
            hi *= 2;
        }
        while (hi - lo > 1) {
            const std::int64_t mid = lo + (hi - lo) / 2;
            (fits(mid) ? lo : hi) = mid;
        }
        e[static_cast<std::size_t>(k - 1)] = static_cast<int>(lo);
        p -= detail::binomial(r + lo - 1, r);
    }
    return IWeight(std::move(e));
}

inline std::string to_string(const IWeight& s) {
    std::string out = "(";
    for (int k = 1; k <= s.rank(); ++k) {
        if (k > 1) out += ',';
        out += std::to_string(s(k));
    }
    out += ')';
    return out;
}

// Parses "(2,1,0)"; whitespace is allowed anywhere between tokens.
inline IWeight parse_weight(std::string_view text) {
    auto fail = [&](const char* what) {
        return std::invalid_argument(std::string("malformed i-weight '") + std::string(text) +
                                     "': " + what);
    };
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_ws();
    if (pos >= text.size() || text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<int> entries;
    while (true) {
        skip_ws();
        const std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start || !std::isdigit(static_cast<unsigned char>(text[pos - 1]))) {
            throw fail("expected integer");
        }
        try {
            entries.push_back(std::stoi(std::string(text.substr(start, pos - start))));
        } catch (const std::out_of_range&) {
            throw fail("entry out of range");
        }
        skip_ws();
        if (pos >= text.size()) throw fail("missing ')'");
        if (text[pos] == ',') {
            ++pos;
            continue;
        }
        if (text[pos] == ')') {
            ++pos;
            break;
        }
        throw fail("unexpected character");
    }
    skip_ws();
    if (pos != text.size()) throw fail("trailing characters");
    try {
        return IWeight(std::move(entries));
    } catch (const std::invalid_argument& e) {
        throw fail(e.what());
    }
}

} // namespace clebsch
