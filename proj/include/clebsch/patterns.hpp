#pragma once

// Gelfand-Tsetlin patterns: the basis states of an su(N) irrep.
//
// A pattern is a triangular array m(k, l), 1 <= k <= l <= N. Row l has l
// entries and row N is the i-weight of the irrep. Entries satisfy the
// betweenness condition m(k, l) >= m(k, l-1) >= m(k+1, l).
//
// Patterns of one irrep are ordered by comparing entries row by row, from the
// top row down and left to right within a row. index() is the 1-based
// position in that order: the lowest-weight state has index 1 and the
// highest-weight state has index dimension(S).

#include "clebsch/weights.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace clebsch {

// Pattern weight: w_l = (row sum l) - (row sum l-1); w_l counts the l-boxes
// of the corresponding Young tableau.
struct PWeight {
    std::vector<int> entries;

    int operator()(int l) const { return entries.at(static_cast<std::size_t>(l - 1)); }
    int rank() const { return static_cast<int>(entries.size()); }

    friend auto operator<=>(const PWeight&, const PWeight&) = default;
    friend bool operator==(const PWeight&, const PWeight&) = default;
};

inline PWeight operator+(const PWeight& a, const PWeight& b) {
    if (a.rank() != b.rank()) throw rank_mismatch("p-weight rank mismatch");
    PWeight r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] += b.entries[i];
    return r;
}

inline PWeight operator-(const PWeight& a, const PWeight& b) {
    if (a.rank() != b.rank()) throw rank_mismatch("p-weight rank mismatch");
    PWeight r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i) r.entries[i] -= b.entries[i];
    return r;
}

inline PWeight as_pweight(const IWeight& s) {
    return PWeight{std::vector<int>(s.entries().begin(), s.entries().end())};
}

// Eigenvalues of the N-1 diagonal generators, stored doubled so that
// half-integers stay exact.
struct ZWeight {
    std::vector<int> doubled;

    friend auto operator<=>(const ZWeight&, const ZWeight&) = default;
    friend bool operator==(const ZWeight&, const ZWeight&) = default;
};

inline ZWeight operator+(const ZWeight& a, const ZWeight& b) {
    if (a.doubled.size() != b.doubled.size()) throw rank_mismatch("z-weight rank mismatch");
    ZWeight r = a;
    for (std::size_t i = 0; i < r.doubled.size(); ++i) r.doubled[i] += b.doubled[i];
    return r;
}

inline ZWeight zweight_of(const PWeight& w) {
    ZWeight z;
    for (int l = 1; l < w.rank(); ++l) z.doubled.push_back(w(l) - w(l + 1));
    return z;
}

// Semi-standard Young tableau; rows[k] holds the labels of tableau row k+1.
struct YoungTableau {
    std::vector<std::vector<int>> rows;

    friend bool operator==(const YoungTableau&, const YoungTableau&) = default;
};

class GTPattern {
public:
    GTPattern() = default;

    // rows are given top to bottom: rows[0] has n entries, rows[n-1] has one.
    explicit GTPattern(const std::vector<std::vector<int>>& rows) : n_(static_cast<int>(rows.size())) {
        if (n_ < 1) throw std::invalid_argument("pattern needs at least one row");
        entries_.reserve(static_cast<std::size_t>(n_ * (n_ + 1) / 2));
        for (int i = 0; i < n_; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (static_cast<int>(row.size()) != n_ - i) {
                throw std::invalid_argument("pattern row " + std::to_string(i + 1) + " from the top must have " +
                                            std::to_string(n_ - i) + " entries");
            }
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    int rank() const { return n_; }

    // 1 <= k <= l <= N
    int operator()(int k, int l) const { return entries_[offset(k, l)]; }
    int& at(int k, int l) { return entries_[offset(k, l)]; }

    std::vector<int> row(int l) const {
        const auto b = entries_.begin() + static_cast<std::ptrdiff_t>(offset(1, l));
        return {b, b + l};
    }

    IWeight top() const { return IWeight(row(n_)); }

    int row_sum(int l) const {
        if (l == 0) return 0;
        int s = 0;
        for (int k = 1; k <= l; ++k) s += (*this)(k, l);
        return s;
    }

    // flat storage runs in pattern order, so this is the pattern order for a
    // fixed top row
    friend auto operator<=>(const GTPattern&, const GTPattern&) = default;
    friend bool operator==(const GTPattern&, const GTPattern&) = default;

    const std::vector<int>& raw() const { return entries_; }

private:
    std::size_t offset(int k, int l) const {
        return static_cast<std::size_t>((n_ * (n_ + 1) - l * (l + 1)) / 2 + k - 1);
    }

    int n_ = 0;
    std::vector<int> entries_;
};

inline bool validate(const GTPattern& m) {
    const int n = m.rank();
    for (int l = 2; l <= n; ++l) {
        for (int k = 1; k < l; ++k) {
            if (!(m(k, l) >= m(k, l - 1) && m(k, l - 1) >= m(k + 1, l))) return false;
        }
    }
    return true;
}

inline GTPattern highest(const IWeight& s) {
    const int n = s.rank();
    std::vector<std::vector<int>> rows;
    for (int l = n; l >= 1; --l) {
        std::vector<int> row;
        for (int k = 1; k <= l; ++k) row.push_back(s(k));
        rows.push_back(std::move(row));
    }
    return GTPattern(rows);
}

inline GTPattern lowest(const IWeight& s) {
    GTPattern m = highest(s);
    const int n = s.rank();
    for (int l = n - 1; l >= 1; --l) {
        for (int k = 1; k <= l; ++k) m.at(k, l) = m(k + 1, l + 1);
    }
    return m;
}

// Advances to the next pattern of the same irrep; false at the highest one.
inline bool next_pattern(GTPattern& m) {
    const int n = m.rank();
    // scan positions from last to first: (1,1), (2,2), (1,2), (3,3), ...
    for (int l = 1; l < n; ++l) {
        for (int k = l; k >= 1; --k) {
            if (m(k, l) < m(k, l + 1)) {
                ++m.at(k, l);
                for (int k2 = k + 1; k2 <= l; ++k2) m.at(k2, l) = m(k2 + 1, l + 1);
                for (int l2 = l - 1; l2 >= 1; --l2) {
                    for (int k2 = 1; k2 <= l2; ++k2) m.at(k2, l2) = m(k2 + 1, l2 + 1);
                }
                return true;
            }
        }
    }
    return false;
}

// Steps back to the preceding pattern; false at the lowest one.
inline bool prev_pattern(GTPattern& m) {
    const int n = m.rank();
    for (int l = 1; l < n; ++l) {
        for (int k = l; k >= 1; --k) {
            if (m(k, l) > m(k + 1, l + 1)) {
                --m.at(k, l);
                for (int k2 = k + 1; k2 <= l; ++k2) m.at(k2, l) = m(k2, l + 1);
                for (int l2 = l - 1; l2 >= 1; --l2) {
                    for (int k2 = 1; k2 <= l2; ++k2) m.at(k2, l2) = m(k2, l2 + 1);
                }
                return true;
            }
        }
    }
    return false;
}

inline std::vector<GTPattern> enumerate(const IWeight& s) {
    std::vector<GTPattern> out;
    out.reserve(static_cast<std::size_t>(dimension(s)));
    GTPattern m = lowest(s);
    do {
        out.push_back(m);
    } while (next_pattern(m));
    return out;
}

namespace detail {

// Number of patterns whose rows above l and entries (1..k, l) are fixed as in
// m, the remaining entries of row l and everything below being free.
inline std::int64_t completions(GTPattern& m, int k, int l) {
    if (k == l) {
        return dimension(IWeight(m.row(l)));
    }
    const int next = k + 1;
    std::int64_t total = 0;
    const int saved = m(next, l);
    for (int v = m(next + 1, l + 1); v <= m(next, l + 1); ++v) {
        m.at(next, l) = v;
        total = checked_add(total, completions(m, next, l));
    }
    m.at(next, l) = saved;
    return total;
}

} // namespace detail

// 1-based position of m among the patterns of its irrep, by direct counting.
inline std::int64_t index(const GTPattern& m) {
    if (!validate(m)) throw std::invalid_argument("index of an invalid pattern");
    GTPattern work = m;
    const int n = m.rank();
    std::int64_t smaller = 0;
    for (int l = n - 1; l >= 1; --l) {
        for (int k = 1; k <= l; ++k) {
            const int actual = m(k, l);
            for (int v = m(k + 1, l + 1); v < actual; ++v) {
                work.at(k, l) = v;
                smaller = detail::checked_add(smaller, detail::completions(work, k, l));
            }
            work.at(k, l) = actual;
        }
    }
    return smaller + 1;
}

inline GTPattern pattern_from_index(const IWeight& s, std::int64_t q) {
    if (q < 1 || q > dimension(s)) {
        throw std::out_of_range("pattern index " + std::to_string(q) + " outside 1.." +
                                std::to_string(dimension(s)));
    }
    GTPattern m = lowest(s);
    const int n = s.rank();
    std::int64_t rest = q - 1;
    for (int l = n - 1; l >= 1; --l) {
        for (int k = 1; k <= l; ++k) {
            int v = m(k + 1, l + 1);
            while (true) {
                m.at(k, l) = v;
                const std::int64_t c = detail::completions(m, k, l);
                if (rest < c) break;
                rest -= c;
                ++v;
            }
            // entries after (k, l) in this row restart at their minimum
            for (int k2 = k + 1; k2 <= l; ++k2) m.at(k2, l) = m(k2 + 1, l + 1);
        }
        for (int k = 1; k <= l - 1; ++k) m.at(k, l - 1) = m(k + 1, l);
    }
    return m;
}

inline PWeight pweight(const GTPattern& m) {
    PWeight w;
    for (int l = 1; l <= m.rank(); ++l) w.entries.push_back(m.row_sum(l) - m.row_sum(l - 1));
    return w;
}

inline ZWeight zweight(const GTPattern& m) {
    ZWeight z;
    for (int l = 1; l < m.rank(); ++l) {
        z.doubled.push_back(2 * m.row_sum(l) - m.row_sum(l + 1) - m.row_sum(l - 1));
    }
    return z;
}

// m + delta * M^{k,l} if that is still a valid pattern (1 <= k <= l <= N-1).
inline std::optional<GTPattern> shifted(const GTPattern& m, int k, int l, int delta) {
    const int v = m(k, l) + delta;
    if (v > m(k, l + 1) || v < m(k + 1, l + 1)) return std::nullopt;
    if (l > 1) {
        if (k <= l - 1 && v < m(k, l - 1)) return std::nullopt;
        if (k >= 2 && v > m(k - 1, l - 1)) return std::nullopt;
    }
    GTPattern r = m;
    r.at(k, l) = v;
    return r;
}

// Row k of the tableau holds m(k,l) - m(k,l-1) boxes labeled l, for l = k..N.
inline YoungTableau to_tableau(const GTPattern& m) {
    if (!validate(m)) throw std::invalid_argument("tableau of an invalid pattern");
    const int n = m.rank();
    if (m(n, n) < 0) throw std::invalid_argument("tableau needs nonnegative pattern entries");
    YoungTableau t;
    for (int k = 1; k <= n; ++k) {
        std::vector<int> row;
        for (int l = k; l <= n; ++l) {
            const int before = l > k ? m(k, l - 1) : 0;
            row.insert(row.end(), static_cast<std::size_t>(m(k, l) - before), l);
        }
        t.rows.push_back(std::move(row));
    }
    while (!t.rows.empty() && t.rows.back().empty()) t.rows.pop_back();
    return t;
}

inline bool is_valid_tableau(const YoungTableau& t, int n) {
    if (static_cast<int>(t.rows.size()) > n) return false;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        const auto& row = t.rows[r];
        if (row.empty()) return false;
        if (r > 0 && row.size() > t.rows[r - 1].size()) return false;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (row[c] < 1 || row[c] > n) return false;
            if (c > 0 && row[c] < row[c - 1]) return false;
            if (r > 0 && row[c] <= t.rows[r - 1][c]) return false;
        }
    }
    return true;
}

// Row k of the tableau fills diagonal k of the pattern: m(k,l) counts the
// boxes of row k labeled at most l.
inline GTPattern from_tableau(const YoungTableau& t, int n) {
    if (!is_valid_tableau(t, n)) throw std::invalid_argument("invalid Young tableau for this rank");
    std::vector<std::vector<int>> rows;
    for (int l = n; l >= 1; --l) {
        std::vector<int> row;
        for (int k = 1; k <= l; ++k) {
            int count = 0;
            if (k <= static_cast<int>(t.rows.size())) {
                for (int label : t.rows[static_cast<std::size_t>(k - 1)]) count += label <= l ? 1 : 0;
            }
            row.push_back(count);
        }
        rows.push_back(std::move(row));
    }
    return GTPattern(rows);
}

inline std::string to_string(const GTPattern& m) {
    std::string out;
    for (int l = m.rank(); l >= 1; --l) {
        for (int k = 1; k <= l; ++k) {
            if (k > 1) out += ' ';
            out += std::to_string(m(k, l));
        }
        if (l > 1) out += "; ";
    }
    return out;
}

inline std::string to_string(const PWeight& w) {
    std::string out = "(";
    for (int l = 1; l <= w.rank(); ++l) {
        if (l > 1) out += ',';
        out += std::to_string(w(l));
    }
    return out + ")";
}

// Parses "2 1 0; 2 1; 2" (rows top to bottom).
inline GTPattern parse_pattern(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ';')) {
        std::istringstream row_in(item);
        std::vector<int> row;
        std::string tok;
        while (row_in >> tok) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) {
                throw std::invalid_argument("malformed pattern entry '" + tok + "'");
            }
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (!text.empty() && text.back() == ';') {
        throw std::invalid_argument("malformed pattern: trailing ';'");
    }
    return GTPattern(rows);
}

} // namespace clebsch
