#pragma once

// Sparse text tables of one CGCTensor.
//
//   # N S S' S'' alpha_count
//   alpha<TAB>Qpp<TAB>Q<TAB>Qp<TAB>value
//
// Values use %.14e (15 significant digits); zero coefficients are omitted and
// lines are sorted by (alpha, Qpp, Q, Qp).

#include "clebsch/coefficients.hpp"
#include "clebsch/weights.hpp"

#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace clebsch {

inline std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.14e", v);
    return buf;
}

inline void write_table(std::ostream& out, const CGCTensor& t) {
    out << "# " << t.left().rank() << ' ' << to_string(t.left()) << ' ' << to_string(t.right()) << ' '
        << to_string(t.target()) << ' ' << t.alpha_count() << '\n';
    for (int a = 1; a <= t.alpha_count(); ++a) {
        for (std::int64_t qpp = 1; qpp <= t.dim_target(); ++qpp) {
            for (const auto& c : t.row(a, qpp)) {
                out << a << '\t' << qpp << '\t' << c.q << '\t' << c.qp << '\t' << format_value(c.value) << '\n';
            }
        }
    }
}

inline std::string write_table(const CGCTensor& t) {
    std::ostringstream os;
    write_table(os, t);
    return os.str();
}

// Rebuilds a tensor from write_table output. The target keeps the aligned
// box count so that it can be checked against the factors directly.
inline CGCTensor read_table(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) throw std::invalid_argument("missing table header");
    std::istringstream header(line.substr(2));
    int n = 0, alphas = 0;
    std::string s, s2, spp;
    if (!(header >> n >> s >> s2 >> spp >> alphas)) throw std::invalid_argument("malformed table header: " + line);
    const IWeight ws = parse_weight(s), ws2 = parse_weight(s2), wspp = parse_weight(spp);
    if (ws.rank() != n || ws2.rank() != n || wspp.rank() != n) throw rank_mismatch("table header rank mismatch");
    CGCTensor t(ws, ws2, aligned_target(ws, ws2, wspp), alphas);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        int a = 0;
        std::int64_t qpp = 0, q = 0, qp = 0;
        double v = 0.0;
        if (!(row >> a >> qpp >> q >> qp >> v)) {
            throw std::invalid_argument("malformed table line " + std::to_string(lineno) + ": " + line);
        }
        t.set(a, qpp, q, qp, v);
    }
    return t;
}

} // namespace clebsch
