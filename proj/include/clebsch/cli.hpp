#pragma once

// Command-line front end. run_cli is kept free of process state so that
// tests can drive it with string streams.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/parse/rank error,
// 3 target irrep absent from the product.

#include "clebsch/coefficients.hpp"
#include "clebsch/littlewood.hpp"
#include "clebsch/patterns.hpp"
#include "clebsch/table_io.hpp"
#include "clebsch/verify.hpp"
#include "clebsch/weights.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace clebsch::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, domain_error = 3 };

namespace detail {

inline IWeight weight_of_rank(int n, const std::string& text) {
    if (n < 1) throw std::invalid_argument("rank N must be at least 1");
    IWeight s = parse_weight(text);
    if (s.rank() != n) {
        throw rank_mismatch("i-weight " + text + " has " + std::to_string(s.rank()) + " entries, expected " +
                            std::to_string(n));
    }
    return s;
}

struct Options {
    bool quiet = false;
    int n = 0;
    std::string s, s2, spp;
    std::string output;
    double tol = 1e-8;
    std::string pattern;
    std::uint64_t p = 0;
    std::int64_t q = 0;
};

inline int cmd_decompose(const Options& o, std::ostream& out) {
    const auto d = decompose(weight_of_rank(o.n, o.s), weight_of_rank(o.n, o.s2));
    for (const auto& t : d.terms()) out << to_string(t.irrep) << " x" << t.multiplicity << " dim=" << dimension(t.irrep) << '\n';
    out << check_dimension_sum(d).detail << '\n';
    return ok;
}

inline int cmd_coefficients(const Options& o, std::ostream& out, std::ostream& err) {
    const IWeight s = weight_of_rank(o.n, o.s), s2 = weight_of_rank(o.n, o.s2), spp = weight_of_rank(o.n, o.spp);
    const int mult = decompose(s, s2).multiplicity(spp);
    if (mult == 0) {
        err << "error: " << to_string(normalize(spp)) << " does not occur in " << to_string(s) << " x " << to_string(s2)
            << '\n';
        return domain_error;
    }
    const auto tensor = compute_tensor(IrrepBasis(s), IrrepBasis(s2), spp, mult);
    std::ostream* summary = &out;
    if (o.output.empty()) {
        write_table(out, tensor);
        summary = &err;
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open " + o.output + " for writing");
        write_table(file, tensor);
        if (!file) throw std::runtime_error("failed writing " + o.output);
    }
    if (!o.quiet) *summary << "alpha_count=" << tensor.alpha_count() << " nonzero=" << tensor.nonzero_count() << '\n';
    return ok;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    const auto reports = verify_product(weight_of_rank(o.n, o.s), weight_of_rank(o.n, o.s2), o.tol);
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.passed;
        if (!o.quiet || !r.passed) out << format_report(r) << '\n';
    }
    return all ? ok : check_failed;
}

} // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"SU(N) Clebsch-Gordan coefficients in the Gelfand-Tsetlin basis", "clebsch"};
    app.require_subcommand(1);
    detail::Options o;
    app.add_flag("--quiet,-q", o.quiet, "Print only results and failures");

    auto* dec = app.add_subcommand("decompose", "Decompose S x S' into irreps");
    dec->add_option("N", o.n, "Rank")->required();
    dec->add_option("S", o.s, "First i-weight, e.g. (2,1,0)")->required();
    dec->add_option("S2", o.s2, "Second i-weight")->required();

    auto* coef = app.add_subcommand("coefficients", "Write the coefficient table of S'' in S x S'");
    coef->add_option("N", o.n, "Rank")->required();
    coef->add_option("S", o.s, "First i-weight")->required();
    coef->add_option("S2", o.s2, "Second i-weight")->required();
    coef->add_option("S2pp", o.spp, "Target i-weight")->required();
    coef->add_option("--output,-o", o.output, "Table file (default: standard output)");

    auto* ver = app.add_subcommand("verify", "Compute all tables of S x S' and run the consistency checks");
    ver->add_option("N", o.n, "Rank")->required();
    ver->add_option("S", o.s, "First i-weight")->required();
    ver->add_option("S2", o.s2, "Second i-weight")->required();
    ver->add_option("--tol", o.tol, "Tolerance for the numerical checks")->capture_default_str();

    auto* dim = app.add_subcommand("dimension", "Dimension of an irrep");
    dim->add_option("N", o.n, "Rank")->required();
    dim->add_option("S", o.s, "i-weight")->required();

    auto* idx = app.add_subcommand("index", "Translate between weights or patterns and their indices");
    idx->require_subcommand(1);
    auto* w2i = idx->add_subcommand("weight-to-index", "P(S) of an i-weight (normalized first)");
    w2i->add_option("N", o.n, "Rank")->required();
    w2i->add_option("S", o.s, "i-weight")->required();
    auto* i2w = idx->add_subcommand("weight-from-index", "Normalized i-weight with index P");
    i2w->add_option("N", o.n, "Rank")->required();
    i2w->add_option("P", o.p, "Irrep index")->required();
    auto* p2i = idx->add_subcommand("pattern-to-index", "Q(M) of a pattern, e.g. \"2 1 0; 2 1; 2\"");
    p2i->add_option("M", o.pattern, "Pattern rows, top first, separated by ';'")->required();
    auto* i2p = idx->add_subcommand("pattern-from-index", "Pattern of irrep S with index Q");
    i2p->add_option("S", o.s, "i-weight")->required();
    i2p->add_option("Q", o.q, "Pattern index, 1 = lowest")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*dec) return detail::cmd_decompose(o, out);
        if (*coef) return detail::cmd_coefficients(o, out, err);
        if (*ver) return detail::cmd_verify(o, out);
        if (*dim) {
            out << dimension(detail::weight_of_rank(o.n, o.s)) << '\n';
            return ok;
        }
        if (*w2i) {
            out << index(normalize(detail::weight_of_rank(o.n, o.s))) << '\n';
            return ok;
        }
        if (*i2w) {
            out << to_string(weight_from_index(o.n, o.p)) << '\n';
            return ok;
        }
        if (*p2i) {
            out << index(parse_pattern(o.pattern)) << '\n';
            return ok;
        }
        if (*i2p) {
            out << to_string(pattern_from_index(parse_weight(o.s), o.q)) << '\n';
            return ok;
        }
    } catch (const consistency_error& e) {
        err << "error: " << e.what() << '\n';
        return check_failed;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return domain_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    }
    return usage_error;
}

} // namespace clebsch::cli
