#include "flat4/catalog.hpp"
#include "flat4/classify.hpp"
#include "flat4/error.hpp"
#include "flat4/kernels.hpp"
#include "flat4/lengths.hpp"
#include "flat4/numspec.hpp"
#include "flat4/theta.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace flat4;

namespace {

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct UsageError : Error {
    using Error::Error;
};

std::string vec_text(const IntVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string row_text(const TraceRow& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i]);
    return s;
}

const BieberbachGroup& lookup(const Catalog& cat, const std::string& id) {
    if (!cat.contains(id)) throw UsageError("unknown group id '" + id + "'");
    return cat.group(id);
}

int cmd_validate(const std::string& path) {
    CatalogLoad load = load_catalog_checked(path);
    if (!load.ok()) {
        for (const auto& i : load.issues)
            std::cout << "invalid" << (i.id.empty() ? "" : " " + i.id) << ": " << i.message << "\n";
        return kFailure;
    }
    std::cout << "ok: " << load.catalog.size() << " groups validated\n";
    for (const auto& x : load.catalog.excluded)
        std::cout << "excluded " << x.id << ": " << x.reason << " (" << x.build_error << ")\n";
    return 0;
}

int cmd_invariants(const Catalog& cat, const std::string& id) {
    const auto& g = lookup(cat, id);
    const auto& e = cat.entry(id);
    std::cout << "group " << g.id() << "  |F| = " << g.order();
    if (!e.holonomy_name.empty()) std::cout << "  F = " << e.holonomy_name;
    if (!e.source_table.empty()) std::cout << "  table " << e.source_table;
    std::cout << "\n";
    for (std::size_t k = 0; k < g.holonomy().size(); ++k) {
        const auto& h = g.holonomy()[k];
        const auto inv = element_invariants(h);
        std::cout << "element " << k << "\n";
        std::cout << "  B        " << h.B.str() << "\n";
        std::cout << "  b        " << to_string(h.b) << "\n";
        std::cout << "  Lambda^B";
        for (const auto& c : inv.decomposition.components) std::cout << " " << vec_text(c.u);
        std::cout << "\n";
        std::cout << "  n_B      " << inv.n_B << "\n";
        std::cout << "  vol      " << inv.volume.str() << "\n";
        std::cout << "  b_plus   " << to_string(inv.b_plus) << "\n";
        std::cout << "  tr_p     " << row_text(inv.traces) << "\n";
    }
    std::cout << "betti   ";
    for (int p = 0; p <= 4; ++p) std::cout << " " << betti(g, p);
    std::cout << "\n";
    std::cout << "orientable " << (g.is_orientable() ? "yes" : "no") << "\n";
    std::cout << "diagonal   " << (g.is_diagonal_type() ? "yes" : "no") << "\n";
    if (g.is_diagonal_type()) {
        auto s = sunada_numbers(g).listed();
        std::cout << "sunada (c11 c21 c22 c31 c32 c33)";
        for (int v : s) std::cout << " " << v;
        std::cout << "\n";
    }
    if (!e.note.empty()) std::cout << "note: " << e.note << "\n";
    return 0;
}

int cmd_zeta(const Catalog& cat, const std::string& id, int p) {
    const auto& g = lookup(cat, id);
    if (p < 0) {
        std::cout << heat_trace_symbolic(g).str() << "\n";
    } else {
        const std::string label = g.order() == 1 ? "Z" : "Z_" + std::to_string(p);
        std::cout << heat_trace_poly(g, p).str(label) << "\n";
    }
    return 0;
}

int cmd_spectrum(const Catalog& cat, const std::string& id, int p, std::int64_t max_mu) {
    const auto& g = lookup(cat, id);
    std::cout << "# group " << g.id() << ", p = " << p << ": mu d_{p,mu} (eigenvalue 4 pi^2 mu)\n";
    for (std::int64_t mu = 0; mu <= max_mu; ++mu) std::cout << mu << " " << multiplicity(g, p, mu) << "\n";
    return 0;
}

int cmd_lengths(const Catalog& cat, const std::string& id, const std::string& max_len2, bool mult) {
    const auto& g = lookup(cat, id);
    Rational bound;
    try {
        bound = parse_rational(max_len2);
    } catch (const Error&) {
        throw UsageError("--max-len2 expects a rational number");
    }
    if (bound <= 0) throw UsageError("--max-len2 must be positive");
    std::cout << "# group " << g.id() << ": squared lengths up to " << to_string(bound)
              << (mult ? " with multiplicities" : "") << "\n";
    for (const auto& l2 : length_set(g, bound)) {
        std::cout << to_string(l2);
        if (mult) std::cout << " " << length_multiplicity(g, l2);
        std::cout << "\n";
    }
    return 0;
}

int cmd_classify(const Catalog& cat, const std::string& mode_text, const std::string& bound_text,
                 const std::string& json_path) {
    Mode mode;
    ClassifyParams params;
    try {
        mode = parse_mode(mode_text);
        if (!bound_text.empty()) params.bound = parse_rational(bound_text);
    } catch (const Error& ex) {
        throw UsageError(ex.what());
    }
    if (params.bound <= 0) throw UsageError("--bound must be positive");
    ClassificationReport report = classify_all(cat.groups, mode, params);
    std::cout << report.to_text();
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw Error("cannot write " + json_path);
        out << report.to_json() << "\n";
    }
    return report.errors.empty() ? 0 : kFailure;
}

int cmd_crosscheck(const Catalog& cat, const std::string& id, int p, double s, std::int64_t mu_max, int trunc,
                   double tol) {
    const auto& g = lookup(cat, id);
    if (s <= 0) throw UsageError("-s must be positive");
    const double symbolic = poly_eval_numeric(heat_trace_poly(g, p), s, trunc);
    const double numeric = heat_trace_numeric(g, p, s, mu_max);
    const double diff = std::abs(symbolic - numeric);
    std::ostringstream out;
    out << std::setprecision(15);
    out << "group " << g.id() << " p = " << p << " s = " << s << "\n";
    out << "theta polynomial (M = " << trunc << ", kernel " << kernels::kernel_name(kernels::active_kernel())
        << "): " << symbolic << "\n";
    out << "spectral sum (mu <= " << mu_max << "): " << numeric << "\n";
    out << "difference: " << diff << (diff < tol ? " ok" : " MISMATCH") << "\n";
    std::cout << out.str();
    return diff < tol ? 0 : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral invariants of flat 4-manifolds with canonical lattice"};
    app.require_subcommand(1);
    std::string catalog_path;
    app.add_option("--catalog", catalog_path, "Catalog JSON (default: FLAT4SPEC_CATALOG or the shipped file)");

    std::string id;
    int p = -1;
    std::int64_t max_mu = 25;
    std::string max_len2 = "3";
    bool mult = false;
    std::string mode, bound, json_path;
    double s = 0.08, tol = 1e-8;
    std::int64_t mu_max = 40;
    int trunc = 60;

    auto* validate = app.add_subcommand("validate", "Load and validate the catalog");
    validate->add_option("--catalog", catalog_path, "Catalog JSON");

    auto* invariants = app.add_subcommand("invariants", "Per-element invariants of a group");
    invariants->add_option("id", id, "Group id")->required();

    auto* zeta = app.add_subcommand("zeta", "Heat-trace polynomial");
    zeta->add_option("id", id, "Group id")->required();
    zeta->add_option("-p", p, "Form degree (omit for all p)")->check(CLI::Range(0, 4));

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalue multiplicities");
    spectrum->add_option("id", id, "Group id")->required();
    spectrum->add_option("-p", p, "Form degree")->required()->check(CLI::Range(0, 4));
    spectrum->add_option("--max-mu", max_mu, "Largest mu")->check(CLI::NonNegativeNumber);

    auto* lengths = app.add_subcommand("lengths", "Squared lengths of closed geodesics");
    lengths->add_option("id", id, "Group id")->required();
    lengths->add_option("--max-len2", max_len2, "Bound on squared length (rational)");
    lengths->add_flag("--mult", mult, "Also print multiplicities (abelian holonomy)");

    auto* classify = app.add_subcommand("classify", "Classify the catalog");
    classify->add_option("--mode", mode, "p0|p1|p2|p3|p4|all-p|sunada|L|bracketL")->required();
    classify->add_option("--bound", bound, "Squared-length bound for bracketL (default 3)");
    classify->add_option("--json", json_path, "Also write the JSON report here");

    auto* crosscheck = app.add_subcommand("crosscheck", "Compare symbolic and spectral heat traces");
    crosscheck->add_option("id", id, "Group id")->required();
    crosscheck->add_option("-p", p, "Form degree")->required()->check(CLI::Range(0, 4));
    crosscheck->add_option("-s", s, "Time parameter")->required();
    crosscheck->add_option("--mu-max", mu_max, "Spectral truncation")->check(CLI::NonNegativeNumber);
    crosscheck->add_option("--trunc", trunc, "Theta truncation M")->check(CLI::PositiveNumber);
    crosscheck->add_option("--tol", tol, "Accepted difference");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    const std::string path = catalog_path.empty() ? default_catalog_path().string() : catalog_path;
    try {
        if (*validate) return cmd_validate(path);

        Catalog cat;
        try {
            cat = load_catalog(path);
        } catch (const Error& ex) {
            std::cerr << "catalog: " << ex.what() << "\n";
            return kFailure;
        }
        if (*invariants) return cmd_invariants(cat, id);
        if (*zeta) return cmd_zeta(cat, id, p);
        if (*spectrum) return cmd_spectrum(cat, id, p, max_mu);
        if (*lengths) return cmd_lengths(cat, id, max_len2, mult);
        if (*classify) return cmd_classify(cat, mode, bound, json_path);
        if (*crosscheck) return cmd_crosscheck(cat, id, p, s, mu_max, trunc, tol);
    } catch (const UsageError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kUsage;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kFailure;
    }
    return kUsage;
}
