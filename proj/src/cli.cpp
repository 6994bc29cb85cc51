#include "planeperiods/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "planeperiods/compress.hpp"
#include "planeperiods/config.hpp"
#include "planeperiods/error.hpp"
#include "planeperiods/homology.hpp"
#include "planeperiods/periods.hpp"
#include "planeperiods/product_cover.hpp"
#include "planeperiods/quadratic_basis.hpp"

#ifndef PLANEPERIODS_DATA_DIR
#define PLANEPERIODS_DATA_DIR "data"
#endif

namespace planeperiods {

namespace {

struct Report {
    Json doc;
    std::string text;
    int exit_code = 0;
};

Json header(const std::string& command) {
    Json j;
    j["format_version"] = 1;
    j["command"] = command;
    return j;
}

std::string join(const std::vector<Monomial>& ms) {
    std::string s;
    for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? ", " : "") + to_string(ms[i]);
    return s;
}

std::string format_complex(cplx z) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", z.real(), z.imag());
    return buf;
}

std::string format_matrix(const ComplexMatrix& m) {
    std::string s;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        s += " ";
        for (Eigen::Index j = 0; j < m.cols(); ++j) s += " " + format_complex(m(i, j));
        s += "\n";
    }
    return s;
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string resolve(const std::string& path) {
    namespace fs = std::filesystem;
    if (fs::exists(path)) return path;
    const fs::path data = fs::path(PLANEPERIODS_DATA_DIR) / path;
    if (fs::exists(data)) return data.string();
    throw FormatError("io", "cannot find " + path);
}

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << bytes)) throw FormatError("io", "cannot write " + path);
}

ColumnSet columns_for(int d, const std::string& spec) {
    if (spec.empty()) return distinguished_columns(d).columns;
    return ColumnSet(d, parse_monomial_list(spec));
}

// Loads a curve, certifies smoothness and enforces the degree cap.
PlaneCurve smooth_curve(const std::string& path, const Config& config) {
    PlaneCurve curve = checked(load_curve(resolve(path)), config.smoothness_options());
    if (curve.degree() > config.degree_cap)
        throw InvalidArgument("cli", "degree " + std::to_string(curve.degree()) + " exceeds the degree cap " +
                                         std::to_string(config.degree_cap));
    if (curve.smoothness() != Smoothness::Smooth)
        throw NumericalError("smoothness", "curve is " + to_string(curve.smoothness()) + "; a smooth curve is required");
    return curve;
}

Json diagnostics_json(const PeriodMatrix& P) {
    Json j;
    j["sym_residual"] = P.riemann.sym_residual;
    j["sym_residual_relative"] = P.riemann.sym_residual_relative;
    j["min_im_eigenvalue"] = P.riemann.min_im_eigenvalue;
    j["positive_definite"] = P.riemann.positive_definite;
    j["riemann_pass"] = P.riemann.pass;
    j["A_condition_estimate"] = P.A_condition_estimate;
    j["quadrature_error"] = P.quadrature_error;
    return j;
}

Report cmd_genus(int d) {
    Report r{header("genus"), "", 0};
    const int g = genus(d);
    r.doc["d"] = d;
    r.doc["genus"] = g;
    r.text = std::to_string(g) + "\n";
    return r;
}

Report cmd_adjoint_basis(int d) {
    const auto basis = adjoint_monomials(d).monomials();
    Report r{header("adjoint-basis"), "", 0};
    r.doc["d"] = d;
    r.doc["g"] = basis.size();
    r.doc["basis"] = to_json(basis);
    r.text = join(basis) + "\n";
    return r;
}

Report cmd_cover(int d, const std::string& spec) {
    const ColumnSet cols = columns_for(d, spec);
    const std::string note = spec.empty() ? distinguished_columns(d).note : "";
    const CoverReport rep = cover_check(d, cols);
    const std::vector<Monomial> missing(rep.missing.begin(), rep.missing.end());
    Report r{header("cover"), "", 0};
    r.doc["d"] = d;
    r.doc["columns"] = to_json(cols.labels());
    r.doc["target_count"] = count_monomials_up_to(2 * d - 6);
    r.doc["missing"] = to_json(missing);
    r.doc["distinct_products"] = rep.distinct_count;
    r.doc["duplicate_products"] = rep.duplicate_count;
    if (!note.empty()) r.doc["note"] = note;
    r.text = "columns: " + join(cols.labels()) + "\nmissing: " + (missing.empty() ? "none" : join(missing)) + "\n";
    if (!note.empty()) r.text += "note: " + note + "\n";
    if (rep.complete()) {
        const RedundancyStats stats = redundancy_stats(d, cols);
        r.doc["quad_dim"] = stats.quad_dim;
        r.doc["excess"] = stats.excess;
        r.text += "distinct products: " + std::to_string(stats.distinct_products) +
                  "\nquadratic dimension: " + std::to_string(stats.quad_dim) + "\nexcess: " + std::to_string(stats.excess) +
                  "\n";
    }
    return r;
}

Report cmd_min_cover(int d, int max_size) {
    const auto covers = min_cover_search(d, static_cast<std::size_t>(max_size));
    Report r{header("min-cover"), "", 0};
    r.doc["d"] = d;
    r.doc["size"] = covers.front().size();
    r.doc["canonical"] = to_json(covers.front().labels());
    Json all = Json::array();
    for (const auto& c : covers) all.push_back(to_json(c.labels()));
    r.doc["covers"] = std::move(all);
    r.text = "minimum size: " + std::to_string(covers.front().size()) + "\ncanonical: " + join(covers.front().labels()) +
             "\ncovers found: " + std::to_string(covers.size()) + "\n";
    return r;
}

Report cmd_quad_basis(const std::string& path, const std::string& spec, const Config& config) {
    const PlaneCurve curve = smooth_curve(path, config);
    const int d = curve.degree();
    const QuadSpaceInfo info = quad_dim(curve);
    const ColumnSet cols = columns_for(d, spec);
    const BasisIndexSet sel = select_basis_pairs(curve, cols);
    const AdjointBasis basis(d);
    Report r{header("quad-basis"), "", 0};
    r.doc["d"] = d;
    r.doc["g"] = genus(d);
    r.doc["target_count"] = info.target_monomials.size();
    r.doc["ideal_rank"] = info.ideal_rank;
    r.doc["dim"] = info.dim;
    r.doc["columns"] = to_json(cols.labels());
    Json pairs = Json::array(), pair_labels = Json::array();
    std::string text_pairs;
    for (auto [i, j] : sel.pairs) {
        pairs.push_back(Json::array({i, j}));
        pair_labels.push_back(Json::array({to_string(basis[i]), to_string(basis[j])}));
        text_pairs += "  " + to_string(basis[i]) + " * " + to_string(basis[j]) + "\n";
    }
    r.doc["pairs"] = std::move(pairs);
    r.doc["pair_labels"] = std::move(pair_labels);
    r.doc["modular_agrees"] = sel.modular_agrees;
    r.text = "quadratic dimension: " + std::to_string(info.dim) + " (3g-3 = " + std::to_string(3 * genus(d) - 3) +
             ")\ncolumns: " + join(cols.labels()) + "\npairs:\n" + text_pairs;
    return r;
}

struct Pipeline {
    PlaneCurve working;
    mpq_class shear;
    MonodromyRep mono;
};

Pipeline run_monodromy(const PlaneCurve& curve, const Config& config) {
    auto [working, t] = generic_coordinates(curve, config.smoothness_options());
    const PeriodOptions opts = config.period_options();
    MonodromyRep mono = monodromy(NumericCurve(working.polynomial()), branch_points(working), opts.monodromy);
    return {std::move(working), t, std::move(mono)};
}

Report cmd_monodromy(const std::string& path, const Config& config) {
    const PlaneCurve curve = smooth_curve(path, config);
    const Pipeline p = run_monodromy(curve, config);
    Report r{header("monodromy"), "", 0};
    r.doc["d"] = curve.degree();
    r.doc["shear"] = to_string(p.shear);
    r.doc["discriminant_degree"] = p.mono.branch_points.discriminant_degree;
    r.doc["basepoint"] = to_json(p.mono.branch_points.basepoint);
    Json pts = Json::array(), perms = Json::array();
    for (const cplx& z : p.mono.branch_points.points) pts.push_back(to_json(z));
    for (const auto& perm : p.mono.perms) perms.push_back(cycle_notation(perm));
    r.doc["branch_points"] = std::move(pts);
    r.doc["permutations"] = std::move(perms);
    r.doc["at_infinity"] = cycle_notation(p.mono.at_infinity);
    r.doc["product_relation"] = p.mono.product_relation_holds();
    r.doc["transitive"] = p.mono.transitive();
    r.doc["total_branching"] = p.mono.total_branching();
    r.doc["genus_riemann_hurwitz"] = p.mono.genus();
    r.doc["genus_formula"] = genus(curve.degree());
    std::ostringstream os;
    os << "shear: " << to_string(p.shear) << "\nbranch points: " << p.mono.branch_points.points.size()
       << "\ntotal branching: " << p.mono.total_branching() << "\ngenus (Riemann-Hurwitz): " << p.mono.genus()
       << "\ngenus (formula): " << genus(curve.degree()) << "\npermutations:\n";
    for (std::size_t k = 0; k < p.mono.perms.size(); ++k)
        os << "  " << k << " " << format_complex(p.mono.branch_points.points[k]) << " " << cycle_notation(p.mono.perms[k]) << "\n";
    r.text = os.str();
    if (p.mono.genus() != genus(curve.degree())) r.exit_code = 1;
    return r;
}

Report cmd_homology(const std::string& path, const Config& config) {
    const PlaneCurve curve = smooth_curve(path, config);
    const Pipeline p = run_monodromy(curve, config);
    const CanonicalHomology h = canonical_homology(p.mono);
    Report r{header("homology"), "", 0};
    r.doc["d"] = curve.degree();
    r.doc["genus"] = h.genus;
    Json words = Json::array();
    for (const auto& w : h.raw) words.push_back(to_string(w));
    r.doc["raw_cycles"] = std::move(words);
    r.doc["pairing"] = h.pairing;
    Json alpha = Json::array(), beta = Json::array();
    for (int i = 0; i < h.genus; ++i) {
        alpha.push_back(h.alpha(i));
        beta.push_back(h.beta(i));
    }
    r.doc["alpha"] = std::move(alpha);
    r.doc["beta"] = std::move(beta);
    r.doc["change_of_basis_determinant"] = determinant(h.change_of_basis);
    std::ostringstream os;
    os << "genus: " << h.genus << "\nraw cycles: " << h.raw.size() << "\n";
    for (std::size_t i = 0; i < h.raw.size(); ++i) os << "  c" << i << " " << to_string(h.raw[i]) << "\n";
    os << "pairing rank: " << rank(h.pairing) << "\n";
    r.text = os.str();
    return r;
}

Json periods_json(const PeriodMatrix& P) {
    Json j = header("periods");
    j["d"] = P.d;
    j["g"] = P.genus;
    j["shear"] = to_string(P.shear);
    j["basis"] = to_json(P.basis);
    j["A"] = to_json(P.A);
    j["B"] = to_json(P.B);
    j["omega"] = to_json(P.Omega);
    j["diagnostics"] = diagnostics_json(P);
    return j;
}

std::string periods_text(const PeriodMatrix& P) {
    std::ostringstream os;
    os << "degree " << P.d << ", genus " << P.genus << ", shear " << to_string(P.shear) << "\nOmega:\n"
       << format_matrix(P.Omega) << "symmetry residual (relative): " << format_double(P.riemann.sym_residual_relative)
       << "\nmin eigenvalue of Im Omega: " << format_double(P.riemann.min_im_eigenvalue)
       << "\ncondition of A: " << format_double(P.A_condition_estimate)
       << "\nRiemann conditions: " << (P.riemann.pass ? "pass" : "FAIL") << "\n";
    return os.str();
}

Report cmd_periods(const std::string& path, const std::string& out_path, const Config& config) {
    const PlaneCurve curve = smooth_curve(path, config);
    const PeriodMatrix P = period_matrix(curve, config.period_options());
    Report r{periods_json(P), periods_text(P), P.riemann.pass ? 0 : 1};
    if (!out_path.empty()) write_file(out_path, dump_canonical(r.doc));
    return r;
}

Json payload_summary(const CompressedPeriods& payload) {
    const CompressionRatio ratio = compression_ratio(payload);
    Json j;
    j["columns"] = to_json(payload.column_labels);
    j["entries"] = ratio.payload_entries;
    j["full_entries"] = ratio.full_entries;
    j["ratio"] = std::to_string(ratio.payload_entries) + "/" + std::to_string(ratio.full_entries);
    j["ratio_value"] = ratio.value();
    j["tolerance"] = payload.tolerance;
    return j;
}

Report cmd_compress(const std::string& path, const std::string& out_path, const std::string& spec,
                    std::optional<double> tolerance, const Config& config) {
    const PlaneCurve curve = smooth_curve(path, config);
    const PeriodMatrix P = period_matrix(curve, config.period_options());
    if (!P.riemann.pass) throw NumericalError("periods", "period matrix fails the Riemann conditions");
    const CompressedPeriods payload =
        compress(P.Omega, P.d, columns_for(P.d, spec), tolerance.value_or(config.verify_tol));
    const std::string bytes = serialize(payload);
    write_file(out_path, bytes);
    Report r{header("compress"), "", 0};
    r.doc["d"] = P.d;
    r.doc["g"] = P.genus;
    r.doc["payload"] = payload_summary(payload);
    r.doc["bytes"] = bytes.size();
    r.doc["out"] = out_path;
    const CompressionRatio ratio = compression_ratio(payload);
    r.text = "wrote " + out_path + ": " + std::to_string(ratio.payload_entries) + " of " +
             std::to_string(ratio.full_entries) + " entries (ratio " + std::to_string(ratio.payload_entries) + "/" +
             std::to_string(ratio.full_entries) + ")\n";
    return r;
}

Json verify_json(const VerifyResult& v, const CompressedPeriods& payload) {
    Json j;
    j["result"] = v.accept ? "Accept" : "Reject";
    j["max_deviation"] = v.max_deviation;
    j["tolerance"] = payload.tolerance;
    Json worst;
    worst["row"] = v.worst_row;
    worst["column"] = to_string(v.worst_label);
    j["worst_entry"] = std::move(worst);
    j["warnings"] = v.warnings;
    return j;
}

std::string verify_text(const VerifyResult& v) {
    std::string s = std::string(v.accept ? "Accept" : "Reject") + "\nmax deviation: " + format_double(v.max_deviation) +
                    " at row " + std::to_string(v.worst_row) + ", column " + to_string(v.worst_label) + "\n";
    for (const auto& w : v.warnings) s += "warning: " + w + "\n";
    return s;
}

Report cmd_verify(const std::string& payload_path, const std::string& omega_path) {
    const CompressedPeriods payload = deserialize(read_file(payload_path));
    Json cand;
    try {
        cand = Json::parse(read_file(omega_path));
    } catch (const nlohmann::json::exception& e) {
        throw FormatError("verify", omega_path + ": " + e.what());
    }
    if (!cand.contains("omega") || !cand.contains("d")) throw FormatError("verify", "candidate needs 'd' and 'omega'");
    std::optional<std::vector<Monomial>> labels;
    if (cand.contains("basis")) labels = monomials_from_json(cand["basis"]);
    const VerifyResult v = verify(payload, matrix_from_json(cand["omega"]), cand["d"].get<int>(), labels);
    Report r{header("verify"), verify_text(v), v.accept ? 0 : 1};
    r.doc.update(verify_json(v, payload));
    return r;
}

Report cmd_demo(const std::string& path, const Config& config) {
    const PlaneCurve curve = smooth_curve(path, config);
    const PeriodMatrix P = period_matrix(curve, config.period_options());
    const ColumnSet cols = distinguished_columns(P.d).columns;
    const CompressedPeriods sent = compress(P.Omega, P.d, cols, config.verify_tol);
    const std::string bytes = serialize(sent);
    const CompressedPeriods received = deserialize(bytes);
    const VerifyResult v = verify(received, P.Omega, P.d);
    const CompressionRatio ratio = compression_ratio(received);

    Report r{header("demo"), "", v.accept && received == sent ? 0 : 1};
    r.doc["d"] = P.d;
    r.doc["g"] = P.genus;
    r.doc["diagnostics"] = diagnostics_json(P);
    r.doc["payload"] = payload_summary(received);
    r.doc["bytes"] = bytes.size();
    r.doc["round_trip_identical"] = received == sent;
    r.doc["verify"] = verify_json(v, received);
    std::ostringstream os;
    os << "curve of degree " << P.d << ", genus " << P.genus << "\nRiemann conditions: " << (P.riemann.pass ? "pass" : "FAIL")
       << " (symmetry " << format_double(P.riemann.sym_residual_relative) << ", min Im eigenvalue "
       << format_double(P.riemann.min_im_eigenvalue) << ")\nAlice sends columns " << join(received.column_labels) << ": "
       << ratio.payload_entries << "/" << ratio.full_entries << " entries, " << bytes.size() << " bytes\nBob: "
       << verify_text(v);
    r.text = os.str();
    return r;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Period matrices of smooth plane curves and their four-column compression", "planeperiods"};
    app.fallthrough();
    app.require_subcommand(0, 1);

    std::string config_path, format;
    double root_tol = 0, tracking_tol = 0, quad_tol = 0, verify_tol = 0;
    int shear_retries = 0, degree_cap = 0, threads = 0;
    std::uint64_t seed = 0;
    bool show_config = false;
    app.add_option("--config", config_path, "JSON configuration file")->check(CLI::ExistingFile);
    auto* format_opt = app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    auto* root_opt = app.add_option("--root-tol", root_tol, "Root residual tolerance");
    auto* track_opt = app.add_option("--tracking-tol", tracking_tol, "Fiber tracking residual tolerance");
    auto* quad_opt = app.add_option("--quad-tol", quad_tol, "Per-segment quadrature tolerance");
    auto* verify_opt = app.add_option("--verify-tol", verify_tol, "Default payload tolerance");
    auto* shear_opt = app.add_option("--shear-retries", shear_retries, "Shears tried for generic coordinates");
    auto* cap_opt = app.add_option("--degree-cap", degree_cap, "Largest degree accepted by curve commands");
    auto* seed_opt = app.add_option("--seed", seed, "Seed for shear choices");
    auto* threads_opt = app.add_option("--threads", threads, "Worker threads for path integration");
    app.add_flag("--show-config", show_config, "Print the effective configuration and exit");

    int d = 0, max_size = 4;
    std::string columns, curve_path, out_path, payload_path, omega_path;
    std::optional<double> tolerance;

    auto* genus_cmd = app.add_subcommand("genus", "Genus (d-1)(d-2)/2 of a smooth plane curve of degree d");
    genus_cmd->add_option("d", d, "Degree")->required();
    auto* adjoint_cmd = app.add_subcommand("adjoint-basis", "Adjoint monomials of degree <= d-3");
    adjoint_cmd->add_option("d", d, "Degree")->required();
    auto* cover_cmd = app.add_subcommand("cover", "Check that columns cover all monomials of degree <= 2d-6");
    cover_cmd->add_option("d", d, "Degree")->required();
    cover_cmd->add_option("--columns", columns, "Comma-separated column labels (default: distinguished set)");
    auto* min_cover_cmd = app.add_subcommand("min-cover", "Smallest column sets that cover");
    min_cover_cmd->add_option("d", d, "Degree")->required();
    min_cover_cmd->add_option("--max-size", max_size, "Largest set size searched");
    auto* quad_cmd = app.add_subcommand("quad-basis", "Exact basis of quadratic differentials from column products");
    quad_cmd->add_option("--curve", curve_path, "Curve file")->required();
    quad_cmd->add_option("--columns", columns, "Comma-separated column labels (default: distinguished set)");
    auto* mono_cmd = app.add_subcommand("monodromy", "Branch points, monodromy and Riemann-Hurwitz genus");
    mono_cmd->add_option("--curve", curve_path, "Curve file")->required();
    auto* hom_cmd = app.add_subcommand("homology", "Cycle words, intersection pairing and symplectic basis");
    hom_cmd->add_option("--curve", curve_path, "Curve file")->required();
    auto* periods_cmd = app.add_subcommand("periods", "Normalized period matrix and Riemann diagnostics");
    periods_cmd->add_option("--curve", curve_path, "Curve file")->required();
    periods_cmd->add_option("--out", out_path, "Also write the JSON document to this file");
    auto* compress_cmd = app.add_subcommand("compress", "Write the distinguished columns of Omega as a payload");
    compress_cmd->add_option("--curve", curve_path, "Curve file")->required();
    compress_cmd->add_option("--out", out_path, "Payload file")->required();
    compress_cmd->add_option("--columns", columns, "Comma-separated column labels (default: distinguished set)");
    compress_cmd->add_option("--tolerance", tolerance, "Payload tolerance (default: verify_tol)");
    auto* verify_cmd = app.add_subcommand("verify", "Check a candidate period matrix against a payload");
    verify_cmd->add_option("--payload", payload_path, "Payload file")->required()->check(CLI::ExistingFile);
    verify_cmd->add_option("--omega", omega_path, "Candidate JSON with d, omega and optional basis")
        ->required()
        ->check(CLI::ExistingFile);
    auto* demo_cmd = app.add_subcommand("demo", "Full compress / transmit / verify round trip on a curve");
    demo_cmd->add_option("--curve", curve_path, "Curve file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    Config config;
    bool json = false;
    try {
        if (!config_path.empty()) config = load_config(config_path, config);
        if (format_opt->count()) config.format = format;
        if (root_opt->count()) config.root_tol = root_tol;
        if (track_opt->count()) config.tracking_tol = tracking_tol;
        if (quad_opt->count()) config.quad_tol = quad_tol;
        if (verify_opt->count()) config.verify_tol = verify_tol;
        if (shear_opt->count()) config.shear_retries = shear_retries;
        if (cap_opt->count()) config.degree_cap = degree_cap;
        if (seed_opt->count()) config.seed = seed;
        if (threads_opt->count()) config.threads = threads;
        config.validate();
    } catch (const Error& e) {
        err << "error [" << e.stage() << "]: " << e.what() << "\n";
        return 2;
    }
    json = config.format == "json";

    if (show_config) {
        Json doc = header("show-config");
        doc["config"] = to_json(config);
        if (json) {
            out << dump_canonical(doc);
        } else {
            for (auto it = doc["config"].begin(); it != doc["config"].end(); ++it) {
                const Json& v = it.value();
                out << it.key() << " = "
                    << (v.is_string() ? v.get<std::string>() : v.is_number_float() ? format_double(v.get<double>()) : v.dump())
                    << "\n";
            }
        }
        return 0;
    }
    if (app.get_subcommands().empty()) {
        err << app.help();
        return 2;
    }

    const CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    std::function<Report()> handler;
    if (cmd == genus_cmd) handler = [&] { return cmd_genus(d); };
    else if (cmd == adjoint_cmd) handler = [&] { return cmd_adjoint_basis(d); };
    else if (cmd == cover_cmd) handler = [&] { return cmd_cover(d, columns); };
    else if (cmd == min_cover_cmd) handler = [&] { return cmd_min_cover(d, max_size); };
    else if (cmd == quad_cmd) handler = [&] { return cmd_quad_basis(curve_path, columns, config); };
    else if (cmd == mono_cmd) handler = [&] { return cmd_monodromy(curve_path, config); };
    else if (cmd == hom_cmd) handler = [&] { return cmd_homology(curve_path, config); };
    else if (cmd == periods_cmd) handler = [&] { return cmd_periods(curve_path, out_path, config); };
    else if (cmd == compress_cmd) handler = [&] { return cmd_compress(curve_path, out_path, columns, tolerance, config); };
    else if (cmd == verify_cmd) handler = [&] { return cmd_verify(payload_path, omega_path); };
    else handler = [&] { return cmd_demo(curve_path, config); };

    try {
        const Report r = handler();
        if (json)
            out << dump_canonical(r.doc);
        else
            out << r.text;
        return r.exit_code;
    } catch (const Error& e) {
        // Bad input is a usage error; everything else is a failed stage.
        const bool input = dynamic_cast<const InvalidArgument*>(&e) || dynamic_cast<const FormatError*>(&e) ||
                           dynamic_cast<const MetadataMismatch*>(&e);
        const int code = input ? 2 : 1;
        err << "error [" << e.stage() << "]: " << e.what() << "\n";
        if (json) {
            Json doc = header(name);
            doc["error"] = {{"stage", e.stage()}, {"message", e.what()}};
            out << dump_canonical(doc);
        }
        return code;
    }
}

}  // namespace planeperiods
