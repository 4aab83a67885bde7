// Command line front end: generate fixture systems, analyze a
// multiplier, check translation systems on Z_N, render reports,
// and run a randomized self-check.
//
// Exit codes: 0 success, 1 failed mathematical check or failed
// convergence, 2 input or usage error.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "framescope/eigen.hpp"
#include "framescope/errors.hpp"
#include "framescope/fixtures.hpp"
#include "framescope/frames.hpp"
#include "framescope/group.hpp"
#include "framescope/io.hpp"
#include "framescope/localization.hpp"
#include "framescope/multipliers.hpp"
#include "framescope/report.hpp"
#include "framescope/rng.hpp"
#include "framescope/svg.hpp"
#include "framescope/version.hpp"

namespace fs = std::filesystem;
using namespace framescope;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("FRAMESCOPE_SEED")) {
        try {
            std::size_t pos = 0;
            const std::string text(env);
            const unsigned long long value = std::stoull(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return static_cast<std::uint64_t>(value);
        } catch (const std::exception&) {
            throw ParseError("FRAMESCOPE_SEED is not an unsigned integer: " +
                             std::string(env));
        }
    }
    return 1;
}

// pair.json -> pair.phi.json; keeps the extension if one is present.
fs::path tagged_path(const fs::path& out, const std::string& tag) {
    fs::path stem = out;
    const std::string ext = out.has_extension() ? out.extension().string() : ".json";
    stem.replace_extension();
    return fs::path(stem.string() + "." + tag + ext);
}

void emit(const std::string& text, const std::optional<std::string>& out_path) {
    if (out_path) {
        write_text_file(*out_path, text);
    } else {
        std::cout << text;
    }
}

InputRecord describe_frame(const std::string& path, const FrameSystem& system) {
    InputRecord record;
    record.path = path;
    record.label = system.label();
    record.dim = system.dim();
    record.count = system.count();
    record.hash = file_hash(path);
    return record;
}

SymbolRecord describe_symbol(const std::string& path, const Symbol& symbol) {
    SymbolRecord record;
    record.path = path;
    record.count = symbol.size();
    record.sup_modulus = symbol.sup_modulus();
    record.real_valued = symbol.is_real();
    record.hash = file_hash(path);
    return record;
}

double max_column_gap(const FrameSystem& a, const FrameSystem& b) {
    double gap = 0.0;
    for (std::size_t k = 0; k < a.count(); ++k) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            gap = std::max(gap, std::abs(a.vector(k)[j] - b.vector(k)[j]));
        }
    }
    return gap;
}

// ---------------------------------------------------------------- gen

struct GenOptions {
    std::string kind;
    std::size_t dim = 0;
    std::optional<std::size_t> count;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int run_gen(const GenOptions& opt) {
    const std::uint64_t seed = resolve_seed(opt.seed);
    Rng rng(seed);

    auto finalize = [&](FrameSystem system, const fs::path& path) {
        system.set_label(system.label() + "-seed" + std::to_string(seed));
        save_frame(system, path);
        std::cout << path.string() << "\n";
    };

    if (opt.kind == "gaussian" || opt.kind == "parseval" || opt.kind == "riesz") {
        std::size_t count = opt.count.value_or(opt.dim);
        if (opt.kind == "riesz") {
            if (opt.count && *opt.count != opt.dim)
                throw ParseError("riesz systems are square; omit --n or set it to --d");
            count = opt.dim;
        } else if (!opt.count) {
            throw ParseError("kind '" + opt.kind + "' needs --n");
        }
        FrameSystem system = opt.kind == "gaussian" ? gaussian_system(opt.dim, count, rng)
                           : opt.kind == "parseval" ? parseval_system(opt.dim, count, rng)
                                                    : riesz_basis(opt.dim, rng);
        finalize(std::move(system), opt.out);
        return kExitOk;
    }

    if (opt.kind == "dual-pair") {
        if (!opt.count) throw ParseError("kind 'dual-pair' needs --n");
        auto [phi, psi] = dual_pair_system(opt.dim, *opt.count, rng);
        finalize(std::move(phi), tagged_path(opt.out, "phi"));
        finalize(std::move(psi), tagged_path(opt.out, "psi"));
        return kExitOk;
    }

    if (opt.kind == "strictness") {
        if (opt.count && *opt.count != opt.dim)
            throw ParseError("the strictness fixture is square; omit --n or set it to --d");
        StrictnessFixture fixture = strictness_fixture(opt.dim);
        finalize(std::move(fixture.phi), tagged_path(opt.out, "phi"));
        finalize(std::move(fixture.psi), tagged_path(opt.out, "psi"));
        const fs::path symbol_path = tagged_path(opt.out, "m");
        save_symbol(fixture.symbol, symbol_path);
        std::cout << symbol_path.string() << "\n";
        return kExitOk;
    }

    throw ParseError("unknown kind: " + opt.kind);
}

// ------------------------------------------------------------ analyze

struct AnalyzeOptions {
    std::string phi;
    std::string psi;
    std::string symbol;
    std::optional<std::string> out;
    std::optional<double> tol;
    std::optional<std::size_t> band;
};

int run_analyze(const AnalyzeOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();

    const FrameSystem phi = load_frame(opt.phi);
    const FrameSystem psi = load_frame(opt.psi);
    const Symbol symbol = load_symbol(opt.symbol);

    SpectralReport report;
    report.tool = "framescope";
    report.version = version;
    report.phi = describe_frame(opt.phi, phi);
    report.psi = describe_frame(opt.psi, psi);
    report.symbol = describe_symbol(opt.symbol, symbol);

    const ComplexMatrix full = multiplier_matrix(symbol, phi, psi);
    const ComplexMatrix reduced = reduced_matrix(symbol, phi, psi);
    const EigenResult full_eig = eig_general(full);
    const EigenResult reduced_eig = eig_general(reduced);
    report.eigenvalues_multiplier = full_eig.eigenvalues;
    report.eigenvalues_reduced = reduced_eig.eigenvalues;
    report.radius_eigen = spectral_radius_eigen(full_eig);
    report.radius_eigen_reduced = spectral_radius_eigen(reduced_eig);
    report.radius_gap = std::abs(report.radius_eigen - report.radius_eigen_reduced);

    report.radius_gelfand = spectral_radius_gelfand(full, gelfand_default_exponents());
    report.gelfand_eigen_gap =
        std::abs(report.radius_gelfand.back().value - report.radius_eigen);

    report.bounds = bounds_ledger(symbol, phi, psi, opt.band);

    const DualityCheck duality = is_dual_pair(phi, psi, 1e-8);
    report.duality_defect = duality.defect;
    report.dual_pair = duality.dual;
    report.canonical_dual_pair = false;
    if (duality.dual) {
        try {
            const FrameSystem canonical = canonical_dual(phi);
            double scale = 1.0;
            for (std::size_t k = 0; k < psi.count(); ++k)
                for (std::size_t j = 0; j < psi.dim(); ++j)
                    scale = std::max(scale, std::abs(psi.vector(k)[j]));
            report.canonical_dual_pair =
                max_column_gap(psi, canonical) <= 1e-8 * scale;
        } catch (const DomainError&) {
            report.canonical_dual_pair = false;
        }
    }

    const double tol = opt.tol.value_or(default_certificate_tol(report.radius_eigen));
    auto add_certificate = [&](const std::string& name, const SpectralRegion& region) {
        CertificateRecord record;
        record.name = name;
        record.certificate = certify(region, full_eig, tol);
        report.certificates.push_back(std::move(record));
    };

    add_certificate("norm-product-disk",
                    SpectralRegion::make_disk({0.0, 0.0}, report.bounds.prop1));
    add_certificate("gram-disk",
                    SpectralRegion::make_disk({0.0, 0.0}, report.bounds.thm1));
    if (duality.dual) {
        add_certificate("symbol-disk",
                        region_symbol_disk(symbol, phi, psi, std::nullopt));
        if (symbol.is_real())
            add_certificate("real-symbol-disk", region_real_symbol(symbol, phi, psi));
        if (report.canonical_dual_pair)
            add_certificate("symbol-hull", region_convex_hull(symbol));
    }

    const auto t1 = std::chrono::steady_clock::now();
    report.total_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    emit(serialize_report(report), opt.out);

    int exit_code = kExitOk;
    for (const CertificateRecord& record : report.certificates) {
        if (record.certificate.overall) continue;
        double worst = std::numeric_limits<double>::infinity();
        for (double margin : record.certificate.margins) worst = std::min(worst, margin);
        std::cerr << "containment '" << record.name
                  << "' violated: worst margin " << worst << "\n";
        exit_code = kExitCheckFailed;
    }
    return exit_code;
}

// -------------------------------------------------------------- group

struct GroupOptions {
    std::string chi;
    std::string eta;
    std::string symbol;
    std::optional<std::string> out;
};

int run_group(const GroupOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();

    const CyclicWindow chi = load_window(opt.chi);
    const CyclicWindow eta = load_window(opt.eta);
    const Symbol symbol = load_symbol(opt.symbol);
    if (eta.size() != chi.size())
        throw ShapeError("windows live on different groups: Z_" +
                         std::to_string(chi.size()) + " vs Z_" +
                         std::to_string(eta.size()));

    GroupReport report;
    report.tool = "framescope";
    report.version = version;
    report.chi_path = opt.chi;
    report.chi_hash = file_hash(opt.chi);
    report.eta_path = opt.eta;
    report.eta_hash = file_hash(opt.eta);
    report.symbol_path = opt.symbol;
    report.symbol_hash = file_hash(opt.symbol);
    report.order = chi.size();

    report.bracket_values = bracket(chi, eta).values;
    report.normalization_constant = circulant_eigenvalue_scale(chi.size());
    report.gram_norm_bracket = gram_norm_via_bracket(chi, eta);

    const FrameSystem chi_system = translation_system(chi);
    const FrameSystem eta_system = translation_system(eta);
    report.gram_norm_dense =
        operator_norm(cross_gram(chi_system, eta_system), 1e-12);
    report.gram_norm_gap =
        std::abs(report.gram_norm_bracket - report.gram_norm_dense);

    const CyclicWindow chi_hat = dft(chi);
    double lower = std::numeric_limits<double>::infinity();
    double upper = 0.0;
    for (const Complex& value : chi_hat.samples()) {
        const double power = std::norm(value);
        lower = std::min(lower, power);
        upper = std::max(upper, power);
    }
    report.frame_lower = lower;
    report.frame_upper = upper;
    report.chi_is_frame = lower > 1e-12 * upper;

    report.radius_bound = multiplier_radius_bound_group(symbol, chi, eta);
    const ComplexMatrix full = multiplier_matrix(symbol, chi_system, eta_system);
    report.radius_eigen = spectral_radius_eigen(eig_general(full));
    report.bound_slack = report.radius_bound - report.radius_eigen;

    const auto t1 = std::chrono::steady_clock::now();
    report.total_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

    emit(serialize_group_report(report), opt.out);

    int exit_code = kExitOk;
    if (report.gram_norm_gap > 1e-9 * std::max(1.0, report.gram_norm_dense)) {
        std::cerr << "bracket and dense Gram norms disagree: gap "
                  << report.gram_norm_gap << "\n";
        exit_code = kExitCheckFailed;
    }
    if (report.bound_slack < -1e-8 * std::max(1.0, report.radius_bound)) {
        std::cerr << "spectral radius exceeds the translation bound: slack "
                  << report.bound_slack << "\n";
        exit_code = kExitCheckFailed;
    }
    return exit_code;
}

// --------------------------------------------------------------- plot

struct PlotOptions {
    std::string report;
    std::string out;
};

int run_plot(const PlotOptions& opt) {
    const SpectralReport report = parse_report(read_text_file(opt.report));
    write_text_file(opt.out, render_spectrum_svg(report));
    std::cout << opt.out << "\n";
    return kExitOk;
}

// ------------------------------------------------------------- verify

struct VerifyOptions {
    std::optional<std::uint64_t> seed;
    std::size_t trials = 20;
    std::string sizes = "6x12,8x16";
    double tol = 1e-8;
};

struct SizeSpec {
    std::size_t dim;
    std::size_t count;
};

std::vector<SizeSpec> parse_sizes(const std::string& text) {
    std::vector<SizeSpec> sizes;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string::npos) end = text.size();
        const std::string item = text.substr(start, end - start);
        const std::size_t cross = item.find('x');
        if (item.empty() || cross == std::string::npos)
            throw ParseError("--sizes expects entries like 6x12, got: " + text);
        try {
            const std::size_t dim = std::stoull(item.substr(0, cross));
            const std::size_t count = std::stoull(item.substr(cross + 1));
            if (dim == 0 || count == 0) throw std::invalid_argument(item);
            sizes.push_back({dim, count});
        } catch (const std::exception&) {
            throw ParseError("--sizes expects entries like 6x12, got: " + item);
        }
        start = end + 1;
    }
    if (sizes.empty()) throw ParseError("--sizes is empty");
    return sizes;
}

// Every check reduces to a slack that must stay nonnegative.
struct CheckStat {
    std::string name;
    long instances = 0;
    long failures = 0;
    double worst = std::numeric_limits<double>::infinity();

    void note(double slack) {
        ++instances;
        worst = std::min(worst, slack);
        if (slack < 0.0) ++failures;
    }
};

int run_verify(const VerifyOptions& opt) {
    const std::uint64_t seed = resolve_seed(opt.seed);
    const std::vector<SizeSpec> sizes = parse_sizes(opt.sizes);
    const Rng rng(seed);

    CheckStat radius_equality{"radius-equality"};
    CheckStat bound_chain{"bound-chain"};
    CheckStat schur_dominates{"schur-dominates"};
    CheckStat spectrum_match{"spectrum-match"};
    CheckStat gelfand_monotone{"gelfand-monotone"};
    CheckStat gelfand_above{"gelfand-above-radius"};
    CheckStat dual_gram{"dual-gram-lower"};
    CheckStat contain_disk{"containment-symbol-disk"};
    CheckStat contain_real{"containment-real-disk"};
    CheckStat contain_hull{"containment-symbol-hull"};
    CheckStat nesting{"region-nesting"};
    CheckStat strictness{"strictness-exact"};

    std::uint64_t stream = 0;
    for (const SizeSpec& size : sizes) {
        for (std::size_t trial = 0; trial < opt.trials; ++trial) {
            const Rng local = rng.split(++stream);
            Rng phi_rng = local.split(1);
            Rng psi_rng = local.split(2);
            Rng sym_rng = local.split(3);
            const FrameSystem phi = gaussian_system(size.dim, size.count, phi_rng);
            const FrameSystem psi = gaussian_system(size.dim, size.count, psi_rng);
            const Symbol symbol = random_symbol(size.count, 2.0, sym_rng);

            const ComplexMatrix full = multiplier_matrix(symbol, phi, psi);
            const ComplexMatrix reduced = reduced_matrix(symbol, phi, psi);
            const EigenResult full_eig = eig_general(full);
            const EigenResult reduced_eig = eig_general(reduced);
            const double r_full = spectral_radius_eigen(full_eig);
            const double r_reduced = spectral_radius_eigen(reduced_eig);
            const double scale = 1.0 + std::max(r_full, r_reduced);

            radius_equality.note(opt.tol * scale - std::abs(r_full - r_reduced));

            const BoundsLedger bounds = bounds_ledger(symbol, phi, psi, std::nullopt);
            bound_chain.note(bounds.thm1 + opt.tol * scale - r_full);
            bound_chain.note(bounds.prop1 + opt.tol * scale - bounds.thm1);
            schur_dominates.note(symbol.sup_modulus() * *bounds.schur +
                                 opt.tol * scale - bounds.thm1);

            // Nonzero spectra of DC and CD agree; greedy matching by modulus.
            {
                const double cutoff = 1e-7 * scale;
                std::vector<Complex> a;
                std::vector<Complex> b;
                for (const Complex& z : full_eig.eigenvalues)
                    if (std::abs(z) > cutoff) a.push_back(z);
                for (const Complex& z : reduced_eig.eigenvalues)
                    if (std::abs(z) > cutoff) b.push_back(z);
                double slack = opt.tol * scale;
                if (a.size() != b.size()) {
                    slack = -1.0;
                } else {
                    std::vector<bool> used(b.size(), false);
                    double worst_gap = 0.0;
                    for (const Complex& z : a) {
                        double best = std::numeric_limits<double>::infinity();
                        std::size_t best_index = b.size();
                        for (std::size_t j = 0; j < b.size(); ++j) {
                            if (used[j]) continue;
                            const double gap = std::abs(z - b[j]);
                            if (gap < best) {
                                best = gap;
                                best_index = j;
                            }
                        }
                        if (best_index == b.size()) break;
                        used[best_index] = true;
                        worst_gap = std::max(worst_gap, best);
                    }
                    slack = 1e-6 * scale - worst_gap;
                }
                spectrum_match.note(slack);
            }

            const std::vector<GelfandEstimate> gelfand =
                spectral_radius_gelfand(full, gelfand_default_exponents());
            double monotone_slack = std::numeric_limits<double>::infinity();
            for (std::size_t i = 1; i < gelfand.size(); ++i)
                monotone_slack = std::min(monotone_slack,
                                          gelfand[i - 1].value - gelfand[i].value +
                                              1e-9 * scale);
            gelfand_monotone.note(monotone_slack);
            gelfand_above.note(gelfand.back().value - r_full + 1e-9 * scale);
        }

        // Canonical dual pairs need at least dim vectors.
        const std::size_t dual_count = std::max(size.count, size.dim);
        for (std::size_t trial = 0; trial < opt.trials; ++trial) {
            const Rng local = rng.split(++stream);
            Rng phi_rng = local.split(1);
            Rng sym_rng = local.split(2);
            Rng real_rng = local.split(3);
            const FrameSystem phi = gaussian_system(size.dim, dual_count, phi_rng);
            const FrameSystem psi = canonical_dual(phi);
            const Symbol symbol = random_symbol_in_disk(
                dual_count, {0.5, -0.25}, 1.5, sym_rng);
            const Symbol real_symbol = random_real_symbol(dual_count, 2.0, real_rng);

            const double gram = operator_norm(cross_gram(phi, psi), 1e-12);
            dual_gram.note(gram - 1.0 + 1e-9);

            const ComplexMatrix full = multiplier_matrix(symbol, phi, psi);
            const EigenResult full_eig = eig_general(full);
            const double r = spectral_radius_eigen(full_eig);
            const double tol = opt.tol * (1.0 + r);

            const SpectralRegion disk =
                region_symbol_disk(symbol, phi, psi, std::nullopt);
            const ContainmentCertificate disk_cert = certify(disk, full_eig, tol);
            double worst = std::numeric_limits<double>::infinity();
            for (double margin : disk_cert.margins) worst = std::min(worst, margin);
            contain_disk.note(worst + tol);

            const ComplexMatrix real_full = multiplier_matrix(real_symbol, phi, psi);
            const EigenResult real_eig = eig_general(real_full);
            const double real_tol =
                opt.tol * (1.0 + spectral_radius_eigen(real_eig));
            const SpectralRegion real_disk =
                region_real_symbol(real_symbol, phi, psi);
            const ContainmentCertificate real_cert =
                certify(real_disk, real_eig, real_tol);
            worst = std::numeric_limits<double>::infinity();
            for (double margin : real_cert.margins) worst = std::min(worst, margin);
            contain_real.note(worst + real_tol);

            const SpectralRegion hull = region_convex_hull(symbol);
            const ContainmentCertificate hull_cert = certify(hull, full_eig, tol);
            worst = std::numeric_limits<double>::infinity();
            for (double margin : hull_cert.margins) worst = std::min(worst, margin);
            contain_hull.note(worst + tol);

            // The Gram-norm disk nests inside the frame-bound disk with the
            // same center: ||G|| never exceeds sqrt(B_phi B_psi).
            const FrameBounds phi_bounds = frame_bounds(phi);
            const FrameBounds psi_bounds = frame_bounds(psi);
            const double product =
                std::sqrt(phi_bounds.upper * psi_bounds.upper);
            nesting.note((1.0 + 1e-9) * product - gram);
        }
    }

    // Fixed instance with every inequality strict: phi an orthonormal basis,
    // psi rescaled so the product of the sups overshoots while M stays the
    // identity.
    {
        const StrictnessFixture fixture = strictness_fixture(6);
        const ComplexMatrix full =
            multiplier_matrix(fixture.symbol, fixture.phi, fixture.psi);
        const EigenResult eig = eig_general(full);
        const double r = spectral_radius_eigen(eig);
        const BoundsLedger bounds =
            bounds_ledger(fixture.symbol, fixture.phi, fixture.psi, std::nullopt);
        double identity_gap = 0.0;
        for (std::size_t i = 0; i < full.rows(); ++i)
            for (std::size_t j = 0; j < full.cols(); ++j)
                identity_gap = std::max(
                    identity_gap,
                    std::abs(full(i, j) - (i == j ? Complex{1.0, 0.0}
                                                  : Complex{0.0, 0.0})));
        strictness.note(1e-12 - identity_gap);
        strictness.note(1e-12 - std::abs(r - 1.0));
        strictness.note(1e-12 - std::abs(bounds.thm1 - 4.0));
        strictness.note(1e-12 - std::abs(bounds.prop1 - 4.0));
        strictness.note(bounds.thm1 - r - 1.0);
    }

    const std::vector<const CheckStat*> stats = {
        &radius_equality, &bound_chain,    &schur_dominates, &spectrum_match,
        &gelfand_monotone, &gelfand_above, &dual_gram,       &contain_disk,
        &contain_real,     &contain_hull,  &nesting,         &strictness};

    long total_failures = 0;
    for (const CheckStat* stat : stats) {
        total_failures += stat->failures;
        std::printf("%-26s instances %4ld  failures %3ld  worst slack %.3e\n",
                    stat->name.c_str(), stat->instances, stat->failures,
                    stat->worst);
    }
    std::printf("verify: %s (seed %llu, trials %zu, sizes %s)\n",
                total_failures == 0 ? "PASS" : "FAIL",
                static_cast<unsigned long long>(seed), opt.trials,
                opt.sizes.c_str());
    return total_failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral bounds and localization for frame multipliers"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("framescope ") + version);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand(
        "gen", "generate deterministic frame systems and symbols");
    gen_cmd->add_option("kind", gen.kind,
                        "gaussian | parseval | riesz | dual-pair | strictness")
        ->required();
    gen_cmd->add_option("--d", gen.dim, "ambient dimension")->required();
    gen_cmd->add_option("--n", gen.count, "number of vectors");
    gen_cmd->add_option("--seed", gen.seed, "random seed (default: FRAMESCOPE_SEED or 1)");
    gen_cmd->add_option("--out", gen.out, "output path")->required();

    AnalyzeOptions analyze;
    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "spectrum, bounds and containment certificates for a multiplier");
    analyze_cmd->add_option("--phi", analyze.phi, "synthesis system (JSON)")->required();
    analyze_cmd->add_option("--psi", analyze.psi, "analysis system (JSON)")->required();
    analyze_cmd->add_option("--symbol", analyze.symbol, "symbol (JSON)")->required();
    analyze_cmd->add_option("--out", analyze.out, "report path (default: stdout)");
    analyze_cmd->add_option("--tol", analyze.tol, "certificate tolerance");
    analyze_cmd->add_option("--band", analyze.band, "bandwidth for the banded bound");

    GroupOptions group;
    CLI::App* group_cmd = app.add_subcommand(
        "group", "translation systems on Z_N: bracket, norms and radius bound");
    group_cmd->add_option("--chi", group.chi, "window generating the synthesis system")
        ->required();
    group_cmd->add_option("--eta", group.eta, "window generating the analysis system")
        ->required();
    group_cmd->add_option("--symbol", group.symbol, "symbol (JSON)")->required();
    group_cmd->add_option("--out", group.out, "report path (default: stdout)");

    PlotOptions plot;
    CLI::App* plot_cmd = app.add_subcommand(
        "plot", "render a spectrum report as SVG");
    plot_cmd->add_option("report", plot.report, "report JSON produced by analyze")
        ->required();
    plot_cmd->add_option("--out", plot.out, "SVG output path")->required();

    VerifyOptions verify;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "randomized self-check of the spectral identities");
    verify_cmd->add_option("--seed", verify.seed,
                           "random seed (default: FRAMESCOPE_SEED or 1)");
    verify_cmd->add_option("--trials", verify.trials, "trials per size");
    verify_cmd->add_option("--sizes", verify.sizes, "comma separated dxn list");
    verify_cmd->add_option("--tol", verify.tol, "comparison tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen_cmd->parsed()) return run_gen(gen);
        if (analyze_cmd->parsed()) return run_analyze(analyze);
        if (group_cmd->parsed()) return run_group(group);
        if (plot_cmd->parsed()) return run_plot(plot);
        if (verify_cmd->parsed()) return run_verify(verify);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ShapeError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConvergenceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const ScaleError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
