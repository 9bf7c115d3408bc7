// fadres: enhancement-factor evaluation, resonance scans and unit
// conversion for a light particle exchanged between two heavy bodies.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fadres/enhancement.hpp"
#include "fadres/scanner.hpp"
#include "fadres/twobody.hpp"
#include "fadres/units.hpp"
#include "fadres/version.hpp"
#include "result_io.hpp"

using nlohmann::ordered_json;
using namespace fadres;

namespace {

struct Options {
    std::optional<double> lambda;
    std::optional<double> t0;
    std::optional<double> rho;
    std::optional<double> beta;
    std::optional<double> tol;
    std::optional<std::string> variant;
    std::optional<std::string> t0_range;
    std::optional<std::string> rho_range;
    std::optional<std::string> interval;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::string config_path;
};

struct Range {
    double lo, hi;
    int n = 0; // 0 when the spec was given as "a:b"
};

Range parse_range(const std::string& text, bool need_count) {
    Range r;
    char extra;
    const int got3 = std::sscanf(text.c_str(), "%lf:%lf:%d%c", &r.lo, &r.hi, &r.n, &extra);
    if (got3 == 3) {
        if (!(r.lo < r.hi) || r.n < 2)
            throw DomainError("range must be a:b:n with a < b and n >= 2");
        return r;
    }
    const int got2 = std::sscanf(text.c_str(), "%lf:%lf%c", &r.lo, &r.hi, &extra);
    if (got2 == 2 && !need_count) {
        if (!(r.lo < r.hi)) throw DomainError("range must satisfy a < b");
        r.n = 0;
        return r;
    }
    throw DomainError("cannot parse range '" + text + "' (expected a:b"
                      + std::string(need_count ? ":n" : "[:n]") + ")");
}

enhancement::Variant parse_variant(const std::string& name) {
    if (name == "summed") return enhancement::Variant::summed;
    if (name == "diagonal") return enhancement::Variant::diagonal;
    if (name == "offdiag") return enhancement::Variant::off_diagonal;
    throw DomainError("unknown variant '" + name
                      + "' (expected summed|diagonal|offdiag)");
}

int env_threads() {
    const char* raw = std::getenv("FADRES_THREADS");
    if (!raw || !*raw) return 0;
    const int n = std::atoi(raw);
    if (n < 1) throw DomainError("FADRES_THREADS must be a positive integer");
    return n;
}

void add_shared(CLI::App* cmd, Options& o) {
    cmd->add_option("--lambda", o.lambda, "dark-heavy coupling constant");
    cmd->add_option("--variant", o.variant, "contraction: summed|diagonal|offdiag");
    cmd->add_option("--t0", o.t0, "dimensionless wavenumber");
    cmd->add_option("--t0-range", o.t0_range, "t0 range a:b:n");
    cmd->add_option("--rho", o.rho, "dimensionless half-separation");
    cmd->add_option("--rho-range", o.rho_range, "rho range a:b:n");
    cmd->add_option("--interval", o.interval, "t0 interval a:b for Xi");
    cmd->add_option("--beta", o.beta, "potential parameter in cm^-1");
    cmd->add_option("--tol", o.tol, "numerical tolerance");
    cmd->add_option("--format", o.format, "output format: csv|json");
    cmd->add_option("--out", o.out, "output path (default stdout)");
    cmd->add_option("--config", o.config_path, "JSON config mirroring the flags");
}

// Flags win over the config file; the file fills whatever was not given.
void merge_config(Options& o) {
    if (o.config_path.empty()) return;
    std::ifstream f(o.config_path);
    if (!f) throw DomainError("cannot open config file: " + o.config_path);
    ordered_json doc;
    try {
        doc = ordered_json::parse(f);
    } catch (const std::exception& e) {
        throw DomainError(std::string("config parse failure: ") + e.what());
    }

    auto num = [&doc](const char* key, std::optional<double>& slot) {
        if (!slot && doc.contains(key)) slot = doc[key].get<double>();
    };
    auto str = [&doc](const char* key, std::optional<std::string>& slot) {
        if (!slot && doc.contains(key)) slot = doc[key].get<std::string>();
    };
    num("lambda", o.lambda);
    num("t0", o.t0);
    num("rho", o.rho);
    num("beta", o.beta);
    num("tol", o.tol);
    str("variant", o.variant);
    str("t0-range", o.t0_range);
    str("rho-range", o.rho_range);
    str("interval", o.interval);
    str("format", o.format);
    str("out", o.out);
}

struct Effective {
    double lambda;
    enhancement::Variant variant;
    std::string variant_name;
    std::string format;
    std::string out;
    double tol;
};

Effective settle(Options& o, double default_tol) {
    merge_config(o);
    Effective e;
    e.lambda = o.lambda.value_or(0.0);
    e.variant_name = o.variant.value_or("summed");
    e.variant = parse_variant(e.variant_name);
    e.format = o.format.value_or("csv");
    if (e.format != "csv" && e.format != "json")
        throw DomainError("format must be csv or json");
    e.out = o.out.value_or("");
    e.tol = o.tol.value_or(default_tol);
    if (!(e.tol > 0.0)) throw DomainError("tol must be positive");
    return e;
}

numerics::QuadratureSpec quad_spec(double tol) {
    numerics::QuadratureSpec s;
    s.abs_tol = tol;
    s.rel_tol = tol;
    s.max_subdivisions = 4000;
    return s;
}

cli::ResultSet base_result(const char* command, const Effective& e) {
    cli::ResultSet rs;
    rs.metadata["artifact"] = "fadres";
    rs.metadata["version"] = fadres::version;
    rs.metadata["command"] = command;
    rs.metadata["lambda"] = e.lambda;
    rs.metadata["variant"] = e.variant_name;
    rs.metadata["format"] = e.format;
    return rs;
}

double require(const std::optional<double>& v, const char* what) {
    if (!v) throw DomainError(std::string("missing required value: ") + what);
    return *v;
}

int cmd_xi(Options& o) {
    const Effective e = settle(o, 1e-8);
    const double t0 = require(o.t0, "--t0");
    const double rho = require(o.rho, "--rho");

    const auto factor = enhancement::xi(twobody::Coupling{e.lambda}, t0,
                                        threebody::Separation(rho), e.variant);
    const auto regime = enhancement::classify(factor);

    cli::ResultSet rs = base_result("xi", e);
    rs.metadata["t0"] = t0;
    rs.metadata["rho"] = rho;
    rs.columns = {"lambda", "t0", "rho", "re_xi", "im_xi", "abs_xi", "regime"};
    rs.rows.push_back({e.lambda, t0, rho, factor.value.real(),
                       factor.value.imag(), std::abs(factor.value),
                       enhancement::regime_name(regime)});
    cli::write_output(rs, e.format, e.out);
    return 0;
}

int cmd_surface(Options& o) {
    const Effective e = settle(o, 1e-8);
    if (!o.t0_range || !o.rho_range)
        throw DomainError("surface needs --t0-range a:b:n and --rho-range a:b:n");
    const Range tr = parse_range(*o.t0_range, true);
    const Range rr = parse_range(*o.rho_range, true);

    scanner::ScanGrid grid;
    grid.t0_lo = tr.lo;
    grid.t0_hi = tr.hi;
    grid.n_t0 = tr.n;
    grid.rho_lo = rr.lo;
    grid.rho_hi = rr.hi;
    grid.n_rho = rr.n;
    grid.lambda = twobody::Coupling{e.lambda};
    grid.variant = e.variant;

    const auto samples = scanner::scan_surface(grid, env_threads());

    cli::ResultSet rs = base_result("surface", e);
    rs.metadata["t0_range"] = *o.t0_range;
    rs.metadata["rho_range"] = *o.rho_range;
    rs.columns = {"t0", "rho", "re_xi", "im_xi", "abs_xi", "denom_abs",
                  "singular_flag"};
    rs.rows.reserve(samples.size());
    for (const auto& s : samples)
        rs.rows.push_back({s.t0, s.rho, s.xi.real(), s.xi.imag(),
                           std::abs(s.xi), s.denom_abs, s.singular});
    cli::write_output(rs, e.format, e.out);
    return 0;
}

int cmd_bigxi(Options& o) {
    const Effective e = settle(o, 1e-8);
    double ilo = 0.001, ihi = 0.6;
    if (o.interval) {
        const Range ir = parse_range(*o.interval, false);
        ilo = ir.lo;
        ihi = ir.hi;
    }

    std::vector<double> rhos;
    if (o.rho_range) {
        const Range rr = parse_range(*o.rho_range, true);
        for (int k = 0; k < rr.n; ++k)
            rhos.push_back(k == rr.n - 1
                               ? rr.hi
                               : rr.lo + (rr.hi - rr.lo) * k / (rr.n - 1));
    } else {
        rhos.push_back(require(o.rho, "--rho or --rho-range"));
    }

    cli::ResultSet rs = base_result("bigxi", e);
    rs.metadata["interval"] = std::to_string(ilo) + ":" + std::to_string(ihi);
    rs.metadata["tol"] = e.tol;
    rs.columns = {"rho", "re_Xi", "im_Xi", "abs_Xi"};

    ordered_json excluded = ordered_json::array();
    const auto spec = quad_spec(e.tol);
    for (const double rho : rhos) {
        const auto agg =
            enhancement::big_xi(twobody::Coupling{e.lambda},
                                threebody::Separation(rho), ilo, ihi, spec,
                                e.variant);
        for (const double x : agg.excluded) excluded.push_back(x);
        rs.rows.push_back({rho, agg.value.real(), agg.value.imag(),
                           std::abs(agg.value)});
    }
    rs.metadata["excluded_t0"] = excluded;
    cli::write_output(rs, e.format, e.out);
    return 0;
}

int cmd_resonances(Options& o) {
    const Effective e = settle(o, 1e-12);
    const double t0 = require(o.t0, "--t0");
    if (!o.rho_range) throw DomainError("resonances needs --rho-range a:b");
    const Range rr = parse_range(*o.rho_range, false);

    // flag an attendant two-body bound state before the continuum scan
    if (e.lambda < -1.0) {
        numerics::RootFindSpec ps;
        const auto pole =
            twobody::find_pair_pole(twobody::Coupling{e.lambda}, ps);
        if (pole.kind == twobody::PoleKind::bound)
            std::fprintf(stderr,
                         "warning: two-body bound state at t0 = %.6gi "
                         "accompanies this coupling\n",
                         pole.location.imag());
    }

    numerics::RootFindSpec spec;
    spec.tol = e.tol;
    const auto recs =
        scanner::find_resonances(twobody::Coupling{e.lambda}, t0, rr.lo, rr.hi,
                                 e.variant, spec);

    cli::ResultSet rs = base_result("resonances", e);
    rs.metadata["t0"] = t0;
    rs.metadata["rho_range"] = *o.rho_range;
    rs.columns = {"lambda", "t0", "rho_star", "peak_abs_xi", "fwhm_rho",
                  "residual"};
    for (const auto& r : recs)
        rs.rows.push_back({r.lambda, r.t0, r.rho_star, r.peak_abs_xi,
                           r.fwhm_rho, r.residual});
    cli::write_output(rs, e.format, e.out);
    return 0;
}

int cmd_pole(Options& o) {
    const Effective e = settle(o, 1e-12);
    numerics::RootFindSpec spec;
    spec.tol = e.tol;
    const auto pole = twobody::find_pair_pole(twobody::Coupling{e.lambda}, spec);

    cli::ResultSet rs = base_result("pole", e);
    rs.metadata["tau_linear"] = pole.tau_linear; // near-threshold estimate
    rs.columns = {"lambda", "re_t0", "im_t0", "kind"};
    rs.rows.push_back({e.lambda, pole.location.real(), pole.location.imag(),
                       twobody::pole_kind_name(pole.kind)});
    cli::write_output(rs, e.format, e.out);
    return 0;
}

int cmd_convert(Options& o) {
    const Effective e = settle(o, 1e-8);
    const units::PhysicalScale scale(require(o.beta, "--beta"));
    if (!o.rho && !o.t0)
        throw DomainError("convert needs --rho and/or --t0");

    cli::ResultSet rs = base_result("convert", e);
    rs.metadata["beta"] = scale.beta_inv_cm;
    rs.columns = {"quantity", "value", "unit"};
    if (o.rho) {
        rs.metadata["rho"] = *o.rho;
        const auto d =
            units::rho_to_distance(threebody::Separation(*o.rho), scale);
        rs.rows.push_back({"r", d.r_cm, "cm"});
        rs.rows.push_back({"d", d.d_cm, "cm"});
    }
    if (o.t0) {
        rs.metadata["t0"] = *o.t0;
        rs.rows.push_back({"p0", units::t0_to_momentum(*o.t0, scale), "cm^-1"});
    }
    cli::write_output(rs, e.format, e.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"three-body resonance toolkit"};
    app.require_subcommand(1);

    Options o;
    CLI::App* s_xi = app.add_subcommand("xi", "enhancement factor at one point");
    CLI::App* s_surface = app.add_subcommand("surface", "xi over a (t0, rho) grid");
    CLI::App* s_bigxi = app.add_subcommand("bigxi", "aggregate factor Xi(rho)");
    CLI::App* s_res = app.add_subcommand("resonances", "resonance table at fixed t0");
    CLI::App* s_pole = app.add_subcommand("pole", "two-body amplitude pole");
    CLI::App* s_conv = app.add_subcommand("convert", "dimensionless to physical units");
    for (CLI::App* cmd : {s_xi, s_surface, s_bigxi, s_res, s_pole, s_conv})
        add_shared(cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "argument error: %s\n", e.what());
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    int rc = 0;
    const char* name = "";
    try {
        if (s_xi->parsed()) { name = "xi"; rc = cmd_xi(o); }
        else if (s_surface->parsed()) { name = "surface"; rc = cmd_surface(o); }
        else if (s_bigxi->parsed()) { name = "bigxi"; rc = cmd_bigxi(o); }
        else if (s_res->parsed()) { name = "resonances"; rc = cmd_resonances(o); }
        else if (s_pole->parsed()) { name = "pole"; rc = cmd_pole(o); }
        else if (s_conv->parsed()) { name = "convert"; rc = cmd_convert(o); }
    } catch (const DomainError& e) {
        std::fprintf(stderr, "invalid arguments: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    }

    // wall time goes to stderr so output files stay byte-identical
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::fprintf(stderr, "fadres %s: %.3f s\n", name, secs);
    return rc;
}
