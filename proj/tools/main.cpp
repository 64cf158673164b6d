// Copyright hexprob contributors
// SPDX-License-Identifier: Apache-2.0
//
// hexprob: exact and Monte Carlo answers to "how often does a random central
// plane cut a cube in a hexagon", plus section construction and self-checks.
#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "hexprob/geometry.hpp"
#include "hexprob/mc_kernel.hpp"
#include "hexprob/monte_carlo.hpp"
#include "hexprob/probability.hpp"
#include "hexprob/spherical.hpp"
#include "hexprob/verify.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

// ---------------------------------------------------------------------------
// Output helpers. All floats go out with 17 significant digits so that
// parsing them back reproduces the exact double.
// ---------------------------------------------------------------------------

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_u64(std::uint64_t v) {
    return std::to_string(v);
}

std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    return out;
}

/// Ordered flat JSON object builder; nested values go in via raw().
class JsonBuilder {
  public:
    JsonBuilder& raw(std::string_view key, std::string_view raw_value) {
        sep();
        body_ += '"';
        body_ += json_escape(key);
        body_ += "\":";
        body_ += raw_value;
        return *this;
    }
    JsonBuilder& str(std::string_view key, std::string_view value) {
        return raw(key, "\"" + json_escape(value) + "\"");
    }
    JsonBuilder& num(std::string_view key, double value) {
        return raw(key, fmt_double(value));
    }
    JsonBuilder& num(std::string_view key, std::uint64_t value) {
        return raw(key, fmt_u64(value));
    }
    JsonBuilder& num(std::string_view key, int value) {
        return raw(key, std::to_string(value));
    }
    JsonBuilder& null_value(std::string_view key) {
        return raw(key, "null");
    }
    std::string build() const {
        return "{" + body_ + "}";
    }

  private:
    void sep() {
        if (!body_.empty()) {
            body_ += ',';
        }
    }
    std::string body_;
};

std::string json_vec3(const hexprob::Vec3& v) {
    return "[" + fmt_double(v.x) + "," + fmt_double(v.y) + "," + fmt_double(v.z) + "]";
}

std::string json_array(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += items[i];
    }
    return out + "]";
}

void print_envelope(std::string_view command, const JsonBuilder& inputs,
                    const JsonBuilder& result) {
    JsonBuilder env;
    env.str("command", command);
    env.raw("inputs", inputs.build());
    env.raw("result", result.build());
    env.str("version", kVersion);
    std::cout << env.build() << "\n";
}

void print_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        std::cout << (i != 0 ? "," : "") << header[i];
    }
    std::cout << "\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::cout << (i != 0 ? "," : "") << row[i];
        }
        std::cout << "\n";
    }
}

// ---------------------------------------------------------------------------
// Input parsing
// ---------------------------------------------------------------------------

double parse_double_strict(std::string_view s) {
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) {
        throw CLI::ValidationError("--normal", "not a number: '" + std::string(s) + "'");
    }
    return v;
}

hexprob::Normal parse_normal(const std::string& text) {
    std::vector<std::string_view> parts;
    std::string_view rest = text;
    while (true) {
        const std::size_t pos = rest.find(',');
        if (pos == std::string_view::npos) {
            parts.push_back(rest);
            break;
        }
        parts.push_back(rest.substr(0, pos));
        rest = rest.substr(pos + 1);
    }
    if (parts.size() != 3) {
        throw CLI::ValidationError("--normal", "expected three comma-separated components");
    }
    return {parse_double_strict(parts[0]), parse_double_strict(parts[1]),
            parse_double_strict(parts[2])};
}

hexprob::Tolerance make_tolerance(double eps_boundary) {
    return {eps_boundary, std::max(1e-9, eps_boundary)};
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

int run_exact(const std::string& format) {
    const double closed = hexprob::closed_form_probability();
    const hexprob::ExactResult region = hexprob::probability_from_region();
    const double diff = std::fabs(closed - region.probability);

    if (format == "csv") {
        print_csv({"probability", "closed_form", "from_region", "routes_abs_diff",
                   "triangle_area", "octant_count", "sphere_area"},
                  {{fmt_double(closed), fmt_double(closed), fmt_double(region.probability),
                    fmt_double(diff), fmt_double(region.triangle_area),
                    std::to_string(region.octant_count), fmt_double(region.sphere_area)}});
        return 0;
    }
    JsonBuilder result;
    result.num("probability", closed)
        .num("closed_form", closed)
        .num("from_region", region.probability)
        .num("routes_abs_diff", diff)
        .num("triangle_area", region.triangle_area)
        .num("octant_count", region.octant_count)
        .num("sphere_area", region.sphere_area);
    print_envelope("exact", JsonBuilder{}, result);
    return 0;
}

int run_classify(const hexprob::Normal& n, double eps, const std::string& format) {
    const hexprob::Tolerance tol = make_tolerance(eps);
    const hexprob::SectionKind kind = hexprob::classify(n, tol);
    const hexprob::detail::SortedAbs s = hexprob::sorted_abs_normalized(n);

    if (format == "csv") {
        print_csv({"kind", "p", "q", "r"},
                  {{hexprob::to_string(kind), fmt_double(s.p), fmt_double(s.q),
                    fmt_double(s.r)}});
        return 0;
    }
    JsonBuilder inputs;
    inputs.raw("normal", json_vec3(n.vec())).num("tolerance", tol.eps_boundary);
    JsonBuilder sorted;
    sorted.num("p", s.p).num("q", s.q).num("r", s.r);
    JsonBuilder result;
    result.str("kind", hexprob::to_string(kind)).raw("sorted_abs", sorted.build());
    print_envelope("classify", inputs, result);
    return 0;
}

int run_section(const hexprob::Normal& n, double eps, const std::string& format) {
    const hexprob::Tolerance tol = make_tolerance(eps);
    const hexprob::SectionPolygon poly = hexprob::section_polygon(n, tol);
    const double area = hexprob::polygon_area(poly);

    if (format == "csv") {
        std::vector<std::vector<std::string>> rows;
        rows.reserve(poly.vertices.size());
        for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
            const hexprob::Vec3& v = poly.vertices[i];
            rows.push_back({std::to_string(i), fmt_double(v.x), fmt_double(v.y),
                            fmt_double(v.z)});
        }
        print_csv({"index", "x", "y", "z"}, rows);
        return 0;
    }
    JsonBuilder inputs;
    inputs.raw("normal", json_vec3(n.vec())).num("tolerance", tol.eps_boundary);
    std::vector<std::string> verts;
    verts.reserve(poly.vertices.size());
    for (const hexprob::Vec3& v : poly.vertices) {
        verts.push_back(json_vec3(v));
    }
    JsonBuilder result;
    result.str("kind", hexprob::to_string(poly.kind))
        .num("vertex_count", static_cast<std::uint64_t>(poly.vertices.size()))
        .num("area", area)
        .raw("vertices", json_array(verts));
    print_envelope("section", inputs, result);
    return 0;
}

void dump_samples(const std::string& path, const hexprob::RunConfig& cfg) {
    std::ofstream out(path);
    if (!out) {
        throw hexprob::InvalidConfig("cannot open dump file: " + path);
    }
    out << "a,b,c,kind\n";
    constexpr std::uint64_t kBlock = 1 << 16;
    std::vector<hexprob::mc::SampleRecord> buf(
        static_cast<std::size_t>(std::min(kBlock, cfg.samples)));
    hexprob::mc::BatchOptions opt;
    opt.seed = cfg.seed;
    opt.eps_boundary = cfg.tolerance.eps_boundary;
    for (std::uint64_t begin = 0; begin < cfg.samples; begin += kBlock) {
        const std::uint64_t n = std::min(kBlock, cfg.samples - begin);
        hexprob::mc::run_batch(begin, n, opt, buf.data());
        for (std::uint64_t i = 0; i < n; ++i) {
            const hexprob::mc::SampleRecord& r = buf[static_cast<std::size_t>(i)];
            out << fmt_double(r.x) << ',' << fmt_double(r.y) << ',' << fmt_double(r.z)
                << ',' << hexprob::to_string(static_cast<hexprob::SectionKind>(r.kind))
                << '\n';
        }
    }
    if (!out) {
        throw hexprob::InvalidConfig("failed while writing dump file: " + path);
    }
}

int run_simulate(std::uint64_t samples, std::uint64_t seed, std::uint64_t chunks,
                 const std::string& dump_path, const std::string& format) {
    hexprob::RunConfig cfg;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.chunks = chunks;
    const hexprob::Estimate est = hexprob::estimate(cfg);
    const double exact = hexprob::closed_form_probability();
    const double abs_error = std::fabs(est.p_hat - exact);
    const bool has_ratio = est.std_err > 0.0;
    const double ratio = has_ratio ? abs_error / est.std_err : 0.0;
    const char* kernel = hexprob::mc::to_string(hexprob::mc::active_kernel());

    if (!dump_path.empty()) {
        dump_samples(dump_path, cfg);
    }

    if (format == "csv") {
        print_csv({"samples", "hits", "p_hat", "std_err", "seed", "chunks", "exact",
                   "abs_error", "error_over_std_err", "kernel"},
                  {{fmt_u64(est.samples), fmt_u64(est.hits), fmt_double(est.p_hat),
                    fmt_double(est.std_err), fmt_u64(est.seed), fmt_u64(est.chunks),
                    fmt_double(exact), fmt_double(abs_error),
                    has_ratio ? fmt_double(ratio) : std::string{}, kernel}});
        return 0;
    }
    JsonBuilder inputs;
    inputs.num("samples", samples).num("seed", seed).num("chunks", chunks);
    if (dump_path.empty()) {
        inputs.null_value("dump_samples");
    } else {
        inputs.str("dump_samples", dump_path);
    }
    JsonBuilder result;
    result.num("samples", est.samples)
        .num("hits", est.hits)
        .num("p_hat", est.p_hat)
        .num("std_err", est.std_err)
        .num("seed", est.seed)
        .num("chunks", est.chunks)
        .num("exact", exact)
        .num("abs_error", abs_error);
    if (has_ratio) {
        result.num("error_over_std_err", ratio);
    } else {
        result.null_value("error_over_std_err");
    }
    result.str("kernel", kernel);
    print_envelope("simulate", inputs, result);
    return 0;
}

int run_verify(std::uint64_t trials, std::uint64_t seed, double eps,
               const std::string& format) {
    const hexprob::VerifyCounts counts =
        hexprob::run_verification(trials, seed, make_tolerance(eps));
    const bool passed = counts.all_clear();

    if (format == "csv") {
        print_csv({"trials", "oracle_mismatches", "symmetry_violations",
                   "invariant_failures", "passed"},
                  {{fmt_u64(counts.trials), fmt_u64(counts.oracle_mismatches),
                    fmt_u64(counts.symmetry_violations), fmt_u64(counts.invariant_failures),
                    passed ? "true" : "false"}});
    } else {
        JsonBuilder inputs;
        inputs.num("trials", trials).num("seed", seed);
        JsonBuilder result;
        result.num("trials", counts.trials)
            .num("oracle_mismatches", counts.oracle_mismatches)
            .num("symmetry_violations", counts.symmetry_violations)
            .num("invariant_failures", counts.invariant_failures)
            .raw("passed", passed ? "true" : "false");
        print_envelope("verify", inputs, result);
    }
    if (!passed) {
        std::cerr << "verify: " << counts.oracle_mismatches << " oracle mismatches, "
                  << counts.symmetry_violations << " symmetry violations, "
                  << counts.invariant_failures << " invariant failures\n";
        return 1;
    }
    return 0;
}

int run_triangle(const std::string& format) {
    const hexprob::SphericalTriangle t = hexprob::hexagon_region_triangle();
    const double girard = hexprob::girard_area(t);
    const double lhuilier = hexprob::lhuilier_area(t.arc_a, t.arc_b, t.arc_c);
    const double ca = std::cos(t.angle_a);
    const double cb = std::cos(t.angle_b);
    const double cc = std::cos(t.angle_c);

    if (format == "csv") {
        print_csv({"ax", "ay", "az", "bx", "by", "bz", "cx", "cy", "cz", "arc_a",
                   "arc_b", "arc_c", "angle_a", "angle_b", "angle_c", "cos_angle_a",
                   "cos_angle_b", "cos_angle_c", "girard_area", "lhuilier_area"},
                  {{fmt_double(t.va.x), fmt_double(t.va.y), fmt_double(t.va.z),
                    fmt_double(t.vb.x), fmt_double(t.vb.y), fmt_double(t.vb.z),
                    fmt_double(t.vc.x), fmt_double(t.vc.y), fmt_double(t.vc.z),
                    fmt_double(t.arc_a), fmt_double(t.arc_b), fmt_double(t.arc_c),
                    fmt_double(t.angle_a), fmt_double(t.angle_b), fmt_double(t.angle_c),
                    fmt_double(ca), fmt_double(cb), fmt_double(cc), fmt_double(girard),
                    fmt_double(lhuilier)}});
        return 0;
    }
    JsonBuilder result;
    result.raw("vertices", json_array({json_vec3(t.va), json_vec3(t.vb), json_vec3(t.vc)}))
        .raw("arcs", json_array({fmt_double(t.arc_a), fmt_double(t.arc_b),
                                 fmt_double(t.arc_c)}))
        .raw("angles", json_array({fmt_double(t.angle_a), fmt_double(t.angle_b),
                                   fmt_double(t.angle_c)}))
        .raw("cos_angles", json_array({fmt_double(ca), fmt_double(cb), fmt_double(cc)}))
        .num("girard_area", girard)
        .num("lhuilier_area", lhuilier);
    print_envelope("triangle", JsonBuilder{}, result);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cube cross-section probability toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    std::string normal_arg;
    double tolerance = 1e-12;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
    std::uint64_t chunks = 1;
    std::uint64_t trials = 10000;
    std::string dump_path;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    };
    const auto add_normal = [&](CLI::App* cmd) {
        cmd->add_option("-n,--normal", normal_arg, "plane normal as a,b,c")->required();
    };
    const auto add_tolerance = [&](CLI::App* cmd) {
        cmd->add_option("--tolerance", tolerance, "boundary classification tolerance")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
    };

    CLI::App* exact_cmd = app.add_subcommand("exact", "closed-form hexagon probability");
    add_format(exact_cmd);

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "section class of a central plane");
    add_normal(classify_cmd);
    add_tolerance(classify_cmd);
    add_format(classify_cmd);

    CLI::App* section_cmd =
        app.add_subcommand("section", "cross-section polygon of a central plane");
    add_normal(section_cmd);
    add_tolerance(section_cmd);
    add_format(section_cmd);

    CLI::App* simulate_cmd =
        app.add_subcommand("simulate", "Monte Carlo estimate of the probability");
    simulate_cmd->add_option("--samples", samples, "number of random planes")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    simulate_cmd->add_option("--chunks", chunks, "execution chunks (results unchanged)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    simulate_cmd
        ->add_option("--dump-samples", dump_path, "write per-sample a,b,c,kind CSV here")
        ->capture_default_str();
    add_format(simulate_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "oracle, symmetry, and invariant self-checks");
    verify_cmd->add_option("--trials", trials, "number of random normals")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    add_tolerance(verify_cmd);
    add_format(verify_cmd);

    CLI::App* triangle_cmd =
        app.add_subcommand("triangle", "canonical spherical region triangle");
    add_format(triangle_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(exact_cmd)) {
            return run_exact(format);
        }
        if (app.got_subcommand(classify_cmd)) {
            return run_classify(parse_normal(normal_arg), tolerance, format);
        }
        if (app.got_subcommand(section_cmd)) {
            return run_section(parse_normal(normal_arg), tolerance, format);
        }
        if (app.got_subcommand(simulate_cmd)) {
            return run_simulate(samples, seed, chunks, dump_path, format);
        }
        if (app.got_subcommand(verify_cmd)) {
            return run_verify(trials, seed, tolerance, format);
        }
        return run_triangle(format);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const hexprob::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
