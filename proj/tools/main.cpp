// Command-line front end: exact invariants, covariants, contravariants, and
// dual surfaces of quaternary cubic forms, plus the built-in self checks and
// the timing harness. All reports are exact rationals; the only floating or
// machine-dependent fields are wall-clock timings.

#include "cubinv/cubinv.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

class Stopwatch {
public:
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0_)
            .count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point t0_ = clock::now();
};

struct OutputOptions {
    bool text = false;
    std::string path;
};

void add_format_flags(CLI::App* cmd, OutputOptions& out) {
    auto* json_flag = cmd->add_flag("--json", "structured JSON output (default)");
    cmd->add_flag("--text", out.text, "plain text output")->excludes(json_flag);
    cmd->add_option("--output", out.path, "write the report to a file instead of stdout");
}

void emit(const OutputOptions& opt, const ordered_json& j, const std::string& text) {
    const std::string payload = opt.text ? text : j.dump(2) + "\n";
    if (opt.path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opt.path, std::ios::binary);
    if (!out) throw cubinv::error("cannot open output file '" + opt.path + "'");
    out << payload;
}

/// Positional form input: literal text, or "@path" naming a file.
std::string load_input(const std::string& arg) {
    if (arg.empty() || arg[0] != '@') return arg;
    const std::string path = arg.substr(1);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw cubinv::parse_error(0, "cannot read input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ordered_json invariants_json(const cubinv::InvariantVector& v) {
    ordered_json j;
    j["I8"] = v.I8.str();
    j["I16"] = v.I16.str();
    j["I24"] = v.I24.str();
    j["I32"] = v.I32.str();
    j["I40"] = v.I40.str();
    if (v.I100) j["I100"] = v.I100->str();
    return j;
}

std::string invariants_text(const cubinv::InvariantVector& v) {
    std::ostringstream out;
    out << "I8 = " << v.I8.str() << "\nI16 = " << v.I16.str() << "\nI24 = " << v.I24.str()
        << "\nI32 = " << v.I32.str() << "\nI40 = " << v.I40.str() << "\n";
    if (v.I100) out << "I100 = " << v.I100->str() << "\n";
    return out.str();
}

ordered_json covariant_json(const cubinv::GradedForm& g) {
    ordered_json j;
    j["degree"] = g.degree;
    j["order"] = g.order;
    j["weight"] = g.weight;
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : cubinv::linear_coefficients(g)) coeffs.push_back(c.str());
    j["coefficients"] = coeffs;
    return j;
}

ordered_json covariants_json(const cubinv::LinearCovariants& cov) {
    ordered_json j;
    j["C11"] = covariant_json(cov.C11);
    j["C19"] = covariant_json(cov.C19);
    j["C27"] = covariant_json(cov.C27);
    j["C43"] = covariant_json(cov.C43);
    return j;
}

std::string covariants_text(const cubinv::LinearCovariants& cov) {
    std::ostringstream out;
    const cubinv::GradedForm* rows[4] = {&cov.C11, &cov.C19, &cov.C27, &cov.C43};
    const char* names[4] = {"C11", "C19", "C27", "C43"};
    for (int i = 0; i < 4; ++i)
        out << names[i] << " (degree " << rows[i]->degree << ", weight " << rows[i]->weight
            << ") = " << rows[i]->poly.str() << "\n";
    return out.str();
}

/// Order-insensitive digest of exact outputs, used by bench to witness
/// determinism without storing hundreds of large rationals.
class Digest {
public:
    void feed(const std::string& s) {
        for (unsigned char c : s) {
            h_ ^= c;
            h_ *= 1099511628211ULL;
        }
        h_ ^= 0xffULL;
        h_ *= 1099511628211ULL;
    }

    std::string hex() const {
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
        return buf;
    }

private:
    std::uint64_t h_ = 1469598103934665603ULL;
};

struct PhaseStats {
    std::int64_t total = 0;
    std::int64_t median = 0;
    std::int64_t max = 0;
};

PhaseStats phase_stats(std::vector<std::int64_t> per_surface) {
    PhaseStats s;
    for (auto v : per_surface) {
        s.total += v;
        s.max = std::max(s.max, v);
    }
    std::sort(per_surface.begin(), per_surface.end());
    const std::size_t n = per_surface.size();
    if (n > 0)
        s.median = (n % 2 == 1) ? per_surface[n / 2]
                                : (per_surface[n / 2 - 1] + per_surface[n / 2]) / 2;
    return s;
}

ordered_json phase_json(const PhaseStats& s) {
    ordered_json j;
    j["total_ms"] = s.total;
    j["median_ms"] = s.median;
    j["max_ms"] = s.max;
    return j;
}

cubinv::Rational parse_rational_arg(const std::string& text) {
    try {
        return cubinv::Rational::from_string(text);
    } catch (const cubinv::error& e) {
        throw cubinv::parse_error(0, e.what());
    }
}

/// Dense random cubic whose 20 coefficients all have the requested number of
/// decimal digits (sign uniform). Two digits means |c| in [10, 99].
cubinv::SparsePoly random_dense_cubic(cubinv::Prng& rng, int digits) {
    std::int64_t lo = 1;
    for (int i = 1; i < digits; ++i) lo *= 10;
    const std::int64_t hi = lo * 10 - 1;
    cubinv::SparsePoly f(cubinv::primal_quaternary());
    for (const auto& e : cubinv::monomial_basis(4, 3)) {
        const std::int64_t mag = rng.uniform_int(lo, hi);
        const std::int64_t sign = rng.uniform_int(0, 1) == 0 ? -1 : 1;
        f.add_term(e, cubinv::Rational(static_cast<long>(sign * mag)));
    }
    return f;
}

int cmd_invariants(const std::string& input, std::uint64_t seed, const OutputOptions& out) {
    const cubinv::SparsePoly f = cubinv::parse_cubic_surface(load_input(input));
    Stopwatch sw;
    const cubinv::PipelineResult r = cubinv::run_pipeline(f, seed);

    ordered_json j;
    j["command"] = "invariants";
    j["input"] = f.str();
    j["invariants"] = invariants_json(r.invariants);
    j["degrees"] = {{"I8", 8}, {"I16", 16}, {"I24", 24}, {"I32", 32}, {"I40", 40}, {"I100", 100}};
    j["weights"] = {{"I8", 6}, {"I16", 12}, {"I24", 18}, {"I32", 24}, {"I40", 30}, {"I100", 75}};
    j["timing_ms"] = sw.ms();

    std::ostringstream text;
    text << "input: " << f.str() << "\n" << invariants_text(r.invariants);
    emit(out, j, text.str());
    return 0;
}

int cmd_covariants(const std::string& input, std::uint64_t seed, const OutputOptions& out) {
    const cubinv::SparsePoly f = cubinv::parse_cubic_surface(load_input(input));
    Stopwatch sw;
    const cubinv::PipelineResult r = cubinv::run_pipeline(f, seed);

    ordered_json j;
    j["command"] = "covariants";
    j["input"] = f.str();
    j["covariants"] = covariants_json(r.covariants);
    j["I100"] = r.i100.str();
    j["timing_ms"] = sw.ms();

    std::ostringstream text;
    text << "input: " << f.str() << "\n"
         << covariants_text(r.covariants) << "I100 = " << r.i100.str() << "\n";
    emit(out, j, text.str());
    return 0;
}

/// dual and hessian accept the zero form and report the zero polynomial.
cubinv::SparsePoly parse_possibly_zero_cubic(const std::string& input) {
    const cubinv::SparsePoly f =
        cubinv::parse_form(load_input(input), cubinv::primal_quaternary());
    if (!f.is_zero() && (!f.is_homogeneous() || f.total_degree() != 3))
        throw cubinv::invalid_form("expected a homogeneous cubic in x, y, z, w");
    return f;
}

int cmd_dual(const std::string& input, std::uint64_t seed, const OutputOptions& out) {
    const cubinv::SparsePoly f = parse_possibly_zero_cubic(input);
    Stopwatch sw;
    const std::string dual =
        f.is_zero() ? "0" : cubinv::dual_surface(f, seed).poly.str();

    ordered_json j;
    j["command"] = "dual";
    j["input"] = f.str();
    j["degree"] = 12;
    j["order"] = 12;
    j["weight"] = 12;
    j["dual"] = dual;
    j["timing_ms"] = sw.ms();

    emit(out, j, dual + "\n");
    return 0;
}

int cmd_hessian(const std::string& input, const OutputOptions& out) {
    const cubinv::SparsePoly f = parse_possibly_zero_cubic(input);
    Stopwatch sw;
    const std::string hess = f.is_zero() ? "0" : cubinv::hessian(f).poly.str();

    ordered_json j;
    j["command"] = "hessian";
    j["input"] = f.str();
    j["degree"] = 4;
    j["order"] = 4;
    j["weight"] = 2;
    j["hessian"] = hess;
    j["timing_ms"] = sw.ms();

    emit(out, j, hess + "\n");
    return 0;
}

int cmd_compare(const std::string& input_a, const std::string& input_b, std::uint64_t seed,
                const OutputOptions& out) {
    const cubinv::SparsePoly f = cubinv::parse_cubic_surface(load_input(input_a));
    const cubinv::SparsePoly g = cubinv::parse_cubic_surface(load_input(input_b));
    Stopwatch sw;
    const cubinv::InvariantVector a = cubinv::clebsch_salmon_invariants(f, seed);
    const cubinv::InvariantVector b = cubinv::clebsch_salmon_invariants(g, seed);
    const cubinv::Verdict verdict = cubinv::compare_invariant_vectors(a, b);

    ordered_json j;
    j["command"] = "compare";
    j["first"] = {{"input", f.str()}, {"invariants", invariants_json(a)}};
    j["second"] = {{"input", g.str()}, {"invariants", invariants_json(b)}};
    j["verdict"] = cubinv::verdict_name(verdict);
    j["timing_ms"] = sw.ms();

    std::ostringstream text;
    text << "first: " << f.str() << "\n" << invariants_text(a) << "second: " << g.str() << "\n"
         << invariants_text(b) << "verdict: " << cubinv::verdict_name(verdict) << "\n";
    emit(out, j, text.str());
    return 0;
}

int cmd_pentahedral(const std::string& coeff_list, const OutputOptions& out) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(coeff_list);
    while (std::getline(in, item, ',')) parts.push_back(item);
    if (parts.size() != 5)
        throw cubinv::parse_error(0, "expected five comma-separated coefficients");
    cubinv::PentahedralCoeffs p;
    for (std::size_t i = 0; i < 5; ++i) p.a[i] = parse_rational_arg(parts[i]);

    Stopwatch sw;
    const cubinv::SparsePoly f = cubinv::expand_pentahedral(p);
    cubinv::InvariantVector inv = cubinv::salmon_invariants(p);

    ordered_json j;
    j["command"] = "pentahedral";
    ordered_json coeffs = ordered_json::array();
    for (const auto& ai : p.a) coeffs.push_back(ai.str());
    j["coefficients"] = coeffs;
    ordered_json sigma = ordered_json::array();
    for (const auto& s : p.sigma()) sigma.push_back(s.str());
    j["sigma"] = sigma;
    j["form"] = f.str();

    std::ostringstream text;
    text << "form: " << f.str() << "\n";
    if (p.all_nonzero()) {
        const cubinv::LinearCovariants cov = cubinv::salmon_linear_covariants(p);
        inv.I100 = cubinv::salmon_I100(p);
        j["invariants"] = invariants_json(inv);
        j["covariants"] = covariants_json(cov);
        text << invariants_text(inv) << covariants_text(cov);
    } else {
        j["invariants"] = invariants_json(inv);
        j["covariants"] = nullptr;
        text << invariants_text(inv)
             << "covariants undefined: a pentahedral coefficient is zero\n";
    }
    j["timing_ms"] = sw.ms();
    emit(out, j, text.str());
    return 0;
}

int cmd_selftest(int samples, std::uint64_t seed, const OutputOptions& out) {
    Stopwatch sw;
    const cubinv::SelftestReport r = cubinv::run_selftest(samples, seed);

    ordered_json j;
    j["command"] = "selftest";
    j["samples"] = samples;
    j["seed"] = seed;
    j["cross_check"] = {{"samples", r.cross.samples.size()},
                        {"passed", r.cross.passed},
                        {"all_pass", r.cross.all_pass}};
    ordered_json failures = ordered_json::array();
    for (const auto& f : r.equivariance.failures) failures.push_back(f);
    j["equivariance"] = {{"checks", r.equivariance.checks}, {"failures", failures}};
    j["pass"] = r.pass();
    j["timing_ms"] = sw.ms();

    std::ostringstream text;
    text << "cross-check: " << r.cross.passed << "/" << r.cross.samples.size()
         << " pentahedral samples match\n"
         << "equivariance: " << r.equivariance.checks << " checks, "
         << r.equivariance.failures.size() << " failures\n";
    for (const auto& f : r.equivariance.failures) text << "  " << f << "\n";
    text << (r.pass() ? "PASS" : "FAIL") << "\n";
    emit(out, j, text.str());
    return r.pass() ? 0 : 1;
}

int cmd_bench(int count, int digits, std::uint64_t seed, const OutputOptions& out) {
    Stopwatch sw;
    cubinv::Prng rng(seed);
    std::vector<cubinv::SparsePoly> surfaces;
    surfaces.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) surfaces.push_back(random_dense_cubic(rng, digits));

    Digest digest;
    std::vector<std::int64_t> inv_ms, full_ms;
    inv_ms.reserve(surfaces.size());
    full_ms.reserve(surfaces.size());

    for (const auto& f : surfaces) {
        Stopwatch one;
        const cubinv::InvariantVector v = cubinv::clebsch_salmon_invariants(f, seed);
        inv_ms.push_back(one.ms());
        digest.feed(v.I8.str());
        digest.feed(v.I16.str());
        digest.feed(v.I24.str());
        digest.feed(v.I32.str());
        digest.feed(v.I40.str());
    }
    for (const auto& f : surfaces) {
        Stopwatch one;
        const cubinv::FullEvaluation e = cubinv::evaluate_full(f, seed);
        full_ms.push_back(one.ms());
        digest.feed(e.s_tilde.poly.str());
        digest.feed(e.t_tilde.poly.str());
        digest.feed(e.dual.poly.str());
    }

    const PhaseStats inv_stats = phase_stats(inv_ms);
    const PhaseStats full_stats = phase_stats(full_ms);

    ordered_json j;
    j["command"] = "bench";
    j["count"] = count;
    j["coeff_digits"] = digits;
    j["seed"] = seed;
    j["invariants_phase"] = phase_json(inv_stats);
    j["full_phase"] = phase_json(full_stats);
    j["digest"] = digest.hex();
    j["timing_ms"] = sw.ms();

    std::ostringstream text;
    text << "count: " << count << " (coefficient digits: " << digits << ")\n"
         << "invariants: total " << inv_stats.total << " ms, median " << inv_stats.median
         << " ms, max " << inv_stats.max << " ms\n"
         << "full (invariants + transfers + dual): total " << full_stats.total
         << " ms, median " << full_stats.median << " ms, max " << full_stats.max << " ms\n"
         << "digest: " << digest.hex() << "\n";
    emit(out, j, text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants, linear covariants, and dual surfaces of cubic surfaces"};
    app.require_subcommand(1);

    std::uint64_t seed = cubinv::kDefaultPointSeed;
    int samples = 5;
    int count = 100;
    int digits = 2;
    std::string input, input_b, coeff_list;
    OutputOptions out;
    std::function<int()> runner;

    const auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "seed for all randomized behavior");
    };

    auto* inv = app.add_subcommand("invariants",
                                   "the six invariants I8, I16, I24, I32, I40, I100");
    inv->add_option("form", input, "cubic form in x, y, z, w (or @file)")->required();
    add_seed(inv);
    add_format_flags(inv, out);
    inv->callback([&] { runner = [&] { return cmd_invariants(input, seed, out); }; });

    auto* cov = app.add_subcommand("covariants", "Salmon's four linear covariants");
    cov->add_option("form", input, "cubic form in x, y, z, w (or @file)")->required();
    add_seed(cov);
    add_format_flags(cov, out);
    cov->callback([&] { runner = [&] { return cmd_covariants(input, seed, out); }; });

    auto* dual = app.add_subcommand("dual", "the dual surface contravariant S^3 - 6T^2");
    dual->add_option("form", input, "cubic form in x, y, z, w (or @file)")->required();
    add_seed(dual);
    add_format_flags(dual, out);
    dual->callback([&] { runner = [&] { return cmd_dual(input, seed, out); }; });

    auto* hess = app.add_subcommand("hessian", "the Hessian determinant covariant");
    hess->add_option("form", input, "cubic form in x, y, z, w (or @file)")->required();
    add_format_flags(hess, out);
    hess->callback([&] { runner = [&] { return cmd_hessian(input, out); }; });

    auto* cmp = app.add_subcommand("compare",
                                   "decide projective equivalence over the closed field");
    cmp->add_option("first", input, "first cubic form (or @file)")->required();
    cmp->add_option("second", input_b, "second cubic form (or @file)")->required();
    add_seed(cmp);
    add_format_flags(cmp, out);
    cmp->callback([&] { runner = [&] { return cmd_compare(input, input_b, seed, out); }; });

    auto* penta = app.add_subcommand("pentahedral",
                                     "closed-form invariants from pentahedral coefficients");
    penta->add_option("coefficients", coeff_list, "a0,a1,a2,a3,a4 (rationals)")->required();
    add_format_flags(penta, out);
    penta->callback([&] { runner = [&] { return cmd_pentahedral(coeff_list, out); }; });

    auto* self = app.add_subcommand("selftest",
                                    "pentahedral cross-check plus equivariance sweep");
    self->add_option("--samples", samples, "random pentahedral samples")
        ->check(CLI::PositiveNumber);
    add_seed(self);
    add_format_flags(self, out);
    self->callback([&] { runner = [&] { return cmd_selftest(samples, seed, out); }; });

    auto* bench = app.add_subcommand("bench", "timing run over random dense cubics");
    bench->add_option("--count", count, "number of surfaces")->check(CLI::PositiveNumber);
    bench->add_option("--coeff-digits", digits, "decimal digits per coefficient")
        ->check(CLI::Range(1, 6));
    add_seed(bench);
    add_format_flags(bench, out);
    bench->callback([&] { runner = [&] { return cmd_bench(count, digits, seed, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return runner();
    } catch (const cubinv::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const cubinv::zero_form& e) {
        std::cerr << "zero form: " << e.what() << "\n";
        return 4;
    } catch (const cubinv::invalid_form& e) {
        std::cerr << "invalid form: " << e.what() << "\n";
        return 3;
    } catch (const cubinv::interpolation_exhausted& e) {
        std::cerr << "internal singularity: " << e.what() << "\n";
        return 5;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
