// distset: exact analysis of s-distance sets (integer conditions, cardinality
// thresholds, rank certificates, canonical examples, distance recovery).

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "distset/catalog.hpp"
#include "distset/certificates.hpp"
#include "distset/invariants.hpp"
#include "distset/io.hpp"

namespace {

using distset::Json;

std::string read_input(const std::string& path) {
    if (path == "-" || path.empty()) {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw distset::Error(distset::ErrorCode::ParseError, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-" || path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw distset::Error(distset::ErrorCode::ParseError, "cannot write '" + path + "'");
    out << content;
    if (!content.empty() && content.back() != '\n') out << '\n';
}

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw distset::Error(distset::ErrorCode::ParseError, "input is not valid JSON");
    return j;
}

// ---------------------------------------------------------------- analyze --

Json certificates_for(const distset::PointSet& x) {
    Json certs = Json::array();
    const auto spec = distset::distance_spectrum(distset::sdm_from_points(x));
    if (spec.s() >= 2) {
        for (std::size_t i = 1; i <= spec.s(); ++i) {
            certs.push_back(distset::certificate_to_json(distset::independence_theorem3(x, i)));
        }
        for (std::size_t i = 1; i <= spec.s(); ++i) {
            const auto span = distset::f_span_certificate(x, i);
            Json j;
            j["claim"] = "F-family span decomposition (i=" + std::to_string(i) + ")";
            j["matrix_shape"] = Json::array({x.size() + span.monomial_count, 0});
            j["expected_rank"] = span.f_rank + span.monomial_count;
            j["achieved_rank"] = span.union_rank;
            j["f_rank"] = span.f_rank;
            j["span_bound"] = span.span_bound;
            j["pass"] = span.pass;
            certs.push_back(std::move(j));
        }
    }
    certs.push_back(distset::certificate_to_json(distset::bbs_check(x)));
    return certs;
}

int run_analyze(const std::string& input, const std::string& format, bool with_certs,
                const std::string& out_path) {
    const distset::Configuration cfg = distset::configuration_from_json(parse_json(read_input(input)));
    distset::InvariantReport report;
    if (std::holds_alternative<distset::PointSet>(cfg)) {
        report = distset::analyze(std::get<distset::PointSet>(cfg));
    } else {
        report = distset::analyze(std::get<distset::SquaredDistanceMatrix>(cfg));
    }
    if (format == "text") {
        std::string text = distset::report_to_text(report);
        if (with_certs && std::holds_alternative<distset::PointSet>(cfg)) {
            for (const auto& c : certificates_for(std::get<distset::PointSet>(cfg))) {
                text += "certificate " + c.at("claim").get<std::string>() + ": rank " +
                        std::to_string(c.at("achieved_rank").get<std::size_t>()) + "/" +
                        std::to_string(c.at("expected_rank").get<std::size_t>()) +
                        (c.at("pass").get<bool>() ? " pass" : " FAIL") + "\n";
            }
        }
        write_output(out_path, text);
    } else {
        Json j = distset::report_to_json(report);
        if (with_certs && std::holds_alternative<distset::PointSet>(cfg)) {
            j["certificates"] = certificates_for(std::get<distset::PointSet>(cfg));
        }
        write_output(out_path, j.dump(2));
    }
    return 0;
}

// ---------------------------------------------------------------- catalog --

int run_catalog(const std::string& name, long n, long d, long q, bool points,
                const std::string& out_path) {
    distset::CatalogEntry entry;
    if (name == "simplex") {
        entry = distset::simplex(static_cast<std::size_t>(n));
    } else if (name == "cross_polytope") {
        entry = distset::cross_polytope(static_cast<std::size_t>(d));
    } else if (name == "johnson2") {
        entry = distset::johnson2(static_cast<std::size_t>(n));
    } else if (name == "polygon") {
        entry = points ? distset::polygon_points(static_cast<std::size_t>(n))
                       : distset::regular_polygon(static_cast<std::size_t>(n));
    } else if (name == "paley") {
        entry = distset::paley_conference_embedding(static_cast<std::size_t>(q));
    } else {
        throw distset::Error(distset::ErrorCode::ParseError,
                             "unknown catalog entry '" + name +
                                 "'; available: simplex cross_polytope johnson2 polygon paley");
    }
    write_output(out_path, distset::catalog_entry_to_json(entry).dump(2));
    return 0;
}

// ---------------------------------------------------------------- recover --

int run_recover(const std::string& k_text, double tol, const std::string& format,
                const std::string& out_path) {
    std::vector<double> k;
    std::stringstream ss(k_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            k.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw distset::Error(distset::ErrorCode::ParseError,
                                 "bad k value '" + item + "'");
        }
    }
    const auto result = distset::recover_distances(k, tol);
    if (format == "json") {
        Json j;
        j["k"] = k;
        Json g = Json::array();
        for (double v : result.gamma) g.push_back(distset::format_significant(v));
        j["gamma"] = std::move(g);
        j["iterations"] = result.iterations;
        j["residual"] = distset::format_significant(result.residual);
        write_output(out_path, j.dump(2));
    } else {
        std::string line;
        for (std::size_t i = 0; i < result.gamma.size(); ++i) {
            if (i) line += ", ";
            line += distset::format_significant(result.gamma[i]);
        }
        write_output(out_path, line);
    }
    return 0;
}

// ----------------------------------------------------------------- verify --

struct CheckLog {
    Json checks = Json::array();
    bool all_pass = true;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        Json c;
        c["name"] = name;
        c["pass"] = pass;
        if (!detail.empty()) c["detail"] = detail;
        checks.push_back(std::move(c));
        all_pass = all_pass && pass;
    }
};

void suite_lemma4(CheckLog& log) {
    for (std::size_t d = 1; d <= 4; ++d) {
        for (std::size_t l = 0; l <= 4; ++l) {
            const auto r = distset::dim_W(d, l);
            log.add("lemma4 dim_W d=" + std::to_string(d) + " l=" + std::to_string(l),
                    r.achieved <= r.bound,
                    "achieved " + std::to_string(r.achieved) + ", bound " +
                        std::to_string(r.bound));
        }
    }
}

void suite_lemma5(CheckLog& log) {
    for (std::size_t d = 1; d <= 3; ++d)
        for (std::size_t sp = 1; sp <= 3; ++sp)
            for (std::size_t l = 2; l <= sp + 2; ++l)
                log.add("lemma5 d=" + std::to_string(d) + " s'=" + std::to_string(sp) +
                            " l=" + std::to_string(l),
                        distset::lemma5_check(d, sp, l));
}

void suite_lemma6(CheckLog& log, unsigned long seed, int trials) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<std::size_t> dim_pick(1, 3);
    std::uniform_int_distribution<std::size_t> s_pick(2, 3);

    int done = 0;
    int attempts = 0;
    while (done < trials && attempts < trials * 10) {
        ++attempts;
        const std::size_t d = dim_pick(rng);
        const std::size_t s = s_pick(rng);
        std::uniform_int_distribution<std::size_t> l_pick(2, s + 1);
        const std::size_t l = l_pick(rng);

        const auto lambdas = distset::monomials_up_to(d, static_cast<long>(l) - 2);
        const std::size_t n = lambdas.size() + 2;
        distset::PointSet y;
        y.dim = d;
        for (std::size_t p = 0; p < n; ++p) {
            std::vector<distset::QuadExt> pt;
            for (std::size_t c = 0; c < d; ++c)
                pt.push_back(distset::QuadExt::from_fraction(num(rng), den(rng)));
            y.points.push_back(std::move(pt));
        }

        // exact moment matrix; random coefficients from its kernel satisfy the
        // degree hypothesis by the expansion argument
        distset::ExactMatrix moments(lambdas.size(), n);
        for (std::size_t r = 0; r < lambdas.size(); ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                distset::QuadExt v(1);
                for (std::size_t kk = 0; kk < d; ++kk)
                    for (unsigned e = 0; e < lambdas[r].exponents[kk]; ++e)
                        v *= y.points[c][kk];
                moments.at(r, c) = v;
            }
        }
        const auto basis = distset::kernel(moments);
        if (basis.empty()) continue;
        std::vector<distset::QuadExt> m(n, distset::QuadExt(0));
        bool nonzero = false;
        for (const auto& vec : basis) {
            const distset::QuadExt w = distset::QuadExt::from_fraction(num(rng), den(rng));
            if (!w.is_zero()) nonzero = true;
            for (std::size_t c = 0; c < n; ++c) m[c] += w * vec[c];
        }
        if (!nonzero) continue;

        const auto res = distset::lemma6_check(m, y, s, l);
        log.add("lemma6 trial " + std::to_string(done) + " (d=" + std::to_string(d) +
                    " s=" + std::to_string(s) + " l=" + std::to_string(l) + ")",
                res.hypothesis_holds && res.conclusion_holds);
        ++done;
    }
    log.add("lemma6 completed trials", done >= trials,
            std::to_string(done) + "/" + std::to_string(trials));
}

void suite_theorem3(CheckLog& log) {
    int applicable = 0;
    for (const auto& entry : distset::standard_catalog()) {
        const distset::InvariantReport rep =
            entry.has_points() ? distset::analyze(entry.points()) : distset::analyze(entry.sdm());
        std::string name = entry.name;
        for (const auto& [k, v] : entry.parameters) name += " " + k + "=" + std::to_string(v);

        if (entry.expected) {
            const bool match = rep.s == entry.expected->s && rep.d == entry.expected->d &&
                               rep.n_points == entry.expected->n &&
                               rep.k_integral == entry.expected->k_integral;
            log.add("catalog expectations: " + name, match);
        }
        if (rep.threshold_met_new) {
            ++applicable;
            bool caps = true;
            for (bool b : rep.cap_respected) caps = caps && b;
            log.add("theorem3 harness: " + name, rep.all_integral() && caps,
                    "|X| = " + std::to_string(rep.n_points) +
                        " >= 2N = " + std::to_string(2 * rep.n_new));
        }
    }
    log.add("theorem3 harness covered threshold-meeting sets", applicable >= 4,
            std::to_string(applicable) + " sets met the threshold");
}

bool small_certificate_domain(const distset::CatalogEntry& e, std::size_t max_d,
                              std::size_t max_s) {
    if (!e.has_points()) return false;
    const auto rep = distset::analyze(e.points());
    return rep.d <= max_d && rep.s <= max_s;
}

void suite_bbs(CheckLog& log) {
    for (const auto& entry : distset::standard_catalog()) {
        if (!small_certificate_domain(entry, 5, 3)) continue;
        std::string name = entry.name;
        for (const auto& [k, v] : entry.parameters) name += " " + k + "=" + std::to_string(v);
        const auto cert = distset::bbs_check(entry.points());
        log.add("bbs: " + name, cert.pass,
                "rank " + std::to_string(cert.achieved_rank) + "/" +
                    std::to_string(cert.expected_rank));
    }
}

void suite_independence(CheckLog& log) {
    for (const auto& entry : distset::standard_catalog()) {
        if (!small_certificate_domain(entry, 5, 3)) continue;
        const auto spec = distset::distance_spectrum(distset::sdm_from_points(entry.points()));
        if (spec.s() < 2) continue;
        std::string name = entry.name;
        for (const auto& [k, v] : entry.parameters) name += " " + k + "=" + std::to_string(v);
        for (std::size_t i = 1; i <= spec.s(); ++i) {
            const auto span = distset::f_span_certificate(entry.points(), i);
            log.add("f-span: " + name + " i=" + std::to_string(i), span.pass,
                    "f_rank " + std::to_string(span.f_rank) + " union " +
                        std::to_string(span.union_rank) + " bound " +
                        std::to_string(span.span_bound));
            log.add("relation moments: " + name + " i=" + std::to_string(i),
                    distset::relation_moments_vanish(entry.points(), i));
        }
    }
}

int run_verify(const std::string& suite, unsigned long seed, int trials,
               const std::string& format, const std::string& out_path) {
    CheckLog log;
    bool known = false;
    if (suite == "lemma4" || suite == "all") suite_lemma4(log), known = true;
    if (suite == "lemma5" || suite == "all") suite_lemma5(log), known = true;
    if (suite == "lemma6" || suite == "all") suite_lemma6(log, seed, trials), known = true;
    if (suite == "theorem3" || suite == "all") suite_theorem3(log), known = true;
    if (suite == "bbs" || suite == "all") suite_bbs(log), known = true;
    if (suite == "independence" || suite == "all") suite_independence(log), known = true;
    if (!known)
        throw distset::Error(distset::ErrorCode::ParseError,
                             "unknown suite '" + suite +
                                 "'; available: lemma4 lemma5 lemma6 theorem3 bbs independence all");

    if (format == "json") {
        Json j;
        j["suite"] = suite;
        j["checks"] = log.checks;
        j["pass"] = log.all_pass;
        write_output(out_path, j.dump(2));
    } else {
        std::string text;
        for (const auto& c : log.checks) {
            text += std::string(c.at("pass").get<bool>() ? "ok   " : "FAIL ") +
                    c.at("name").get<std::string>();
            if (c.contains("detail")) text += "  (" + c.at("detail").get<std::string>() + ")";
            text += "\n";
        }
        text += log.all_pass ? "all checks passed\n" : "some checks FAILED\n";
        write_output(out_path, text);
    }
    return log.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of s-distance sets"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string out_path = "-";
    std::string format = "json";
    bool with_certs = false;
    auto* analyze = app.add_subcommand("analyze", "analyze a configuration (JSON)");
    analyze->add_option("input", input, "input path or - for stdin");
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    analyze->add_flag("--certificates", with_certs, "attach rank certificates (point inputs)");
    analyze->add_option("--out", out_path, "output path or - for stdout");

    std::string cat_name;
    long cat_n = 0, cat_d = 0, cat_q = 0;
    bool cat_points = false;
    std::string cat_out = "-";
    auto* catalog = app.add_subcommand("catalog", "emit a canonical configuration");
    catalog->add_option("name", cat_name,
                        "simplex | cross_polytope | johnson2 | polygon | paley")
        ->required();
    catalog->add_option("--n", cat_n, "point/vertex parameter");
    catalog->add_option("--d", cat_d, "dimension parameter (cross_polytope)");
    catalog->add_option("--q", cat_q, "prime parameter (paley)");
    catalog->add_flag("--points", cat_points, "emit exact coordinates (polygon n = 3, 4, 6)");
    catalog->add_option("--out", cat_out, "output path or - for stdout");

    std::string suite = "all";
    unsigned long seed = 12345;
    int trials = 100;
    std::string verify_format = "text";
    std::string verify_out = "-";
    auto* verify = app.add_subcommand("verify", "run certificate suites over the catalog");
    verify->add_option("--suite", suite,
                       "lemma4 | lemma5 | lemma6 | theorem3 | bbs | independence | all");
    verify->add_option("--seed", seed, "seed for randomized harnesses");
    verify->add_option("--trials", trials, "randomized trial count");
    verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", verify_out, "output path or - for stdout");

    std::string k_text;
    double tol = 1e-9;
    std::string recover_format = "text";
    std::string recover_out = "-";
    auto* recover = app.add_subcommand("recover", "recover distances from k values");
    recover->add_option("--k", k_text, "comma-separated k values, e.g. \"2,-1\"")->required();
    recover->add_option("--tol", tol, "residual tolerance");
    recover->add_option("--format", recover_format)->check(CLI::IsMember({"json", "text"}));
    recover->add_option("--out", recover_out, "output path or - for stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze(input, format, with_certs, out_path);
        if (catalog->parsed()) return run_catalog(cat_name, cat_n, cat_d, cat_q, cat_points, cat_out);
        if (verify->parsed()) return run_verify(suite, seed, trials, verify_format, verify_out);
        if (recover->parsed()) return run_recover(k_text, tol, recover_format, recover_out);
    } catch (const distset::Error& e) {
        Json err;
        err["error"]["code"] = distset::error_code_name(e.code());
        err["error"]["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err;
        err["error"]["code"] = "Internal";
        err["error"]["message"] = e.what();
        std::cerr << err.dump() << "\n";
        return 2;
    }
    return 0;
}
