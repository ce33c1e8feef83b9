#include "distset/io.hpp"

#include <cstdio>
#include <sstream>

namespace distset {

Json quadext_to_json(const QuadExt& x) {
    if (x.is_rational()) return render_rational(x.a());
    Json j;
    j["a"] = render_rational(x.a());
    j["b"] = render_rational(x.b());
    j["m"] = x.m();
    return j;
}

QuadExt quadext_from_json(const Json& j) {
    if (j.is_string()) return QuadExt(parse_rational(j.get<std::string>()));
    if (j.is_number_integer()) return QuadExt(static_cast<long>(j.get<long long>()));
    if (j.is_object()) {
        Rational a = j.contains("a") ? parse_rational(j.at("a").get<std::string>()) : Rational(0);
        Rational b = j.contains("b") ? parse_rational(j.at("b").get<std::string>()) : Rational(0);
        long m = j.contains("m") ? j.at("m").get<long>() : 0;
        return QuadExt(a, b, m);
    }
    throw Error(ErrorCode::ParseError, "expected a rational string or {a, b, m} object");
}

std::string format_significant(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Json quadext_report_value(const QuadExt& x) {
    Json j;
    j["exact"] = quadext_to_json(x);
    j["approx"] = format_significant(x.to_double());
    return j;
}

namespace {

long radicand_of(const Configuration& c) {
    long m = 0;
    auto fold = [&m](const QuadExt& v) {
        if (v.m() != 0) {
            if (m != 0 && m != v.m())
                throw Error(ErrorCode::MixedRadicands, "configuration mixes radicands");
            m = v.m();
        }
    };
    if (std::holds_alternative<PointSet>(c)) {
        for (const auto& p : std::get<PointSet>(c).points)
            for (const auto& v : p) fold(v);
    } else {
        const auto& d = std::get<SquaredDistanceMatrix>(c);
        for (std::size_t i = 0; i < d.size(); ++i)
            for (std::size_t j = 0; j < d.size(); ++j) fold(d.at(i, j));
    }
    return m;
}

}  // namespace

Json configuration_to_json(const Configuration& c) {
    Json j;
    const long m = radicand_of(c);
    if (std::holds_alternative<PointSet>(c)) {
        const PointSet& x = std::get<PointSet>(c);
        j["kind"] = "points";
        j["m"] = m;
        j["d"] = x.dim;
        Json data = Json::array();
        for (const auto& p : x.points) {
            Json row = Json::array();
            for (const auto& v : p) row.push_back(quadext_to_json(v));
            data.push_back(std::move(row));
        }
        j["data"] = std::move(data);
        if (!x.labels.empty()) j["labels"] = x.labels;
    } else {
        const SquaredDistanceMatrix& d = std::get<SquaredDistanceMatrix>(c);
        j["kind"] = "sdm";
        j["m"] = m;
        Json data = Json::array();
        for (std::size_t i = 0; i < d.size(); ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < d.size(); ++k) row.push_back(quadext_to_json(d.at(i, k)));
            data.push_back(std::move(row));
        }
        j["data"] = std::move(data);
    }
    return j;
}

Configuration configuration_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("data"))
        throw Error(ErrorCode::ParseError, "configuration needs \"kind\" and \"data\"");
    const std::string kind = j.at("kind").get<std::string>();
    const auto& data = j.at("data");
    if (!data.is_array() || data.empty())
        throw Error(ErrorCode::ParseError, "\"data\" must be a non-empty array");

    if (kind == "points") {
        PointSet x;
        x.dim = j.contains("d") ? j.at("d").get<std::size_t>()
                                : data.front().size();
        for (const auto& row : data) {
            if (!row.is_array() || row.size() != x.dim)
                throw Error(ErrorCode::ParseError, "point arity differs from \"d\"");
            std::vector<QuadExt> p;
            for (const auto& v : row) p.push_back(quadext_from_json(v));
            x.points.push_back(std::move(p));
        }
        if (j.contains("labels")) x.labels = j.at("labels").get<std::vector<std::string>>();
        x.validate();
        return x;
    }
    if (kind == "sdm") {
        const std::size_t n = data.size();
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!data[i].is_array() || data[i].size() != n)
                throw Error(ErrorCode::ParseError, "\"data\" must be a square matrix");
            for (std::size_t k = 0; k < n; ++k) m.at(i, k) = quadext_from_json(data[i][k]);
        }
        return SquaredDistanceMatrix(std::move(m));
    }
    throw Error(ErrorCode::ParseError, "unknown kind '" + kind + "'");
}

Json catalog_entry_to_json(const CatalogEntry& e) {
    Json j = configuration_to_json(e.has_points()
                                       ? Configuration(e.points())
                                       : Configuration(e.sdm()));
    j["name"] = e.name;
    Json params;
    for (const auto& [k, v] : e.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    if (e.expected) {
        Json ex;
        ex["s"] = e.expected->s;
        ex["d"] = e.expected->d;
        ex["n"] = e.expected->n;
        ex["k_integral"] = e.expected->k_integral;
        j["expected"] = std::move(ex);
    }
    return j;
}

Json report_to_json(const InvariantReport& r) {
    Json j;
    Json spectrum = Json::array();
    for (const auto& v : r.spectrum.sq_distances) spectrum.push_back(quadext_report_value(v));
    j["spectrum"] = std::move(spectrum);
    j["s"] = r.s;
    j["d"] = r.d;
    j["n"] = r.n_points;
    Json ks = Json::array();
    for (const auto& k : r.k_values) ks.push_back(quadext_report_value(k));
    j["k"] = std::move(ks);
    j["k_integral"] = r.k_integral;
    j["lrs_k"] = r.lrs ? quadext_report_value(*r.lrs) : Json(nullptr);
    j["N_new"] = r.n_new;
    j["N_legacy"] = r.n_legacy;
    Json th;
    th["met_new"] = r.threshold_met_new;
    th["met_legacy"] = r.threshold_met_legacy;
    th["finiteness"] = r.finiteness;
    j["thresholds"] = std::move(th);
    j["k_cap"] = r.cap ? Json(*r.cap) : Json(nullptr);
    j["cap_respected"] = r.cap_respected;
    return j;
}

std::string report_to_text(const InvariantReport& r) {
    std::ostringstream out;
    out << "n = " << r.n_points << " points, embedding dimension d = " << r.d
        << ", s = " << r.s << " distances\n";
    out << "spectrum:";
    for (const auto& v : r.spectrum.sq_distances)
        out << "  " << v.text() << " (" << format_significant(v.to_double()) << ")";
    out << "\n";
    if (r.k_values.empty()) {
        out << "k: (none; a single distance carries no integer condition)\n";
    } else {
        out << "k:";
        for (std::size_t i = 0; i < r.k_values.size(); ++i) {
            out << "  " << r.k_values[i].text();
            out << (r.k_integral[i] ? " [integer]" : " [not an integer]");
        }
        out << "\n";
    }
    if (r.lrs) out << "two-distance k = " << r.lrs->text() << "\n";
    out << "N = " << r.n_new << " (legacy " << r.n_legacy << "); |X| >= 2N "
        << (r.threshold_met_new ? "holds" : "fails") << ", |X| >= 2N_legacy "
        << (r.threshold_met_legacy ? "holds" : "fails") << "\n";
    out << "finiteness threshold 2N = " << r.finiteness << "\n";
    if (r.cap) {
        out << "|k_i| cap " << *r.cap << ":";
        for (bool b : r.cap_respected) out << " " << (b ? "ok" : "exceeded");
        out << "\n";
    }
    return out.str();
}

Json certificate_to_json(const RankCertificate& c) {
    Json j;
    j["claim"] = c.claim;
    j["matrix_shape"] = Json::array({c.rows, c.cols});
    j["expected_rank"] = c.expected_rank;
    j["achieved_rank"] = c.achieved_rank;
    j["pass"] = c.pass;
    return j;
}

}  // namespace distset
