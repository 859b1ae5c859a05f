#include "ezeta/report.hpp"

#include <cmath>

namespace ezeta {

using nlohmann::ordered_json;

namespace {

ordered_json num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

double to_num(const ordered_json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "nan") return std::nan("");
        if (s == "inf") return INFINITY;
        if (s == "-inf") return -INFINITY;
    }
    throw DomainError("report: expected a number, got " + j.dump());
}

ordered_json complex_json(Complex z) { return {{"re", num(z.real())}, {"im", num(z.imag())}}; }

Complex complex_from(const ordered_json& j) { return {to_num(j.at("re")), to_num(j.at("im"))}; }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

std::string csv_num(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return format_double(v);
}

}  // namespace

ordered_json report_to_json(const IdentityCheckReport& r) {
    ordered_json j;
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    ordered_json pt = ordered_json::object();
    for (const auto& [k, v] : r.point.coords()) pt[k] = num(v);
    j["point"] = pt;
    j["lhs"] = complex_json(r.lhs_value);
    j["rhs"] = complex_json(r.rhs_value);
    j["abs_err"] = num(r.abs_err);
    j["rel_err"] = r.rel_err ? num(*r.rel_err) : ordered_json(nullptr);
    j["tol_abs"] = num(r.tol_abs);
    j["tol_rel"] = num(r.tol_rel);
    if (r.quad) {
        j["quad"] = {{"est_error", num(r.quad->est_error)},
                     {"evaluations", r.quad->evaluations},
                     {"subdivisions", r.quad->subdivisions},
                     {"converged", r.quad->converged}};
    } else {
        j["quad"] = nullptr;
    }
    if (r.exact) {
        j["exact"] = {{"lhs", r.exact->lhs}, {"rhs", r.exact->rhs}, {"equal", r.exact->equal}};
    } else {
        j["exact"] = nullptr;
    }
    ordered_json aux = ordered_json::object();
    for (const auto& [k, v] : r.aux) aux[k] = num(v);
    j["aux"] = aux;
    j["verdict"] = to_string(r.verdict);
    j["diagnostic"] = r.diagnostic;
    return j;
}

IdentityCheckReport report_from_json(const ordered_json& j) {
    try {
        IdentityCheckReport r;
        r.id = j.at("id").get<std::string>();
        r.status = parse_status(j.at("status").get<std::string>());
        std::vector<std::pair<std::string, double>> coords;
        for (const auto& [k, v] : j.at("point").items()) coords.emplace_back(k, to_num(v));
        r.point = Point(std::move(coords));
        r.lhs_value = complex_from(j.at("lhs"));
        r.rhs_value = complex_from(j.at("rhs"));
        r.abs_err = to_num(j.at("abs_err"));
        if (!j.at("rel_err").is_null()) r.rel_err = to_num(j.at("rel_err"));
        r.tol_abs = to_num(j.at("tol_abs"));
        r.tol_rel = to_num(j.at("tol_rel"));
        if (const auto& q = j.at("quad"); !q.is_null()) {
            r.quad = QuadMeta{to_num(q.at("est_error")), q.at("evaluations").get<unsigned long>(),
                              q.at("subdivisions").get<unsigned>(), q.at("converged").get<bool>()};
        }
        if (const auto& e = j.at("exact"); !e.is_null()) {
            r.exact = ExactMeta{e.at("lhs").get<std::string>(), e.at("rhs").get<std::string>(),
                                e.at("equal").get<bool>()};
        }
        for (const auto& [k, v] : j.at("aux").items()) r.aux.emplace_back(k, to_num(v));
        r.verdict = parse_verdict(j.at("verdict").get<std::string>());
        r.diagnostic = j.at("diagnostic").get<std::string>();
        return r;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("report: ") + e.what());
    }
}

std::string reports_to_jsonl(const std::vector<IdentityCheckReport>& reports) {
    std::string out;
    for (const auto& r : reports) out += report_to_json(r).dump() + '\n';
    return out;
}

std::string reports_to_csv(const std::vector<IdentityCheckReport>& reports) {
    std::string out =
        "id,status,point,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol_abs,tol_rel,quad_est_error,"
        "quad_evaluations,quad_subdivisions,quad_converged,exact_lhs,exact_rhs,verdict,diagnostic\r\n";
    for (const auto& r : reports) {
        std::string pt;
        for (const auto& [k, v] : r.point.coords()) {
            if (!pt.empty()) pt += ';';
            pt += k + '=' + format_double(v);
        }
        std::vector<std::string> f = {
            r.id,
            to_string(r.status),
            pt,
            csv_num(r.lhs_value.real()),
            csv_num(r.lhs_value.imag()),
            csv_num(r.rhs_value.real()),
            csv_num(r.rhs_value.imag()),
            csv_num(r.abs_err),
            r.rel_err ? csv_num(*r.rel_err) : "",
            csv_num(r.tol_abs),
            csv_num(r.tol_rel),
            r.quad ? csv_num(r.quad->est_error) : "",
            r.quad ? std::to_string(r.quad->evaluations) : "",
            r.quad ? std::to_string(r.quad->subdivisions) : "",
            r.quad ? (r.quad->converged ? "true" : "false") : "",
            r.exact ? r.exact->lhs : "",
            r.exact ? r.exact->rhs : "",
            to_string(r.verdict),
            r.diagnostic,
        };
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (i) out += ',';
            out += csv_field(f[i]);
        }
        out += "\r\n";
    }
    return out;
}

ordered_json catalog_to_json() {
    ordered_json arr = ordered_json::array();
    for (const auto& s : catalog()) {
        ordered_json axes = ordered_json::array();
        for (const auto& a : s.domain.axes) {
            ordered_json vals = ordered_json::array();
            for (double v : a.values) vals.push_back(num(v));
            axes.push_back({{"name", a.name}, {"integer", a.integer}, {"values", vals}});
        }
        ordered_json defaults = ordered_json::object();
        for (const auto& [k, v] : s.defaults.coords()) defaults[k] = num(v);
        arr.push_back({{"id", s.id},
                       {"paper_ref", s.paper_ref},
                       {"domain", {{"axes", axes}, {"constraint", s.domain.constraint_text}}},
                       {"defaults", defaults},
                       {"status", to_string(s.status)},
                       {"tol_abs", s.tol_abs},
                       {"tol_rel", s.tol_rel}});
    }
    return arr;
}

}  // namespace ezeta
