#include "ddrep/io.hpp"

#include <fstream>
#include <sstream>

namespace ddrep {

namespace {

Rational rational_from_string(const std::string& s) {
    try {
        Rational r(s, 10);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParameterError("not a rational number: '" + s + "'");
    }
}

std::vector<int> int_vector(const Json& j, const char* what) {
    if (!j.is_array()) throw ParameterError(std::string(what) + " must be an integer array");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParameterError(std::string(what) + " must be an integer array");
        v.push_back(x.get<int>());
    }
    return v;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParameterError(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

Json scalar_to_json(const CycScalar& s) {
    Json c = Json::array();
    for (const auto& q : s.coeffs()) c.push_back(q.get_str());
    return Json{{"order", s.order()}, {"coeffs", c}};
}

CycScalar scalar_from_json(const Json& j) {
    if (j.is_number_integer()) return CycScalar(j.get<long>());
    if (j.is_string()) return CycScalar(rational_from_string(j.get<std::string>()));
    const int order = field(j, "order").get<int>();
    if (order < 1) throw ParameterError("scalar order must be positive");
    std::vector<Rational> c;
    for (const auto& x : field(j, "coeffs")) c.push_back(rational_from_string(x.get<std::string>()));
    if (c.size() != static_cast<size_t>(euler_phi(order))) throw ParameterError("scalar coefficient count differs from phi(order)");
    return CycScalar::from_poly(order, c);
}

EtaParam eta_from_string(const std::string& s, int order) {
    if (s == "inf" || s == "infinity" || s == "oo") return EtaParam::inf();
    return EtaParam::finite(CycScalar(rational_from_string(s), 1).coerce(order));
}

Json eta_to_json(const EtaParam& e) { return e.infinite ? Json("inf") : scalar_to_json(e.value); }

EtaParam eta_from_json(const Json& j, int order) {
    if (j.is_string()) return eta_from_string(j.get<std::string>(), order);
    return EtaParam::finite(scalar_from_json(j).coerce(lcm_int(order, scalar_from_json(j).order())));
}

Json weight_to_json(const Weight& w) { return Json{{"gpart", w.gpart}, {"h", w.h}}; }

Weight weight_from_json(const Json& j) {
    if (j.is_string()) return weight_from_string(j.get<std::string>());
    return Weight{int_vector(field(j, "gpart"), "gpart"), int_vector(field(j, "h"), "h")};
}

Weight weight_from_string(const std::string& s) {
    std::string body = s;
    if (!body.empty() && body.front() == '(') body = body.substr(1);
    if (!body.empty() && body.back() == ')') body.pop_back();
    const auto bar = body.find('|');
    if (bar == std::string::npos) throw ParameterError("weight must look like 'g1,..|h1,..'");
    auto parse = [](const std::string& part) {
        std::vector<int> v;
        std::stringstream ss(part);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                v.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParameterError("bad integer '" + tok + "' in weight");
            }
        }
        return v;
    };
    return Weight{parse(body.substr(0, bar)), parse(body.substr(bar + 1))};
}

Json datum_to_json(const GroupDatum& D) {
    return Json{{"orders", D.group.orders}, {"chi", D.chi.exps}, {"a", D.a}, {"alpha", scalar_to_json(D.alpha)}};
}

DatumPtr datum_from_json(const Json& j) {
    FinAbGroup g{int_vector(field(j, "orders"), "orders")};
    GroupChar chi{int_vector(field(j, "chi"), "chi")};
    GroupElem a = int_vector(field(j, "a"), "a");
    CycScalar alpha = j.contains("alpha") ? scalar_from_json(j.at("alpha")) : CycScalar(0);
    return make_datum(g, chi, a, alpha);
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_to_json(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, size_t rows, size_t cols) {
    if (!j.is_array() || j.size() != rows) throw ParameterError("matrix row count differs from module dimension");
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) throw ParameterError("matrix column count differs from module dimension");
        for (size_t k = 0; k < cols; ++k) m(i, k) = scalar_from_json(j[i][k]);
    }
    return m;
}

Json module_to_json(const ModuleRep& M) {
    Json group = Json::array(), gamma = Json::array();
    for (const auto& g : M.group_mats()) group.push_back(matrix_to_json(g));
    for (const auto& g : M.gamma_mats()) gamma.push_back(matrix_to_json(g));
    return Json{{"datum", datum_to_json(M.datum())},
                {"dim", M.dim()},
                {"labels", M.labels()},
                {"matrices", Json{{"group", group}, {"gamma", gamma}, {"x", matrix_to_json(M.x())}, {"xi", matrix_to_json(M.xi())}}}};
}

ModuleRep module_from_json(const Json& j) {
    DatumPtr D = datum_from_json(field(j, "datum"));
    const size_t dim = field(j, "dim").get<size_t>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    const Json& mats = field(j, "matrices");
    std::vector<Matrix> group, gamma;
    for (const auto& g : field(mats, "group")) group.push_back(matrix_from_json(g, dim, dim));
    for (const auto& g : field(mats, "gamma")) gamma.push_back(matrix_from_json(g, dim, dim));
    return ModuleRep(D, std::move(labels), std::move(group), std::move(gamma), matrix_from_json(field(mats, "x"), dim, dim),
                     matrix_from_json(field(mats, "xi"), dim, dim));
}

Json family_tag_to_json(const FamilyTag& t) {
    Json j{{"family", family_name(t.family)}, {"l", t.l}, {"lambda", weight_to_json(t.lambda)}};
    switch (t.family) {
        case Family::Tt:
        case Family::Ttbar: j["t"] = t.t; break;
        case Family::Mt:
        case Family::Wt:
            j["t"] = t.t;
            j["eta"] = eta_to_json(t.eta);
            break;
        case Family::M1:
        case Family::W1: j["eta"] = eta_to_json(t.eta); break;
        case Family::OmegaPower: j["s"] = t.s; break;
        case Family::V: j["basis"] = t.basis == BasisKind::Natural ? "natural" : "standard"; break;
        default: break;
    }
    return j;
}

FamilyTag family_tag_from_json(const Json& j, int order) {
    FamilyTag t;
    t.family = family_from_name(field(j, "family").get<std::string>());
    if (j.contains("l")) t.l = j.at("l").get<int>();
    t.lambda = weight_from_json(field(j, "lambda"));
    if (j.contains("t")) t.t = j.at("t").get<int>();
    if (j.contains("s")) t.s = j.at("s").get<int>();
    if (j.contains("eta")) t.eta = eta_from_json(j.at("eta"), order);
    if (j.contains("basis")) {
        const auto b = j.at("basis").get<std::string>();
        if (b == "natural") t.basis = BasisKind::Natural;
        else if (b == "standard") t.basis = BasisKind::Standard;
        else throw ParameterError("basis must be 'natural' or 'standard'");
    }
    return t;
}

Json relation_report_to_json(const RelationReport& r) {
    Json j = Json::object();
    for (const auto& v : r.items) {
        Json e{{"holds", v.holds}};
        if (!v.holds) {
            Json w = Json::array();
            for (const auto& s : v.witness) w.push_back(scalar_to_json(s));
            e["witness_index"] = *v.witness_index;
            e["witness"] = w;
        }
        j[v.name] = e;
    }
    return j;
}

Json loewy_to_json(const LoewyType& t) { return Json{{"s", t.s}, {"t", t.t}, {"rl", t.rl}}; }

Json multiplicities_to_json(const Multiplicities& m) {
    Json arr = Json::array();
    for (const auto& [lab, mult] : m) arr.push_back(Json{{"l", lab.l}, {"lambda", weight_to_json(lab.lambda)}, {"multiplicity", mult}});
    return arr;
}

Json iso_verdict_to_json(const IsoVerdict& v) {
    Json j{{"verdict", outcome_name(v.outcome)}, {"reason", v.reason}, {"trials", v.trials}};
    if (v.witness) j["witness"] = matrix_to_json(*v.witness);
    return j;
}

Json ses_report_to_json(const SesReport& r) {
    Json j{{"exact", r.exact},
           {"maps_are_intertwiners", r.maps_are_intertwiners},
           {"f_injective", r.f_injective},
           {"g_surjective", r.g_surjective},
           {"middle_exact", r.middle_exact},
           {"split", r.split},
           {"end_local_dim_left", r.end_local_a},
           {"end_local_dim_right", r.end_local_c},
           {"ar_candidate", r.ar_candidate()}};
    if (r.section) j["section"] = matrix_to_json(*r.section);
    if (r.translate) j["left_vs_omega2_right"] = iso_verdict_to_json(*r.translate);
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParameterError("invalid JSON in '" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParameterError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

}  // namespace ddrep
