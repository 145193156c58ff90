#include "hclat/io.hpp"

#include <algorithm>
#include <sstream>

namespace hclat {

namespace {

std::string rat(const Rational& x) { return to_string(x); }

Rational rat_from(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw DomainError("expected a rational string, got " + j.dump());
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string aligned(const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> width;
    for (const auto& row : cells)
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], row[i].size());
        }
    std::ostringstream os;
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += std::string(width[i] - row[i].size(), ' ') + row[i];
        }
        os << line << "\n";
    }
    return os.str();
}

std::string csv(const std::vector<std::vector<std::string>>& cells) {
    std::ostringstream os;
    for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            const bool quote = row[i].find_first_of(", ") != std::string::npos;
            os << (i ? "," : "") << (quote ? "\"" + row[i] + "\"" : row[i]);
        }
        os << "\n";
    }
    return os.str();
}

std::vector<std::vector<std::string>> cells(const ModuleTable& t) {
    std::vector<std::vector<std::string>> out{{"index", "weight", "E", "F", "H"}};
    for (const auto& r : t.rows) out.push_back({std::to_string(r.index), rat(r.weight), rat(r.e), rat(r.f), rat(r.h)});
    return out;
}

std::vector<std::vector<std::string>> cells(const ContractionTable& t) {
    std::vector<std::vector<std::string>> out{{"index", "weight", "e", "f", "h"}};
    for (const auto& r : t.rows)
        out.push_back({std::to_string(r.index), rat(r.weight), to_string(r.e), to_string(r.f), rat(r.h)});
    return out;
}

std::vector<std::vector<std::string>> cells(const LatticeReport& r) {
    std::vector<std::vector<std::string>> out{{"p", "M_p"}};
    for (const auto& [p, e] : r.exponents) out.push_back({std::to_string(p), std::to_string(e)});
    return out;
}

}  // namespace

ModuleTable tabulate(const WeightModule& mod, long lo, long hi) {
    ModuleTable t{mod.family, mod.n, mod.m, {}};
    for (long p = lo; p <= hi; ++p) {
        if (!mod.exists(p)) continue;
        const Rational e = mod.exists(p + 1) ? mod.e_coeff(p) : Rational(0);
        const Rational f = mod.exists(p - 1) ? mod.f_coeff(p) : Rational(0);
        t.rows.push_back({p, mod.weight(p), e, f, mod.weight(p)});
    }
    return t;
}

ContractionTable tabulate(const ContractionModule& mod, long lo, long hi) {
    ContractionTable t{mod.family, mod.n, mod.ring.name(), mod.vanishing, {}};
    for (long p = lo; p <= hi; ++p) {
        if (!mod.exists(p)) continue;
        const Laurent e = mod.exists(p + 1) ? mod.e_coeff(p) : Laurent();
        const Laurent f = mod.exists(p - 1) ? mod.f_coeff(p) : Laurent();
        t.rows.push_back({p, mod.weight_offset + Rational(mod.n * p), e, f, mod.h_coeff(p)});
    }
    return t;
}

Support parse_support(const std::string& text) {
    if (text == "all p") return Support::all();
    if (text == "empty") return Support::empty();
    if (text.rfind("p >= ", 0) == 0) return Support::at_least(std::stol(text.substr(5)));
    if (text.rfind("p <= ", 0) == 0) return Support::at_most(std::stol(text.substr(5)));
    throw DomainError("unrecognized support '" + text + "'");
}

json to_json(const ModuleTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back({r.index, rat(r.weight), rat(r.e), rat(r.f), rat(r.h)});
    return {{"module", t.family}, {"n", t.n}, {"m", rat(t.m)}, {"rows", rows}};
}

ModuleTable module_table_from_json(const json& j) {
    ModuleTable t{field(j, "module").get<std::string>(), field(j, "n").get<long>(), rat_from(field(j, "m")), {}};
    for (const auto& r : field(j, "rows")) {
        if (!r.is_array() || r.size() != 5) throw DomainError("module row must be [index, weight, E, F, H]");
        t.rows.push_back({r[0].get<long>(), rat_from(r[1]), rat_from(r[2]), rat_from(r[3]), rat_from(r[4])});
    }
    return t;
}

json to_json(const ContractionTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back({r.index, rat(r.weight), to_string(r.e), to_string(r.f), rat(r.h)});
    return {{"module", t.family}, {"n", t.n}, {"ring", t.ring}, {"vanishing", t.vanishing}, {"rows", rows}};
}

ContractionTable contraction_table_from_json(const json& j) {
    ContractionTable t{field(j, "module").get<std::string>(), field(j, "n").get<long>(),
                       field(j, "ring").get<std::string>(), field(j, "vanishing").get<bool>(), {}};
    for (const auto& r : field(j, "rows")) {
        if (!r.is_array() || r.size() != 5) throw DomainError("contraction row must be [index, weight, e, f, h]");
        t.rows.push_back({r[0].get<long>(), rat_from(r[1]), parse_laurent(r[2].get<std::string>()),
                          parse_laurent(r[3].get<std::string>()), rat_from(r[4])});
    }
    return t;
}

json to_json(const LatticeReport& r) {
    json exps = json::array();
    for (const auto& [p, e] : r.exponents) exps.push_back({p, e});
    json out{{"variant", to_string(r.variant)},
             {"n", r.params.n},
             {"m", r.params.m},
             {"eps", rat(r.params.eps)},
             {"mu", r.params.mu},
             {"nonzero", r.nonzero},
             {"support", to_string(r.support)},
             {"exponents", exps}};
    out["oracle_agrees"] = r.oracle_agrees ? json(*r.oracle_agrees) : json(nullptr);
    return out;
}

LatticeReport lattice_report_from_json(const json& j) {
    LatticeReport r;
    r.variant = parse_lattice_variant(field(j, "variant").get<std::string>());
    r.params = {field(j, "n").get<long>(), field(j, "m").get<long>(), rat_from(field(j, "eps")),
                field(j, "mu").get<long>()};
    r.nonzero = field(j, "nonzero").get<bool>();
    r.support = parse_support(field(j, "support").get<std::string>());
    for (const auto& e : field(j, "exponents")) r.exponents[e.at(0).get<long>()] = e.at(1).get<long>();
    if (j.contains("oracle_agrees") && !j.at("oracle_agrees").is_null()) r.oracle_agrees = j.at("oracle_agrees").get<bool>();
    return r;
}

json integer_matrix_json(const ZMatrix& a) {
    json out = json::array();
    for (const auto& row : a) {
        json r = json::array();
        for (const auto& x : row) {
            if (!x.fits_slong_p()) throw DomainError("matrix entry too large for JSON: " + x.get_str());
            r.push_back(x.get_si());
        }
        out.push_back(r);
    }
    return out;
}

ZMatrix integer_matrix_from_json(const json& j) {
    ZMatrix out;
    for (const auto& row : j) {
        std::vector<Integer> r;
        for (const auto& x : row) r.emplace_back(x.get<long>());
        out.push_back(r);
    }
    return out;
}

json to_json(const FiniteLattice& l) {
    json gens = json::array();
    for (const auto& g : l.gens) gens.push_back(rat(g));
    return {{"weights", l.weights()},
            {"generators", gens},
            {"E", integer_matrix_json(to_integer_matrix(l.action_e()))},
            {"F", integer_matrix_json(to_integer_matrix(l.action_f()))},
            {"H", integer_matrix_json(to_integer_matrix(l.action_h()))}};
}

FiniteLattice finite_lattice_from_json(const json& j) {
    FiniteLattice l;
    l.ambient.weights = field(j, "weights").get<std::vector<long>>();
    for (const auto& g : field(j, "generators")) l.gens.push_back(rat_from(g));
    const std::size_t d = l.ambient.weights.size();
    if (l.gens.size() != d) throw DomainError("lattice needs one generator per weight");
    // Ambient action is D A D^-1 with D = diag(generators).
    auto ambient = [&](const char* key) {
        ZMatrix a = integer_matrix_from_json(field(j, key));
        if (a.size() != d) throw DomainError(std::string("matrix ") + key + " has wrong size");
        QMatrix out = zero_matrix(d, d);
        for (std::size_t r = 0; r < d; ++r) {
            if (a[r].size() != d) throw DomainError(std::string("matrix ") + key + " has wrong size");
            for (std::size_t c = 0; c < d; ++c) out[r][c] = l.gens[r] * Rational(a[r][c]) / l.gens[c];
        }
        return out;
    };
    l.ambient.e = ambient("E");
    l.ambient.f = ambient("F");
    return l;
}

json to_json(const FormPresentation& p) {
    json real = json::array();
    for (const auto& m : p.realization) real.push_back({rat(m.m[0]), rat(m.m[1]), rat(m.m[2]), rat(m.m[3])});
    return {{"weights", p.weights}, {"structure", p.structure}, {"realization", real}};
}

FormPresentation form_presentation_from_json(const json& j) {
    FormPresentation p;
    p.weights = field(j, "weights").get<std::array<long, 3>>();
    p.structure = field(j, "structure").get<std::array<std::array<std::array<long, 3>, 3>, 3>>();
    const json& real = field(j, "realization");
    if (!real.is_array() || real.size() != 3) throw DomainError("realization must list three 2x2 matrices");
    for (std::size_t i = 0; i < 3; ++i) {
        if (!real[i].is_array() || real[i].size() != 4) throw DomainError("realization matrix must be [a, b, c, d]");
        for (std::size_t k = 0; k < 4; ++k) p.realization[i].m[k] = rat_from(real[i][k]);
    }
    return p;
}

FormPresentation presentation_from_json(const json& j) {
    if (j.is_object() && j.contains("structure")) return form_presentation_from_json(j);
    return presentation_of(make_zform(field(j, "n").get<long>(), field(j, "m").get<long>(), rat_from(field(j, "q"))));
}

json to_json(const FormClass& c) { return {{"n", c.n}, {"m", c.m}, {"q_abs", rat(c.q_abs)}}; }

FormClass form_class_from_json(const json& j) {
    return {field(j, "n").get<long>(), field(j, "m").get<long>(), rat_from(field(j, "q_abs"))};
}

json to_json(const CounitWitness& w) {
    return {{"lambda", w.lambda}, {"n", w.n},           {"scale", w.scale}, {"fraction", rat(w.fraction)},
            {"weight_ok", w.weight_ok}, {"f_ok", w.f_ok}, {"h_ok", w.h_ok}};
}

CounitWitness counit_witness_from_json(const json& j) {
    CounitWitness w{field(j, "lambda").get<long>(), field(j, "n").get<long>(), field(j, "scale").get<long>(),
                    rat_from(field(j, "fraction"))};
    w.weight_ok = field(j, "weight_ok").get<bool>();
    w.f_ok = field(j, "f_ok").get<bool>();
    w.h_ok = field(j, "h_ok").get<bool>();
    return w;
}

std::string to_csv(const ModuleTable& t) { return csv(cells(t)); }
std::string to_csv(const ContractionTable& t) { return csv(cells(t)); }
std::string to_csv(const LatticeReport& r) { return csv(cells(r)); }

std::string to_table(const ModuleTable& t) {
    return t.family + " (n = " + std::to_string(t.n) + ", m = " + rat(t.m) + ")\n" + aligned(cells(t));
}

std::string to_table(const ContractionTable& t) {
    std::string head = t.family + " over " + t.ring + " (n = " + std::to_string(t.n) + ")";
    if (t.vanishing) head += ", zero module";
    return head + "\n" + aligned(cells(t));
}

std::string to_table(const LatticeReport& r) {
    std::ostringstream os;
    os << to_string(r.variant) << " (n = " << r.params.n << ", m = " << r.params.m << ", eps = " << rat(r.params.eps)
       << ", mu = " << r.params.mu << "): " << (r.nonzero ? "nonzero" : "zero") << ", support " << to_string(r.support);
    if (r.oracle_agrees) os << ", oracle " << (*r.oracle_agrees ? "agrees" : "DISAGREES");
    os << "\n";
    return os.str() + aligned(cells(r));
}

}  // namespace hclat
