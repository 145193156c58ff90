#include "hclat/borel_weil.hpp"
#include "hclat/contraction.hpp"
#include "hclat/io.hpp"
#include "hclat/lattice.hpp"
#include "hclat/verify.hpp"
#include "hclat/weight_module.hpp"
#include "hclat/zform.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hclat;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Document {
    json body;
    std::string csv, table;  // empty when the document has no tabular form
    int status = 0;
};

std::pair<long, long> parse_window(const std::string& text) {
    auto colon = text.find(':', text[0] == '-' ? 1 : 0);
    try {
        if (colon == std::string::npos) throw std::invalid_argument("");
        std::size_t used = 0;
        long a = std::stol(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("");
        std::string rest = text.substr(colon + 1);
        long b = std::stol(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
        if (a > b) throw UsageError("--window A:B needs A <= B");
        return {a, b};
    } catch (const std::logic_error&) {
        throw UsageError("--window expects A:B with integers A <= B, got '" + text + "'");
    }
}

Rational parse_rational_flag(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const DomainError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

// eps = K/N with N | n and 0 <= K/N < 1.
Rational parse_eps(const std::string& text, long n) {
    Rational eps = parse_rational_flag("--eps", text);
    auto slash = text.find('/');
    long den = 1;
    if (slash != std::string::npos) den = std::stol(text.substr(slash + 1));
    if (den <= 0 || n % den != 0)
        throw UsageError("--eps K/N requires N to divide n = " + std::to_string(n) + ", got '" + text + "'");
    if (eps < 0 || eps >= 1) throw UsageError("--eps must lie in [0, 1), got '" + text + "'");
    return eps;
}

void require(bool cond, const std::string& message) {
    if (!cond) throw UsageError(message);
}

std::string key_value_lines(const json& j, const std::string& prefix = "") {
    std::ostringstream os;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object())
            os << key_value_lines(*it, prefix + it.key() + ".");
        else
            os << prefix << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
    }
    return os.str();
}

ZForm form_for(SubalgebraLabel label, long n, long m) {
    switch (label) {
        case SubalgebraLabel::Parabolic: return ZForm(n, m, make_rational(1, 2));
        case SubalgebraLabel::ParabolicPrime: return ZForm(n, m, Rational(n * m));
        case SubalgebraLabel::ParabolicDoublePrime: return ZForm(n, m, Rational(n));
        default: throw UsageError("--parabolic must be q, qp or qpp");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hclat: integral models of Harish-Chandra modules for covers of PU(1,1)"};
    app.require_subcommand(1);
    std::string format = "json", out_path;
    app.add_option("--format", format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--out", out_path, "write the document to FILE");
    app.fallthrough();

    // classify
    auto* classify = app.add_subcommand("classify", "classify a split Z-form of (sl2, T^1)");
    std::string table_path;
    long cl_n = 0, cl_m = 0;
    std::string cl_q;
    bool cl_presentation = false;
    classify->add_option("--table", table_path, "JSON presentation table or {n, m, q}")->check(CLI::ExistingFile);
    classify->add_option("--n", cl_n);
    classify->add_option("--m", cl_m);
    classify->add_option("--q", cl_q);
    classify->add_flag("--presentation", cl_presentation, "emit the presentation table instead of the class");

    // module
    auto* module = app.add_subcommand("module", "weight module coefficients over a window");
    std::string mod_kind, mod_parabolic, mod_eps = "0", mod_mu, mod_window = "-5:5";
    long mod_n = 1, mod_m = 1;
    std::optional<long> mod_lambda;
    module->add_option("--kind", mod_kind)->required()->check(CLI::IsMember({"ind", "pro", "ps"}));
    module->add_option("--parabolic", mod_parabolic)->check(CLI::IsMember({"q", "qp", "qpp"}));
    module->add_option("--n", mod_n)->check(CLI::PositiveNumber);
    module->add_option("--m", mod_m)->check(CLI::PositiveNumber);
    module->add_option("--lambda", mod_lambda);
    module->add_option("--eps", mod_eps);
    module->add_option("--mu", mod_mu);
    module->add_option("--window", mod_window);

    // lattice
    auto* lattice = app.add_subcommand("lattice", "2-adic exponents of the integral principal series");
    std::string lat_variant, lat_eps = "0", lat_window = "-5:5";
    long lat_n = 1, lat_m = 1, lat_mu = 0, lat_depth = 64;
    bool lat_oracle = false;
    lattice->add_option("--variant", lat_variant)->required()->check(CLI::IsMember({"q", "qp", "qpp"}));
    lattice->add_option("--n", lat_n)->check(CLI::PositiveNumber);
    lattice->add_option("--m", lat_m)->check(CLI::PositiveNumber);
    lattice->add_option("--eps", lat_eps);
    lattice->add_option("--mu", lat_mu)->required();
    lattice->add_option("--window", lat_window);
    lattice->add_flag("--oracle", lat_oracle, "cross-check against the brute-force extension oracle");
    lattice->add_option("--depth", lat_depth, "oracle iteration depth")->check(CLI::Range(4L, 4096L));

    // contract
    auto* contract = app.add_subcommand("contract", "contraction family modules over Q[z] or Q[z, 1/z]");
    std::string con_kind, con_eps = "0", con_mu, con_ring = "laurent", con_window = "-5:5", con_at;
    long con_n = 1;
    std::optional<long> con_lambda;
    contract->add_option("--kind", con_kind)->required()->check(CLI::IsMember({"ind", "pro", "ps"}));
    contract->add_option("--n", con_n)->check(CLI::PositiveNumber);
    contract->add_option("--lambda", con_lambda);
    contract->add_option("--eps", con_eps);
    contract->add_option("--mu", con_mu, "Laurent polynomial in z, e.g. \"1 + 2*z\"");
    contract->add_option("--ring", con_ring)->check(CLI::IsMember({"poly", "laurent"}));
    contract->add_option("--window", con_window);
    contract->add_option("--at", con_at, "specialize z to this rational value");

    // bw
    auto* bw = app.add_subcommand("bw", "SL2 Borel-Weil lattices over Z");
    long bw_lambda = 0, bw_n = 1;
    std::string bw_op;
    std::vector<long> bw_primes{2, 3, 5};
    bool bw_divided = false;
    bw->add_option("--lambda", bw_lambda)->required();
    bw->add_option("--n", bw_n)->check(CLI::PositiveNumber);
    bw->add_option("--op", bw_op)->required()->check(CLI::IsMember({"min", "max", "dual", "hom", "certify", "counit"}));
    bw->add_option("--primes", bw_primes, "primes for --op certify")->delimiter(',');
    bw->add_flag("--divided-powers", bw_divided, "close lattices under E^k/k! and F^k/k!");

    // verify
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    std::string suite = "all";
    bool corrupt = false;
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("--suite", suite)->check(CLI::IsMember(suites));
    verify->add_flag("--corrupt", corrupt, "negative control: perturb module coefficients");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Document doc;
        if (*classify) {
            FormPresentation p;
            if (!table_path.empty()) {
                require(cl_n == 0 && cl_m == 0 && cl_q.empty(), "classify takes either --table or --n/--m/--q");
                std::ifstream in(table_path);
                json j;
                try {
                    j = json::parse(in);
                } catch (const json::exception& e) {
                    throw DomainError(std::string("malformed JSON in ") + table_path + ": " + e.what());
                }
                if (j.is_array()) {
                    json classes = json::array();
                    for (const auto& item : j) classes.push_back(to_json(hclat::classify(presentation_from_json(item))));
                    doc.body = classes;
                } else {
                    p = presentation_from_json(j);
                }
            } else {
                require(cl_n > 0 && cl_m > 0 && !cl_q.empty(), "classify needs --table FILE or all of --n, --m, --q");
                p = presentation_of(make_zform(cl_n, cl_m, parse_rational_flag("--q", cl_q)));
            }
            if (doc.body.is_null()) doc.body = cl_presentation ? to_json(p) : to_json(hclat::classify(p));
        } else if (*module) {
            auto [lo, hi] = parse_window(mod_window);
            WeightModule mod;
            if (mod_kind == "ps") {
                require(!mod_lambda, "--lambda applies to ind/pro only");
                require(!mod_parabolic.empty(), "ps needs --parabolic q|qp|qpp");
                require(!mod_mu.empty(), "ps needs --mu");
                SubalgebraLabel label = parse_subalgebra_label(mod_parabolic);
                require(label != SubalgebraLabel::ParabolicDoublePrime || mod_m == 2 * mod_n, "qpp requires m = 2n");
                const Rational eps = parse_eps(mod_eps, mod_n);
                const Rational mu = parse_rational_flag("--mu", mod_mu);
                mod = principal_series(form_for(label, mod_n, mod_m), label, {eps, mu, label});
            } else {
                require(mod_lambda.has_value(), mod_kind + " needs --lambda");
                require(mod_mu.empty() && mod_parabolic.empty(), "--mu and --parabolic apply to ps only");
                ZForm g(mod_n, mod_m, Rational(1));
                mod = mod_kind == "ind" ? induced_module(g, *mod_lambda) : produced_module(g, *mod_lambda);
            }
            ModuleTable t = tabulate(mod, lo, hi);
            doc = {to_json(t), to_csv(t), to_table(t)};
        } else if (*lattice) {
            auto [lo, hi] = parse_window(lat_window);
            LatticeVariant v = parse_lattice_variant(lat_variant);
            require(v != LatticeVariant::QDoublePrime || lat_m == 2 * lat_n, "qpp requires m = 2n");
            LatticeParams x{lat_n, lat_m, parse_eps(lat_eps, lat_n), lat_mu};
            LatticeReport r = integral_model(v, x, lo, hi);
            if (lat_oracle) attach_oracle(r, lat_depth);
            doc = {to_json(r), to_csv(r), to_table(r)};
        } else if (*contract) {
            auto [lo, hi] = parse_window(con_window);
            ContractionModule mod;
            if (con_kind == "ps") {
                require(!con_lambda, "--lambda applies to ind/pro only");
                require(!con_mu.empty(), "ps needs --mu");
                Laurent mu;
                try {
                    mu = parse_laurent(con_mu);
                } catch (const DomainError& e) {
                    throw UsageError(std::string("--mu: ") + e.what());
                }
                mod = contracted_ps(con_n, parse_eps(con_eps, con_n), mu,
                                    con_ring == "poly" ? CoefficientRing::poly() : CoefficientRing::laurent());
            } else {
                require(con_lambda.has_value(), con_kind + " needs --lambda");
                require(con_mu.empty(), "--mu applies to ps only");
                mod = con_kind == "ind" ? contracted_induced(*con_lambda, con_n) : contracted_produced(*con_lambda, con_n);
            }
            if (!con_at.empty()) {
                ModuleTable t = tabulate(specialize(mod, parse_rational_flag("--at", con_at)), lo, hi);
                doc = {to_json(t), to_csv(t), to_table(t)};
            } else {
                ContractionTable t = tabulate(mod, lo, hi);
                doc = {to_json(t), to_csv(t), to_table(t)};
            }
        } else if (*bw) {
            json body{{"op", bw_op}, {"lambda", bw_lambda}};
            if (bw_op == "min" || bw_op == "max" || bw_op == "dual") {
                require(bw_lambda >= 0, "--lambda must be >= 0 for --op " + bw_op);
                FiniteLattice l = bw_op == "min"   ? minimal_lattice(bw_lambda, bw_divided)
                                  : bw_op == "max" ? maximal_lattice(bw_lambda, bw_divided)
                                                   : dual_lattice(minimal_lattice(bw_lambda, bw_divided));
                body["lattice"] = to_json(l);
            } else if (bw_op == "hom") {
                require(bw_lambda >= 0, "--lambda must be >= 0 for --op hom");
                FiniteLattice a = minimal_lattice(bw_lambda, bw_divided), b = maximal_lattice(bw_lambda, bw_divided);
                auto basis = integral_intertwiners(a, b);
                json rows = json::array();
                for (const auto& v : basis) rows.push_back(integer_matrix_json({v})[0]);
                auto index = inclusion_index(a, b);
                body["rank"] = basis.size();
                body["basis"] = rows;
                body["inclusion_index"] = index ? json(index->get_str()) : json(nullptr);
            } else if (bw_op == "certify") {
                require(bw_lambda >= 0, "--lambda must be >= 0 for --op certify");
                MaximalityReport r = maximality_certificate(maximal_lattice(bw_lambda, bw_divided), bw_primes);
                json enl = json::array();
                for (const auto& e : r.enlargeable) enl.push_back({{"weight", e.weight}, {"prime", e.prime}});
                body["primes"] = bw_primes;
                body["certified"] = r.certified;
                body["enlargeable"] = enl;
            } else {
                body["witness"] = to_json(realize_fraction(bw_lambda, bw_n));
            }
            doc.body = body;
        } else if (*verify) {
            auto reports = run_verify(suite, {corrupt});
            json arr = json::array();
            std::ostringstream table, csv;
            csv << "suite,invariant,status,detail\n";
            bool ok = true;
            for (const auto& r : reports) {
                arr.push_back(to_json(r));
                ok = ok && r.ok();
                for (const auto& x : r.results) {
                    table << r.suite << "." << x.name << ": " << x.status << " (" << x.detail << ")\n";
                    csv << r.suite << "," << x.name << ",\"" << x.status << "\",\"" << x.detail << "\"\n";
                }
            }
            doc = {{{"ok", ok}, {"suites", arr}}, csv.str(), table.str(), ok ? 0 : 1};
        }

        std::string text;
        if (format == "json")
            text = doc.body.dump(2) + "\n";
        else if (format == "csv")
            text = doc.csv.empty() ? key_value_lines(doc.body) : doc.csv;
        else
            text = doc.table.empty() ? key_value_lines(doc.body) : doc.table;
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out) throw DomainError("cannot write " + out_path);
            out << text;
        }
        return doc.status;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\nRun with --help for more information.\n";
        return 2;
    } catch (const std::exception& e) {
        if (format == "json")
            std::cout << json{{"error", {{"type", "domain"}, {"message", e.what()}}}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
