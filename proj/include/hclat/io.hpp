#pragma once

#include "hclat/borel_weil.hpp"
#include "hclat/contraction.hpp"
#include "hclat/lattice.hpp"
#include "hclat/weight_module.hpp"
#include "hclat/zform.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hclat {

using nlohmann::json;

/// Coefficients of a weight module over a window: E v_p = e w_{p+1},
/// F v_p = f w_{p-1}, H v_p = h v_p (zero when the target index is absent).
struct ModuleRow {
    long index;
    Rational weight, e, f, h;
    friend bool operator==(const ModuleRow&, const ModuleRow&) = default;
};

struct ModuleTable {
    std::string family;
    long n = 1;
    Rational m{1};
    std::vector<ModuleRow> rows;
    friend bool operator==(const ModuleTable&, const ModuleTable&) = default;
};

ModuleTable tabulate(const WeightModule& mod, long lo, long hi);

struct ContractionRow {
    long index;
    Rational weight;
    Laurent e, f;
    Rational h;
    friend bool operator==(const ContractionRow&, const ContractionRow&) = default;
};

struct ContractionTable {
    std::string family;
    long n = 1;
    std::string ring;
    bool vanishing = false;
    std::vector<ContractionRow> rows;
    friend bool operator==(const ContractionTable&, const ContractionTable&) = default;
};

ContractionTable tabulate(const ContractionModule& mod, long lo, long hi);

Support parse_support(const std::string& text);

json to_json(const ModuleTable& t);
json to_json(const ContractionTable& t);
json to_json(const LatticeReport& r);
json to_json(const FiniteLattice& l);
json to_json(const FormPresentation& p);
json to_json(const FormClass& c);
json to_json(const CounitWitness& w);

ModuleTable module_table_from_json(const json& j);
ContractionTable contraction_table_from_json(const json& j);
LatticeReport lattice_report_from_json(const json& j);
FiniteLattice finite_lattice_from_json(const json& j);
FormPresentation form_presentation_from_json(const json& j);
FormClass form_class_from_json(const json& j);
CounitWitness counit_witness_from_json(const json& j);

/// Accepts a presentation table or a {"n", "m", "q"} form.
FormPresentation presentation_from_json(const json& j);

std::string to_csv(const ModuleTable& t);
std::string to_csv(const ContractionTable& t);
std::string to_csv(const LatticeReport& r);
std::string to_table(const ModuleTable& t);
std::string to_table(const ContractionTable& t);
std::string to_table(const LatticeReport& r);

/// Integer matrix as a JSON array of arrays of numbers.
json integer_matrix_json(const ZMatrix& a);
ZMatrix integer_matrix_from_json(const json& j);

}  // namespace hclat
