#pragma once

#include <string>

#include <json.hpp>

#include "swapalg/algebra.hpp"
#include "swapalg/oracle.hpp"
#include "swapalg/permutation.hpp"
#include "swapalg/rewrite.hpp"

namespace swapalg {

using Json = nlohmann::ordered_json;

Json to_json(const Permutation& p);
/// {"degree", "terms": [{"coefficient", "permutation", "one_line"}]}
Json to_json(const AlgebraElement& x);
Json to_json(const RewriteStep& step);
Json to_json(const RewriteTrace& trace);
/// {"basis", "degree", "coefficients": [{"index", "label", "re", "im"}]}
Json to_json(const BasisExpansion& expansion);
Json to_json(const TableauPair& pair);

std::string to_string(const GaussianRational& z);
std::string to_string(const RewriteStep& step);
/// "input: ...", one "step k: ..." line per step, "output: ...".
std::string to_string(const RewriteTrace& trace);
/// One "coefficient [labels]" line per nonzero coefficient.
std::string to_string(const BasisExpansion& expansion);
/// Rows separated by " / ", entries by spaces.
std::string to_string(const Tableau& t);

/// Tableau pair, shape, and goodness for d.
Json rsk_report_json(const Permutation& p, int d);
std::string rsk_report_text(const Permutation& p, int d);

}  // namespace swapalg
