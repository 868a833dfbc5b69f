#include "swapalg/serialize.hpp"

#include <sstream>

namespace swapalg {

namespace {

std::string labels(const BasisExpansion& e, const std::vector<int>& index) {
  std::string out;
  for (std::size_t k = 0; k < index.size(); ++k) out += (k ? " " : "") + basis_label(e.basis, index[k]);
  return out;
}

std::string letters_text(const RewriteRule& rule) {
  std::string out;
  for (const auto& [letter, point] : rule.letter_map) out += (out.empty() ? "" : " ") + letter + "=" + std::to_string(point);
  return out;
}

}  // namespace

Json to_json(const Permutation& p) { return to_cycle_string(p); }

Json to_json(const AlgebraElement& x) {
  Json terms = Json::array();
  for (const auto& [g, c] : x.terms())
    terms.push_back({{"coefficient", to_string(c)}, {"permutation", to_cycle_string(g)}, {"one_line", to_one_line_string(g)}});
  return {{"degree", x.degree()}, {"terms", std::move(terms)}};
}

Json to_json(const RewriteStep& step) {
  Json letters = Json::object();
  for (const auto& [letter, point] : step.rule.letter_map) letters[letter] = point;
  const auto& before = step.before();
  return {{"rule", to_string(step.rule.name)},
          {"letters", std::move(letters)},
          {"before", {{"coefficient", to_string(before.coefficient)}, {"permutation", to_cycle_string(before.perm)}}},
          {"after", to_json(step.after)}};
}

Json to_json(const RewriteTrace& trace) {
  Json steps = Json::array();
  for (const auto& s : trace.steps) steps.push_back(to_json(s));
  return {{"input", to_json(trace.input)}, {"steps", std::move(steps)}, {"output", to_json(trace.output)}};
}

Json to_json(const BasisExpansion& expansion) {
  Json coefficients = Json::array();
  for (const auto& [index, c] : expansion.coefficients)
    coefficients.push_back(
        {{"index", index}, {"label", labels(expansion, index)}, {"re", to_string(c.re)}, {"im", to_string(c.im)}});
  return {{"basis", expansion.basis == Basis::Pauli ? "pauli" : "units"},
          {"degree", expansion.degree},
          {"coefficients", std::move(coefficients)}};
}

Json to_json(const TableauPair& pair) {
  return {{"p", pair.p_tableau}, {"q", pair.q_tableau}, {"shape", pair.shape()}};
}

std::string to_string(const GaussianRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  const std::string im = to_string(z.im) + "i";
  if (sgn(z.re) == 0) return im;
  return to_string(z.re) + (sgn(z.im) > 0 ? "+" : "") + im;
}

std::string to_string(const RewriteStep& step) {
  const auto& before = step.before();
  return to_string(step.rule.name) + " [" + letters_text(step.rule) + "] " + to_string(before.coefficient) + "*" +
         to_cycle_string(before.perm) + " -> " + to_string(step.after);
}

std::string to_string(const RewriteTrace& trace) {
  std::ostringstream out;
  out << "input: " << to_string(trace.input) << "\n";
  for (std::size_t k = 0; k < trace.steps.size(); ++k) out << "step " << k + 1 << ": " << to_string(trace.steps[k]) << "\n";
  out << "output: " << to_string(trace.output) << "\n";
  return out.str();
}

std::string to_string(const BasisExpansion& expansion) {
  std::ostringstream out;
  for (const auto& [index, c] : expansion.coefficients) out << to_string(c) << " [" << labels(expansion, index) << "]\n";
  return out.str();
}

std::string to_string(const Tableau& t) {
  std::string out;
  for (std::size_t r = 0; r < t.size(); ++r) {
    if (r) out += " / ";
    for (std::size_t k = 0; k < t[r].size(); ++k) out += (k ? " " : "") + std::to_string(t[r][k]);
  }
  return out;
}

Json rsk_report_json(const Permutation& p, int d) {
  const auto pair = rsk(p);
  Json out = to_json(pair);
  out["permutation"] = to_cycle_string(p);
  out["one_line"] = to_one_line_string(p);
  out["longest_decreasing"] = longest_decreasing_subsequence(p);
  out["d"] = d;
  out["good"] = is_good(p, d);
  out["involution"] = is_involution(p);
  return out;
}

std::string rsk_report_text(const Permutation& p, int d) {
  const auto pair = rsk(p);
  std::ostringstream out;
  out << "permutation: " << to_cycle_string(p) << " " << to_one_line_string(p) << "\n";
  out << "P: " << to_string(pair.p_tableau) << "\n";
  out << "Q: " << to_string(pair.q_tableau) << "\n";
  out << "shape:";
  for (int len : pair.shape()) out << " " << len;
  out << "\nlongest decreasing: " << longest_decreasing_subsequence(p) << "\n";
  out << "good (d=" << d << "): " << (is_good(p, d) ? "yes" : "no") << "\n";
  out << "involution: " << (is_involution(p) ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace swapalg
