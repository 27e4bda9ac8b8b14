#include "liealg/report.hpp"

#include <sstream>

#include <json.hpp>

namespace liealg {

using nlohmann::json;

namespace {

constexpr const char* kSamplingNote =
    "checks run on sampled ideals plus the characteristic ideals; coverage of the ideal lattice is heuristic";

std::string format_subspace(const Subspace& s, const std::vector<std::string>& labels) {
  if (s.is_zero()) return "0";
  std::string out;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    if (r > 0) out += ", ";
    out += format_vector(s.basis().row_vector(r), labels);
  }
  return "span{" + out + "}";
}

json subspace_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    json row = json::array();
    for (const auto& x : s.basis().row(r)) row.push_back(x.to_string());
    rows.push_back(std::move(row));
  }
  return {{"dim", s.dim()}, {"basis", std::move(rows)}};
}

json series_json(const SeriesReport& s) {
  json terms = json::array();
  for (const auto& t : s.terms) terms.push_back(subspace_json(t));
  return terms;
}

const char* series_title(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::Derived:
      return "derived series";
    case SeriesKind::LowerCentral:
      return "lower central series";
    case SeriesKind::UpperCentral:
      return "upper central series";
  }
  return "";
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string format_vector(const Vector& v, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const bool negative = v[k].sign() < 0;
    const Rational mag = negative ? -v[k] : v[k];
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != Rational(1)) out += mag.to_string() + "*";
    out += labels.at(k);
  }
  return out.empty() ? "0" : out;
}

std::string render_profile_text(const LieAlgebra& lie, const ProfileReport& p) {
  const auto& labels = lie.labels();
  std::ostringstream os;
  os << "algebra of dimension " << lie.dim() << ", basis:";
  for (const auto& l : labels) os << " " << l;
  os << "\n";
  for (const auto* s : {&p.derived, &p.lower_central, &p.upper_central}) {
    os << "\n" << series_title(s->kind) << " (stabilizes at m = " << s->stabilization_index << ")\n";
    for (std::size_t k = 0; k < s->terms.size(); ++k)
      os << "  [" << k << "] dim " << s->terms[k].dim() << ": " << format_subspace(s->terms[k], labels) << "\n";
  }
  os << "\n";
  auto line = [&](const char* name, const Subspace& s) {
    os << name << " (dim " << s.dim() << "): " << format_subspace(s, labels) << "\n";
  };
  line("perfect radical P(L)", p.perfect_radical);
  line("near perfect radical NP(L)", p.near_perfect_radical);
  line("radical R(L)", p.radical);
  line("center Z(L)", p.center);
  line("smallest upper bounded ideal U_m(0)", p.smallest_upper_bounded);
  os << "\nsolvable: " << yes_no(p.flags.solvable) << "\nnilpotent: " << yes_no(p.flags.nilpotent)
     << "\nperfect: " << yes_no(p.flags.perfect) << "\nabelian: " << yes_no(p.flags.abelian)
     << "\nsemisimple: " << yes_no(p.flags.semisimple) << "\n";
  return os.str();
}

std::string render_profile_json(const LieAlgebra& lie, const ProfileReport& p) {
  json j;
  j["dim"] = lie.dim();
  j["basis"] = lie.labels();
  j["series"] = {{"derived", series_json(p.derived)},
                 {"lower_central", series_json(p.lower_central)},
                 {"upper_central", series_json(p.upper_central)}};
  j["stabilization_index"] = {{"derived", p.derived.stabilization_index},
                              {"lower_central", p.lower_central.stabilization_index},
                              {"upper_central", p.upper_central.stabilization_index}};
  j["perfect_radical"] = subspace_json(p.perfect_radical);
  j["near_perfect_radical"] = subspace_json(p.near_perfect_radical);
  j["radical"] = subspace_json(p.radical);
  j["center"] = subspace_json(p.center);
  j["smallest_upper_bounded"] = subspace_json(p.smallest_upper_bounded);
  j["flags"] = {{"solvable", p.flags.solvable},
                {"nilpotent", p.flags.nilpotent},
                {"perfect", p.flags.perfect},
                {"abelian", p.flags.abelian},
                {"semisimple", p.flags.semisimple}};
  return j.dump(2) + "\n";
}

std::string render_theorems_text(const oracle::TheoremReport& r, const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "# samples=" << r.samples << " seed=" << r.seed << " ideals=" << r.ideals_examined << "\n";
  os << "# " << kSamplingNote << "\n";
  for (const auto& e : r.entries) {
    os << e.id << " " << oracle::to_string(e.status) << " (" << e.instances << " instances)";
    if (!e.detail.empty()) os << " " << e.detail;
    os << " -- " << e.summary << "\n";
    if (e.witness) {
      os << "  witness: " << e.witness->note << "\n";
      for (const auto& [name, s] : e.witness->subspaces) os << "    " << name << " = " << format_subspace(s, labels) << "\n";
    }
  }
  return os.str();
}

std::string render_theorems_json(const oracle::TheoremReport& r, const std::vector<std::string>& labels) {
  json results = json::array();
  for (const auto& e : r.entries) {
    json item{{"id", e.id},
              {"status", std::string(oracle::to_string(e.status))},
              {"summary", e.summary},
              {"instances", e.instances},
              {"detail", e.detail}};
    if (e.witness) {
      json subs = json::array();
      for (const auto& [name, s] : e.witness->subspaces) {
        json sj = subspace_json(s);
        sj["name"] = name;
        subs.push_back(std::move(sj));
      }
      item["witness"] = {{"note", e.witness->note}, {"subspaces", std::move(subs)}};
    } else {
      item["witness"] = nullptr;
    }
    results.push_back(std::move(item));
  }
  json j{{"samples", r.samples},
         {"seed", r.seed},
         {"ideals_examined", r.ideals_examined},
         {"note", kSamplingNote},
         {"basis", labels},
         {"violated", r.any_violated()},
         {"results", std::move(results)}};
  return j.dump(2) + "\n";
}

}  // namespace liealg
