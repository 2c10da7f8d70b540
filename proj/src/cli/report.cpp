#include "report.hpp"

#include <cmath>
#include <sstream>

namespace abel::cli {

Json rational_json(const Rational& r) { return r.str(); }

Json poly_json(const UniPoly& p, std::string_view var) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
  return Json{{"expr", p.str(var)}, {"degree", p.degree()}, {"coefficients", coeffs}};
}

Json triple_json(const PellTriple& t, std::string_view var) {
  return Json{{"P", poly_json(t.P, var)},
              {"Q", poly_json(t.Q, var)},
              {"R", poly_json(t.R, var)},
              {"order", t.order},
              {"genus", t.genus},
              {"chart", std::string(chart_name(t.chart))}};
}

Json partition_json(const Partition& p) { return Json(p); }

Json ramspec_json(const RamSpec& s) {
  Json unassigned = Json::array();
  for (const auto& u : s.unassigned) unassigned.push_back(partition_json(u));
  Json members = Json::array();
  for (const auto& m : s.members()) members.push_back(partition_str(m));
  return Json{{"order", s.order},
              {"over_plus", partition_json(s.over_plus)},
              {"over_minus", partition_json(s.over_minus)},
              {"unassigned", unassigned},
              {"S", members},
              {"total_ramification", s.total_ramification()},
              {"marked_odd_parts", s.marked_odd_parts()}};
}

Json verification_json(const VerificationReport& r) {
  return Json{{"valid", r.valid},     {"order", r.order},     {"genus", r.genus},
              {"in_vAb", r.in_vab},   {"in_wAb", r.in_wab},   {"in_uAb", r.in_uab},
              {"failures", r.failures}};
}

Json hurwitz_json(const HurwitzReport& r) {
  return Json{{"order", r.order},
              {"genus", r.genus},
              {"e", r.e},
              {"e_prime", r.e_prime},
              {"w", r.w},
              {"riemann_hurwitz_total", r.riemann_hurwitz_total},
              {"generic_stratum", r.generic_stratum},
              {"genus_check", r.genus_check},
              {"map_hurwitz_formula", r.map_hurwitz_formula},
              {"cover_hurwitz_formula", r.cover_hurwitz_formula},
              {"e_equals_genus", r.e_equals_genus}};
}

Json tangent_json(const TangentRank& r) {
  return Json{{"chart", std::string(chart_name(r.chart))},
              {"variables", r.variables},
              {"p_variables", r.p_variables},
              {"q_variables", r.q_variables},
              {"r_variables", r.r_variables},
              {"equations", r.equations},
              {"rank", r.rank},
              {"corank", r.corank},
              {"expected_corank", r.expected_corank}};
}

Json certificate_json(const OrbitCertificate& c, bool with_tuples) {
  Json j{{"genus", c.genus},
         {"order", c.order},
         {"variant", std::string(variant_name(c.variant))},
         {"m_count", c.m_count},
         {"component_count", c.component_count},
         {"orbit_sizes", c.orbit_sizes},
         {"tuples_with_product_c", c.tuples_with_product_c},
         {"search_size", static_cast<std::uint64_t>(std::llround(c.search_size))},
         {"moves_applied", c.moves_applied},
         {"moves_valid", c.moves_valid}};
  if (with_tuples) {
    Json reps = Json::array();
    for (std::size_t i = 0; i < c.representatives.size(); ++i) {
      const auto t = c.representatives[i].tuple();
      reps.push_back(Json{{"tuple", t.str()}, {"orbit_size", c.orbit_sizes[i]}, {"ramspec", ramspec_json(tuple_ramspec(t))}});
    }
    j["representatives"] = reps;
  }
  return j;
}

Json check(std::string_view name, bool ok) { return Json{{"name", std::string(name)}, {"ok", ok}}; }

bool all_checks_pass(const Json& checks) {
  for (const auto& c : checks) {
    if (!c.at("ok").get<bool>()) return false;
  }
  return true;
}

namespace {

bool is_flat(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j) {
    if (e.is_object()) return false;
    if (e.is_array() && !is_flat(e)) return false;
  }
  return true;
}

std::string scalar(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar(j[i]);
    return s + "]";
  }
  return j.dump();
}

void render(std::ostringstream& os, const Json& j, int depth) {
  const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  if (j.is_object()) {
    // Polynomials print as their expression only.
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() && value.contains("expr") && value.contains("coefficients")) {
        os << pad << key << ": " << value["expr"].get<std::string>() << "\n";
      } else if (value.is_object() && value.contains("name") && value.contains("ok") && value.size() == 2) {
        os << pad << key << ": " << (value["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
      } else if (value.is_object() || (value.is_array() && !is_flat(value))) {
        os << pad << key << ":\n";
        render(os, value, depth + 1);
      } else {
        os << pad << key << ": " << scalar(value) << "\n";
      }
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j) {
      if (value.is_object() && value.contains("name") && value.contains("ok") && value.size() == 2) {
        os << pad << value["name"].get<std::string>() << ": " << (value["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
      } else if (value.is_object() || value.is_array()) {
        os << pad << "[" << i << "]\n";
        render(os, value, depth + 1);
      } else {
        os << pad << scalar(value) << "\n";
      }
      ++i;
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const Json& doc) {
  std::ostringstream os;
  render(os, doc, 0);
  return os.str();
}

}  // namespace abel::cli
