#include "galois/report.hpp"

#include <cstdio>
#include <sstream>

namespace galois {

using nlohmann::ordered_json;

namespace {

Integer height(const IntPolynomial& p) {
  Integer h = 0;
  for (const auto& c : p.coefficients())
    if (abs(c) > h) h = abs(c);
  return h;
}

std::string weights_text(const WeightTuple& w) {
  std::string s = "(";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? ", " : "") + w[k].get_str();
  return s + ")";
}

std::string perm_list(const std::vector<Permutation>& perms) {
  std::string s = "{";
  for (std::size_t i = 0; i < perms.size(); ++i) s += (i ? ", " : "") + perms[i].cycles();
  return s + "}";
}

std::string orbits_text(const std::vector<std::vector<std::size_t>>& orbits) {
  std::string s;
  for (const auto& o : orbits) {
    s += s.empty() ? "{" : " {";
    for (std::size_t i = 0; i < o.size(); ++i) s += (i ? "," : "") + std::to_string(o[i] + 1);
    s += "}";
  }
  return s;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

ordered_json permutations_json(const std::vector<Permutation>& perms) {
  ordered_json a = ordered_json::array();
  for (const auto& p : perms) a.push_back(p.cycles());
  return a;
}

ordered_json subgroup_resolvent_json(const SubgroupResolvent& sr) {
  ordered_json j;
  j["alpha"] = sr.alpha.to_string();
  j["n0"] = sr.n0.get_str();
  j["stabilizer"] = permutations_json(sr.stabilizer);
  return j;
}

}  // namespace

ordered_json coefficients_json(const IntPolynomial& p) {
  ordered_json a = ordered_json::array();
  for (const auto& c : p.descending()) a.push_back(c.get_str());
  return a;
}

ordered_json report_json(const RunReport& r, bool with_timings) {
  const ResolventData& rd = r.data;
  ordered_json j;

  ordered_json input;
  input["text"] = r.input_text;
  input["polynomial"] = to_string(r.input, 'x');
  input["degree"] = r.input.degree();
  input["squarefree_reduced"] = r.squarefree_reduced;
  input["squarefree_part"] = to_string(r.squarefree, 'x');
  j["input"] = input;

  ordered_json norm;
  norm["polynomial"] = to_string(rd.f, 'x');
  norm["coefficients"] = coefficients_json(rd.f);
  norm["scale"] = rd.scale.get_str();
  norm["irreducible"] = rd.f_irreducible;
  j["normalization"] = norm;

  ordered_json w = ordered_json::array();
  for (const auto& x : rd.weights.values) w.push_back(x.get_str());
  j["weights"] = w;

  ordered_json res;
  res["degree"] = rd.F.degree();
  res["height"] = height(rd.F).get_str();
  res["squarefree"] = true;
  res["coefficients"] = coefficients_json(rd.F);
  j["resolvent"] = res;

  ordered_json factor;
  factor["polynomial"] = to_string(rd.G, 'v');
  factor["degree"] = rd.G.degree();
  factor["coefficients"] = coefficients_json(rd.G);
  ordered_json subset = ordered_json::array();
  for (auto i : rd.subset) subset.push_back(i + 1);
  factor["subset"] = subset;
  factor["subset_fallback"] = r.used_fallback;
  j["factor"] = factor;

  ordered_json group;
  if (r.group) {
    group["name"] = r.identity.name;
    group["order"] = r.identity.order;
    group["transitive"] = r.identity.transitive;
    ordered_json orbits = ordered_json::array();
    for (const auto& o : r.identity.orbits) {
      ordered_json a = ordered_json::array();
      for (auto p : o) a.push_back(p + 1);
      orbits.push_back(a);
    }
    group["orbits"] = orbits;
    group["elements"] = permutations_json(r.group->permutations());
    group["cayley"] = r.group->cayley;
    group["discriminant"] = r.discriminant.get_str();
    group["discriminant_square"] = r.discriminant_square;
    ordered_json emb = ordered_json::array();
    for (const auto& p : r.group->root_embeddings) emb.push_back(p.to_string());
    group["root_embeddings"] = emb;
  }
  j["group"] = group;

  ordered_json rk = ordered_json::array();
  for (const auto& R : rd.R) rk.push_back(R.to_string());
  j["root_expressions"] = rk;

  ordered_json ver;
  if (r.verification) {
    const VerificationReport& v = *r.verification;
    auto word = [](bool ok) { return ok ? "pass" : "fail"; };
    ordered_json props;
    props["I"] = word(v.property_I);
    props["II"] = word(v.property_II);
    props["III"] = word(v.property_III);
    props["IV"] = word(v.property_IV);
    ver["properties"] = props;
    ordered_json checks = ordered_json::array();
    for (const auto& c : v.checks)
      checks.push_back({{"name", c.name}, {"result", word(c.passed)}, {"cases", c.cases}, {"detail", c.detail}});
    ver["checks"] = checks;
    if (v.group_resolvent) ver["group_resolvent"] = subgroup_resolvent_json(*v.group_resolvent);
    ver["moved_outside"] = v.moved_outside;
  }
  if (r.subgroup && r.subgroup_resolvent) {
    ordered_json sr = subgroup_resolvent_json(*r.subgroup_resolvent);
    sr["subgroup"] = permutations_json(r.subgroup->elements());
    ver["subgroup_resolvent"] = sr;
  }
  j["verification"] = ver.is_null() ? ordered_json::object() : ver;

  ordered_json timings = ordered_json::object();
  if (with_timings)
    for (const auto& t : r.timings) timings[t.stage] = t.milliseconds;
  j["timings"] = timings;
  return j;
}

std::string render_text(const RunReport& r, Command command, bool with_timings) {
  const ResolventData& rd = r.data;
  std::ostringstream os;
  auto normalization_line = [&] {
    if (rd.scale != 1 || to_rational(rd.f) != r.squarefree)
      os << "normalized: " << to_string(rd.f, 'y') << "  (y = " << (rd.scale == 1 ? "" : rd.scale.get_str()) << "x)\n";
  };
  switch (command) {
    case Command::Group: {
      os << r.identity.name << " (order " << r.identity.order << ")\n";
      os << "elements: " << perm_list(r.group->permutations()) << "\n";
      if (!r.identity.transitive) os << "orbits: " << orbits_text(r.identity.orbits) << "\n";
      break;
    }
    case Command::Resolvent: {
      normalization_line();
      os << "weights: " << weights_text(rd.weights) << "\n";
      os << "F(v) = " << to_string(rd.F, 'v') << "\n";
      os << "deg F = " << rd.F.degree() << ", height " << height(rd.F).get_str() << "\n";
      os << "G(v) = " << to_string(rd.G, 'v') << "\n";
      os << "deg G = " << rd.G.degree() << "\n";
      break;
    }
    case Command::Roots: {
      normalization_line();
      os << "G(v) = " << to_string(rd.G, 'v') << "\n";
      for (std::size_t k = 0; k < rd.R.size(); ++k) os << "R" << k + 1 << "(v) = " << rd.R[k].to_string() << "\n";
      break;
    }
    case Command::Fixed: {
      const SubgroupResolvent& sr = *r.subgroup_resolvent;
      os << "subgroup: " << r.subgroup->to_string() << "\n";
      os << "alpha = " << sr.alpha.to_string() << "\n";
      os << "n0 = " << sr.n0.get_str() << "\n";
      os << "stabilizer: " << perm_list(sr.stabilizer) << "\n";
      break;
    }
    case Command::Verify: {
      const VerificationReport& v = *r.verification;
      os << r.identity.name << " (order " << r.identity.order << ")\n";
      auto word = [](bool ok) { return ok ? "pass" : "fail"; };
      os << "property I: " << word(v.property_I) << "\n";
      os << "property II: " << word(v.property_II) << "\n";
      os << "property III: " << word(v.property_III) << "\n";
      os << "property IV: " << word(v.property_IV) << "\n";
      for (const auto& c : v.checks)
        os << "  " << c.name << ": " << word(c.passed) << " (" << c.cases << " cases; " << c.detail << ")\n";
      if (v.group_resolvent)
        os << "alpha = " << v.group_resolvent->alpha.to_string() << " (n0 = " << v.group_resolvent->n0.get_str()
           << ")\n";
      break;
    }
  }
  if (with_timings)
    for (const auto& t : r.timings) os << "time " << t.stage << ": " << format_ms(t.milliseconds) << " ms\n";
  return os.str();
}

}  // namespace galois
