#include "cayley/families/registry.hpp"

#include <json.hpp>

#include "cayley/families/families.hpp"
#include "cayley/marked/iso.hpp"

namespace cayley {

namespace {

using nlohmann::json;

void check_keys(const json& j, std::initializer_list<const char*> allowed) {
  for (auto& [key, value] : j.items()) {
    bool ok = false;
    for (auto* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw Error("BackendMismatch", "unknown config key: " + key);
  }
}

MarkedGroup cyclic_marked(std::uint64_t n) {
  auto g = cyclic_group(n);
  return {g, {cyclic_elem(*g, 1)}, "Z/" + std::to_string(n)};
}

MarkedGroup integers_marked() { return {integers_group(), {z_elem(1)}, "Z"}; }

MarkedGroup sym3_marked() {
  auto g = permutation_group(3);
  return {g, {perm_elem(*g, {1, 0, 2}), perm_elem(*g, {1, 2, 0})}, "Sym(3)"};
}

std::vector<std::uint64_t> window(const json& j, std::uint64_t def_from, std::uint64_t def_to) {
  std::uint64_t from = j.value("from", def_from), to = j.value("to", def_to);
  std::uint64_t step = j.value("step", std::uint64_t{1});
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = from; m <= to; m += step) out.push_back(m);
  return out;
}

}  // namespace

FamilyInstance build_family_impl(const json& j);

FamilyInstance build_family(const std::string& json_spec) {
  json j = json::parse(json_spec);
  FamilyInstance fam = build_family_impl(j);
  // families guarantee their tuples generate: BFS-closure check for finite
  // backends, skipped above the order cap
  for (auto& mg : fam.members)
    if (!generates(mg, 1u << 17))
      throw Error("BackendMismatch", "family member does not generate: " + mg.name);
  return fam;
}

FamilyInstance build_family_impl(const json& j) {
  std::string name = j.at("name").get<std::string>();
  FamilyInstance fam;
  fam.name = name;

  if (name == "cyclic") {
    check_keys(j, {"name", "from", "to", "step"});
    for (auto m : window(j, 3, 20)) {
      fam.members.push_back(cyclic_marked(m));
      fam.indices.push_back(m);
    }
    fam.limit = integers_marked();
    return fam;
  }
  if (name == "selberg") {
    check_keys(j, {"name", "primes"});
    std::vector<std::uint64_t> primes = j.value("primes", std::vector<std::uint64_t>{3, 5, 7, 11, 13});
    for (auto p : primes) {
      fam.members.push_back(selberg(static_cast<std::uint32_t>(p)));
      fam.indices.push_back(p);
    }
    fam.notes = "limit F_2 is outside the limit backends; no declared limit";
    return fam;
  }
  if (name == "sl") {
    check_keys(j, {"name", "p", "ranks", "exponents", "variant", "explicit_ring"});
    auto p = j.at("p").get<std::uint32_t>();
    auto ranks = j.at("ranks").get<std::vector<std::uint32_t>>();
    auto exps = j.at("exponents").get<std::vector<std::uint32_t>>();
    if (exps.size() != ranks.size())
      throw Error("BackendMismatch", "exponents must match ranks");
    std::string variant = j.value("variant", std::string("S"));
    bool explicit_ring = j.value("explicit_ring", false);
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      auto sl = sl_markings(ranks[i], p, exps[i], explicit_ring);
      fam.members.push_back(variant == "T" ? sl.T : sl.S);
      fam.indices.push_back(ranks[i]);
    }
    fam.limit = variant == "T" ? sl_limit_full(p) : sl_limit_ntri(p);
    fam.limit_marking_derived = true;
    fam.notes = "limit marking derived from the generator correspondence";
    return fam;
  }
  if (name == "slz") {
    check_keys(j, {"name", "ranks", "moduli", "variant"});
    auto ranks = j.at("ranks").get<std::vector<std::uint32_t>>();
    auto moduli = j.at("moduli").get<std::vector<std::uint64_t>>();
    std::string variant = j.value("variant", std::string("P"));
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      auto mm = slz_markings(ranks[i], moduli[i]);
      fam.members.push_back(variant == "Q" ? mm.Q : mm.P);
      fam.indices.push_back(ranks[i]);
    }
    return fam;
  }
  if (name == "wreath") {
    check_keys(j, {"name", "base", "from", "to", "step"});
    auto base = j.value("base", std::uint64_t{2});
    for (auto m : window(j, 3, 12)) {
      fam.members.push_back(standard_wreath_marking(cyclic_marked(base), cyclic_marked(m)));
      fam.indices.push_back(m);
    }
    fam.limit = standard_wreath_marking(cyclic_marked(base), integers_marked());
    return fam;
  }
  if (name == "absorption") {
    check_keys(j, {"name", "base", "from", "to", "step"});
    std::string base = j.value("base", std::string("sym3"));
    MarkedGroup mgG = base == "sym3" ? sym3_marked() : cyclic_marked(4);
    for (auto m : window(j, 12, 36)) {
      int R_m = convergence_radius(cyclic_marked(m), integers_marked(), 30);
      std::uint32_t r = absorption_radius(R_m, cyclic_marked(m), mgG.k());
      fam.members.push_back(absorption_marking(mgG, cyclic_marked(m), r).marked);
      fam.indices.push_back(m);
    }
    fam.limit = absorption_limit_marking(mgG);
    fam.limit_marking_derived = true;
    return fam;
  }
  if (name == "sym_encoding_cyclic") {
    check_keys(j, {"name", "from", "to", "step"});
    for (auto m : window(j, 9, 21)) {
      fam.members.push_back(sym_encoding(cyclic_marked(m)));
      fam.indices.push_back(m);
    }
    fam.limit = sym_encoding(integers_marked());
    return fam;
  }
  if (name == "upper_triangular_selberg") {
    check_keys(j, {"name", "primes", "count"});
    std::vector<std::uint64_t> primes = j.value("primes", std::vector<std::uint64_t>{3, 5, 7});
    std::vector<MarkedGroup> sel;
    for (auto p : primes) sel.push_back(selberg(static_cast<std::uint32_t>(p)));
    auto prods = upper_triangular_product(sel, sel);
    auto count = j.value("count", prods.size());
    for (std::size_t l = 0; l < std::min(count, prods.size()); ++l) {
      fam.members.push_back(prods[l]);
      fam.indices.push_back(l);
    }
    return fam;
  }
  throw Error("BackendMismatch", "unknown family name: " + name);
}

FamilySpec load_family_spec(const std::string& json_spec) {
  json j = json::parse(json_spec);
  FamilySpec spec;
  if (j.contains("family") && j.at("family").is_string()) {
    check_keys(j, {"family", "params", "radii", "limit_check"});
    json flat = j.value("params", json::object());
    flat["name"] = j.at("family");
    spec.instance = build_family(flat.dump());
    spec.radii = j.value("radii", std::vector<std::uint32_t>{10});
    spec.limit_check = j.value("limit_check", true);
    return spec;
  }
  spec.instance = build_family(json_spec);
  spec.radii = {10};
  return spec;
}

}  // namespace cayley
