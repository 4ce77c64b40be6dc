#include "qhall/config.hpp"

#include <fstream>

namespace qhall {

using nlohmann::json;

ValuedQuiver quiver_preset(const std::string& name) {
  if (name == "A2") return ValuedQuiver(2, {1, 1}, {{0, 1, 1}});
  if (name == "A2r") return ValuedQuiver(2, {1, 1}, {{1, 0, 1}});
  if (name == "A3") return ValuedQuiver(3, {1, 1, 1}, {{0, 1, 1}, {1, 2, 1}});
  if (name == "B2") return ValuedQuiver(2, {1, 2}, {{0, 1, 1}});
  if (name == "G2") return ValuedQuiver(2, {1, 3}, {{0, 1, 1}});
  throw std::invalid_argument("quiver_preset: unknown preset '" + name + "'");
}

Config Config::preset(const std::string& name) {
  Config c;
  c.name = name;
  if (name == "A1xA1") {
    c.cartan = cartan_preset("A1xA1");
    c.weight_cap = 10;
    return c;
  }
  if (name == "G2") c.weight_cap = 12;
  c.quiver = quiver_preset(name);
  c.cartan = c.quiver->cartan();
  if (name == "B2" || name == "G2") c.fields.clear();  // no Hall engine on valued types
  return c;
}

Config Config::from_json(const json& j) {
  if (j.contains("preset")) {
    Config c = preset(j.at("preset").get<std::string>());
    if (j.contains("fields")) c.fields = j.at("fields").get<std::vector<int>>();
    if (j.contains("dim_cap")) c.dim_cap = j.at("dim_cap").get<long>();
    if (j.contains("weight_cap")) c.weight_cap = j.at("weight_cap").get<long>();
    if (j.contains("enable_g2_braid")) c.enable_g2_braid = j.at("enable_g2_braid").get<bool>();
    return c;
  }
  Config c;
  c.name = j.value("name", "custom");
  if (j.contains("quiver")) {
    const json& q = j.at("quiver");
    int n = q.at("vertices").get<int>();
    IntVec eps = q.value("eps", std::vector<long>(size_t(n), 1L));
    std::vector<Arrow> arrows;
    for (const auto& e : q.at("edges"))
      arrows.push_back({e.at("src").get<int>(), e.at("dst").get<int>(), e.value("d", 1)});
    c.quiver = ValuedQuiver(n, eps, arrows);
    c.cartan = c.quiver->cartan();
  }
  if (j.contains("cartan")) {
    const json& cj = j.at("cartan");
    auto A = cj.at("matrix").get<std::vector<std::vector<long>>>();
    auto eps = cj.at("eps").get<IntVec>();
    std::vector<IntVec> aod;
    if (cj.contains("alpha_on_d")) aod = cj.at("alpha_on_d").get<std::vector<IntVec>>();
    c.cartan = CartanDatum(A, eps, aod);
  }
  if (!c.cartan) throw std::invalid_argument("Config: need a quiver or a Cartan datum");
  if (j.contains("fields")) c.fields = j.at("fields").get<std::vector<int>>();
  if (j.contains("dim_cap")) c.dim_cap = j.at("dim_cap").get<long>();
  if (j.contains("weight_cap")) c.weight_cap = j.at("weight_cap").get<long>();
  if (j.contains("enable_g2_braid")) c.enable_g2_braid = j.at("enable_g2_braid").get<bool>();
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("Config: cannot open '" + path + "'");
  json j;
  in >> j;
  return from_json(j);
}

json weight_to_json(const Weight& w) {
  json a = json::array();
  for (long x : w.val) a.push_back(x);
  return a;
}

json hall_to_json(const HallElem& x) {
  json a = json::array();
  for (const auto& [c, s] : x) a.push_back({{"class", c.str()}, {"coeff", s.str()}});
  return a;
}

json felem_to_json(const FElem& x) {
  json a = json::array();
  for (const auto& [w, c] : x) {
    json word = json::array();
    for (int l : w) word.push_back(l);
    a.push_back({{"word", word}, {"coeff", c.str()}});
  }
  return a;
}

json udot_to_json(const UdotElem& x) {
  json a = json::array();
  for (const auto& [m, c] : x) {
    json wp = json::array(), wm = json::array();
    for (int l : m.plus) wp.push_back(l);
    for (int l : m.minus) wm.push_back(l);
    a.push_back({{"plus", wp}, {"zeta", weight_to_json(m.zeta)}, {"minus", wm}, {"coeff", c.str()}});
  }
  return a;
}

json hdot_to_json(const HdotElem& x) {
  json a = json::array();
  for (const auto& [m, c] : x)
    a.push_back({{"plus", m.plus.str()},
                 {"zeta", weight_to_json(m.zeta)},
                 {"minus", m.minus.str()},
                 {"coeff", c.str()}});
  return a;
}

}  // namespace qhall
