/*
  config.hpp

  Run configuration: a named preset or a JSON description of the quiver /
  Cartan datum, the field primes, and the dimension and weight caps.
  Also the JSON serializers shared by the command-line tool.
*/

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qhall/hdot.hpp"

namespace qhall {

struct Config {
  std::string name = "A2";
  std::optional<ValuedQuiver> quiver;   // absent for Cartan-only data
  std::optional<CartanDatum> cartan;    // always present after validation
  std::vector<int> fields = {2, 3, 5};
  long dim_cap = 6;
  long weight_cap = 8;
  bool enable_g2_braid = false;

  const CartanDatum& cd() const {
    if (!cartan) throw std::logic_error("Config: missing Cartan datum");
    return *cartan;
  }
  const ValuedQuiver& qv() const {
    if (!quiver) throw std::invalid_argument("Config: this configuration has no quiver");
    return *quiver;
  }

  static Config preset(const std::string& name);
  static Config from_json(const nlohmann::json& j);
  static Config load(const std::string& path);
};

ValuedQuiver quiver_preset(const std::string& name);

nlohmann::json hall_to_json(const HallElem& x);
nlohmann::json udot_to_json(const UdotElem& x);
nlohmann::json hdot_to_json(const HdotElem& x);
nlohmann::json felem_to_json(const FElem& x);
nlohmann::json weight_to_json(const Weight& w);

}  // namespace qhall
