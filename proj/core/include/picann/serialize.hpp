#pragma once

#include <string>

#include "picann/network.hpp"

namespace picann {

// Versioned JSON network format:
// {"version":1, "activation":{"kind":"leaky_relu","alpha":0.5},
//  "layers":[{"rows":m,"cols":n,"w":[row-major reals],"b":[reals]}]}
// Finite values round-trip bit-identically.
std::string network_to_json(const Network& net, const Activation& act);
void save_network(const std::string& path, const Network& net, const Activation& act);

struct LoadedNetwork {
  Network net;
  Activation act;
};
LoadedNetwork network_from_json(const std::string& json_text);
LoadedNetwork load_network(const std::string& path);

}  // namespace picann
