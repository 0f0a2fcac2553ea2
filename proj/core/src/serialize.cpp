#include "picann/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace picann {

using nlohmann::json;

static json activation_to_json(const Activation& act) {
  json j;
  j["kind"] = act.name();
  if (act.kind == Act::LeakyReLU) j["alpha"] = act.alpha;
  return j;
}

static Activation activation_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "relu") return Activation::relu();
  if (kind == "leaky_relu") return Activation::leaky(j.at("alpha").get<double>());
  if (kind == "softplus") return Activation::softplus();
  if (kind == "identity") return Activation::identity();
  throw std::invalid_argument("unknown activation kind: " + kind);
}

std::string network_to_json(const Network& net, const Activation& act) {
  json j;
  j["version"] = 1;
  j["activation"] = activation_to_json(act);
  json layers = json::array();
  for (const Layer& l : net.layers()) {
    json jl;
    jl["rows"] = l.w.rows;
    jl["cols"] = l.w.cols;
    jl["w"] = l.w.a;
    jl["b"] = l.b;
    layers.push_back(std::move(jl));
  }
  j["layers"] = std::move(layers);
  return j.dump();
}

void save_network(const std::string& path, const Network& net, const Activation& act) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << network_to_json(net, act) << "\n";
}

LoadedNetwork network_from_json(const std::string& json_text) {
  json j = json::parse(json_text);
  if (j.at("version").get<int>() != 1)
    throw std::invalid_argument("unsupported network format version");
  std::vector<Layer> layers;
  for (const json& jl : j.at("layers")) {
    Layer l;
    l.w = Matrix(jl.at("rows").get<int>(), jl.at("cols").get<int>(),
                 jl.at("w").get<std::vector<double>>());
    l.b = jl.at("b").get<std::vector<double>>();
    layers.push_back(std::move(l));
  }
  return LoadedNetwork{Network(std::move(layers)), activation_from_json(j.at("activation"))};
}

LoadedNetwork load_network(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return network_from_json(ss.str());
}

}  // namespace picann
