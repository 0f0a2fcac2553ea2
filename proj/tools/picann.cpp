#include <cblas.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "picann/bench.hpp"
#include "picann/compiler.hpp"
#include "picann/gadgets.hpp"
#include "picann/oracles.hpp"
#include "picann/serialize.hpp"
#include "picann/verify.hpp"

using nlohmann::json;
using namespace picann;

namespace {

struct ActOpts {
  std::string kind = "leaky";
  double alpha = 0.5;
};

void add_act_flags(CLI::App* sub, ActOpts& opts) {
  sub->add_option("--activation", opts.kind, "Activation: relu|leaky|softplus")
      ->check(CLI::IsMember({"relu", "leaky", "softplus"}));
  sub->add_option("--alpha", opts.alpha, "Leaky slope (leaky activation only)");
}

Activation make_act(const ActOpts& opts) {
  if (opts.kind == "relu") return Activation::relu();
  if (opts.kind == "softplus") return Activation::softplus();
  return Activation::leaky(opts.alpha);
}

std::vector<double> parse_reals(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  return out;
}

std::vector<int> parse_ints(const std::string& csv) {
  std::vector<int> out;
  for (double v : parse_reals(csv)) out.push_back(static_cast<int>(v));
  return out;
}

InterpSpec gauss_interp_1d() {
  InterpSpec spec;
  for (double z = -4.0; z < 4.0 + 0.05; z += 0.1) {
    spec.knots.push_back(z);
    spec.values.push_back(std::exp(-z * z));
  }
  return spec;
}

// terminal-data network from a descriptor: bump | gauss (d = 1) | net:FILE
Network make_g_net(const std::string& desc, int d, const Activation& act, double eps, double q) {
  if (desc == "bump") return radial_bump_net(d, act);
  if (desc == "gauss") {
    if (d != 1) throw std::runtime_error("--g gauss is only available as a network for d = 1");
    if (act.kind == Act::Softplus) return pwl_softplus_approx(gauss_interp_1d(), eps, q);
    return pwl_exact(gauss_interp_1d(), act);
  }
  if (desc.rfind("net:", 0) == 0) {
    const LoadedNetwork lp = load_network(desc.substr(4));
    if (!(lp.act == act)) throw std::runtime_error("data network activation does not match --activation");
    if (lp.net.input_dim() != d) throw std::runtime_error("data network input dimension != d");
    return lp.net;
  }
  throw std::runtime_error("unknown terminal-data descriptor: " + desc);
}

// nonlinearity network: zero | linear:c | net:FILE
Network make_f_net(const std::string& desc, const Activation& act) {
  if (desc == "zero") return affine(Matrix(1, 1, {0.0}), {0.0});
  if (desc.rfind("linear:", 0) == 0)
    return affine(Matrix(1, 1, {std::stod(desc.substr(7))}), {0.0});
  if (desc.rfind("net:", 0) == 0) {
    const LoadedNetwork lp = load_network(desc.substr(4));
    if (!(lp.act == act)) throw std::runtime_error("nonlinearity network activation does not match --activation");
    if (lp.net.input_dim() != 1 || lp.net.output_dim() != 1)
      throw std::runtime_error("nonlinearity network must map scalars to scalars");
    return lp.net;
  }
  throw std::runtime_error("unknown nonlinearity descriptor: " + desc);
}

ScalarField make_g_field(const std::string& desc) {
  if (desc == "gauss")
    return [](const std::vector<double>& x) {
      double s = 0.0;
      for (double v : x) s += v * v;
      return std::exp(-s);
    };
  if (desc == "bump")
    return [](const std::vector<double>& x) {
      double s = 0.0;
      for (double v : x) s += std::abs(v);
      return std::max(0.0, 1.0 - s / static_cast<double>(x.size()));
    };
  if (desc.rfind("net:", 0) == 0) {
    const LoadedNetwork lp = load_network(desc.substr(4));
    return [lp](const std::vector<double>& x) { return realize(lp.net, lp.act, x)[0]; };
  }
  throw std::runtime_error("unknown terminal-data descriptor: " + desc);
}

ScalarMap make_f_map(const std::string& desc) {
  if (desc == "zero") return [](double) { return 0.0; };
  if (desc == "sin") return [](double u) { return std::sin(u); };
  if (desc.rfind("linear:", 0) == 0) {
    const double c = std::stod(desc.substr(7));
    return [c](double u) { return c * u; };
  }
  if (desc.rfind("net:", 0) == 0) {
    const LoadedNetwork lp = load_network(desc.substr(4));
    if (lp.net.input_dim() != 1 || lp.net.output_dim() != 1)
      throw std::runtime_error("nonlinearity network must map scalars to scalars");
    return [lp](double u) { return realize(lp.net, lp.act, {u})[0]; };
  }
  throw std::runtime_error("unknown nonlinearity descriptor: " + desc);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json net_summary(const Network& net) {
  const NetworkDims D = dims(net);
  return json{{"depth", D.depth}, {"params", D.param_count}, {"max_width", D.max_width},
              {"input_dim", D.input_dim}, {"output_dim", D.output_dim}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explicit weight-matrix compiler for multilevel Picard approximations of "
               "semilinear heat equations"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "BLAS worker threads (0 = library default)")
      ->envname("PICANN_THREADS");

  // build-hat
  auto* hat = app.add_subcommand("build-hat", "Write the exact hat-bump network");
  double t0v = 0.0, t1v = 0.5, t2v = 1.0, hat_eps = 1e-3, hat_q = 3.0;
  std::string hat_out;
  ActOpts hat_act;
  hat->add_option("--t0", t0v, "Left knot")->required();
  hat->add_option("--t1", t1v, "Peak knot")->required();
  hat->add_option("--t2", t2v, "Right knot")->required();
  add_act_flags(hat, hat_act);
  hat->add_option("--eps", hat_eps, "Softplus budget");
  hat->add_option("--q", hat_q, "Softplus envelope exponent");
  hat->add_option("--out", hat_out, "Output network JSON path")->required();

  // build-square
  auto* square = app.add_subcommand("build-square", "Write the square-gadget network");
  double sq_eps = 0.1, sq_q = 3.0;
  std::string sq_out;
  ActOpts sq_act;
  square->add_option("--eps", sq_eps, "Accuracy budget");
  square->add_option("--q", sq_q, "Envelope exponent (> 2)");
  add_act_flags(square, sq_act);
  square->add_option("--out", sq_out, "Output network JSON path")->required();

  // build-product
  auto* product = app.add_subcommand("build-product", "Write the product-gadget network");
  double pr_eps = 0.1, pr_q = 3.0;
  std::string pr_out;
  ActOpts pr_act;
  product->add_option("--eps", pr_eps, "Accuracy budget");
  product->add_option("--q", pr_q, "Envelope exponent (> 2)");
  add_act_flags(product, pr_act);
  product->add_option("--out", pr_out, "Output network JSON path")->required();

  // solve-mlp
  auto* solve = app.add_subcommand("solve-mlp", "Run the multilevel Picard estimator");
  int sm_n = 0, sm_M = 0, sm_d = 1;
  double sm_T = 1.0, sm_t = 0.0;
  uint64_t sm_seed = 0;
  std::string sm_x, sm_f = "linear:1", sm_g = "gauss";
  solve->add_option("--n", sm_n, "Level")->required();
  solve->add_option("--M", sm_M, "Branching base")->required();
  solve->add_option("--d", sm_d, "Spatial dimension");
  solve->add_option("--T", sm_T, "Horizon");
  solve->add_option("--t", sm_t, "Evaluation time");
  solve->add_option("--x", sm_x, "Evaluation point, comma separated (default origin)");
  solve->add_option("--seed", sm_seed, "Master seed");
  solve->add_option("--f", sm_f, "Nonlinearity: zero|linear:c|sin|net:FILE");
  solve->add_option("--g", sm_g, "Terminal data: gauss|bump|net:FILE");

  // compile
  auto* comp = app.add_subcommand("compile", "Compile the estimator into one network");
  std::string cp_mode = "spacetime", cp_out, cp_f = "linear:1", cp_g = "bump";
  int cp_n = 0, cp_M = 0, cp_d = 1, cp_K = 4;
  double cp_T = 1.0, cp_t = 0.0, cp_gamma = 1e-3, cp_q = 3.0;
  uint64_t cp_seed = 0;
  ActOpts cp_act;
  comp->add_option("--mode", cp_mode, "fixed|spacetime")
      ->check(CLI::IsMember({"fixed", "spacetime"}));
  comp->add_option("--n", cp_n, "Level")->required();
  comp->add_option("--M", cp_M, "Branching base")->required();
  comp->add_option("--d", cp_d, "Spatial dimension");
  comp->add_option("--T", cp_T, "Horizon");
  comp->add_option("--t", cp_t, "Evaluation time (fixed mode)");
  comp->add_option("--K", cp_K, "Time-grid size (spacetime mode)");
  comp->add_option("--gamma", cp_gamma, "Product-gadget budget (spacetime mode)");
  comp->add_option("--q", cp_q, "Gadget envelope exponent (> 2)");
  comp->add_option("--seed", cp_seed, "Master seed");
  add_act_flags(comp, cp_act);
  comp->add_option("--f", cp_f, "Nonlinearity: zero|linear:c|net:FILE");
  comp->add_option("--g", cp_g, "Terminal data: bump|gauss|net:FILE");
  comp->add_option("--out", cp_out, "Output network JSON path")->required();

  // eval
  auto* ev = app.add_subcommand("eval", "Evaluate a serialized network");
  std::string ev_net, ev_at, ev_points, ev_out;
  ev->add_option("--net", ev_net, "Network JSON path")->required();
  ev->add_option("--at", ev_at, "Single input, comma separated");
  ev->add_option("--points", ev_points, "CSV of inputs, one point per row");
  ev->add_option("--out", ev_out, "Output CSV path (default stdout)");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the acceptance gates");
  std::string ver_group = "all", ver_report;
  ver->add_option("group", ver_group, "all|calculus|gadgets|compiler|pde")
      ->check(CLI::IsMember({"all", "calculus", "gadgets", "compiler", "pde"}));
  ver->add_option("--report", ver_report, "Also write the JSON report to this path");

  // bench
  auto* bench = app.add_subcommand("bench", "Benchmarks");
  auto* cod = bench->add_subcommand("cod", "Parameter scaling across dimensions");
  std::string cod_dims = "1,2,4,8,16", cod_out = "csv";
  int cod_n = 2, cod_M = 2, cod_K = 4;
  double cod_gamma = 0.1;
  uint64_t cod_seed = 0;
  ActOpts cod_act;
  cod->add_option("--dims", cod_dims, "Comma-separated dimensions");
  cod->add_option("--n", cod_n, "Level");
  cod->add_option("--M", cod_M, "Branching base");
  cod->add_option("--K", cod_K, "Time-grid size");
  cod->add_option("--gamma", cod_gamma, "Product-gadget budget");
  cod->add_option("--seed", cod_seed, "Master seed");
  add_act_flags(cod, cod_act);
  cod->add_option("--out", cod_out, "csv (stdout) or an output file path");
  bench->require_subcommand(1);

  // schedule
  auto* sched = app.add_subcommand("schedule", "Resolution schedule for a target accuracy");
  ProblemSpec ps;
  double sc_eps = 0.0;
  sched->add_option("--eps", sc_eps, "Target accuracy in (0, 1]")->required();
  sched->add_option("--d", ps.d, "Spatial dimension");
  sched->add_option("--T", ps.T, "Horizon");
  sched->add_option("--diffusion", ps.diffusion, "Diffusion coefficient");
  sched->add_option("--L", ps.L, "Lipschitz constant");
  sched->add_option("--kappa", ps.kappa, "Moment constant");
  sched->add_option("--p", ps.p, "Growth exponent");
  sched->add_option("--q", ps.q, "Gadget envelope exponent (> 2)");
  sched->add_option("--qq", ps.qq, "Error norm exponent");
  sched->add_option("--r", ps.r, "Measure moment exponent");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (threads > 0) openblas_set_num_threads(threads);
    std::cout.precision(17);

    if (*hat) {
      const Activation act = make_act(hat_act);
      const Network net = hat_net(HatSpec{t0v, t1v, t2v}, act, hat_eps, hat_q);
      save_network(hat_out, net, act);
      json out = net_summary(net);
      out["out"] = hat_out;
      std::cout << out.dump() << "\n";
    } else if (*square) {
      const Activation act = make_act(sq_act);
      const Network net = square_net(GadgetBudget{sq_eps, sq_q}, act);
      save_network(sq_out, net, act);
      json out = net_summary(net);
      out["out"] = sq_out;
      std::cout << out.dump() << "\n";
    } else if (*product) {
      const Activation act = make_act(pr_act);
      const Network net = product_net(GadgetBudget{pr_eps, pr_q}, act);
      save_network(pr_out, net, act);
      json out = net_summary(net);
      out["out"] = pr_out;
      std::cout << out.dump() << "\n";
    } else if (*solve) {
      std::vector<double> x =
          sm_x.empty() ? std::vector<double>(static_cast<size_t>(sm_d), 0.0) : parse_reals(sm_x);
      if (static_cast<int>(x.size()) != sm_d) throw std::runtime_error("--x length must equal --d");
      RandomField field(sm_seed, sm_d, sm_T);
      const auto tick = std::chrono::steady_clock::now();
      const double est = mlp_estimate(MlpParams{sm_n, sm_M, sm_T, sm_t, sm_d}, x,
                                      make_g_field(sm_g), make_f_map(sm_f), field,
                                      MultiIndex::root());
      const json out{{"estimate", est}, {"n", sm_n},       {"M", sm_M},
                     {"d", sm_d},       {"T", sm_T},       {"t", sm_t},
                     {"x", x},          {"seed", sm_seed}, {"f", sm_f},
                     {"g", sm_g},       {"wall_time_seconds", seconds_since(tick)}};
      std::cout << out.dump() << "\n";
    } else if (*comp) {
      const Activation act = make_act(cp_act);
      const IdentityNet j = identity_net(act);
      const Network F_d = make_g_net(cp_g, cp_d, act, cp_gamma, cp_q);
      const Network F_0 = make_f_net(cp_f, act);
      RandomField field(cp_seed, cp_d, cp_T);
      const auto tick = std::chrono::steady_clock::now();
      Network net = affine(Matrix(1, 1, {0.0}), {0.0});
      std::string provenance;
      if (cp_mode == "fixed") {
        CompiledFixedTime c = compile_fixed_time(MlpParams{cp_n, cp_M, cp_T, cp_t, cp_d},
                                                 MultiIndex::root(), F_d, F_0, j, act, field);
        net = std::move(c.net);
        provenance = std::move(c.provenance);
      } else {
        CompiledSpaceTime c =
            compile_space_time(MlpParams{cp_n, cp_M, cp_T, 0.0, cp_d}, cp_K, cp_gamma, cp_q,
                               MultiIndex::root(), F_d, F_0, j, act, field);
        net = std::move(c.net);
        provenance = std::move(c.provenance);
      }
      const double secs = seconds_since(tick);
      save_network(cp_out, net, act);
      write_text(cp_out + ".provenance.json", provenance + "\n");
      json out = net_summary(net);
      out["out"] = cp_out;
      out["provenance"] = cp_out + ".provenance.json";
      out["seed"] = cp_seed;
      out["wall_time_seconds"] = secs;
      std::cout << out.dump() << "\n";
    } else if (*ev) {
      const LoadedNetwork lp = load_network(ev_net);
      if (!ev_at.empty()) {
        const std::vector<double> x = parse_reals(ev_at);
        const json out{{"value", realize(lp.net, lp.act, x)[0]}, {"net", ev_net}};
        std::cout << out.dump() << "\n";
      } else if (!ev_points.empty()) {
        std::ifstream in(ev_points);
        if (!in) throw std::runtime_error("cannot open points file: " + ev_points);
        std::vector<std::vector<double>> rows;
        std::string line;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          try {
            rows.push_back(parse_reals(line));
          } catch (const std::exception&) {
            if (!rows.empty()) throw;  // only the leading header row may be non-numeric
          }
        }
        std::ostringstream os;
        os.precision(17);
        for (int k = 0; k < lp.net.input_dim(); ++k) os << "x" << k << ",";
        os << "value\n";
        for (const std::vector<double>& x : rows) {
          const double v = realize(lp.net, lp.act, x)[0];
          for (double c : x) os << c << ",";
          os << v << "\n";
        }
        if (ev_out.empty())
          std::cout << os.str();
        else
          write_text(ev_out, os.str());
      } else {
        throw std::runtime_error("eval needs --at or --points");
      }
    } else if (*ver) {
      const std::vector<GateResult> results = run_gates(ver_group);
      bool all = true;
      json gates = json::array();
      for (const GateResult& r : results) {
        all = all && r.pass;
        gates.push_back(json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        std::cerr << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
      }
      const json report{{"group", ver_group}, {"pass", all}, {"gates", gates}};
      std::cout << report.dump(2) << "\n";
      if (!ver_report.empty()) write_text(ver_report, report.dump(2) + "\n");
      return all ? 0 : 1;
    } else if (*bench) {
      const Activation act = make_act(cod_act);
      const CodResult result =
          cod_benchmark(parse_ints(cod_dims), cod_n, cod_M, cod_K, cod_gamma, act, cod_seed);
      const std::string csv = cod_csv(result);
      if (cod_out == "csv")
        std::cout << csv;
      else
        write_text(cod_out, csv);
      const json meta{{"slope", result.slope}, {"seed", cod_seed}};
      std::cerr << meta.dump() << "\n";
    } else if (*sched) {
      const Schedule s = compute_schedule(ps, sc_eps);
      const json out{{"eps", sc_eps},     {"N", s.N},     {"K", s.K},
                     {"delta", s.delta},  {"gamma", s.gamma}, {"a_d", s.a_d},
                     {"b_d", s.b_d},      {"c_d", s.c_d}, {"cd_moment", s.cd_moment}};
      std::cout << out.dump() << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
