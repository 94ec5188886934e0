// Copyright 2026 The lattice-cft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "lattice_cft/acceptance.hpp"
#include "lattice_cft/fock.hpp"
#include "lattice_cft/heisenberg.hpp"
#include "lattice_cft/io.hpp"
#include "lattice_cft/modular.hpp"
#include "lattice_cft/theta.hpp"

namespace lcft::cli {

namespace {

using io::Json;

struct Config {
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  std::optional<double> tol;
  bool flip_s_sign = false;

  std::string lattice = "A1";
  std::string surface;
  std::string labels;
  std::string split;
  std::string tau;
  std::string z;
  std::string characteristic;
  std::string phi = "0";
  std::string t_matrix;
  std::string lagrangian = "a";
  int genus = 1;
  int max_energy = 10;
  int threads = 0;
  std::int64_t central = 1;
  std::vector<int> only;
};

struct Outcome {
  Json inputs;
  Json results;
  bool verified = true;
};

Json gram_json(const IntMatrix& g) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < g.cols(); ++j) row.push_back(g(i, j));
    rows.push_back(row);
  }
  return rows;
}

struct LatticeInput {
  EvenLattice lattice;
  DiscriminantGroup disc;
  Json json;
};

LatticeInput load_lattice(const Config& c) {
  const IntMatrix gram = io::parse_lattice(c.lattice);
  EvenLattice lat = validate_even_lattice(gram);
  DiscriminantGroup disc = discriminant_group(lat);
  return {std::move(lat), std::move(disc), gram_json(gram)};
}

Surface load_surface(const Config& c, Json& inputs) {
  if (c.surface.empty()) throw Error(ErrorKind::InvalidInput, "--surface is required");
  const std::string& s = c.surface;
  const Json j = (s == "sphere" || s == "torus") ? Json(s) : io::load_json_argument(s);
  Surface surface = io::surface_from_json(j);
  inputs["surface"] = io::to_json(surface);
  return surface;
}

BlockLabel load_labels(const Config& c, const DiscriminantGroup& disc, Json& inputs) {
  const Json j = c.labels.empty() ? Json() : io::load_json_argument(c.labels);
  BlockLabel labels = io::labels_from_json(j, disc);
  Json out = Json::object();
  for (const auto& [id, a] : labels) out[id] = a;
  inputs["labels"] = out;
  return labels;
}

Json element_json(const GroupElement& a) { return a; }

Json rational_matrix_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

Outcome cmd_disc(const Config& c) {
  const auto in = load_lattice(c);
  Json quadratic = Json::array();
  for (int i = 0; i < in.disc.num_factors(); ++i) {
    GroupElement e = in.disc.zero();
    e[static_cast<std::size_t>(i)] = 1;
    quadratic.push_back(to_string(in.disc.quadratic(e)));
  }
  const Complex g = gauss_sum(in.disc);
  Json results = {{"invariant_factors", in.disc.invariant_factors()},
                  {"order", in.disc.order()},
                  {"exponent", in.disc.exponent()},
                  {"rank", in.lattice.rank()},
                  {"det", in.lattice.det()},
                  {"level", in.lattice.level_ell()},
                  {"signature_mod8", signature_mod8(in.disc)},
                  {"gauss_sum", {{"re", g.real()}, {"im", g.imag()}}},
                  {"bilinear_form", rational_matrix_json(in.disc.bilinear_matrix())},
                  {"quadratic_form_on_generators", quadratic}};
  return {{{"lattice", in.json}}, std::move(results), true};
}

Outcome cmd_blocks(const Config& c) {
  const auto in = load_lattice(c);
  Json inputs = {{"lattice", in.json}};
  const Surface s = load_surface(c, inputs);
  const BlockLabel labels = load_labels(c, in.disc, inputs);
  const auto deltas = delta_obstruction(s, labels, in.disc);
  Json obstruction = Json::array();
  for (const auto& d : deltas) obstruction.push_back(element_json(d));
  return {inputs,
          {{"dimension", block_dimension(s, labels, in.disc)}, {"obstruction", obstruction}},
          true};
}

Outcome cmd_factorize(const Config& c) {
  const auto in = load_lattice(c);
  Json inputs = {{"lattice", in.json}};
  const Surface s = load_surface(c, inputs);
  const BlockLabel labels = load_labels(c, in.disc, inputs);
  if (c.split.empty()) throw Error(ErrorKind::InvalidInput, "--split is required");
  const Split split = io::split_from_json(io::load_json_argument(c.split));
  inputs["split"] = {{"pieces", io::to_json(split.pieces)}, {"matching", split.matching}};
  const auto r = verify_factorization(s, split, labels, in.disc);
  Json terms = Json::array();
  for (const auto& t : r.terms) terms.push_back({{"labels", t.glued_labels}, {"value", t.value}});
  return {inputs, {{"lhs", r.lhs}, {"rhs", r.rhs}, {"equal", r.equal}, {"terms", terms}}, r.equal};
}

Outcome cmd_modular(const Config& c) {
  const auto in = load_lattice(c);
  ModularData d = modular_data(in.disc, in.lattice.level_ell(), in.lattice.rank());
  if (c.flip_s_sign) d.S = -d.S;
  const auto rel = modular_relations(d, in.disc);
  const double tol = c.tol.value_or(1e-9);
  const bool ok = rel.max() < tol;
  Json results = {
      {"S", io::to_json(d.S)},
      {"T", io::to_json(Eigen::MatrixXcd(d.T.transpose()))},
      {"T_unframed", io::to_json(Eigen::MatrixXcd(d.T_unframed.transpose()))},
      {"signature_mod8", d.signature_mod8},
      {"central_charge_exponent", to_string(d.central_charge_exponent)},
      {"relations",
       {{"unitarity", rel.unitarity},
        {"symmetry", rel.symmetry},
        {"charge_conjugation", rel.charge_conjugation},
        {"s_fourth", rel.s_fourth},
        {"st_cubed", rel.st_cubed},
        {"st_cubed_framed", rel.st_cubed_framed}}},
      {"tolerance", tol},
      {"passed", ok}};
  return {{{"lattice", in.json}, {"flip_s_sign", c.flip_s_sign}}, std::move(results), ok};
}

Outcome cmd_verlinde(const Config& c) {
  const auto in = load_lattice(c);
  Json inputs = {{"lattice", in.json}};
  const Surface s = load_surface(c, inputs);
  const BlockLabel labels = load_labels(c, in.disc, inputs);
  const auto r = verlinde_check(s, labels, in.disc);
  return {inputs,
          {{"verlinde", r.verlinde},
           {"block_dimension", r.block_dimension},
           {"max_deviation", r.max_deviation},
           {"guard_tripped", r.guard_tripped},
           {"equal", r.equal}},
          r.equal};
}

Outcome cmd_theta(const Config& c) {
  if (c.tau.empty()) throw Error(ErrorKind::InvalidInput, "--tau is required");
  const SiegelPoint tau(io::complex_matrix_from_json(io::load_json_argument(c.tau)));
  const int g = tau.genus();
  const Eigen::VectorXcd z = c.z.empty() ? Eigen::VectorXcd::Zero(g)
                                         : io::complex_vector_from_json(io::load_json_argument(c.z));
  if (z.size() != g) throw Error(ErrorKind::DimensionMismatch, "z must have length g");
  const ThetaSpec spec = io::characteristic_from_string(c.characteristic, g);
  const double tol = c.tol.value_or(1e-14);
  if (!(tol > 0)) throw Error(ErrorKind::InvalidInput, "--tol must be positive");
  const auto v = theta(spec, z, tau, tol);
  Json inputs = {{"tau", io::to_json(tau.tau())},
                 {"z", io::to_json(Eigen::MatrixXcd(z.transpose()))},
                 {"a", std::vector<double>(spec.a.data(), spec.a.data() + g)},
                 {"b", std::vector<double>(spec.b.data(), spec.b.data() + g)},
                 {"tol", tol}};
  return {inputs,
          {{"value_re", v.value.real()},
           {"value_im", v.value.imag()},
           {"tail_bound", v.tail_bound},
           {"R", v.radius}},
          true};
}

Outcome cmd_fock_character(const Config& c) {
  const auto in = load_lattice(c);
  const GroupElement phi = io::element_from_json(io::parse_json(c.phi), in.disc);
  const auto ch = sector_character(in.lattice, phi, c.max_energy);
  return {{{"lattice", in.json}, {"phi", phi}, {"max_energy", c.max_energy}},
          {{"ground_energy", to_string(ch.ground_energy)}, {"coefficients", ch.coefficients}},
          true};
}

Json sewing_json(const SewingTable& t) {
  Json rows = Json::array();
  for (const auto& [key, count] : t) {
    rows.push_back({{"h_left", to_string(key.first)}, {"h_right", to_string(key.second)}, {"count", count}});
  }
  return rows;
}

Outcome cmd_fock_sewing(const Config& c) {
  const auto in = load_lattice(c);
  if (c.max_energy > 12) throw Error(ErrorKind::InvalidInput, "sewing check supports E <= 12");
  const auto r = annulus_sewing_check(in.lattice, c.max_energy);
  return {{{"lattice", in.json}, {"max_energy", c.max_energy}},
          {{"equal", r.equal}, {"sector_side", sewing_json(r.sector_side)},
           {"annulus_side", sewing_json(r.annulus_side)}},
          r.equal};
}

Outcome cmd_fock_overlap(const Config& c) {
  if (c.t_matrix.empty()) throw Error(ErrorKind::InvalidInput, "--t is required");
  const Eigen::MatrixXcd t = io::complex_matrix_from_json(io::load_json_argument(c.t_matrix));
  if (t.rows() != t.cols() || t.rows() > 4) {
    throw Error(ErrorKind::DimensionMismatch, "T must be square of size at most 4");
  }
  return {{{"t", io::to_json(t)}}, {{"overlap", bogoliubov_overlap(t)}}, true};
}

Outcome cmd_heisenberg(const Config& c) {
  const auto in = load_lattice(c);
  if (c.genus < 0) throw Error(ErrorKind::InvalidInput, "--genus must be nonnegative");
  auto group = std::make_shared<const HeisenbergGroup>(HeisenbergGroup::closed(in.disc, c.genus));
  const MonomialRep standard = schroedinger_irrep(in.disc, c.genus, c.central);
  std::optional<InducedRep> induced;
  if (c.lagrangian == "b" || c.lagrangian == "diagonal") {
    const auto gens = c.lagrangian == "b" ? b_cycle_generators(*group) : diagonal_generators(*group);
    induced.emplace(group, make_isotropic(*group, gens, c.central));
  } else if (c.lagrangian != "a") {
    throw Error(ErrorKind::InvalidInput, "--lagrangian must be a, b or diagonal");
  }
  const MonomialRep& rep = induced ? induced->rep() : standard;
  const bool irreducible = verify_irreducible(rep);
  Json results = {{"dimension", rep.dimension()},
                  {"group_order", group->homology_order()},
                  {"irreducible", irreducible},
                  {"intertwiner_dimension", intertwiners(standard, rep).dimension}};
  if (rep.dimension() <= 64) {
    Json gens = Json::array();
    const auto basis = group->generators();
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const Eigen::MatrixXcd m = rep(basis[i]).dense();
      const Json mj = io::to_json(m);
      gens.push_back({{"element", {{"cycles", basis[i]}, {"phase", "0"}}},
                      {"matrix_re", mj["re"]},
                      {"matrix_im", mj["im"]}});
    }
    results["generators"] = gens;
  }
  return {{{"lattice", in.json},
           {"genus", c.genus},
           {"central_character", c.central},
           {"lagrangian", c.lagrangian}},
          std::move(results),
          irreducible};
}

Outcome cmd_accept(const Config& c) {
  AcceptanceOptions options;
  options.seed = c.seed;
  options.tolerance = c.tol;
  options.flip_s_sign = c.flip_s_sign;
  options.threads = c.threads;
  options.only = c.only;
  const auto report = run_acceptance(options);
  Json inputs = {{"only", c.only}, {"flip_s_sign", c.flip_s_sign}};
  if (c.tol) inputs["tol"] = *c.tol;
  return {inputs, report.to_json(), report.all_passed()};
}

void emit(const Json& j, const std::string& path, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::InvalidInput, "cannot write '" + path + "'");
  file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Abelian lattice conformal field theory toolkit", "lattice-cft"};
  app.fallthrough();
  app.require_subcommand(1, 1);
  app.add_option("--seed", c.seed, "random seed")->capture_default_str();
  app.add_option("-o,--output", c.output, "write the report to this file");
  app.add_option("--tol", c.tol, "tolerance override");
  app.add_flag("--flip-s-sign", c.flip_s_sign)->group("");

  std::function<Outcome(const Config&)> action;
  std::string command;
  auto sub = [&](const std::string& name, const std::string& help,
                 std::function<Outcome(const Config&)> f) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&, name, f] {
      command = name;
      action = f;
    });
    return s;
  };
  auto lattice_opt = [&](CLI::App* s) {
    s->add_option("--lattice", c.lattice, "Gram matrix JSON, file, or bundled name")
        ->capture_default_str();
  };

  auto* disc = sub("disc", "discriminant group of an even lattice", cmd_disc);
  lattice_opt(disc);
  auto* blocks = sub("blocks", "conformal block dimension", cmd_blocks);
  lattice_opt(blocks);
  blocks->add_option("--surface", c.surface, "surface JSON or file")->required();
  blocks->add_option("--labels", c.labels, "labels JSON or file");
  auto* fact = sub("factorize", "check factorization along a split", cmd_factorize);
  lattice_opt(fact);
  fact->add_option("--surface", c.surface)->required();
  fact->add_option("--split", c.split)->required();
  fact->add_option("--labels", c.labels);
  auto* mod = sub("modular", "S and T matrices with their relations", cmd_modular);
  lattice_opt(mod);
  auto* ver = sub("verlinde", "Verlinde sum against the block dimension", cmd_verlinde);
  lattice_opt(ver);
  ver->add_option("--surface", c.surface)->required();
  ver->add_option("--labels", c.labels);
  auto* th = sub("theta", "theta function with characteristics", cmd_theta);
  th->add_option("--tau", c.tau, "period matrix JSON")->required();
  th->add_option("--z", c.z, "argument vector JSON");
  th->add_option("--char", c.characteristic, "characteristic a,b");
  auto* fock = app.add_subcommand("fock", "loop group sectors");
  fock->require_subcommand(1, 1);
  auto fock_sub = [&](const std::string& name, const std::string& help,
                      std::function<Outcome(const Config&)> f) {
    CLI::App* s = fock->add_subcommand(name, help);
    s->callback([&, name, f] {
      command = "fock " + name;
      action = f;
    });
    return s;
  };
  auto* fc = fock_sub("character", "sector character", cmd_fock_character);
  lattice_opt(fc);
  fc->add_option("--phi", c.phi, "discriminant group element")->capture_default_str();
  fc->add_option("--max-energy", c.max_energy)->capture_default_str();
  auto* fs = fock_sub("sewing", "annulus sewing identity", cmd_fock_sewing);
  lattice_opt(fs);
  fs->add_option("--max-energy", c.max_energy)->capture_default_str();
  auto* fo = fock_sub("overlap", "Bogoliubov vacuum overlap", cmd_fock_overlap);
  fo->add_option("--t", c.t_matrix, "contraction T as JSON")->required();
  auto* heis = sub("heisenberg", "finite Heisenberg group representation", cmd_heisenberg);
  lattice_opt(heis);
  heis->add_option("--genus", c.genus)->capture_default_str();
  heis->add_option("--central-character", c.central)->capture_default_str();
  heis->add_option("--lagrangian", c.lagrangian, "a, b or diagonal")->capture_default_str();
  auto* acc = sub("accept", "run the acceptance suite", cmd_accept);
  acc->add_option("--only", c.only, "criterion ids")->delimiter(',');
  acc->add_option("--threads", c.threads, "worker threads (0: LATTICE_CFT_THREADS or all)");

  std::vector<const char*> argv{"lattice-cft"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << io::error_report("InvalidInput", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    Outcome o = action(c);
    emit(io::report(command, o.inputs, c.seed, std::move(o.results)), c.output, out);
    return o.verified ? 0 : 1;
  } catch (const Error& e) {
    out << io::error_report(std::string(to_string(e.kind())), e.what()).dump(2) << "\n";
    return 2;
  } catch (const std::exception& e) {
    out << io::error_report("InvalidInput", e.what()).dump(2) << "\n";
    return 2;
  }
}

}  // namespace lcft::cli
