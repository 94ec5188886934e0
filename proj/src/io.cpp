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

#include "lattice_cft/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <boost/algorithm/string.hpp>

#include "lattice_cft/catalog.hpp"

namespace lcft::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

template <typename T>
T get_as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const Json::exception&) {
    bad(what + ": unexpected JSON type");
  }
}

std::string trim(std::string s) {
  boost::algorithm::trim(s);
  return s;
}

double parse_number(const std::string& token) {
  const std::string t = trim(token);
  if (t.empty()) bad("empty number in characteristic");
  try {
    const auto slash = t.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(t, &used);
      if (used != t.size()) bad("bad number '" + t + "'");
      return v;
    }
    const std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    const double n = std::stod(num, &used);
    if (used != num.size()) bad("bad number '" + t + "'");
    const double d = std::stod(den, &used);
    if (used != den.size() || d == 0.0) bad("bad number '" + t + "'");
    return n / d;
  } catch (const std::logic_error&) {
    bad("bad number '" + t + "'");
  }
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  bad("complex entries must be numbers or [re, im]");
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

Json load_json_argument(const std::string& arg) {
  const std::string t = trim(arg);
  if (!t.empty() && (t.front() == '[' || t.front() == '{')) return parse_json(t);
  std::ifstream in(t);
  if (!in) bad("cannot open '" + t + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

IntMatrix gram_from_json(const Json& j) {
  const Json& rows = j.is_object() ? j.at("gram") : j;
  if (!rows.is_array() || rows.empty()) bad("Gram matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(rows.size());
  IntMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw Error(ErrorKind::DimensionMismatch, "Gram matrix must be square");
    }
    for (Eigen::Index k = 0; k < n; ++k) {
      const Json& e = row[static_cast<std::size_t>(k)];
      if (!e.is_number_integer()) bad("Gram entries must be integers");
      g(i, k) = e.get<std::int64_t>();
    }
  }
  return g;
}

IntMatrix parse_lattice(const std::string& arg) {
  const std::string t = trim(arg);
  if (!t.empty() && (t.front() == '[' || t.front() == '{')) return gram_from_json(parse_json(t));
  if (const auto named = find_bundled(t)) return *named;
  if (std::ifstream(t)) return gram_from_json(load_json_argument(t));
  bad("'" + t + "' is neither JSON, a readable file nor a bundled lattice");
}

namespace {

SurfaceComponent component_from_json(const Json& j) {
  if (!j.is_object()) bad("surface component must be an object");
  SurfaceComponent c;
  c.genus = j.contains("genus") ? get_as<int>(j.at("genus"), "genus") : 0;
  if (j.contains("boundaries")) {
    for (const Json& b : j.at("boundaries")) {
      if (!b.is_object()) bad("boundary circle must be an object");
      BoundaryCircle circle;
      circle.id = get_as<std::string>(b.at("id"), "boundary id");
      const std::string o = b.contains("orientation")
                                ? get_as<std::string>(b.at("orientation"), "orientation")
                                : "out";
      if (o == "out") {
        circle.orientation = Orientation::Out;
      } else if (o == "in") {
        circle.orientation = Orientation::In;
      } else {
        bad("orientation must be \"in\" or \"out\"");
      }
      c.boundaries.push_back(std::move(circle));
    }
  }
  return c;
}

}  // namespace

Surface surface_from_json(const Json& j) {
  try {
    if (j.is_string()) {
      const std::string name = j.get<std::string>();
      if (name == "sphere") return Surface::sphere();
      if (name == "torus") return Surface::closed(1);
      bad("unknown surface name '" + name + "'");
    }
    if (!j.is_object()) bad("surface must be an object");
    if (!j.contains("components")) return Surface({component_from_json(j)});
    std::vector<SurfaceComponent> comps;
    for (const Json& c : j.at("components")) comps.push_back(component_from_json(c));
    return Surface(std::move(comps));
  } catch (const Json::out_of_range& e) {
    bad(std::string("surface: ") + e.what());
  }
}

Json to_json(const Surface& s) {
  Json comps = Json::array();
  for (const auto& c : s.components()) {
    Json b = Json::array();
    for (const auto& circle : c.boundaries) {
      b.push_back({{"id", circle.id},
                   {"orientation", circle.orientation == Orientation::Out ? "out" : "in"}});
    }
    comps.push_back({{"genus", c.genus}, {"boundaries", b}});
  }
  return {{"components", comps}};
}

GroupElement element_from_json(const Json& j, const DiscriminantGroup& disc) {
  GroupElement a;
  if (j.is_number_integer()) {
    if (disc.num_factors() > 1) {
      throw Error(ErrorKind::DimensionMismatch, "label needs one entry per invariant factor");
    }
    a.assign(static_cast<std::size_t>(disc.num_factors()), j.get<std::int64_t>());
  } else if (j.is_array()) {
    for (const Json& e : j) {
      if (!e.is_number_integer()) bad("label entries must be integers");
      a.push_back(e.get<std::int64_t>());
    }
  } else {
    bad("label must be an integer or an array of integers");
  }
  if (static_cast<int>(a.size()) != disc.num_factors()) {
    throw Error(ErrorKind::DimensionMismatch, "label needs one entry per invariant factor");
  }
  return disc.reduce(a);
}

BlockLabel labels_from_json(const Json& j, const DiscriminantGroup& disc) {
  BlockLabel out;
  if (j.is_null()) return out;
  if (!j.is_object()) bad("labels must be an object keyed by circle id");
  for (const auto& [id, value] : j.items()) out[id] = element_from_json(value, disc);
  return out;
}

Split split_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("pieces") || !j.contains("matching")) {
    bad("split must have \"pieces\" and \"matching\"");
  }
  Split s{surface_from_json(j.at("pieces")), {}};
  for (const Json& pair : j.at("matching")) {
    if (!pair.is_array() || pair.size() != 2) bad("matching entries must be [out_id, in_id]");
    s.matching.emplace_back(get_as<std::string>(pair[0], "matching id"),
                            get_as<std::string>(pair[1], "matching id"));
  }
  return s;
}

Eigen::MatrixXcd complex_matrix_from_json(const Json& j) {
  if (j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number())) {
    return Eigen::MatrixXcd::Constant(1, 1, complex_from_json(j));
  }
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = j[0].is_array() ? static_cast<Eigen::Index>(j[0].size()) : 0;
  Eigen::MatrixXcd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(ErrorKind::DimensionMismatch, "matrix rows must have equal length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Eigen::VectorXcd complex_vector_from_json(const Json& j) {
  if (j.is_number()) {
    return Eigen::VectorXcd::Constant(1, complex_from_json(j));
  }
  if (!j.is_array()) bad("vector must be an array");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json to_json(const Eigen::MatrixXcd& m) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array(), ii = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ii.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return {{"re", re}, {"im", im}};
}

ThetaSpec characteristic_from_string(const std::string& text, int genus) {
  ThetaSpec spec = ThetaSpec::zero(genus);
  const std::string t = trim(text);
  if (t.empty()) return spec;
  if (t.front() == '{') {
    const Json j = parse_json(t);
    for (const char* key : {"a", "b"}) {
      if (!j.contains(key)) continue;
      const Json& v = j.at(key);
      if (!v.is_array() || static_cast<int>(v.size()) != genus) {
        throw Error(ErrorKind::DimensionMismatch, "characteristic length must equal the genus");
      }
      Eigen::VectorXd& out = key[0] == 'a' ? spec.a : spec.b;
      for (int i = 0; i < genus; ++i) {
        const Json& e = v[static_cast<std::size_t>(i)];
        out(i) = e.is_string() ? parse_number(e.get<std::string>()) : get_as<double>(e, key);
      }
    }
    if (j.contains("type")) spec.type = get_as<std::vector<std::int64_t>>(j.at("type"), "type");
    validate(spec);
    return spec;
  }
  std::vector<std::string> halves;
  boost::algorithm::split(halves, t, boost::is_any_of(","));
  if (halves.size() != 2) bad("characteristic must look like a,b");
  for (int h = 0; h < 2; ++h) {
    std::vector<std::string> parts;
    boost::algorithm::split(parts, halves[static_cast<std::size_t>(h)], boost::is_any_of(";"));
    Eigen::VectorXd& out = h == 0 ? spec.a : spec.b;
    if (parts.size() == 1) {
      out.setConstant(parse_number(parts[0]));
    } else if (static_cast<int>(parts.size()) == genus) {
      for (int i = 0; i < genus; ++i) out(i) = parse_number(parts[static_cast<std::size_t>(i)]);
    } else {
      throw Error(ErrorKind::DimensionMismatch, "characteristic length must equal the genus");
    }
  }
  return spec;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json report(const std::string& command, const Json& inputs, std::uint64_t seed, Json results) {
  Json r;
  r["format"] = 1;
  r["command"] = command;
  r["inputs_digest"] = fnv1a_hex(inputs.dump());
  r["seed"] = seed;
  r["results"] = std::move(results);
  return r;
}

Json error_report(const std::string& kind, const std::string& detail) {
  return {{"format", 1}, {"error_kind", kind}, {"detail", detail}};
}

}  // namespace lcft::io
