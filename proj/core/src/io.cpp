#include "pgeom/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pgeom/error.hpp"

namespace pgeom::io {
namespace {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed JSON: ") + e.what());
  }
}

const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw Error(ErrorCode::parse_error, std::string("missing field '") + key + "'");
  return obj.at(key);
}

long long require_int(const Json& obj, const char* key) {
  const Json& v = require(obj, key);
  if (!v.is_number_integer()) throw Error(ErrorCode::parse_error, std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

std::vector<long long> int_list(const Json& v, const char* what) {
  if (!v.is_array()) throw Error(ErrorCode::parse_error, std::string(what) + " must be an array");
  std::vector<long long> out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw Error(ErrorCode::parse_error, std::string(what) + " must contain integers");
    out.push_back(x.get<long long>());
  }
  return out;
}

Json coords_json(std::span<const Elem> c) {
  Json arr = Json::array();
  for (Elem x : c) arr.push_back(static_cast<int>(x));
  return arr;
}

Json geometry_json(const Geometry& g) {
  Json j;
  j["q"] = g.field().q();
  j["p"] = g.field().p();
  j["k"] = g.field().k();
  j["modulus"] = g.field().modulus();
  j["ambient"] = g.ambient();
  Json pts = Json::array();
  for (PointIndex i : g.points()) pts.push_back(coords_json(g.space().coords(i)));
  j["points"] = std::move(pts);
  return j;
}

Json bound_json(const BoundValue& v) {
  Json j;
  switch (v.kind) {
    case BoundValue::Kind::exact:
      j["kind"] = "exact";
      j["value"] = v.value.get_str();
      break;
    case BoundValue::Kind::tower_symbolic:
      j["kind"] = "tower";
      j["height"] = v.height;
      j["arg"] = v.arg.get_str();
      break;
    case BoundValue::Kind::over_cap:
      j["kind"] = "over-cap";
      break;
  }
  return j;
}

}  // namespace

std::string geometry_to_json(const Geometry& g) { return geometry_json(g).dump(); }

Geometry geometry_from_json(std::string_view text) {
  const Json j = parse_json(text);
  const long long q = require_int(j, "q");
  if (q < 2 || q > 1 << 20) throw Error(ErrorCode::parse_error, "field 'q' out of range");
  const Field f = Field::make(static_cast<int>(q));
  if (require_int(j, "p") != f.p() || require_int(j, "k") != f.k())
    throw Error(ErrorCode::parse_error, "p and k do not match q");
  const auto modulus = int_list(require(j, "modulus"), "modulus");
  if (std::vector<int>(modulus.begin(), modulus.end()) != f.modulus())
    throw Error(ErrorCode::unsupported, "modulus differs from the fixed modulus for GF(" + std::to_string(q) + ")");
  const long long ambient = require_int(j, "ambient");
  if (ambient < 1 || ambient > 64) throw Error(ErrorCode::parse_error, "field 'ambient' out of range");
  const int n = static_cast<int>(ambient);
  auto space = projective_space(f, n);

  const Json& pts = require(j, "points");
  if (!pts.is_array()) throw Error(ErrorCode::parse_error, "field 'points' must be an array");
  std::vector<PointIndex> indices;
  for (const auto& p : pts) {
    const auto c = int_list(p, "point");
    if (static_cast<int>(c.size()) != n) throw Error(ErrorCode::parse_error, "point length differs from ambient rank");
    std::vector<Elem> v(n);
    for (int i = 0; i < n; ++i) {
      if (c[i] < 0 || c[i] >= q) throw Error(ErrorCode::parse_error, "coordinate outside [0, q)");
      v[i] = static_cast<Elem>(c[i]);
    }
    const auto idx = space->normalize(v);
    if (!idx) throw Error(ErrorCode::zero_vector, "zero vector listed as a point");
    indices.push_back(*idx);
  }
  return Geometry(std::move(space), std::move(indices));
}

std::string witness_to_json(const EmbeddingWitness& w) {
  Json j;
  j["basis"] = w.basis;
  Json rows = Json::array();
  for (const auto& r : w.map) rows.push_back(coords_json(r));
  j["map"] = std::move(rows);
  j["point_map"] = w.point_map;
  return j.dump();
}

EmbeddingWitness witness_from_json(std::string_view text) {
  const Json j = parse_json(text);
  EmbeddingWitness w;
  for (long long b : int_list(require(j, "basis"), "basis")) w.basis.push_back(static_cast<PointIndex>(b));
  const Json& rows = require(j, "map");
  if (!rows.is_array()) throw Error(ErrorCode::parse_error, "field 'map' must be an array");
  for (const auto& r : rows) {
    std::vector<Elem> row;
    for (long long x : int_list(r, "map row")) {
      if (x < 0 || x > 255) throw Error(ErrorCode::parse_error, "map entry out of range");
      row.push_back(static_cast<Elem>(x));
    }
    w.map.push_back(std::move(row));
  }
  for (long long p : int_list(require(j, "point_map"), "point_map")) w.point_map.push_back(static_cast<PointIndex>(p));
  return w;
}

std::string flat_to_json(const ProjectiveSpace& space, const Flat& flat) {
  Json j;
  j["rank"] = flat.rank();
  j["ambient"] = flat.ambient();
  Json basis = Json::array();
  for (int i = 0; i < flat.rank(); ++i) basis.push_back(coords_json(flat.basis().row(i)));
  j["basis"] = std::move(basis);
  Json pts = Json::array();
  for (PointIndex p : flat_point_indices(space, flat)) pts.push_back(coords_json(space.coords(p)));
  j["points"] = std::move(pts);
  return j.dump();
}

std::string extremal_to_json(const ExtremalResult& r) {
  Json j;
  j["value"] = r.value;
  j["status"] = to_string(r.status);
  j["nodes"] = r.nodes;
  j["witness"] = geometry_json(r.witness);
  return j.dump();
}

std::string density_to_csv(const std::vector<DensityRow>& rows) {
  std::ostringstream out;
  out << "n,ex,total,density_num,density_den,limit_num,limit_den,status\n";
  for (const auto& r : rows) {
    out << r.n << ',' << r.ex << ',' << r.total << ',' << r.density.get_num().get_str() << ','
        << r.density.get_den().get_str() << ',' << r.limit.get_num().get_str() << ',' << r.limit.get_den().get_str()
        << ',' << to_string(r.status) << '\n';
  }
  return out.str();
}

std::string bound_value_to_json(const BoundValue& v) { return bound_json(v).dump(); }

std::string closed_form_bound_to_json(const BigInt& m, std::uint64_t c, const Rational& eps, const BoundValue& value) {
  Json j;
  j["mode"] = "closed-form";
  j["q"] = 2;
  j["m"] = m.get_str();
  j["c"] = c;
  j["eps"] = format_rational(eps);
  j["value"] = bound_json(value);
  Json step;
  step["d"] = binary_tower_offset(eps);
  step["tower_height"] = c;
  step["tower_arg"] = BigInt(m + binary_tower_offset(eps)).get_str();
  j["trace"] = Json::array({step});
  return j.dump();
}

std::string recursive_bound_to_json(int q, const BigInt& m, std::uint64_t c, const Rational& eps,
                                    const RecursiveBound& bound) {
  Json j;
  j["mode"] = "recursive";
  j["q"] = q;
  j["m"] = m.get_str();
  j["c"] = c;
  j["eps"] = format_rational(eps);
  j["value"] = bound_json(bound.value);
  Json trace = Json::array();
  for (const auto& level : bound.trace) {
    Json l;
    l["c"] = level.c;
    l["m"] = level.m.get_str();
    l["eps"] = format_rational(level.eps);
    l["r"] = bound_json(level.r);
    if (level.c > 1 && level.r.is_exact()) l["t"] = level.t.get_str();
    l["result"] = bound_json(level.result);
    trace.push_back(std::move(l));
  }
  j["trace"] = std::move(trace);
  return j.dump();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::invalid_argument, "cannot write '" + path + "'");
  out << contents;
}

}  // namespace pgeom::io
