#include "cylie/json_io.hpp"

namespace cylie {

namespace {
json gauss_to_json(const Gauss& g) { return json{{"re", g.re().str()}, {"im", g.im().str()}}; }

Gauss gauss_from_json(const json& j) {
  return Gauss(Rational::parse(j.at("re").get<std::string>()),
               Rational::parse(j.at("im").get<std::string>()));
}
}  // namespace

json poly_to_json(const Poly& p) {
  json out = json::array();
  for (const auto& [mono, coeff] : p.terms()) {
    json exps = json::object();
    for (int k = 0; k < kNumVars; ++k)
      if (mono[k] > 0) exps[var_name(static_cast<Var>(k))] = int(mono[k]);
    out.push_back(json{{"coeff", gauss_to_json(coeff)}, {"exps", exps}});
  }
  return out;
}

Poly poly_from_json(const json& j) {
  Poly p;
  for (const auto& term : j) {
    Poly t(gauss_from_json(term.at("coeff")));
    for (const auto& [name, e] : term.at("exps").items()) {
      Poly v = Poly::var(var_from_name(name));
      for (int k = 0; k < e.get<int>(); ++k) t *= v;
    }
    p += t;
  }
  return p;
}

json scalar_to_json(const Scalar& s) {
  switch (s.ring()) {
    case Ring::Rational: return s.as_rational().str();
    case Ring::Gauss: return gauss_to_json(s.as_gauss());
    case Ring::Tower: {
      json c = json::array();
      for (int k = 0; k < 4; ++k) c.push_back(s.as_tower().coord(k).str());
      return json{{"c", c}};
    }
    case Ring::Poly: return poly_to_json(s.as_poly());
  }
  throw Error(ErrorKind::ParseError, "unreachable");
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar(Rational::parse(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(Rational(j.get<int64_t>()));
  if (j.is_array()) return Scalar(poly_from_json(j));
  if (j.is_object() && j.contains("re")) return Scalar(gauss_from_json(j));
  if (j.is_object() && j.contains("c")) {
    const json& c = j.at("c");
    if (c.size() != 4) throw Error(ErrorKind::ParseError, "tower element needs 4 coordinates");
    return Scalar(Tower(Rational::parse(c[0].get<std::string>()),
                        Rational::parse(c[1].get<std::string>()),
                        Rational::parse(c[2].get<std::string>()),
                        Rational::parse(c[3].get<std::string>())));
  }
  throw Error(ErrorKind::ParseError, "unrecognized scalar encoding: " + j.dump());
}

json mat_to_json(const Mat& m) {
  json entries = json::array();
  for (const auto& e : m.entries()) entries.push_back(scalar_to_json(e));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"ring", ring_name(m.ring())},
              {"entries", entries}};
}

Mat mat_from_json(const json& j) {
  int rows = j.at("rows").get<int>();
  int cols = j.at("cols").get<int>();
  std::vector<Scalar> es;
  for (const auto& e : j.at("entries")) es.push_back(scalar_from_json(e));
  Mat m(rows, cols, std::move(es));
  if (j.contains("ring")) {
    std::string want = j.at("ring").get<std::string>();
    for (Ring r : {Ring::Rational, Ring::Gauss, Ring::Tower, Ring::Poly})
      if (want == ring_name(r)) return m.promote(ring_join(m.ring(), r));
    throw Error(ErrorKind::ParseError, "unknown ring name: " + want);
  }
  return m;
}

json frame_to_json(const HodgeFrame& f) {
  json labels = json::array();
  for (int i = 0; i < 4; ++i) labels.push_back(label_name(f.ordering.at(i)));
  return json{{"ordering", labels}, {"q", mat_to_json(f.q)}};
}

json subalgebra_to_json(const Subalgebra& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(mat_to_json(b));
  json coords = json::array();
  for (int c = 0; c < s.dim(); ++c) {
    json col = json::array();
    for (int r = 0; r < 16; ++r) col.push_back(scalar_to_json(s.coord_matrix().at(r, c)));
    coords.push_back(col);
  }
  json labels = json::array();
  for (int i = 0; i < 4; ++i) labels.push_back(label_name(s.frame().ordering.at(i)));
  return json{{"ordering", labels}, {"basis", basis}, {"chart_coords", coords}};
}

}  // namespace cylie
