#include "altsurg/serialize.hpp"

#include "altsurg/error.hpp"

namespace altsurg {

Json to_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return to_string(r);
}

Json to_json(const Slope& s) { return s.str(); }

Json to_json(const GramLattice& g) { return g.gram; }

Json to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges) edges.push_back({u, v});
  return Json{{"vertices", g.n}, {"edges", edges}};
}

Json to_json(const ChangemakerLattice& lat) {
  return Json{{"slope", to_json(lat.slope)},
              {"continued_fraction", lat.cf.a},
              {"sigma", lat.sigma},
              {"stable", lat.stable},
              {"ambient", lat.N},
              {"w", lat.w},
              {"mu", lat.mu},
              {"basis", lat.basis},
              {"gram", to_json(lat.gram)},
              {"rank", lat.rank()},
              {"discriminant", determinant(lat.gram.gram)}};
}

Json to_json(const Move& m) {
  Json j{{"kind", to_string(m.kind)}, {"removed", m.removed}, {"added", m.added}};
  if (!m.note.empty()) j["note"] = m.note;
  return j;
}

Json to_json(const MoveTrace& trace) {
  Json out = Json::array();
  for (const auto& m : trace) out.push_back(to_json(m));
  return out;
}

Json to_json(const EmbeddingCertificate& cert) {
  Json vertices = Json::array();
  for (int i = 0; i < cert.size(); ++i)
    vertices.push_back(Json{{"id", cert.ids[i]}, {"region", cert.regions[i]}, {"coords", cert.coords[i]}});
  Json j{{"slope", to_json(cert.lattice.slope)},
         {"sigma", cert.lattice.sigma},
         {"stable", cert.lattice.stable},
         {"mirrored", cert.mirrored},
         {"next_id", cert.next_id},
         {"vertices", vertices}};
  if (!cert.lattice.integral()) {
    Markers mk = marker_vertices(cert);
    j["markers"] = Json{{"v", cert.ids[mk.v]}, {"w", cert.ids[mk.w]}, {"marked", mk.marked}};
    if (!mk.crossings.empty()) j["markers"]["crossings"] = mk.crossings;
  }
  return j;
}

Json to_json(const std::vector<SpincClass>& classes) {
  Json out = Json::array();
  for (const auto& c : classes)
    out.push_back(Json{{"label", c.label}, {"c", c.c}, {"norm", to_json(c.norm)}, {"d", to_json(c.d)}});
  return out;
}

EmbeddingCertificate certificate_from_json(const Json& j) {
  try {
    EmbeddingCertificate cert;
    cert.lattice = cm_build_sigma(Slope::parse(j.at("slope").get<std::string>()), j.at("sigma").get<Coeffs>());
    cert.mirrored = j.value("mirrored", false);
    int next = 0;
    for (const auto& v : j.at("vertices")) {
      cert.coords.push_back(v.at("coords").get<IntVector>());
      cert.ids.push_back(v.value("id", static_cast<int>(cert.ids.size())));
      cert.regions.push_back(v.value("region", -1));
      next = std::max(next, cert.ids.back() + 1);
    }
    cert.next_id = std::max(next, j.value("next_id", 0));
    auto bad = certificate_problems(cert);
    require(bad.empty(), "certificate: " + (bad.empty() ? std::string() : bad.front()));
    return cert;
  } catch (const Json::exception& e) {
    throw InputError(std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace altsurg
