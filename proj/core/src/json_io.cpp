#include "quanthelly/json_io.hpp"

#include "json.hpp"

#include "quanthelly/error.hpp"

namespace quanthelly {

using nlohmann::json;

namespace {

constexpr const char* kFamilySchema = "quanthelly.family/1";
constexpr const char* kMeasureSchema = "quanthelly.measure/1";

json scalar_json(const Scalar& s) { return format_scalar(s); }

Scalar scalar_of(const json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Integer(j.dump()));
  throw InvalidArgument("expected an exact rational, got " + j.dump());
}

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

Vector vector_of(const json& j) {
  if (!j.is_array()) throw InvalidArgument("expected an array of rationals");
  Vector v;
  for (const auto& x : j) v.push_back(scalar_of(x));
  return v;
}

json points_json(const std::vector<Point>& pts) {
  json a = json::array();
  for (const auto& p : pts) a.push_back(vector_json(p.coords()));
  return a;
}

json body_json(const ConvexBody& b) {
  json j;
  j["dim"] = b.dim();
  if (b.is_empty()) {
    j["empty"] = true;
  } else if (b.bounded()) {
    j["vertices"] = points_json(b.vertex_list());
  } else {
    json hs = json::array();
    for (const auto& h : b.h_rep()) hs.push_back({{"normal", vector_json(h.normal())}, {"offset", scalar_json(h.offset())}});
    j["halfspaces"] = hs;
  }
  return j;
}

ConvexBody body_of(const json& j) {
  const int dim = j.value("dim", 2);
  if (j.value("empty", false)) return ConvexBody::empty(dim);
  if (j.contains("vertices")) {
    std::vector<Point> pts;
    for (const auto& p : j.at("vertices")) pts.emplace_back(vector_of(p));
    if (pts.empty()) return ConvexBody::empty(dim);
    return convex_hull(pts);
  }
  if (j.contains("box")) {
    return ConvexBody::box(Point(vector_of(j.at("box").at("lo"))), Point(vector_of(j.at("box").at("hi"))));
  }
  if (j.contains("halfspaces")) {
    std::vector<Halfspace> hs;
    for (const auto& h : j.at("halfspaces")) hs.emplace_back(vector_of(h.at("normal")), scalar_of(h.at("offset")));
    return ConvexBody::from_halfspaces(dim, std::move(hs));
  }
  throw InvalidArgument("body needs vertices, box, halfspaces or empty");
}

json value_json(const MeasureValue& v) {
  if (v.is_infinite()) return {{"infinite", true}};
  if (v.is_exact()) return {{"exact", scalar_json(v.lo())}};
  return {{"lo", scalar_json(v.lo())}, {"hi", scalar_json(v.hi())}};
}

json index_json(const IndexSet& idx) { return json(idx); }

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what());
  }
}

template <typename Fn>
auto guarded(Fn fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("unexpected JSON layout: ") + e.what());
  }
}

}  // namespace

std::string body_to_json(const ConvexBody& b) { return body_json(b).dump(2); }

ConvexBody body_from_json(std::string_view text) {
  return guarded([&] { return body_of(parse(text)); });
}

std::string family_to_json(const Family& f) {
  json j;
  j["schema"] = kFamilySchema;
  j["dim"] = f.size() ? f.dim() : 2;
  json members = json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    json m = body_json(f[i]);
    if (i < f.labels.size() && !f.labels[i].empty()) m["label"] = f.labels[i];
    members.push_back(m);
  }
  j["members"] = members;
  return j.dump(2);
}

Family family_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    if (j.value("schema", "") != kFamilySchema) throw InvalidArgument("family JSON needs schema quanthelly.family/1");
    Family f;
    const int dim = j.value("dim", 2);
    bool labelled = false;
    for (const auto& m : j.at("members")) {
      json body = m;
      if (!body.contains("dim")) body["dim"] = dim;
      f.members.push_back(body_of(body));
      f.labels.push_back(m.value("label", ""));
      labelled = labelled || m.contains("label");
      if (f.members.back().dim() != dim) throw DimensionError("family member has the wrong dimension");
    }
    if (!labelled) f.labels.clear();
    return f;
  });
}

std::string measure_to_json(const Measure& m) {
  json j;
  j["schema"] = kMeasureSchema;
  switch (m.kind()) {
    case MeasureKind::Volume:
      j["kind"] = "volume";
      break;
    case MeasureKind::Perimeter:
      j["kind"] = "perimeter";
      j["tol"] = scalar_json(m.tol());
      break;
    case MeasureKind::Nonempty:
      j["kind"] = "nonempty";
      break;
    case MeasureKind::LatticeCount: {
      j["kind"] = "lattice";
      json basis = json::array();
      for (const auto& row : m.basis()) basis.push_back(vector_json(row));
      j["basis"] = basis;
      json ex = json::array();
      for (const auto& sub : m.excluded()) {
        json rows = json::array();
        for (const auto& row : sub) rows.push_back(vector_json(row));
        ex.push_back(rows);
      }
      j["excluded"] = ex;
      break;
    }
  }
  return j.dump(2);
}

Measure measure_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    if (j.value("schema", "") != kMeasureSchema) throw InvalidArgument("measure JSON needs schema quanthelly.measure/1");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "volume") return Measure::volume();
    if (kind == "perimeter") return j.contains("tol") ? Measure::perimeter(scalar_of(j.at("tol"))) : Measure::perimeter();
    if (kind == "nonempty") return Measure::nonempty();
    if (kind == "lattice") {
      std::vector<std::vector<Vector>> excluded;
      if (j.contains("excluded")) {
        for (const auto& sub : j.at("excluded")) {
          std::vector<Vector> rows;
          for (const auto& row : sub) rows.push_back(vector_of(row));
          excluded.push_back(std::move(rows));
        }
      }
      if (!j.contains("basis")) return Measure::integer_lattice(j.value("dim", 2), std::move(excluded));
      std::vector<Vector> basis;
      for (const auto& row : j.at("basis")) basis.push_back(vector_of(row));
      return Measure::lattice(std::move(basis), std::move(excluded));
    }
    throw InvalidArgument("unknown measure kind '" + kind + "'");
  });
}

GeneratorSpec generator_spec_from_json(std::string_view text) {
  return guarded([&] {
    const json j = parse(text);
    GeneratorSpec s;
    s.kind = parse_generator(j.at("kind").get<std::string>());
    s.count = j.value("count", s.count);
    s.vertices = j.value("vertices", s.vertices);
    s.clusters = j.value("clusters", s.clusters);
    s.planted = j.value("planted", s.planted);
    s.extent = j.value("extent", s.extent);
    s.denominator = j.value("denominator", s.denominator);
    if (j.contains("side")) s.side = scalar_of(j.at("side"));
    s.seed = j.value("seed", s.seed);
    return s;
  });
}

std::string generator_spec_to_json(const GeneratorSpec& s) {
  json j;
  j["kind"] = generator_name(s.kind);
  j["count"] = s.count;
  j["vertices"] = s.vertices;
  j["clusters"] = s.clusters;
  j["planted"] = s.planted;
  j["extent"] = s.extent;
  j["denominator"] = s.denominator;
  j["side"] = scalar_json(s.side);
  j["seed"] = s.seed;
  return j.dump();
}

std::string certificate_to_json(const Family& f, const PiercingCertificate& cert) {
  json j;
  j["schema"] = "quanthelly.certificate/1";
  json ws = json::array();
  for (std::size_t w = 0; w < cert.witnesses.size(); ++w) {
    json b = body_json(cert.witnesses[w]);
    b["achieved"] = value_json(cert.achieved[w]);
    ws.push_back(b);
  }
  j["witnesses"] = ws;
  j["coverage"] = cert.coverage;
  j["members"] = f.size();
  const PipelineTranscript& t = cert.transcript;
  j["transcript"] = {{"tau", scalar_json(t.tau)},
                     {"nu", scalar_json(t.nu)},
                     {"integral", t.integral},
                     {"replication", t.replication.get_str()},
                     {"multiset_size", t.multiset_size},
                     {"eps_prime", scalar_json(t.eps_prime)},
                     {"pool_size", t.pool_size},
                     {"s_max", t.s_max},
                     {"net_iterations", t.net_iterations},
                     {"notes", t.notes}};
  return j.dump(2);
}

std::string tverberg_to_json(const TverbergResult& r) {
  json j;
  j["schema"] = "quanthelly.tverberg/1";
  json parts = json::array();
  for (const auto& p : r.partition) parts.push_back(index_json(p));
  j["partition"] = parts;
  j["witness"] = body_json(r.witness);
  j["achieved"] = value_json(r.achieved);
  j["level"] = scalar_json(r.level);
  return j.dump(2);
}

std::string selection_to_json(const SelectionResult& r) {
  json j;
  j["schema"] = "quanthelly.selection/1";
  j["witness"] = body_json(r.witness);
  json tuples = json::array();
  for (const auto& t : r.tuples) tuples.push_back(index_json(t));
  j["tuples"] = tuples;
  j["r"] = r.r;
  j["rho_achieved"] = scalar_json(r.rho_achieved);
  j["exhaustive"] = r.exhaustive;
  return j.dump(2);
}

std::string net_to_json(const NetResult& r) {
  json j;
  j["schema"] = "quanthelly.net/1";
  json net = json::array();
  for (std::size_t i = 0; i < r.net.size(); ++i) {
    json b = body_json(r.net[i]);
    b["achieved"] = value_json(r.achieved[i]);
    net.push_back(b);
  }
  j["net"] = net;
  j["iterations"] = r.iterations;
  j["rho_min"] = scalar_json(r.rho_min);
  j["certified"] = r.certified;
  return j.dump(2);
}

std::string helly_report_to_json(const HellyReport& r) {
  json j;
  j["schema"] = "quanthelly.helly-check/1";
  j["hypothesis"] = r.hypothesis;
  j["conclusion"] = r.conclusion;
  j["holds"] = r.holds();
  j["exhaustive"] = r.exhaustive;
  if (r.violator) j["violator"] = index_json(*r.violator);
  j["intersection"] = body_json(r.intersection);
  j["value"] = value_json(r.value);
  return j.dump(2);
}

std::string colorful_helly_to_json(const ColorfulHellyResult& r) {
  json j;
  j["schema"] = "quanthelly.colorful-helly/1";
  j["class"] = r.class_index;
  j["witness"] = body_json(r.witness);
  j["achieved"] = value_json(r.achieved);
  json t = json::array();
  for (const auto& [c, m] : r.tuple) t.push_back({{"class", c}, {"member", m}});
  j["tuple"] = t;
  j["cut"] = {{"normal", vector_json(r.cut.normal())}, {"offset", scalar_json(r.cut.offset())}};
  return j.dump(2);
}

std::string floating_body_to_json(const FloatingBodyResult& r) {
  json j;
  j["schema"] = "quanthelly.floating-body/1";
  j["body"] = body_json(r.body);
  j["delta"] = value_json(r.delta);
  json cuts = json::array();
  for (const auto& c : r.cuts) {
    cuts.push_back({{"direction", vector_json(c.direction.vector())},
                    {"normal", vector_json(c.halfspace.normal())},
                    {"offset", scalar_json(c.halfspace.offset())}});
  }
  j["cuts"] = cuts;
  return j.dump(2);
}

}  // namespace quanthelly
