#include "quanthelly/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "quanthelly/error.hpp"
#include "quanthelly/generators.hpp"
#include "quanthelly/helly.hpp"
#include "quanthelly/json_io.hpp"
#include "quanthelly/piercing.hpp"
#include "quanthelly/random.hpp"
#include "quanthelly/svg.hpp"

namespace quanthelly {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "quanthelly.experiment/1";

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string value_text(const MeasureValue& v) {
  if (v.is_infinite()) return "inf";
  if (v.is_exact()) return format_scalar(v.lo());
  return "[" + format_scalar(v.lo()) + "," + format_scalar(v.hi()) + "]";
}

Scalar scalar_field(const json& j, const char* key, const Scalar& fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw InvalidArgument(std::string("field '") + key + "' must be an exact rational");
}

Measure measure_field(const json& entry, const char* fallback_kind) {
  json m = entry.contains("measure") ? entry.at("measure") : json{{"kind", fallback_kind}};
  if (m.is_string()) m = json{{"kind", m}};
  m["schema"] = "quanthelly.measure/1";
  return measure_from_json(m.dump());
}

ConvexBody body_field(const json& entry) {
  if (!entry.contains("body")) return ConvexBody::box(Point{Scalar(0), Scalar(0)}, Point{Scalar(1), Scalar(1)});
  return body_from_json(entry.at("body").dump());
}

DirectionSet direction_field(const json& entry, int dim) {
  if (!entry.contains("directions")) return DirectionSet::axis(dim);
  const json& d = entry.at("directions");
  if (d.is_string() && d.get<std::string>() == "axis") return DirectionSet::axis(dim);
  if (d.is_object() && d.contains("farey")) return DirectionSet::farey(d.at("farey").get<int>());
  throw InvalidArgument("directions must be \"axis\" or {\"farey\": n}");
}

Direction vector_field(const json& entry, const char* key, Vector fallback) {
  if (!entry.contains(key)) return Direction(std::move(fallback));
  Vector v;
  for (const auto& x : entry.at(key)) v.push_back(x.is_string() ? parse_scalar(x.get<std::string>()) : Scalar(x.get<long>()));
  return Direction(std::move(v));
}

struct Plan {
  std::size_t group = 0;
  std::string kind;
  json entry;
  std::uint64_t seed = 0;
  std::size_t sweep_index = 0;
};

struct Outcome {
  TrialRecord record;
  std::optional<ConvexBody> body;
};

Family trial_family(const json& entry, std::uint64_t seed) {
  if (!entry.contains("generator")) throw InvalidArgument("trial needs a generator");
  GeneratorSpec spec = generator_spec_from_json(entry.at("generator").dump());
  spec.seed = seed;
  return generate(spec);
}

void run_sweep(const Plan& plan, Outcome& out) {
  const json& e = plan.entry;
  const ConvexBody k = body_field(e);
  const Measure m = measure_field(e, "volume");
  const DirectionSet d = direction_field(e, k.dim());
  const Scalar eps = parse_scalar(e.at("eps").at(plan.sweep_index).get<std::string>());
  out.record.instance_hash = fnv1a(body_to_json(k));
  out.record.parameters["eps"] = format_scalar(eps);
  out.record.parameters["directions"] = std::to_string(d.size());
  const FloatingBodyResult r = floating_body(k, m, eps, d);
  const MeasureValue whole = evaluate(m, k);
  const MeasureValue inner = evaluate(m, r.body);
  out.record.measured["delta"] = value_text(r.delta);
  out.record.measured["value"] = value_text(inner);
  out.record.measured["cuts"] = std::to_string(r.cuts.size());
  if (whole.is_exact() && inner.is_exact() && whole.lo() > 0) {
    out.record.measured["gap"] = format_scalar(1 - inner.lo() / whole.lo());
  }
  if (!is_subset(r.body, k)) throw VerificationFailed("floating body escapes K");
  out.body = r.body;
}

void run_helly(const Plan& plan, Outcome& out) {
  const json& e = plan.entry;
  const Measure m = measure_field(e, "lattice");
  const std::size_t h = e.value("h", std::size_t{4});
  const Scalar lambda = scalar_field(e, "lambda", Scalar(1));
  const Scalar eps = scalar_field(e, "eps", Scalar(0));
  const bool require = e.value("require_hypothesis", false);
  const std::size_t attempts = e.value("max_attempts", std::size_t{1});
  Rng rng(plan.seed);
  for (std::size_t a = 0; a < std::max<std::size_t>(1, attempts); ++a) {
    const std::uint64_t s = rng.next();
    const Family f = trial_family(e, s);
    const HellyReport r = helly_check(f, h, m, lambda, eps);
    if (require && !r.hypothesis && a + 1 < attempts) continue;
    out.record.instance_hash = fnv1a(family_to_json(f));
    out.record.parameters["instance_seed"] = std::to_string(s);
    out.record.parameters["attempts"] = std::to_string(a + 1);
    out.record.parameters["h"] = std::to_string(h);
    out.record.measured["hypothesis"] = r.hypothesis ? "1" : "0";
    out.record.measured["conclusion"] = r.conclusion ? "1" : "0";
    out.record.measured["holds"] = r.holds() ? "1" : "0";
    out.record.measured["exhaustive"] = r.exhaustive ? "1" : "0";
    out.record.measured["value"] = value_text(r.value);
    return;
  }
}

void run_pq(const Plan& plan, Outcome& out) {
  const json& e = plan.entry;
  const Measure m = measure_field(e, "volume");
  const Family f = trial_family(e, plan.seed);
  out.record.instance_hash = fnv1a(family_to_json(f));
  const std::size_t p = e.value("p", std::size_t{3});
  const std::size_t q = e.value("q", std::size_t{2});
  const Scalar lambda = scalar_field(e, "lambda", Scalar(1));
  const Scalar eps = scalar_field(e, "eps", Scalar(1, 8));
  PierceOptions opts;
  opts.s_max = e.value("s_max", opts.s_max);
  out.record.parameters["p"] = std::to_string(p);
  out.record.parameters["q"] = std::to_string(q);
  const PiercingCertificate cert = pq_pierce(f, p, q, m, lambda, eps, opts);
  std::string why;
  const bool ok = verify_certificate(f, cert, m, lambda, eps, &why);
  out.record.measured["witnesses"] = std::to_string(cert.witnesses.size());
  out.record.measured["tau"] = format_scalar(cert.transcript.tau);
  out.record.measured["nu"] = format_scalar(cert.transcript.nu);
  out.record.measured["pool"] = std::to_string(cert.transcript.pool_size);
  out.record.measured["verified"] = ok ? "1" : "0";
  if (!ok) throw VerificationFailed("certificate rejected: " + why);
}

void run_fractional(const Plan& plan, Outcome& out) {
  const json& e = plan.entry;
  const Measure m = measure_field(e, "volume");
  const Family f = trial_family(e, plan.seed);
  out.record.instance_hash = fnv1a(family_to_json(f));
  const std::size_t h = e.value("h", std::size_t{4});
  const Scalar lambda = scalar_field(e, "lambda", Scalar(1));
  const Scalar eps = scalar_field(e, "eps", Scalar(1, 4));
  const Direction v = vector_field(e, "v", Vector{Scalar(0), Scalar(1)});
  out.record.parameters["h"] = std::to_string(h);
  const FractionalHellyResult r = fractional_helly_witness(f, m, lambda, eps, h, v);
  for (std::size_t j : r.members) {
    if (!is_subset(r.witness, f[j])) throw VerificationFailed("witness not contained in a reported member");
  }
  out.record.measured["members"] = std::to_string(r.members.size());
  out.record.measured["fraction"] = format_scalar(Scalar(static_cast<long>(r.members.size())) / static_cast<long>(f.size()));
  out.record.measured["qualifying"] = std::to_string(r.qualifying);
  out.record.measured["assigned"] = std::to_string(r.assigned);
  out.record.measured["achieved"] = value_text(r.achieved);
}

Outcome run_plan(const Plan& plan, std::size_t index) {
  Outcome out;
  TrialRecord& rec = out.record;
  rec.index = index;
  rec.group = plan.group;
  rec.kind = plan.kind;
  rec.seed = plan.seed;
  try {
    if (plan.kind == "floating-body-sweep") {
      run_sweep(plan, out);
    } else if (plan.kind == "helly-check") {
      run_helly(plan, out);
    } else if (plan.kind == "pq") {
      run_pq(plan, out);
    } else if (plan.kind == "fractional-helly") {
      run_fractional(plan, out);
    } else {
      throw InvalidArgument("unknown trial kind '" + plan.kind + "'");
    }
  } catch (const std::exception& ex) {
    rec.ok = false;
    rec.error = ex.what();
  }
  return out;
}

std::vector<Plan> expand(const json& config) {
  std::vector<Plan> plans;
  const std::uint64_t seed = config.value("seed", std::uint64_t{1});
  if (!config.contains("trials")) return plans;
  const json& trials = config.at("trials");
  for (std::size_t g = 0; g < trials.size(); ++g) {
    const json& entry = trials[g];
    const std::string kind = entry.at("kind").get<std::string>();
    if (kind == "floating-body-sweep") {
      for (std::size_t i = 0; i < entry.at("eps").size(); ++i) plans.push_back({g, kind, entry, seed, i});
      continue;
    }
    const std::size_t repeat = entry.value("repeat", std::size_t{1});
    for (std::size_t r = 0; r < repeat; ++r) {
      Rng stream(seed, (static_cast<std::uint64_t>(g) << 32) | r);
      plans.push_back({g, kind, entry, stream.next(), 0});
    }
  }
  return plans;
}

std::string fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

bool flag(const TrialRecord& r, const char* key) {
  auto it = r.measured.find(key);
  return it != r.measured.end() && it->second == "1";
}

// Least-squares slope of log(gap) against log(ε).
std::optional<double> fitted_exponent(const std::vector<const TrialRecord*>& rs) {
  std::vector<std::pair<double, double>> pts;
  for (const TrialRecord* r : rs) {
    auto g = r->measured.find("gap");
    if (!r->ok || g == r->measured.end()) continue;
    const double gap = parse_scalar(g->second).get_d();
    const double eps = parse_scalar(r->parameters.at("eps")).get_d();
    if (gap > 0 && eps > 0) pts.emplace_back(std::log(eps), std::log(gap));
  }
  if (pts.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (auto [x, y] : pts) mx += x, my += y;
  mx /= pts.size();
  my /= pts.size();
  double sxy = 0, sxx = 0;
  for (auto [x, y] : pts) sxy += (x - mx) * (y - my), sxx += (x - mx) * (x - mx);
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

}  // namespace

std::map<std::string, std::string> aggregate_records(const std::vector<TrialRecord>& records) {
  std::map<std::size_t, std::vector<const TrialRecord*>> groups;
  for (const auto& r : records) groups[r.group].push_back(&r);
  std::map<std::string, std::string> agg;
  for (const auto& [g, rs] : groups) {
    const std::string pre = "group" + std::to_string(g) + ".";
    const std::string& kind = rs.front()->kind;
    std::size_t errors = 0;
    for (const TrialRecord* r : rs) errors += r->ok ? 0 : 1;
    agg[pre + "kind"] = kind;
    agg[pre + "trials"] = std::to_string(rs.size());
    agg[pre + "errors"] = std::to_string(errors);
    if (kind == "floating-body-sweep") {
      std::vector<std::pair<Scalar, Scalar>> col;
      for (const TrialRecord* r : rs) {
        auto v = r->measured.find("value");
        if (r->ok && v != r->measured.end() && v->second.front() != '[' && v->second != "inf") {
          col.emplace_back(parse_scalar(r->parameters.at("eps")), parse_scalar(v->second));
        }
      }
      std::sort(col.begin(), col.end());
      bool monotone = true;
      for (std::size_t i = 1; i < col.size(); ++i) monotone = monotone && col[i].second <= col[i - 1].second;
      agg[pre + "monotone"] = monotone ? "1" : "0";
      if (auto slope = fitted_exponent(rs)) agg[pre + "exponent"] = fixed(*slope);
    } else if (kind == "helly-check") {
      std::size_t hyp = 0, fail = 0, sampled = 0;
      for (const TrialRecord* r : rs) {
        if (!r->ok) continue;
        hyp += flag(*r, "hypothesis");
        fail += flag(*r, "hypothesis") && !flag(*r, "conclusion");
        sampled += !flag(*r, "exhaustive");
      }
      agg[pre + "hypothesis_true"] = std::to_string(hyp);
      agg[pre + "conclusion_failures"] = std::to_string(fail);
      agg[pre + "sampled"] = std::to_string(sampled);
    } else if (kind == "pq") {
      std::size_t verified = 0, max_w = 0, total = 0, ok = 0;
      for (const TrialRecord* r : rs) {
        if (!r->ok) continue;
        ++ok;
        verified += flag(*r, "verified");
        const std::size_t w = std::stoul(r->measured.at("witnesses"));
        max_w = std::max(max_w, w);
        total += w;
      }
      agg[pre + "verified"] = std::to_string(verified);
      agg[pre + "max_witnesses"] = std::to_string(max_w);
      if (ok) agg[pre + "mean_witnesses"] = format_scalar(Scalar(static_cast<long>(total)) / static_cast<long>(ok));
    } else if (kind == "fractional-helly") {
      std::optional<Scalar> lo, hi;
      for (const TrialRecord* r : rs) {
        if (!r->ok) continue;
        const Scalar x = parse_scalar(r->measured.at("fraction"));
        if (!lo || x < *lo) lo = x;
        if (!hi || x > *hi) hi = x;
      }
      if (lo) agg[pre + "min_fraction"] = format_scalar(*lo);
      if (hi) agg[pre + "max_fraction"] = format_scalar(*hi);
    }
  }
  return agg;
}

ExperimentReport run_experiment(std::string_view config) {
  json cfg;
  try {
    cfg = json::parse(config);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("malformed experiment config: ") + e.what());
  }
  if (cfg.value("schema", "") != kSchema) throw InvalidArgument("experiment config needs schema quanthelly.experiment/1");
  std::vector<Plan> plans;
  try {
    plans = expand(cfg);
  } catch (const json::exception& e) {
    throw InvalidArgument(std::string("unexpected experiment layout: ") + e.what());
  }

  std::vector<Outcome> outcomes(plans.size());
  std::size_t threads = cfg.value("threads", std::size_t{0});
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, plans.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < plans.size(); i = next++) outcomes[i] = run_plan(plans[i], i);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ExperimentReport report;
  for (auto& o : outcomes) report.records.push_back(std::move(o.record));
  report.aggregates = aggregate_records(report.records);

  if (cfg.value("svg", false)) {
    std::map<std::size_t, std::vector<SvgItem>> figures;
    for (std::size_t i = 0; i < plans.size(); ++i) {
      if (!outcomes[i].body) continue;
      auto& items = figures[plans[i].group];
      if (items.empty()) items.push_back({body_field(plans[i].entry), SvgStyle{"#dde6f0", "#234", "1", "1"}});
      items.push_back({*outcomes[i].body, SvgStyle{"none", "#a33", "1", "1"}});
    }
    for (const auto& [g, items] : figures) report.svgs.push_back(render_svg(items));
  }
  return report;
}

std::string ExperimentReport::to_json() const {
  json j;
  j["schema"] = "quanthelly.experiment-report/1";
  json recs = json::array();
  for (const auto& r : records) {
    json x{{"index", r.index},       {"group", r.group},           {"kind", r.kind},
           {"seed", r.seed},         {"instance", r.instance_hash}, {"parameters", r.parameters},
           {"measured", r.measured}, {"ok", r.ok}};
    if (!r.ok) x["error"] = r.error;
    recs.push_back(x);
  }
  j["records"] = recs;
  j["aggregates"] = aggregates;
  return j.dump(2);
}

std::string ExperimentReport::to_csv() const {
  std::vector<std::string> pkeys, mkeys;
  for (const auto& r : records) {
    for (const auto& [k, v] : r.parameters) pkeys.push_back(k);
    for (const auto& [k, v] : r.measured) mkeys.push_back(k);
  }
  for (auto* keys : {&pkeys, &mkeys}) {
    std::sort(keys->begin(), keys->end());
    keys->erase(std::unique(keys->begin(), keys->end()), keys->end());
  }
  auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  };
  std::ostringstream out;
  out << "index,group,kind,seed,instance,ok,error";
  for (const auto& k : pkeys) out << ",param." << k;
  for (const auto& k : mkeys) out << "," << k;
  out << "\n";
  for (const auto& r : records) {
    out << r.index << "," << r.group << "," << r.kind << "," << r.seed << "," << r.instance_hash << ","
        << (r.ok ? 1 : 0) << "," << quote(r.error);
    for (const auto& k : pkeys) {
      auto it = r.parameters.find(k);
      out << "," << (it == r.parameters.end() ? "" : quote(it->second));
    }
    for (const auto& k : mkeys) {
      auto it = r.measured.find(k);
      out << "," << (it == r.measured.end() ? "" : quote(it->second));
    }
    out << "\n";
  }
  return out.str();
}

bool ExperimentReport::audit(std::string* why) const {
  const auto recomputed = aggregate_records(records);
  if (recomputed == aggregates) return true;
  if (why) {
    for (const auto& [k, v] : aggregates) {
      auto it = recomputed.find(k);
      if (it == recomputed.end() || it->second != v) {
        *why = "aggregate " + k + " does not match its records";
        return false;
      }
    }
    *why = "records imply aggregates missing from the report";
  }
  return false;
}

}  // namespace quanthelly
