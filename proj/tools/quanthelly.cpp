#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "quanthelly/error.hpp"
#include "quanthelly/experiment.hpp"
#include "quanthelly/generators.hpp"
#include "quanthelly/helly.hpp"
#include "quanthelly/json_io.hpp"
#include "quanthelly/piercing.hpp"
#include "quanthelly/svg.hpp"

using namespace quanthelly;

namespace {

constexpr int kHypothesisFailed = 2;
constexpr int kPoolInsufficient = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

Measure measure_arg(const std::string& text) {
  if (text == "volume") return Measure::volume();
  if (text == "perimeter") return Measure::perimeter();
  if (text == "nonempty") return Measure::nonempty();
  if (text == "lattice") return Measure::integer_lattice(2);
  return measure_from_json(slurp(text));
}

DirectionSet directions_arg(const std::string& text, int dim) {
  if (text == "axis") return DirectionSet::axis(dim);
  if (text.rfind("farey:", 0) == 0) return DirectionSet::farey(std::stoi(text.substr(6)));
  throw InvalidArgument("directions must be axis or farey:N");
}

Direction direction_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InvalidArgument("direction must be a,b");
  return Direction{parse_scalar(text.substr(0, comma)), parse_scalar(text.substr(comma + 1))};
}

std::vector<Point> points_of(const Family& f) {
  std::vector<Point> pts;
  for (const auto& m : f.members) {
    const auto v = m.vertex_list();
    if (v.size() != 1) throw InvalidArgument("expected a family of single points");
    pts.push_back(v.front());
  }
  return pts;
}

std::string csv_line(std::initializer_list<std::pair<const char*, std::string>> cols) {
  std::string head, row;
  for (const auto& [k, v] : cols) {
    head += (head.empty() ? "" : ",") + std::string(k);
    row += (row.empty() ? "" : ",") + v;
  }
  return head + "\n" + row + "\n";
}

std::string parts_text(const std::vector<IndexSet>& parts) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += '|';
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i]);
  }
  return s;
}

std::string value_text(const MeasureValue& v) {
  if (v.is_infinite()) return "inf";
  if (v.is_exact()) return format_scalar(v.lo());
  return format_scalar(v.lo()) + ".." + format_scalar(v.hi());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for quantitative Helly-type computations in the plane"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_help_flag("--help", "Print this help message and exit");
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string out_path;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--out", out_path, "Write output here instead of stdout");

  std::string family_path = "-", measure = "volume", lambda = "1", eps = "0", svg_path;
  auto family_opt = [&](CLI::App* sub) { sub->add_option("--family", family_path, "Family JSON file (- for stdin)"); };
  auto measure_opt = [&](CLI::App* sub) {
    sub->add_option("--measure", measure, "volume, perimeter, nonempty, lattice or a measure JSON file");
  };

  GeneratorSpec spec;
  std::string kind = "random-polygons", side = "1/10";
  auto* gen = app.add_subcommand("gen", "Generate a family");
  gen->add_option("--kind", kind, "Generator name");
  gen->add_option("--count", spec.count);
  gen->add_option("--vertices", spec.vertices);
  gen->add_option("--clusters", spec.clusters);
  gen->add_option("--planted", spec.planted);
  gen->add_option("--extent", spec.extent);
  gen->add_option("--denominator", spec.denominator);
  gen->add_option("--side", side);
  gen->add_option("--svg", svg_path, "Also draw the family");

  std::size_t p = 3, q = 2, s_max = 2;
  auto* pierce = app.add_subcommand("pierce", "Certified (p,q) piercing");
  family_opt(pierce);
  measure_opt(pierce);
  pierce->add_option("--p", p);
  pierce->add_option("--q", q);
  pierce->add_option("--lambda", lambda);
  pierce->add_option("--eps", eps);
  pierce->add_option("--smax", s_max, "Largest subfamily intersected for the candidate pool");
  pierce->add_option("--svg", svg_path, "Draw the family and the witnesses");

  std::size_t h = 3;
  auto* check = app.add_subcommand("helly-check", "Check a quantitative Helly statement on a family");
  family_opt(check);
  measure_opt(check);
  check->add_option("--h", h, "Subfamily size checked");
  check->add_option("--lambda", lambda);
  check->add_option("--eps", eps);

  std::string body_path = "-", directions = "axis";
  auto* fb = app.add_subcommand("floating-body", "Floating body of a convex body");
  fb->add_option("--body", body_path, "Body JSON file (- for stdin)");
  measure_opt(fb);
  fb->add_option("--eps", eps);
  fb->add_option("--directions", directions, "axis or farey:N");
  fb->add_option("--svg", svg_path);

  std::size_t parts = 2;
  std::string eps2 = "1/4";
  bool classic = false;
  auto* tv = app.add_subcommand("tverberg", "Quantitative Tverberg partition");
  family_opt(tv);
  measure_opt(tv);
  tv->add_option("--parts", parts);
  tv->add_option("--eps", eps);
  tv->add_option("--eps2", eps2);
  tv->add_flag("--classic", classic, "Family of points, plain intersection");

  std::string eps_prime = "1/2";
  auto* net = app.add_subcommand("net", "Weak epsilon-net");
  family_opt(net);
  measure_opt(net);
  net->add_option("--eps", eps);
  net->add_option("--eps-prime", eps_prime);

  auto* sel = app.add_subcommand("selection", "Selection lemma witness");
  family_opt(sel);
  measure_opt(sel);
  sel->add_option("--eps", eps);
  sel->add_option("--parts", parts);

  std::vector<std::string> class_paths;
  std::string v = "0,1";
  auto* colorful = app.add_subcommand("colorful-helly", "Colorful Helly class and witness");
  colorful->add_option("--class", class_paths, "Family file of one color class (repeat per class)")->required();
  measure_opt(colorful);
  colorful->add_option("--lambda", lambda);
  colorful->add_option("--eps", eps);
  colorful->add_option("--v", v, "Cut direction a,b");

  std::string config_path, out_dir;
  auto* exp = app.add_subcommand("experiment", "Run an experiment config");
  exp->add_option("--config", config_path)->required();
  exp->add_option("--out-dir", out_dir, "Write report.json, report.csv and figures here");

  CLI11_PARSE(app, argc, argv);

  std::string output;
  int code = 0;
  try {
    const bool csv = format == "csv";
    if (gen->parsed()) {
      spec.kind = parse_generator(kind);
      spec.side = parse_scalar(side);
      spec.seed = seed;
      const Family f = generate(spec);
      output = family_to_json(f);
      if (!svg_path.empty()) {
        std::vector<SvgItem> items;
        for (const auto& m : f.members) {
          if (m.bounded()) items.push_back({m, SvgStyle{"#4a7", "#243", "1", "0.3"}});
        }
        write_file(svg_path, render_svg(items));
      }
    } else if (pierce->parsed()) {
      const Family f = family_from_json(slurp(family_path));
      const Measure msr = measure_arg(measure);
      PierceOptions opts;
      opts.s_max = s_max;
      try {
        const PiercingCertificate cert = pq_pierce(f, p, q, msr, parse_scalar(lambda), parse_scalar(eps), opts);
        if (!svg_path.empty()) {
          std::vector<SvgItem> items;
          for (const auto& m : f.members) {
            if (m.bounded()) items.push_back({m, SvgStyle{"none", "#246", "1", "1"}});
          }
          for (const auto& w : cert.witnesses) items.push_back({w, SvgStyle{"#c33", "#c33", "1", "0.6"}});
          write_file(svg_path, render_svg(items));
        }
        output = csv ? csv_line({{"witnesses", std::to_string(cert.witnesses.size())},
                                 {"tau", format_scalar(cert.transcript.tau)},
                                 {"nu", format_scalar(cert.transcript.nu)},
                                 {"pool", std::to_string(cert.transcript.pool_size)}})
                     : certificate_to_json(f, cert);
      } catch (const HypothesisViolated& e) {
        std::cerr << "hypothesis violated: " << e.what() << "\n";
        return kHypothesisFailed;
      } catch (const Infeasible& e) {
        std::cerr << "candidate pool insufficient: " << e.what() << "\n";
        return kPoolInsufficient;
      }
    } else if (check->parsed()) {
      const Family f = family_from_json(slurp(family_path));
      const HellyReport r = helly_check(f, h, measure_arg(measure), parse_scalar(lambda), parse_scalar(eps), 1000000, seed);
      output = csv ? csv_line({{"hypothesis", r.hypothesis ? "1" : "0"},
                               {"conclusion", r.conclusion ? "1" : "0"},
                               {"holds", r.holds() ? "1" : "0"},
                               {"value", value_text(r.value)}})
                   : helly_report_to_json(r);
      if (!r.holds()) code = 1;
    } else if (fb->parsed()) {
      const ConvexBody k = body_from_json(slurp(body_path));
      const FloatingBodyResult r = floating_body(k, measure_arg(measure), parse_scalar(eps), directions_arg(directions, k.dim()));
      output = csv ? csv_line({{"delta", value_text(r.delta)}, {"cuts", std::to_string(r.cuts.size())}})
                   : floating_body_to_json(r);
      if (!svg_path.empty()) {
        write_file(svg_path, render_svg({{k, SvgStyle{"#dde6f0", "#234", "1", "1"}},
                                         {r.body, SvgStyle{"none", "#a33", "1", "1"}}}));
      }
    } else if (tv->parsed()) {
      const Family f = family_from_json(slurp(family_path));
      const TverbergResult r = classic ? classic_tverberg(points_of(f), parts)
                                       : tverberg_partition(f, parts, measure_arg(measure), parse_scalar(eps),
                                                            parse_scalar(eps2));
      output = csv ? csv_line({{"partition", parts_text(r.partition)}, {"achieved", value_text(r.achieved)}})
                   : tverberg_to_json(r);
    } else if (net->parsed()) {
      const Family f = family_from_json(slurp(family_path));
      NetOptions opts;
      opts.search.seed = seed;
      const NetResult r = weak_net(f, measure_arg(measure), parse_scalar(eps), parse_scalar(eps_prime), opts);
      output = csv ? csv_line({{"size", std::to_string(r.net.size())},
                               {"iterations", std::to_string(r.iterations)},
                               {"certified", r.certified ? "1" : "0"}})
                   : net_to_json(r);
    } else if (sel->parsed()) {
      const Family f = family_from_json(slurp(family_path));
      const SelectionResult r = selection(f, measure_arg(measure), parse_scalar(eps), parts);
      output = csv ? csv_line({{"tuples", std::to_string(r.tuples.size())}, {"rho", format_scalar(r.rho_achieved)}})
                   : selection_to_json(r);
    } else if (colorful->parsed()) {
      std::vector<Family> classes;
      for (const auto& path : class_paths) classes.push_back(family_from_json(slurp(path)));
      const ColorfulHellyResult r =
          colorful_helly(classes, measure_arg(measure), parse_scalar(lambda), parse_scalar(eps), direction_arg(v));
      output = csv ? csv_line({{"class", std::to_string(r.class_index)}, {"achieved", value_text(r.achieved)}})
                   : colorful_helly_to_json(r);
    } else if (exp->parsed()) {
      const ExperimentReport r = run_experiment(slurp(config_path));
      std::string why;
      if (!r.audit(&why)) throw VerificationFailed(why);
      output = csv ? r.to_csv() : r.to_json();
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_file(out_dir + "/report.json", r.to_json());
        write_file(out_dir + "/report.csv", r.to_csv());
        for (std::size_t i = 0; i < r.svgs.size(); ++i) {
          write_file(out_dir + "/figure" + std::to_string(i) + ".svg", r.svgs[i]);
        }
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    std::cout << output;
    if (!output.empty() && output.back() != '\n') std::cout << "\n";
  } else {
    write_file(out_path, output);
  }
  return code;
}
