#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "dpz/degeneration.hpp"
#include "dpz/dp_geometry.hpp"
#include "dpz/errors.hpp"
#include "dpz/period.hpp"
#include "dpz/root_system.hpp"
#include "dpz/weights.hpp"
#include "dpz/weyl.hpp"
#include "report.hpp"

namespace dpz::cli {

namespace {

// A parse failure on a specific command-line value, kept with its text so the
// message can point at the offending character.
struct InputError {
  std::string message;
  std::string text;
  std::size_t position;
};

LatticeVector vector_arg(const std::string& text, int r) {
  try {
    return parse_vector(text, r);
  } catch (const ParseError& e) {
    throw InputError{e.what(), text, e.position()};
  }
}

std::vector<LatticeVector> vector_list_arg(const std::string& text, int r) {
  std::vector<LatticeVector> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const std::string piece = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      out.push_back(parse_vector(piece, r));
    } catch (const ParseError& e) {
      throw InputError{e.what(), text, start + e.position()};
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::size_t orbit_cap(std::size_t fallback) {
  const char* env = std::getenv(kOrbitCapEnv);
  if (env == nullptr || *env == '\0') return fallback;
  const std::string text(env);
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    throw InputError{"invalid orbit cap", text, 0};
  }
  if (pos != text.size() || value == 0)
    throw InputError{"invalid orbit cap", text, pos};
  return static_cast<std::size_t>(value);
}

Json vector_items(const std::vector<LatticeVector>& vs) {
  Json items = Json::array();
  for (const auto& v : vs) items.push_back(to_string(v));
  return items;
}

Json class_items(const std::vector<CurveClass>& cs) {
  Json items = Json::array();
  for (const auto& c : cs) items.push_back(to_string(c.vector));
  return items;
}

Json weight_system_items(const WeightSystem& ws) {
  Json items = Json::array();
  for (const auto& w : ws.weights)
    items.push_back({{"weight", to_string(w.weight)},
                     {"multiplicity", w.multiplicity}});
  return items;
}

// Sum of the "multiplicity" fields of weight-system items.
std::int64_t total_multiplicity(const Json& items) {
  std::int64_t total = 0;
  for (const auto& item : items) total += item.at("multiplicity").get<int>();
  return total;
}

struct Options {
  int r = 0;
  std::string format = "table";
  bool timing = false;
};

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--r", opts.r, "Number of blown-up points (3..8)")
      ->required();
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  cmd->add_flag("--timing", opts.timing, "Include elapsed time in the report");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact lattice and root-system computations for del Pezzo "
               "surfaces"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Options opts;
  bool positive = false;
  std::int64_t self_int = 0, class_degree = 0;
  bool any_class = false;
  bool double_six = false;
  std::string weight_text;
  int fundamental = 0;
  bool minuscule = false, dual = false, adjoint = false;
  std::string curves_text;
  std::vector<std::string> assignments;
  bool canonical = false;

  auto* roots_cmd = app.add_subcommand("roots", "Enumerate roots");
  add_common(roots_cmd, opts);
  roots_cmd->add_flag("--positive", positive, "Positive roots only");

  auto* lines_cmd = app.add_subcommand("lines", "Enumerate line classes");
  add_common(lines_cmd, opts);

  auto* classes_cmd =
      app.add_subcommand("classes", "Enumerate classes by square and degree");
  add_common(classes_cmd, opts);
  classes_cmd->add_option("--self-int", self_int)->required();
  classes_cmd->add_option("--degree", class_degree)->required();
  classes_cmd->add_flag("--any", any_class,
                        "Allow classes that are not smooth rational");

  auto* triples_cmd =
      app.add_subcommand("triples", "Coplanar line triples (r = 6)");
  add_common(triples_cmd, opts);

  auto* sixes_cmd = app.add_subcommand("sixes", "Sixes and double sixes");
  add_common(sixes_cmd, opts);
  sixes_cmd->add_flag("--double", double_six, "Pair sixes into double sixes");

  auto* orbit_cmd = app.add_subcommand("orbit", "Weyl orbit of a vector");
  add_common(orbit_cmd, opts);
  orbit_cmd->add_option("--weight", weight_text)->required();

  auto* weights_cmd =
      app.add_subcommand("weights", "Fundamental and adjoint weights");
  add_common(weights_cmd, opts);
  auto* fundamental_opt = weights_cmd->add_option("--fundamental", fundamental);
  auto* minuscule_flag = weights_cmd->add_flag("--minuscule", minuscule);
  auto* dual_flag = weights_cmd->add_flag("--dual", dual);
  auto* adjoint_flag = weights_cmd->add_flag("--adjoint", adjoint);
  minuscule_flag->excludes(dual_flag)->excludes(adjoint_flag);
  dual_flag->excludes(adjoint_flag);

  auto* degenerate_cmd = app.add_subcommand(
      "degenerate", "Sub-Weyl orbits of lines for a -2-curve configuration");
  add_common(degenerate_cmd, opts);
  degenerate_cmd->add_option("--curves", curves_text)->required();

  auto* period_cmd = app.add_subcommand("period", "Period homomorphisms");
  add_common(period_cmd, opts);
  period_cmd->add_option("--assign", assignments,
                         "SYMBOL=a/b,c/d; unassigned symbols map to 0");
  period_cmd->add_flag("--canonical", canonical,
                       "Weyl-canonical coroot values");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  const auto started = std::chrono::steady_clock::now();
  Report report;
  try {
    const MarkedLattice m = make_marked_lattice(opts.r);
    auto* cmd = app.get_subcommands().front();
    report.query["command"] = cmd->get_name();
    report.query["r"] = opts.r;

    if (cmd == roots_cmd) {
      report.query["positive"] = positive;
      const auto roots = positive ? positive_roots(m) : enumerate_roots(m);
      for (const auto& a : roots) report.items.push_back(to_string(a.vector()));
      report.counts[positive ? "positive_roots" : "roots"] =
          report.items.size();
    } else if (cmd == lines_cmd) {
      report.items = class_items(lines(m));
      report.counts["lines"] = report.items.size();
    } else if (cmd == classes_cmd) {
      report.query["self_int"] = self_int;
      report.query["degree"] = class_degree;
      report.items =
          class_items(enumerate_classes(m, self_int, class_degree, any_class));
      report.counts["classes"] = report.items.size();
    } else if (cmd == triples_cmd) {
      for (const auto& t : coplanar_triples(m))
        report.items.push_back(
            vector_items(std::vector<LatticeVector>(t.begin(), t.end())));
      report.counts["triples"] = report.items.size();
    } else if (cmd == sixes_cmd) {
      report.query["double"] = double_six;
      if (m.r() != 6) throw UnsupportedError("sixes are defined for r = 6 only");
      if (double_six) {
        for (const auto& ds : double_sixes(m)) {
          report.items.push_back(
              {{"first", vector_items(ds.first)},
               {"second", vector_items(ds.second)},
               {"root", to_string(root_from_six(ds.first, m).vector())}});
        }
        report.counts["double_sixes"] = report.items.size();
        report.counts["sixes"] = 2 * report.items.size();
      } else {
        for (const auto& s : disjoint_line_sets(m, 6))
          report.items.push_back(vector_items(s));
        report.counts["sixes"] = report.items.size();
      }
    } else if (cmd == orbit_cmd) {
      const auto v = vector_arg(weight_text, m.r());
      report.query["weight"] = to_string(v);
      report.items = vector_items(orbit(v, m, orbit_cap(kDefaultOrbitCap)));
      report.fields["norm"] = inner(v, v);
      report.fields["degree"] = degree(v, m);
      report.counts["orbit"] = report.items.size();
    } else if (cmd == weights_cmd) {
      if (adjoint) {
        report.query["mode"] = "adjoint";
        const auto ws = adjoint_weight_system(m);
        report.fields["highest"] = to_string(ws.highest);
        report.items = weight_system_items(ws);
        report.fields["dimension"] = total_multiplicity(report.items);
        report.counts["weights"] = report.items.size();
        report.counts["dimension"] = total_multiplicity(report.items);
      } else {
        if (fundamental_opt->count() == 0)
          throw DomainError("--fundamental is required unless --adjoint");
        report.query["fundamental"] = fundamental;
        const auto lift = fundamental_weight_lift(m, fundamental);
        report.fields["lift"] = to_string(lift.vector);
        report.fields["central_character"] = central_character(lift, m);
        if (dual) {
          report.query["mode"] = "dual";
          const auto partner = dual_partner(fundamental, m);
          report.items.push_back(
              {{"partner", partner.index},
               {"partner_lift",
                to_string(fundamental_weight_lift(m, partner.index).vector)},
               {"word", to_string(partner.word)},
               {"n", partner.n}});
          report.counts["partners"] = report.items.size();
        } else if (minuscule) {
          report.query["mode"] = "minuscule";
          const bool is_min = is_minuscule(lift, m);
          report.fields["minuscule"] = is_min;
          if (is_min) {
            const auto ws = minuscule_weight_system(lift, m);
            report.fields["highest"] = to_string(ws.highest);
            report.items = weight_system_items(ws);
            report.fields["dimension"] = total_multiplicity(report.items);
          }
          report.counts["weights"] = report.items.size();
          report.counts["dimension"] = total_multiplicity(report.items);
        } else {
          report.query["mode"] = "lift";
          Json values = Json::array();
          for (auto v : coroot_values(lift.vector, m)) values.push_back(v);
          report.items.push_back({{"weight", to_string(lift.vector)},
                                  {"coroot_values", values}});
          report.counts["weights"] = report.items.size();
        }
      }
    } else if (cmd == degenerate_cmd) {
      const auto curves = vector_list_arg(curves_text, m.r());
      Json curve_json = Json::array();
      for (const auto& c : curves) curve_json.push_back(to_string(c));
      report.query["curves"] = curve_json;
      const auto config = make_configuration(curves, m);
      std::vector<LatticeVector> line_vectors;
      for (const auto& c : lines(m)) line_vectors.push_back(c.vector);
      report.fields["gauge_type"] = to_string(config.type);
      report.fields["incident_lines"] = class_items(incident_lines(config, m));
      for (const auto& o : orbit_decomposition(config, line_vectors, m)) {
        report.items.push_back({{"representative", to_string(o.representative)},
                                {"size", o.size},
                                {"label", orbit_label(o, config)},
                                {"members", vector_items(o.members)}});
      }
      std::map<std::size_t, std::size_t> sizes;
      std::size_t total = 0;
      for (const auto& item : report.items) {
        const auto s = item.at("size").get<std::size_t>();
        ++sizes[s];
        total += s;
      }
      report.counts["orbits"] = report.items.size();
      report.counts["weights"] = total;
      for (const auto& [s, k] : sizes)
        report.counts["size_" + std::to_string(s)] = k;
    } else if (cmd == period_cmd) {
      report.query["canonical"] = canonical;
      std::vector<TorsionPoint> images(static_cast<std::size_t>(m.r()) + 1);
      for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos)
          throw InputError{"expected SYMBOL=a/b,c/d", a, a.size()};
        const std::string symbol = a.substr(0, eq);
        std::size_t slot = 0;
        if (symbol == "h") {
          slot = 0;
        } else {
          const auto basis = vector_arg(symbol, m.r());
          const auto c = basis.coefficients();
          std::size_t nonzero = 0;
          for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) {
              ++nonzero;
              slot = i;
            }
          if (nonzero != 1 || c[slot] != 1 || slot == 0)
            throw InputError{"expected a basis symbol h or eN", a, 0};
        }
        try {
          images[slot] = parse_point(a.substr(eq + 1));
        } catch (const ParseError& e) {
          throw InputError{e.what(), a, eq + 1 + e.position()};
        }
      }
      const auto p = make_period(images);
      Json hom = Json::object();
      for (std::size_t i = 0; i < images.size(); ++i)
        hom[i == 0 ? std::string("h") : "e" + std::to_string(i)] =
            to_string(p.images()[i]);
      report.fields["homomorphism"] = hom;
      std::vector<TorsionPoint> values;
      if (canonical) {
        const auto c = weyl_canonicalize(p, m, orbit_cap(kDefaultPeriodOrbitCap));
        report.fields["orbit_size"] = c.orbit_size;
        values = c.values;
      } else {
        values = restrict_to_coroots(p, m);
      }
      for (const auto& v : values) report.items.push_back(to_string(v));
      report.counts["coroot_values"] = report.items.size();
    }
  } catch (const InputError& e) {
    err << "error: " << e.message << "\n  " << e.text << "\n  "
        << std::string(e.position, ' ') << "^\n";
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  if (opts.timing) {
    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
  }
  out << (opts.format == "json" ? render_json(report) : render_table(report));
  return kExitOk;
}

}  // namespace dpz::cli
