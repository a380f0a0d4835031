#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "diffgraph/edge_list.hpp"
#include "diffgraph/estimate.hpp"
#include "diffgraph/figures.hpp"
#include "diffgraph/identify.hpp"
#include "diffgraph/oracle.hpp"
#include "diffgraph/serialize.hpp"
#include "diffgraph/simulate.hpp"

namespace diffgraph::cli {

namespace {

struct Options {
  std::string graph;
  std::string exposure;
  std::string outcome;
  bool shared_order = false;
  std::string data1;
  std::string data2;
  bool discrete = false;
  bool continuous = false;
  std::optional<double> laplace;
  std::uint64_t seed = 0;
  std::size_t n = 1000;
  std::string out_dir = ".";
  std::string noise = "gaussian";
  bool json = false;
};

std::string braced(const std::vector<std::string>& names) {
  std::string s = "{";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
  return s + "}";
}

std::string criterion_name(Quantity q) { return q == Quantity::Total ? "common back-door" : "common single-door"; }

std::string describe(const IdentificationVerdict& v, const DirectedGraph& g) {
  std::string cond = v.condition == Condition::None ? "" : " (condition " + std::string(to_string(v.condition)) + ")";
  switch (v.kind) {
    case VerdictKind::NullEffect: return "null effect" + cond;
    case VerdictKind::AdjustmentIdentifiable:
      return "identifiable by " + criterion_name(v.quantity) + cond + "; adjust for " +
             braced(g.names_of(*v.adjustment_set));
    case VerdictKind::NotIdentifiable: return "not identifiable by " + criterion_name(v.quantity);
  }
  return {};
}

void print_verdict(std::ostream& out, const IdentificationVerdict& v, const DirectedGraph& g, std::string_view x,
                   std::string_view y) {
  out << to_string(v.quantity) << " effect of " << x << " on " << y << ": " << describe(v, g) << '\n';
  if (v.identifiable()) out << "formula: " << v.formula << '\n';
}

int exit_for(const IdentificationVerdict& v) { return v.identifiable() ? kExitOk : kExitNotIdentifiable; }

DifferenceGraph load_graph(const Options& o) { return DifferenceGraph(read_edge_list(o.graph)); }

EffectQuery make_query(const Options& o) {
  return EffectQuery(load_graph(o), o.exposure, o.outcome, o.shared_order);
}

void print_matrix(std::ostream& out, std::string_view x, std::string_view y, const std::vector<int>& xs,
                  const std::vector<int>& ys, const Eigen::MatrixXd& m) {
  std::vector<std::vector<std::string>> cells;
  cells.push_back({"do(" + std::string(x) + ")"});
  for (int yv : ys) cells.front().push_back(std::string(y) + "=" + std::to_string(yv));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<std::string> row{std::to_string(xs[i])};
    for (std::size_t j = 0; j < ys.size(); ++j) {
      std::ostringstream s;
      s << std::fixed << std::setprecision(6) << m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      row.push_back(s.str());
    }
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  }
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? "  " : "") << std::setw(static_cast<int>(width[j])) << (j ? std::right : std::left) << row[j];
    }
    out << std::left << '\n';
  }
}

int cmd_check(const Options& o, Quantity q, std::ostream& out) {
  const EffectQuery query = make_query(o);
  const IdentificationVerdict v = identify(query, q);
  if (o.json) {
    out << to_json(v, query.graph()).dump(2) << '\n';
  } else {
    print_verdict(out, v, query.graph(), o.exposure, o.outcome);
  }
  return exit_for(v);
}

int cmd_oracle(const Options& o, Quantity q, std::ostream& out) {
  const DifferenceGraph d = load_graph(o);
  const OracleVerdict v = oracle(d, d.index_of(o.exposure), d.index_of(o.outcome), o.shared_order, q);
  if (o.json) {
    out << to_json(v, d).dump(2) << '\n';
  } else {
    print_verdict(out, v.verdict, d, o.exposure, o.outcome);
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      out << "witness DAG " << i + 1 << ":\n";
      std::istringstream lines(to_edge_list(v.witness[i]));
      std::string line;
      while (std::getline(lines, line)) out << "  " << line << '\n';
    }
  }
  return exit_for(v.verdict);
}

DataKind data_kind(const Options& o, DataKind fallback) {
  if (o.discrete && o.continuous) throw CLI::ValidationError("--discrete and --continuous are exclusive");
  if (o.discrete) return DataKind::Discrete;
  if (o.continuous) return DataKind::Continuous;
  return fallback;
}

AdjustmentOptions adjustment_options(const Options& o) {
  AdjustmentOptions a;
  a.laplace = o.laplace;
  return a;
}

int report_not_identifiable(const IdentificationVerdict& v, const DirectedGraph& g, const Options& o,
                            std::ostream& out) {
  if (o.json) {
    Json j;
    j["verdict"] = to_json(v, g);
    out << j.dump(2) << '\n';
  } else {
    print_verdict(out, v, g, o.exposure, o.outcome);
  }
  return kExitNotIdentifiable;
}

int cmd_estimate_total(const Options& o, std::ostream& out) {
  if (data_kind(o, DataKind::Discrete) != DataKind::Discrete) {
    throw CLI::ValidationError("estimate-total works on discrete data");
  }
  const EffectQuery query = make_query(o);
  const IdentificationVerdict v = identify(query, Quantity::Total);
  if (!v.identifiable()) return report_not_identifiable(v, query.graph(), o, out);
  const Dataset data = read_csv(o.data1, DataKind::Discrete);
  const auto w = v.adjustment_set ? query.graph().names_of(*v.adjustment_set) : std::vector<std::string>{};
  const InterventionalTable t = v.kind == VerdictKind::NullEffect
                                    ? null_total(data, o.exposure, o.outcome, adjustment_options(o))
                                    : adjustment_total(data, o.exposure, o.outcome, w, adjustment_options(o));
  if (o.json) {
    Json j;
    j["verdict"] = to_json(v, query.graph());
    j["estimate"] = to_json(t);
    out << j.dump(2) << '\n';
  } else {
    print_verdict(out, v, query.graph(), o.exposure, o.outcome);
    out << "P(" << o.outcome << "|do(" << o.exposure << "))\n";
    print_matrix(out, o.exposure, o.outcome, t.exposure_values, t.outcome_values, t.probabilities);
  }
  return kExitOk;
}

int cmd_estimate_direct(const Options& o, std::ostream& out) {
  if (data_kind(o, DataKind::Continuous) != DataKind::Continuous) {
    throw CLI::ValidationError("estimate-direct works on continuous data");
  }
  const EffectQuery query = make_query(o);
  const IdentificationVerdict v = identify(query, Quantity::Direct);
  if (!v.identifiable()) return report_not_identifiable(v, query.graph(), o, out);
  const Dataset data = read_csv(o.data1, DataKind::Continuous);
  double alpha = 0.0;
  if (v.kind == VerdictKind::AdjustmentIdentifiable) {
    alpha = partial_regression_coefficient(data, o.exposure, o.outcome, query.graph().names_of(*v.adjustment_set));
  }
  if (o.json) {
    Json j;
    j["verdict"] = to_json(v, query.graph());
    j["estimate"] = alpha;
    out << j.dump(2) << '\n';
  } else {
    print_verdict(out, v, query.graph(), o.exposure, o.outcome);
    out << "direct effect estimate: " << std::setprecision(10) << alpha << '\n';
  }
  return kExitOk;
}

int cmd_change(const Options& o, std::ostream& out) {
  if (!o.discrete && !o.continuous) {
    throw CLI::ValidationError("change needs --discrete (total change) or --continuous (direct change)");
  }
  const DataKind kind = data_kind(o, DataKind::Discrete);
  const Quantity q = kind == DataKind::Discrete ? Quantity::Total : Quantity::Direct;
  const EffectQuery query = make_query(o);
  const IdentificationVerdict v = identify(query, q);
  if (!v.identifiable()) return report_not_identifiable(v, query.graph(), o, out);
  const Dataset d1 = read_csv(o.data1, kind);
  const Dataset d2 = read_csv(o.data2, kind);
  const CausalChangeReport r = causal_change(v, query.graph(), d1, d2, o.exposure, o.outcome, adjustment_options(o));
  if (o.json) {
    Json j;
    j["verdict"] = to_json(v, query.graph());
    j["report"] = to_json(r);
    out << j.dump(2) << '\n';
    return kExitOk;
  }
  print_verdict(out, v, query.graph(), o.exposure, o.outcome);
  if (q == Quantity::Direct) {
    out << std::setprecision(10) << "population 1: " << r.population1(0, 0) << '\n'
        << "population 2: " << r.population2(0, 0) << '\n'
        << "change:       " << r.change(0, 0) << '\n';
  } else {
    const std::pair<const char*, const Eigen::MatrixXd*> blocks[] = {
        {"population 1", &r.population1}, {"population 2", &r.population2}, {"change", &r.change}};
    for (const auto& [title, m] : blocks) {
      out << title << ":\n";
      print_matrix(out, o.exposure, o.outcome, r.exposure_values, r.outcome_values, *m);
    }
  }
  return kExitOk;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  const DifferenceGraph d = load_graph(o);
  PairSamplingOptions ps;
  if (o.noise == "gaussian") {
    ps.noise_family = NoiseFamily::Gaussian;
  } else if (o.noise == "uniform") {
    ps.noise_family = NoiseFamily::Uniform;
  } else {
    throw CLI::ValidationError("--noise must be gaussian or uniform");
  }
  const ScmPair pair = sample_compatible_pair(d, o.shared_order, o.seed, ps);
  // Independent, seed-derived streams for the two populations.
  const Dataset data1 = sample_dataset(pair.scm1, o.n, o.seed * 2 + 1);
  const Dataset data2 = sample_dataset(pair.scm2, o.n, o.seed * 2 + 2);

  const std::filesystem::path dir(o.out_dir);
  std::filesystem::create_directories(dir);
  {
    std::ofstream f(dir / "population1.csv");
    write_csv(f, data1);
  }
  {
    std::ofstream f(dir / "population2.csv");
    write_csv(f, data2);
  }
  const Json manifest = to_json(SimulationManifest{o.seed, o.n, o.shared_order, &pair});
  {
    std::ofstream f(dir / "manifest.json");
    f << manifest.dump(2) << '\n';
  }
  if (o.json) {
    out << manifest.dump(2) << '\n';
  } else {
    out << "wrote " << (dir / "population1.csv").string() << ", " << (dir / "population2.csv").string() << " and "
        << (dir / "manifest.json").string() << " (" << o.n << " rows each, seed " << o.seed << ")\n";
  }
  return kExitOk;
}

std::string short_verdict(const IdentificationVerdict& v, const DirectedGraph& g) {
  std::string c = std::string(to_string(v.condition));
  switch (v.kind) {
    case VerdictKind::NullEffect: return "null (" + c + ")";
    case VerdictKind::AdjustmentIdentifiable: return "adjust " + braced(g.names_of(*v.adjustment_set)) + " (" + c + ")";
    case VerdictKind::NotIdentifiable: return "not identifiable";
  }
  return {};
}

int cmd_figures(const Options& o, std::ostream& out) {
  Json all = Json::array();
  std::vector<std::array<std::string, 4>> rows{{"graph", "ordering", "total effect", "direct effect"}};
  for (const ReferenceGraph& ref : reference_graphs()) {
    const DifferenceGraph d = load(ref);
    const EffectQuery q(d, "X", "Y", ref.shared_order);
    const IdentificationVerdict total = identify(q, Quantity::Total);
    const IdentificationVerdict direct = identify(q, Quantity::Direct);
    rows.push_back({std::string(ref.label), ref.shared_order ? "shared" : "general", short_verdict(total, d),
                    short_verdict(direct, d)});
    Json j;
    j["graph"] = ref.label;
    j["shared_order"] = ref.shared_order;
    j["total"] = to_json(total, d);
    j["direct"] = to_json(direct, d);
    all.push_back(std::move(j));
  }
  if (o.json) {
    out << all.dump(2) << '\n';
    return kExitOk;
  }
  std::array<std::size_t, 4> width{};
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < 4; ++j) width[j] = std::max(width[j], r[j].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t j = 0; j < 4; ++j) {
      line += r[j];
      if (j + 1 < 4) line += std::string(width[j] - r[j].size() + 2, ' ');
    }
    out << line << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Identify and estimate causal effects and causal changes from difference graphs", "diffgraph"};
  app.require_subcommand(1);
  Options o;

  auto query_flags = [&o](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "difference graph in edge-list format")->required()->check(CLI::ExistingFile);
    sub->add_option("--exposure", o.exposure, "exposure variable X")->required();
    sub->add_option("--outcome", o.outcome, "outcome variable Y")->required();
    sub->add_flag("--shared-order", o.shared_order, "both causal DAGs share one topological ordering");
    sub->add_flag("--json", o.json, "emit JSON");
  };
  auto data_flags = [&o](CLI::App* sub) {
    sub->add_flag("--discrete", o.discrete, "data cells are non-negative integer codes");
    sub->add_flag("--continuous", o.continuous, "data cells are real-valued");
    sub->add_option("--laplace", o.laplace, "add-alpha smoothing for the adjustment formula")
        ->check(CLI::PositiveNumber);
  };

  int status = kExitOk;
  auto add = [&](const char* name, const char* help, auto body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&status, &out, &o, body] { status = body(o, out); });
    return sub;
  };

  query_flags(add("check-total", "decide total-effect identifiability",
                  [](const Options& opt, std::ostream& os) { return cmd_check(opt, Quantity::Total, os); }));
  query_flags(add("check-direct", "decide direct-effect identifiability",
                  [](const Options& opt, std::ostream& os) { return cmd_check(opt, Quantity::Direct, os); }));
  query_flags(add("oracle-total", "brute-force total-effect identifiability (at most 5 vertices)",
                  [](const Options& opt, std::ostream& os) { return cmd_oracle(opt, Quantity::Total, os); }));
  query_flags(add("oracle-direct", "brute-force direct-effect identifiability (at most 5 vertices)",
                  [](const Options& opt, std::ostream& os) { return cmd_oracle(opt, Quantity::Direct, os); }));

  CLI::App* est_total = add("estimate-total", "estimate P(y|do(x)) from one discrete dataset", cmd_estimate_total);
  query_flags(est_total);
  data_flags(est_total);
  est_total->add_option("--data1", o.data1, "CSV dataset")->required()->check(CLI::ExistingFile);

  CLI::App* est_direct = add("estimate-direct", "estimate the path coefficient from continuous data",
                             cmd_estimate_direct);
  query_flags(est_direct);
  data_flags(est_direct);
  est_direct->add_option("--data1", o.data1, "CSV dataset")->required()->check(CLI::ExistingFile);

  CLI::App* change = add("change", "estimate the causal change between two populations", cmd_change);
  query_flags(change);
  data_flags(change);
  change->add_option("--data1", o.data1, "CSV dataset of population 1")->required()->check(CLI::ExistingFile);
  change->add_option("--data2", o.data2, "CSV dataset of population 2")->required()->check(CLI::ExistingFile);

  CLI::App* sim = add("simulate", "sample a compatible linear SCM pair and write datasets", cmd_simulate);
  sim->add_option("--graph", o.graph, "difference graph in edge-list format")->required()->check(CLI::ExistingFile);
  sim->add_flag("--shared-order", o.shared_order, "both causal DAGs share one topological ordering");
  sim->add_option("--seed", o.seed, "random seed");
  sim->add_option("--n", o.n, "rows per population")->check(CLI::PositiveNumber);
  sim->add_option("--out-dir", o.out_dir, "output directory");
  sim->add_option("--noise", o.noise, "noise family: gaussian or uniform");
  sim->add_flag("--json", o.json, "print the manifest as JSON");

  CLI::App* figs = add("figures", "verdict table for the six worked difference graphs", cmd_figures);
  figs->add_flag("--json", o.json, "emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, err_out;
    const int code = app.exit(e, help_out, err_out);
    out << help_out.str();
    err << err_out.str();
    return code == 0 ? kExitOk : kExitError;
  } catch (const ParseError& e) {
    err << "error: parse error at " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return status;
}

}  // namespace diffgraph::cli
