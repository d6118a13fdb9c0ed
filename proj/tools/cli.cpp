#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "patgrid/containment.hpp"
#include "patgrid/enumeration.hpp"
#include "patgrid/extremal.hpp"
#include "patgrid/serialize.hpp"
#include "patgrid/transforms.hpp"
#include "repro.hpp"

namespace patgrid::cli {

namespace {

using json = nlohmann::json;

// Thrown for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FileParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class F>
auto parse_file(const std::string& path, F&& parse) {
  const auto text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw FileParseError(path + ": " + e.what());
  }
}

Structure load(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return deserialize(t); });
}
DMatrix load_matrix(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return deserialize_dmatrix(t); });
}
OrderedGraph load_graph(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return deserialize_graph(t); });
}
OrderedHypergraph load_hypergraph(const std::string& path) {
  return parse_file(path, [](const std::string& t) { return deserialize_hypergraph(t); });
}

Permutation checked_permutation(const std::string& text) {
  Permutation pi;
  try {
    pi = parse_permutation(text);
  } catch (const std::exception&) {
    throw UsageError("not a permutation: " + text);
  }
  if (pi.empty() || !is_permutation_of_k(pi)) throw UsageError("not a permutation: " + text);
  return pi;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad integer list: " + text);
    }
  }
  return out;
}

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s;
}

struct Globals {
  std::uint64_t budget_nodes = 0;  // 0: environment or default
  double time_limit = 0;
  int workers = 1;
  std::string format;
  std::string output;

  Budget budget() const {
    auto b = Budget::from_env();
    if (budget_nodes) b.max_nodes = budget_nodes;
    if (time_limit > 0) b.max_seconds = time_limit;
    return b;
  }
};

class Runner {
 public:
  Runner(std::ostream& err) : err_(err) {}

  int run(const std::vector<std::string>& args, std::ostream& final_out) {
    CLI::App app{"Ordered pattern containment, extremal functions and avoider counts", "patgrid"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--budget", g_.budget_nodes, "Node budget per solve")
        ->check(CLI::PositiveNumber);
    app.add_option("--time-limit", g_.time_limit, "Seconds per solve")->check(CLI::PositiveNumber);
    app.add_option("--workers", g_.workers, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--format", g_.format, "Output format")
        ->check(CLI::IsMember({"json", "text", "csv"}));
    app.add_option("--output", g_.output, "Write output to a file");

    add_containment(app);
    add_transforms(app);
    add_extremal(app);
    add_enumeration(app);
    add_repro(app);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      final_out << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp& e) {
      final_out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }

    int code = kOk;
    try {
      code = action_();
    } catch (const UsageError& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    } catch (const FileParseError& e) {
      err_ << "parse error: " << e.what() << '\n';
      return kUsage;
    } catch (const ResourceError& e) {
      err_ << "resource limit: " << e.what() << '\n';
      return kBudget;
    } catch (const std::invalid_argument& e) {
      err_ << "error: " << e.what() << '\n';
      return kUsage;
    }

    if (g_.output.empty()) {
      final_out << out_.str();
    } else {
      std::ofstream file(g_.output, std::ios::binary);
      if (!file) {
        err_ << "error: cannot write " << g_.output << '\n';
        return kUsage;
      }
      file << out_.str();
    }
    return code;
  }

 private:
  bool json_out(const char* fallback = "text") const {
    return (g_.format.empty() ? std::string(fallback) : g_.format) == "json";
  }

  void emit(const json& j) { out_ << j.dump() << '\n'; }

  // ------------------------------------------------------------ containment

  void add_containment(CLI::App& app) {
    auto* contains = app.add_subcommand("contains", "Find an ordered copy of a pattern");
    contains->add_option("--pattern", pattern_path_)->required();
    contains->add_option("--host", host_path_)->required();
    contains->add_flag("--expect-avoid", expect_avoid_, "Exit 1 when a copy is found");
    contains->callback([this] { action_ = [this] { return do_contains(); }; });

    auto* grid = app.add_subcommand("grid", "Find a k-grid inside a matrix");
    grid->add_option("--host", host_path_)->required();
    grid->add_option("--k", k_)->required()->check(CLI::PositiveNumber);
    grid->callback([this] { action_ = [this] { return do_grid(); }; });

    auto* perms = app.add_subcommand("permutations", "List d-dimensional permutations of [k]");
    perms->add_option("--k", k_)->required()->check(CLI::PositiveNumber);
    perms->add_option("--d", d_)->required()->check(CLI::PositiveNumber);
    perms->callback([this] {
      action_ = [this] {
        for (const auto& p : enumerate_d_permutations(k_, d_)) out_ << serialize(p) << '\n';
        return kOk;
      };
    });

    auto* validate_cmd = app.add_subcommand("validate", "Parse and validate a structure file");
    validate_cmd->add_option("--input", input_path_)->required();
    validate_cmd->add_flag("--permutation", permutation_flag_,
                           "Also require a d-dimensional permutation");
    validate_cmd->callback([this] { action_ = [this] { return do_validate(); }; });
  }

  int do_contains() {
    const auto pattern = load(pattern_path_);
    const auto host = load(host_path_);
    if (pattern.index() != host.index())
      throw UsageError("pattern and host are different kinds of structure");
    std::optional<std::string> found;
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          const auto& h = std::get<T>(host);
          if constexpr (std::is_same_v<T, DMatrix>) {
            if (auto e = contains_matrix(p, h)) found = format_embedding(*e);
          } else if constexpr (std::is_same_v<T, OrderedGraph>) {
            if (auto e = contains_graph(p, h)) found = format_embedding(*e);
          } else {
            if (auto e = contains_hypergraph(p, h)) found = format_embedding(*e);
          }
        },
        pattern);
    if (json_out()) {
      json j{{"found", found.has_value()}};
      if (found) j["embedding"] = *found;
      emit(j);
    } else {
      out_ << (found ? *found : std::string("AVOIDS")) << '\n';
    }
    return found && expect_avoid_ ? kCheckFailed : kOk;
  }

  int do_grid() {
    const auto host = load_matrix(host_path_);
    const auto parts = find_grid(host, k_);
    if (json_out()) {
      json j{{"found", parts.has_value()}};
      if (parts) {
        j["boundaries"] = json::array();
        for (const auto& p : *parts) j["boundaries"].push_back(p.boundaries());
      }
      emit(j);
    } else if (parts) {
      for (std::size_t t = 0; t < parts->size(); ++t)
        out_ << (t ? " " : "") << "axis" << t + 1 << '=' << join((*parts)[t].boundaries());
      out_ << '\n';
    } else {
      out_ << "NONE\n";
    }
    return kOk;
  }

  int do_validate() {
    const auto s = load(input_path_);
    const char* kind = std::visit(
        [](const auto& v) -> const char* {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, DMatrix>) return "dmatrix";
          if constexpr (std::is_same_v<T, OrderedGraph>) return "graph";
          return "hypergraph";
        },
        s);
    if (permutation_flag_) {
      const auto* m = std::get_if<DMatrix>(&s);
      if (!m) throw UsageError("--permutation applies to dmatrix input only");
      if (auto why = validate_permutation(*m)) {
        out_ << "not a permutation: " << *why << '\n';
        return kCheckFailed;
      }
      out_ << "ok permutation k=" << m->size() << " d=" << m->dims() << '\n';
      return kOk;
    }
    out_ << "ok " << kind << '\n';
    return kOk;
  }

  // ------------------------------------------------------------- transforms

  void add_transforms(CLI::App& app) {
    auto* rem = app.add_subcommand("remainder", "t-remainder of a matrix");
    rem->add_option("--input", input_path_)->required();
    rem->add_option("--axis", axis_)->required()->check(CLI::PositiveNumber);
    rem->callback([this] {
      action_ = [this] {
        out_ << serialize(t_remainder(load_matrix(input_path_), axis_)) << '\n';
        return kOk;
      };
    });

    auto* con = app.add_subcommand("contract", "Contract a matrix by an interval partition");
    con->add_option("--input", input_path_)->required();
    con->add_option("--parts", parts_text_, "Right endpoints, e.g. 2,4,6")->required();
    con->callback([this] {
      action_ = [this] {
        const auto m = load_matrix(input_path_);
        if (!m.is_cube()) throw UsageError("contract needs equal sides");
        const int n = m.dims() ? m.side(1) : 0;
        IntervalPartition parts(n, parse_int_list(parts_text_));
        if (auto why = validate(parts)) throw UsageError("bad partition: " + *why);
        out_ << serialize(contract(m, parts)) << '\n';
        return kOk;
      };
    });

    auto* blow = app.add_subcommand("blowup", "Blow-up of P(pi)");
    blow->add_option("--pi", pi_text_)->required();
    blow->add_option("--m", m_)->required()->check(CLI::PositiveNumber);
    blow->callback([this] {
      action_ = [this] {
        const auto b = blow_up(checked_permutation(pi_text_), m_);
        if (json_out()) {
          emit({{"graph", serialize(b.graph)},
                {"permutation", join(b.permutation)},
                {"bundle_size", b.bundle_size},
                {"bundle_of_edge", b.bundle_of_edge}});
        } else {
          out_ << serialize(b.graph) << '\n';
          out_ << "pi=" << join(b.permutation) << '\n';
        }
        return kOk;
      };
    });

    auto* lb = app.add_subcommand("lower-bound", "Avoider with n^(d-1) edges");
    lb->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
    lb->add_option("--d", d_)->required()->check(CLI::PositiveNumber);
    lb->callback([this] {
      action_ = [this] {
        out_ << serialize(lower_bound_construction(n_, d_)) << '\n';
        return kOk;
      };
    });

    auto* pg = app.add_subcommand("perm-graph", "Permutation graph P(pi)");
    pg->add_option("--pi", pi_text_)->required();
    pg->callback([this] {
      action_ = [this] {
        out_ << serialize(permutation_graph(checked_permutation(pi_text_))) << '\n';
        return kOk;
      };
    });

    auto* path = app.add_subcommand("path-graph", "Path graph of a set partition");
    path->add_option("--blocks", blocks_text_, "Blocks, e.g. 1,3;2,4")->required();
    path->callback([this] {
      action_ = [this] {
        SetPartition sp;
        std::stringstream ss(blocks_text_);
        std::string block;
        while (std::getline(ss, block, ';')) {
          sp.blocks.push_back(parse_int_list(block));
          for (int v : sp.blocks.back()) sp.n = std::max(sp.n, v);
        }
        out_ << serialize(partition_to_path_graph(sp)) << '\n';
        return kOk;
      };
    });
  }

  // --------------------------------------------------------------- extremal

  void add_extremal(CLI::App& app) {
    auto* ext = app.add_subcommand("extremal", "Exact extremal functions");
    ext->require_subcommand(1);

    auto* f = ext->add_subcommand("f", "f(n,P,d), or f(n,k,d) with --k and --d");
    f->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
    auto* fp = f->add_option("--pattern", pattern_path_);
    auto* fk = f->add_option("--k", k_)->check(CLI::PositiveNumber);
    f->add_option("--d", d_)->check(CLI::PositiveNumber)->needs(fk);
    fp->excludes(fk);
    f->callback([this] { action_ = [this] { return do_f(); }; });

    auto* g = ext->add_subcommand("g", "g(n,k,d)");
    g->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
    g->add_option("--k", k_)->required()->check(CLI::PositiveNumber);
    g->add_option("--d", d_)->required()->check(CLI::PositiveNumber);
    g->callback([this] {
      action_ = [this] {
        const auto r = solve_g(n_, k_, d_, g_.budget());
        return report(r, serialize(r.witness), {});
      };
    });

    auto* gex = ext->add_subcommand("gex", "Largest graph on [n] avoiding an ordered graph");
    gex->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
    auto* gpi = gex->add_option("--pi", pi_text_);
    gex->add_option("--pattern", pattern_path_)->excludes(gpi);
    gex->callback([this] {
      action_ = [this] {
        const auto pattern = pattern_graph();
        const auto r = solve_gex(n_, pattern, g_.budget());
        return report(r, serialize(r.witness), {});
      };
    });

    auto* ex = ext->add_subcommand("ex", "ex_e / ex_i for a hypergraph pattern");
    ex->add_option("--n", n_)->required()->check(CLI::NonNegativeNumber);
    ex->add_option("--mode", mode_)->check(CLI::IsMember({"edges", "weight"}));
    auto* epi = ex->add_option("--pi", pi_text_);
    ex->add_option("--pattern", pattern_path_)->excludes(epi);
    ex->add_option("--max-n", max_n_)->check(CLI::PositiveNumber);
    ex->callback([this] {
      action_ = [this] {
        const auto pattern = pattern_hypergraph();
        ExOptions options;
        options.budget = g_.budget();
        if (max_n_ > 0) options.max_n = max_n_;
        const auto r = solve_ex(n_, pattern, mode_ == "weight" ? ExMode::weight : ExMode::edges,
                                options);
        return report(r, serialize(r.witness), {});
      };
    });

    auto* verify = app.add_subcommand("verify", "Check an inequality with exact values");
    verify->require_subcommand(1);
    auto* l3 = verify->add_subcommand("lemma3", "Recurrence inequality for f at small parameters");
    l3->add_option("--m", m_)->required()->check(CLI::PositiveNumber);
    l3->add_option("--n0", n0_)->required()->check(CLI::PositiveNumber);
    l3->add_option("--k", k_)->required()->check(CLI::PositiveNumber);
    l3->add_option("--d", d_)->required()->check(CLI::Range(2, 16));
    l3->callback([this] { action_ = [this] { return do_lemma3(); }; });

    auto* e2 = verify->add_subcommand("eq2", "ex_i <= (4k-1)(k-1) ex_e for P(pi)");
    e2->add_option("--n", n_)->required()->check(CLI::PositiveNumber);
    e2->add_option("--pi", pi_text_)->required();
    e2->add_option("--max-n", max_n_)->check(CLI::PositiveNumber);
    e2->callback([this] { action_ = [this] { return do_eq2(); }; });

    auto* consts = app.add_subcommand("constants", "Constants m and c_d for the grid lower bound");
    consts->add_option("--k", k_)->required()->check(CLI::PositiveNumber);
    consts->add_option("--d", d_)->required()->check(CLI::Range(2, 1 << 20));
    consts->callback([this] {
      action_ = [this] {
        const auto c = lemma4_constant(k_, d_);
        if (json_out())
          emit({{"k", k_}, {"d", d_}, {"m", c.m.str()}, {"c", c.c.str()}});
        else
          out_ << "m=" << c.m << " c=" << c.c << '\n';
        return kOk;
      };
    });
  }

  OrderedGraph pattern_graph() {
    if (!pi_text_.empty()) return permutation_graph(checked_permutation(pi_text_));
    if (pattern_path_.empty()) throw UsageError("need --pi or --pattern");
    return load_graph(pattern_path_);
  }

  OrderedHypergraph pattern_hypergraph() {
    if (!pi_text_.empty()) return permutation_graph(checked_permutation(pi_text_)).as_hypergraph();
    if (pattern_path_.empty()) throw UsageError("need --pi or --pattern");
    const auto s = load(pattern_path_);
    if (const auto* g = std::get_if<OrderedGraph>(&s)) return g->as_hypergraph();
    if (const auto* h = std::get_if<OrderedHypergraph>(&s)) return *h;
    throw UsageError("pattern must be a graph or hypergraph");
  }

  template <class W>
  int report(const SearchReport<W>& r, const std::string& witness, json extra) {
    json j = std::move(extra);
    j["optimum"] = r.optimum;
    j["exact"] = r.exact;
    j["nodes"] = r.nodes_explored;
    j["witness"] = witness;
    if (json_out("json")) {
      emit(j);
    } else {
      out_ << "optimum=" << r.optimum << " exact=" << (r.exact ? "true" : "false")
           << " nodes=" << r.nodes_explored << '\n'
           << witness << '\n';
    }
    return r.exact ? kOk : kBudget;
  }

  int do_f() {
    if (!pattern_path_.empty()) {
      const auto r = solve_f(n_, load_matrix(pattern_path_), g_.budget());
      return report(r, serialize(r.witness), {});
    }
    if (k_ <= 0 || d_ <= 0) throw UsageError("need --pattern, or --k with --d");
    SolveOptions options;
    options.budget = g_.budget();
    options.workers = g_.workers;
    const auto w = solve_f_worst(n_, k_, d_, options);
    SearchReport<DMatrix> r;
    r.optimum = w.optimum;
    r.exact = w.exact;
    r.nodes_explored = w.nodes_explored;
    r.witness = w.witness;
    json extra{{"patterns_solved", w.patterns_solved}};
    extra["worst_pattern"] = w.worst_pattern ? serialize(*w.worst_pattern) : std::string();
    return report(r, serialize(r.witness), extra);
  }

  int do_lemma3() {
    SolveOptions options;
    options.budget = g_.budget();
    options.workers = g_.workers;
    const auto r = verify_lemma3(m_, n0_, k_, d_, options);
    if (json_out()) {
      emit({{"lhs", r.lhs.str()},
            {"rhs", r.rhs.str()},
            {"f_n0_d", r.f_n0_d.str()},
            {"f_n0_dm1", r.f_n0_dm1.str()},
            {"ok", r.holds},
            {"exact", r.exact}});
    } else {
      out_ << "lhs=" << r.lhs << " rhs=" << r.rhs << " ok=" << (r.holds ? "true" : "false");
      if (!r.exact) out_ << " exact=false";
      out_ << '\n';
    }
    if (!r.exact) return kBudget;
    return r.holds ? kOk : kCheckFailed;
  }

  int do_eq2() {
    ExOptions options;
    options.budget = g_.budget();
    if (max_n_ > 0) options.max_n = max_n_;
    const auto r = verify_eq2(n_, checked_permutation(pi_text_), options);
    if (json_out()) {
      emit({{"ex_e", r.ex_e},
            {"ex_i", r.ex_i},
            {"factor", r.factor.str()},
            {"ok", r.holds},
            {"exact", r.exact}});
    } else {
      out_ << "ex_e=" << r.ex_e << " ex_i=" << r.ex_i << " factor=" << r.factor
           << " ok=" << (r.holds ? "true" : "false");
      if (!r.exact) out_ << " exact=false";
      out_ << '\n';
    }
    if (!r.exact) return kBudget;
    return r.holds ? kOk : kCheckFailed;
  }

  // ------------------------------------------------------------ enumeration

  void add_enumeration(CLI::App& app) {
    auto* count = app.add_subcommand("count", "Count avoiders");
    count->add_option("--family", family_)->required();
    count->add_option("--pi", pi_text_);
    count->add_option("--pattern", pattern_path_);
    auto* on = count->add_option("--n", n_)->check(CLI::PositiveNumber);
    count->add_option("--weight", n_)->check(CLI::PositiveNumber)->excludes(on);
    count->add_option("--k", k_)->check(CLI::Range(2, 64));
    count->add_option("--mode", mode_)->check(CLI::IsMember({"noncrossing", "nonnesting"}));
    count->add_option("--method", method_)->check(CLI::IsMember({"graph", "direct"}));
    count->add_option("--max-n", max_n_)->check(CLI::PositiveNumber);
    count->callback([this] { action_ = [this] { return do_count(); }; });

    auto* growth = app.add_subcommand("growth", "Counts for n = 1..n-max with n-th roots");
    growth->add_option("--family", family_)->required();
    growth->add_option("--pi", pi_text_);
    growth->add_option("--k", k_)->check(CLI::Range(2, 64));
    growth->add_option("--mode", mode_)->check(CLI::IsMember({"noncrossing", "nonnesting"}));
    growth->add_option("--n-max", n_)->required()->check(CLI::PositiveNumber);
    growth->add_option("--max-n", max_n_)->check(CLI::PositiveNumber);
    growth->add_option("--csv", csv_path_, "Also write CSV to this file");
    growth->callback([this] { action_ = [this] { return do_growth(); }; });
  }

  CountOptions count_options() const {
    CountOptions o;
    o.workers = g_.workers;
    o.max_n = max_n_;
    return o;
  }

  Family resolve_family() {
    std::string name = family_;
    if (name == "partitions") name += "-" + (mode_.empty() ? std::string("noncrossing") : mode_);
    const auto f = parse_family(name);
    if (!f) throw UsageError("unknown family: " + family_);
    return *f;
  }

  int do_count() {
    if (n_ <= 0) throw UsageError("need --n (or --weight)");
    const auto family = resolve_family();
    const auto options = count_options();
    const auto method = method_ == "direct" ? CountMethod::direct : CountMethod::graph_encoding;
    BigInt count;
    switch (family) {
      case Family::permutations:
        count = count_avoiding_permutations(n_, checked_permutation(pi_text_), method, options);
        break;
      case Family::words:
        count = count_avoiding_words(n_, checked_permutation(pi_text_), method, options);
        break;
      case Family::partitions_noncrossing:
      case Family::partitions_nonnesting:
        if (k_ < 2) throw UsageError("partition families need --k");
        count = count_partitions(n_, k_,
                                 family == Family::partitions_noncrossing
                                     ? PartitionMode::noncrossing
                                     : PartitionMode::nonnesting,
                                 options);
        break;
      default: {
        CountQuery q;
        q.family = family == Family::hypergraphs_c1   ? HypergraphFamily::c1
                   : family == Family::hypergraphs_c2 ? HypergraphFamily::c2
                   : family == Family::hypergraphs_c5 ? HypergraphFamily::c5
                                                      : HypergraphFamily::c6;
        q.n = n_;
        q.pattern = pattern_hypergraph();
        count = count_hypergraphs(q, options);
      }
    }
    if (json_out())
      emit({{"family", family_name(family)}, {"n", n_}, {"count", count.str()}});
    else
      out_ << count << '\n';
    return kOk;
  }

  int do_growth() {
    const auto family = resolve_family();
    Permutation pi;
    int k = k_;
    if (family == Family::partitions_noncrossing || family == Family::partitions_nonnesting) {
      if (k < 2) throw UsageError("partition families need --k");
    } else {
      pi = checked_permutation(pi_text_);
      k = static_cast<int>(pi.size());
    }
    const auto report = growth_report(family, pi, k, n_, count_options());
    const auto csv = to_csv(report);
    if (!csv_path_.empty()) {
      std::ofstream file(csv_path_, std::ios::binary);
      if (!file) throw UsageError("cannot write " + csv_path_);
      file << csv;
    }
    const std::string format = g_.format.empty() ? "text" : g_.format;
    if (format == "csv") {
      out_ << csv;
    } else if (format == "json") {
      json rows = json::array();
      for (const auto& r : report.rows)
        rows.push_back({{"n", r.n}, {"count", r.count.str()}, {"root", r.root}});
      emit({{"family", family_name(family)}, {"rows", rows}, {"footnotes", report.footnotes}});
    } else {
      out_ << "n count root\n";
      std::istringstream lines(csv);
      std::string line;
      std::getline(lines, line);
      while (std::getline(lines, line)) {
        std::replace(line.begin(), line.end(), ',', ' ');
        out_ << line << '\n';
      }
      for (const auto& note : report.footnotes) out_ << "# " << note << '\n';
    }
    return kOk;
  }

  // ------------------------------------------------------------------ repro

  void add_repro(CLI::App& app) {
    auto* repro = app.add_subcommand("repro", "Regenerate a reference table");
    repro->add_option("suite", suite_)->required()->check(CLI::IsMember(repro::suite_names()));
    repro->callback([this] {
      action_ = [this] { return repro::run_suite(suite_, out_) == 0 ? kOk : kCheckFailed; };
    });
  }

  std::ostream& err_;
  std::ostringstream out_;
  Globals g_;
  std::function<int()> action_;

  std::string pattern_path_, host_path_, input_path_, pi_text_, parts_text_, blocks_text_;
  std::string mode_, method_, family_, csv_path_, suite_;
  int k_ = 0, d_ = 0, n_ = 0, m_ = 0, n0_ = 0, axis_ = 0, max_n_ = 0;
  bool permutation_flag_ = false;
  bool expect_avoid_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(err);
  return runner.run(args, out);
}

}  // namespace patgrid::cli
