#include "bei/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "bei/certify.hpp"
#include "bei/families.hpp"
#include "bei/groebner.hpp"
#include "bei/io.hpp"
#include "bei/primes.hpp"

namespace bei::cli {

namespace {

std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    const std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || end != item.data() + item.size() || item.empty())
      throw std::invalid_argument("bad integer \"" + item + "\" in " + what);
    out.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

int parse_single(const std::string& text, const std::string& what) {
  const auto v = parse_int_list(text, what);
  if (v.size() != 1) throw std::invalid_argument(what + " takes one integer, got \"" + text + "\"");
  return v.front();
}

std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph read_graph_file(const std::string& path, std::istream& in) {
  if (path == "-") return parse_graph(read_all(in));
  std::ifstream file(path);
  if (!file) throw std::invalid_argument("cannot open " + path);
  return parse_graph(read_all(file));
}

// A composition operand is a family spec or a graph file.
Graph operand(const std::string& text, std::istream& in) {
  if (text.find(':') != std::string::npos && !std::ifstream(text)) return family_from_spec(text);
  return read_graph_file(text, in);
}

struct InputOptions {
  std::string file;
  std::string family;

  void attach(CLI::App* cmd) {
    cmd->add_option("graph", file, "Graph file (JSON or text), '-' for stdin");
    cmd->add_option("--family", family, "Inline family, e.g. multipartite:3,2,1");
  }

  Graph load(std::istream& in) const {
    if (file.empty() == family.empty())
      throw std::invalid_argument("give exactly one input: a graph file or --family");
    return family.empty() ? read_graph_file(file, in) : family_from_spec(family);
  }
};

int max_vertices_for(std::uint64_t subsets) {
  if (subsets == 0) throw std::invalid_argument("--budget-subsets must be positive");
  int d = 0;
  while (d < 63 && (std::uint64_t{1} << (d + 1)) <= subsets) ++d;
  return d;
}

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k]);
  return out + "}";
}

std::string certificate_text(const Certificate& cert) {
  std::ostringstream out;
  out << "kind: " << to_string(cert.kind) << "\np: " << cert.p << "\nwitness:";
  for (const auto& a : cert.witness.atoms) out << ' ' << to_string(a);
  out << '\n';
  if (cert.cofactor_index)
    out << "cofactor: " << to_string(cert.witness.atoms[*cert.cofactor_index]) << '\n';
  out << "labeling:";
  for (Vertex v : cert.labeling_used.perm) out << ' ' << v;
  out << '\n';
  for (const auto& pb : cert.per_prime)
    out << "S=" << set_text(pb.prime.cut_set) << " height=" << pb.prime.height
        << " required=" << pb.required << " bound=" << pb.bound << '\n';
  out << "frobenius: " << (cert.frobenius_ok ? "ok" : "failed") << '\n';
  for (const auto& a : cert.assumptions) out << "assumption: " << a << '\n';
  out << "verdict: " << to_string(cert.verdict) << '\n';
  return out.str();
}

std::string report_text(const std::vector<MinimalPrime>& primes, const Classification& c,
                        const LabelingSummary& l) {
  auto tri = [](const std::optional<bool>& b) {
    return b ? (*b ? "true" : "false") : "unknown";
  };
  std::ostringstream out;
  for (const auto& q : primes) {
    out << "S=" << set_text(q.cut_set) << " height=" << q.height << " components=";
    for (const auto& b : q.components) out << set_text(b);
    out << '\n';
  }
  out << "assCount: " << c.ass_count << "\nunmixed: " << std::boolalpha << c.unmixed
      << "\naccessible: " << c.accessible << "\ntraceable: " << c.traceable
      << "\nweaklyClosed: " << tri(l.weakly_closed) << "\nclosed: " << tri(l.closed) << '\n';
  return out.str();
}

LabelingSummary summarize_labelings(const Graph& g, std::uint64_t budget) {
  LabelingSummary s;
  for (auto mode : {LabelingMode::weakly_closed, LabelingMode::closed}) {
    LabelingSearchOptions opts;
    opts.mode = mode;
    opts.node_budget = budget;
    std::optional<bool> answer;
    std::optional<Labeling> labeling;
    try {
      const auto r = find_labeling(g, opts);
      if (r.status != LabelingSearchResult::Status::budget_exceeded)
        answer = r.status == LabelingSearchResult::Status::found;
      labeling = r.labeling;
    } catch (const BudgetExceeded&) {
    }
    if (mode == LabelingMode::weakly_closed) {
      s.weakly_closed = answer;
      s.weakly_closed_labeling = labeling;
    } else {
      s.closed = answer;
      s.closed_labeling = labeling;
    }
  }
  return s;
}

Atom parse_cofactor(const std::string& text) {
  try {
    return parse_atom(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad --cofactor \"" + text + "\"; expected e.g. y1 or m(1,2)");
  }
}

}  // namespace

Graph family_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("family spec \"" + spec + "\" must look like name:params");
  const std::string name = spec.substr(0, colon);
  const std::string params = spec.substr(colon + 1);
  if (name == "multipartite") return complete_multipartite(parse_int_list(params, spec));
  if (name == "caterpillar") return caterpillar(CaterpillarSpec{parse_int_list(params, spec)});
  if (name == "join-of-completes") {
    const auto slash = params.find('/');
    const int n0 = parse_single(params.substr(0, slash), spec);
    const auto parts =
        slash == std::string::npos ? std::vector<int>{} : parse_int_list(params.substr(slash + 1), spec);
    return join_of_completes(n0, parts);
  }
  if (name == "g") return g_m(parse_single(params, spec));
  if (name == "f") return f_m(parse_single(params, spec));
  if (name == "path") return path_graph(parse_single(params, spec));
  if (name == "complete") return complete_graph(parse_single(params, spec));
  throw std::invalid_argument("unknown family \"" + name + "\"");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::istream& in) {
  CLI::App app{"Binomial edge ideal toolkit: cut sets, certificates, Gröbner checks", "bei"};
  app.require_subcommand(1);
  std::string format = "json";
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
  };

  std::uint64_t budget_subsets = std::uint64_t{1} << 22;
  std::uint64_t budget_labelings = 10'000'000;

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Cut sets, classification, labelings");
  InputOptions analyze_in;
  analyze_in.attach(analyze);
  analyze->add_option("--budget-subsets", budget_subsets, "Largest subset count to enumerate");
  analyze->add_option("--budget-labelings", budget_labelings, "Search-node budget for labelings");
  add_format(analyze);

  // family
  auto* family = app.add_subcommand("family", "Emit a family member as a graph");
  std::string family_name;
  std::vector<std::string> family_params;
  family->add_option("name", family_name,
                     "multipartite|caterpillar|join-of-completes|g|f|path|complete|star|circ|join")
      ->required();
  family->add_option("params", family_params, "Family parameters");
  add_format(family);

  // certify
  auto* certify = app.add_subcommand("certify", "Check the witness certificate");
  InputOptions certify_in;
  certify_in.attach(certify);
  std::uint32_t p = 2;
  bool search = false, strong = false, expand_f = false;
  std::string cofactor = "y1";
  std::uint64_t budget_search = 100'000;
  certify->add_option("--p", p, "Prime characteristic");
  certify->add_flag("--search-labelings", search, "Retry over relabelings on failure");
  certify->add_flag("--strong-freg", strong, "Strong F-regularity certificate");
  certify->add_option("--cofactor", cofactor, "Cofactor atom, e.g. y1 or m(1,2)");
  certify->add_option("--budget-subsets", budget_subsets, "Largest subset count to enumerate");
  certify->add_option("--budget-labelings", budget_search, "Relabelings tried by the search");
  certify->add_flag("--expand", expand_f, "Include the expanded witness (debug)");
  add_format(certify);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Gröbner-basis cross-checks");
  oracle->require_subcommand(1);
  auto* order = oracle->add_subcommand("order", "Combinatorial bounds vs exact power membership");
  InputOptions order_in;
  order_in.attach(order);
  std::uint32_t oracle_p = 2;
  int max_vertices = 5;
  order->add_option("--p", oracle_p, "Prime characteristic");
  order->add_option("--max-vertices", max_vertices, "Refuse larger graphs");
  auto* colon_cmd =
      oracle->add_subcommand("colon-identity", "Colon identity on variable-generated primes");
  std::size_t nvars = 3;
  std::vector<std::string> prime_specs;
  unsigned a = 1, b = 1;
  colon_cmd->add_option("--nvars", nvars, "Number of variables");
  colon_cmd->add_option("--prime", prime_specs, "Variables (1-based) of one prime, e.g. 2,3")
      ->required();
  colon_cmd->add_option("--p", oracle_p, "Prime characteristic");
  colon_cmd->add_option("--a", a, "Symbolic exponent a");
  colon_cmd->add_option("--b", b, "Symbolic exponent b");

  auto fail = [&](const std::string& message) {
    out << dump(Json{{"error", message}});
    return ExitCode::error;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitCode::ok;
  } catch (const CLI::ParseError& e) {
    return fail(e.what());
  }

  try {
    if (analyze->parsed()) {
      const Graph g = analyze_in.load(in);
      const auto primes = enumerate_minimal_primes(g, max_vertices_for(budget_subsets));
      const auto c = classify(g, primes);
      const auto labelings = summarize_labelings(g, budget_labelings);
      out << (format == "text" ? report_text(primes, c, labelings)
                               : dump(report_to_json(primes, c, labelings)));
      return ExitCode::ok;
    }

    if (family->parsed()) {
      auto param = [&](std::size_t k) -> const std::string& {
        if (k >= family_params.size())
          throw std::invalid_argument("family " + family_name + " needs more parameters");
        return family_params[k];
      };
      auto expect = [&](std::size_t n) {
        if (family_params.size() != n)
          throw std::invalid_argument("family " + family_name + " takes " + std::to_string(n) +
                                      " parameter(s)");
      };
      Graph g;
      if (family_name == "star" || family_name == "circ") {
        expect(4);
        const Graph lhs = operand(param(0), in);
        const Graph rhs = operand(param(2), in);
        const Vertex gl = parse_single(param(1), "leaf"), hl = parse_single(param(3), "leaf");
        g = family_name == "star" ? star_compose(lhs, gl, rhs, hl) : circ_compose(lhs, gl, rhs, hl);
      } else if (family_name == "join") {
        expect(2);
        g = join(operand(param(0), in), operand(param(1), in));
      } else if (family_name == "join-of-completes") {
        if (family_params.empty() || family_params.size() > 2)
          throw std::invalid_argument("join-of-completes takes n0 and optional part sizes");
        g = family_from_spec("join-of-completes:" + param(0) +
                             (family_params.size() == 2 ? "/" + param(1) : ""));
      } else {
        expect(1);
        g = family_from_spec(family_name + ":" + param(0));
      }
      out << (format == "text" ? graph_to_text(g) : dump(graph_to_json(g)));
      return ExitCode::ok;
    }

    if (certify->parsed()) {
      const Graph g = certify_in.load(in);
      CertifyOptions opts;
      opts.search_labelings = search;
      opts.labeling_budget = budget_search;
      opts.max_vertices = max_vertices_for(budget_subsets);
      Certificate cert;
      if (strong) {
        const auto pos = canonical_position(g.order(), parse_cofactor(cofactor));
        if (!pos)
          throw std::invalid_argument("cofactor " + cofactor + " is not a factor of the witness");
        cert = certify_strong_freg(g, p, *pos, opts);
      } else {
        if (certify->count("--cofactor") > 0)
          throw std::invalid_argument("--cofactor needs --strong-freg");
        cert = certify_symbolic_fsplit(g, p, opts);
      }
      if (format == "text") {
        out << certificate_text(cert);
        if (expand_f)
          out << "expansion:\n" << to_string(expand(cert.witness, p), binomial_edge_names(g.order()));
      } else {
        Json j = certificate_to_json(cert);
        if (expand_f) {
          Json lines = Json::array();
          std::istringstream text(to_string(expand(cert.witness, p), binomial_edge_names(g.order())));
          for (std::string line; std::getline(text, line);) lines.push_back(line);
          j["expansion"] = std::move(lines);
        }
        out << dump(j);
      }
      return cert.verdict == Verdict::pass ? ExitCode::ok : ExitCode::check_failed;
    }

    if (order->parsed()) {
      const Graph g = order_in.load(in);
      if (g.order() > max_vertices)
        throw BudgetExceeded("oracle order limited to d <= " + std::to_string(max_vertices));
      const auto primes = enumerate_minimal_primes(g);
      const int d = g.order();
      const PolyRing ring = binomial_edge_ring(d, oracle_p);
      const auto w = canonical_witness(d);
      const Polynomial f = expand(w, oracle_p);
      Json rows = Json::array();
      bool sound = true;
      for (const auto& q : primes) {
        const int bound = order_lower_bound(w, q);
        const int exact = power_membership_order(f, prime_generators(ring, d, q), bound + 1);
        sound = sound && bound <= exact;
        rows.push_back(
            {{"S", q.cut_set}, {"height", q.height}, {"bound", bound}, {"oracleOrder", exact}});
      }
      out << dump(Json{{"p", oracle_p}, {"perPrime", std::move(rows)}, {"sound", sound}});
      return sound ? ExitCode::ok : ExitCode::check_failed;
    }

    if (colon_cmd->parsed()) {
      std::vector<std::vector<std::size_t>> primes;
      for (const auto& spec : prime_specs) {
        std::vector<std::size_t> vars;
        for (int v : parse_int_list(spec, "--prime")) {
          if (v < 1 || static_cast<std::size_t>(v) > nvars)
            throw std::invalid_argument("variable " + std::to_string(v) + " outside 1.." +
                                        std::to_string(nvars));
          vars.push_back(static_cast<std::size_t>(v - 1));
        }
        primes.push_back(std::move(vars));
      }
      const auto report = check_colon_identity(nvars, primes, oracle_p, a, b);
      out << dump(Json{{"p", oracle_p},
                       {"a", a},
                       {"b", b},
                       {"holds", report.holds},
                       {"lhsBasisSize", report.lhs_generators},
                       {"rhsBasisSize", report.rhs_generators}});
      return report.holds ? ExitCode::ok : ExitCode::check_failed;
    }
  } catch (const std::exception& e) {
    return fail(e.what());
  }
  return fail("no command");
}

}  // namespace bei::cli
