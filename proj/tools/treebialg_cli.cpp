// treebialg: enumerate trees and pairs, evaluate coproducts and products,
// and run the exhaustive law checks.
//
// Exit status: 0 success, 1 a law failed, 2 usage or parse error.

#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "treebialg/coalgebra_classic.hpp"
#include "treebialg/cut_contract.hpp"
#include "treebialg/doubling.hpp"
#include "treebialg/interplay.hpp"

using namespace treebialg;

namespace {

constexpr int kExitLawFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> read_inputs(const std::vector<std::string>& args) {
  if (!args.empty()) return args;
  std::vector<std::string> lines;
  for (std::string line; std::getline(std::cin, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

// Expressions are taken from the leftover arguments: CLI11 would otherwise
// read a bracketed argument such as "[[]]" as an inline list.
std::vector<std::string> positional(const CLI::App& sub) {
  std::vector<std::string> out = sub.remaining();
  for (const auto& arg : out)
    if (arg.starts_with("-")) throw UsageError("unknown option: " + arg);
  return out;
}

// Accepts the text with or without the V:/W: tag of the expected sort.
Monomial parse_pairs(std::string_view text, Flavor flavor) {
  const std::string_view tag = sort_tag(sort_of(flavor));
  if (text.starts_with(tag)) text.remove_prefix(tag.size());
  return make_pairs(flavor, parse_marked_forest(text, flavor));
}

Monomial parse_trees(std::string_view text) { return make_forest(parse_forest(text)); }

void emit(const std::string& format, const std::string& input, const TensorElement& x, nlohmann::json& out) {
  if (format == "json")
    out.push_back({{"input", input}, {"result", to_json(x)}});
  else
    std::cout << render(x) << '\n';
}

void emit(const std::string& format, const std::string& input, const Element& x, nlohmann::json& out) {
  if (format == "json")
    out.push_back({{"input", input}, {"result", to_json(x)}});
  else
    std::cout << render(x) << '\n';
}

void flush_json(const std::string& format, const nlohmann::json& out) {
  if (format == "json") std::cout << out.dump(2) << '\n';
}

int cmd_enum(const std::string& kind, int n, const std::string& format) {
  if (n < 1) throw UsageError("--n must be at least 1");
  std::vector<std::string> items;
  if (kind == "trees") {
    for (const auto& t : enumerate_trees(n)) items.push_back(canonical_key(t));
  } else {
    for (const auto& m : pairs_of_size(kind == "vpairs" ? Flavor::V : Flavor::W, n)) items.push_back(to_string(m));
  }
  if (format == "json") {
    std::cout << nlohmann::json{{"kind", kind}, {"n", n}, {"count", items.size()}, {"items", items}}.dump(2) << '\n';
  } else {
    for (const auto& s : items) std::cout << s << '\n';
  }
  return 0;
}

int cmd_coproduct(const std::string& flavor, const std::vector<std::string>& args, const std::string& format) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& text : read_inputs(args)) {
    TensorElement x;
    if (flavor == "ck") x = coproduct_ck(parse_trees(text));
    else if (flavor == "contract") x = coproduct_contract(parse_trees(text));
    else if (flavor == "D") x = delta_D(parse_pairs(text, Flavor::V));
    else x = gamma_Dtilde(parse_pairs(text, Flavor::W));
    emit(format, text, x, out);
  }
  flush_json(format, out);
  return 0;
}

Monomial single_pair(const std::string& text, Flavor flavor) {
  Monomial m = parse_pairs(text, flavor);
  if (!m.is_atom()) throw UsageError("expected a single pair: " + text);
  return m;
}

int cmd_product(const std::string& op, const std::string& a, const std::string& b, const std::string& format) {
  Element x;
  if (op == "star") x = star(single_pair(a, Flavor::V), single_pair(b, Flavor::V));
  else if (op == "sharp") x = sharp(single_pair(a, Flavor::W), single_pair(b, Flavor::W));
  else x = psi(single_pair(a, Flavor::W), single_pair(b, Flavor::V));
  nlohmann::json out = nlohmann::json::array();
  emit(format, a + " " + b, x, out);
  flush_json(format, out);
  return 0;
}

int cmd_phi(const std::vector<std::string>& args, const std::string& format) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& text : read_inputs(args)) emit(format, text, phi(parse_pairs(text, Flavor::V)), out);
  flush_json(format, out);
  return 0;
}

int cmd_xi(const std::string& a, const std::string& b, const std::string& c, const std::string& format) {
  nlohmann::json out = nlohmann::json::array();
  emit(format, a + " " + b + " " + c,
       xi_search(single_pair(a, Flavor::W), single_pair(b, Flavor::W), single_pair(c, Flavor::V)), out);
  flush_json(format, out);
  return 0;
}

std::vector<std::string> split_laws(const std::string& list) {
  std::vector<std::string> laws;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    std::string name = list.substr(start, comma - start);
    if (name == "all") {
      laws.insert(laws.end(), default_laws().begin(), default_laws().end());
    } else if (!name.empty()) {
      if (!is_known_law(name)) throw UsageError("unknown law: " + name);
      laws.push_back(std::move(name));
    }
    start = comma + 1;
  }
  if (laws.empty()) throw UsageError("no laws given");
  return laws;
}

int cmd_verify(const std::string& list, int max_vertices, int jobs, const std::string& format) {
  if (max_vertices < 1) throw UsageError("--max-vertices must be at least 1");
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  const auto laws = split_laws(list);
  bool ok = true;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& law : laws) {
    const LawReport r = verify_law(law, max_vertices, jobs);
    ok = ok && r.passed();
    if (format == "json") {
      out.push_back(r.to_json());
      continue;
    }
    std::cout << law << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.instances << " instances, "
              << r.zero_instances << " zero)\n";
    if (r.counterexample) {
      std::cout << "  instance: " << r.counterexample->instance << '\n'
                << "  lhs: " << r.counterexample->lhs << '\n'
                << "  rhs: " << r.counterexample->rhs << '\n';
    }
  }
  flush_json(format, out);
  return ok ? 0 : kExitLawFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted-tree bialgebras and their doublings"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  std::string kind;
  int n = 0;
  auto* en = app.add_subcommand("enum", "List trees or pair classes with n vertices");
  en->add_option("--kind", kind)->required()->check(CLI::IsMember({"trees", "vpairs", "wpairs"}));
  en->add_option("--n", n)->required();
  add_format(en);

  std::string flavor;
  auto* co = app.add_subcommand("coproduct", "Coproduct of each input (stdin when none given)");
  co->add_option("--flavor", flavor)->required()->check(CLI::IsMember({"ck", "contract", "D", "Dt"}));
  co->allow_extras();
  add_format(co);

  std::string op, lhs, rhs, third;
  auto* pr = app.add_subcommand("product", "star (V,V), sharp (W,W) or psi (W,V) of two pairs");
  pr->add_option("--op", op)->required()->check(CLI::IsMember({"star", "sharp", "psi"}));
  pr->add_option("a", lhs)->required();
  pr->add_option("b", rhs)->required();
  add_format(pr);

  auto* ph = app.add_subcommand("phi", "Coaction of each V input");
  ph->allow_extras();
  add_format(ph);

  auto* xi = app.add_subcommand("xi", "xi of W, W and V pairs, canonical identifications");
  xi->add_option("a", lhs)->required();
  xi->add_option("b", rhs)->required();
  xi->add_option("c", third)->required();
  add_format(xi);

  std::string laws = "all";
  int max_vertices = 4;
  int jobs = 1;
  auto* ve = app.add_subcommand("verify", "Exhaustive law checks");
  ve->add_option("--laws", laws, "Comma list or 'all'");
  ve->add_option("--max-vertices", max_vertices);
  ve->add_option("--jobs", jobs);
  add_format(ve);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (en->parsed()) return cmd_enum(kind, n, format);
    if (co->parsed()) return cmd_coproduct(flavor, positional(*co), format);
    if (pr->parsed()) return cmd_product(op, lhs, rhs, format);
    if (ph->parsed()) return cmd_phi(positional(*ph), format);
    if (xi->parsed()) return cmd_xi(lhs, rhs, third, format);
    return cmd_verify(laws, max_vertices, jobs, format);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}
