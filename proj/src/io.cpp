#include "gamedec/io.hpp"

#include <cctype>
#include <vector>

#include "gamedec/errors.hpp"

namespace gamedec {

namespace {

struct Token {
  std::string text;
  int line;
  int column;
};

// Tokens grouped by line; blank lines dropped.
std::vector<std::vector<Token>> tokenize(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  int line_no = 1;
  size_t pos = 0;
  while (pos <= text.size()) {
    const size_t eol = std::min(text.find('\n', pos), text.size());
    std::vector<Token> toks;
    size_t i = pos;
    while (i < eol) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
        continue;
      }
      const size_t start = i;
      while (i < eol && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      toks.push_back(Token{std::string(text.substr(start, i - start)), line_no,
                           static_cast<int>(start - pos) + 1});
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (eol == text.size()) break;
    pos = eol + 1;
    ++line_no;
  }
  return lines;
}

int parse_dimension(const Token& t) {
  if (t.text.empty() || t.text.size() > 6 ||
      !std::all_of(t.text.begin(), t.text.end(),
                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw parse_error("expected a positive dimension, got '" + t.text + "'", t.line,
                      t.column);
  const int v = std::stoi(t.text);
  if (v < 1)
    throw parse_error("dimensions must be at least 1", t.line, t.column);
  return v;
}

Rational parse_entry(const Token& t) {
  auto r = Rational::parse(t.text);
  if (!r)
    throw parse_error("malformed payoff entry '" + t.text + "'", t.line, t.column);
  return std::move(*r);
}

Json strategy_to_json(const MixedStrategy& s) {
  Json out = Json::array();
  for (int i = 0; i < s.size(); ++i) out.push_back(s[i].str());
  return out;
}

Rational rational_from_json(const Json& j, const std::string& what) {
  if (!j.is_string()) throw parse_error(what + " must be a rational string");
  auto r = Rational::parse(j.get<std::string>());
  if (!r)
    throw parse_error(what + " is not a valid rational: '" + j.get<std::string>() + "'");
  return std::move(*r);
}

}  // namespace

BimatrixGame parse_game(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw parse_error("empty game file");

  const auto& header = lines[0];
  if (header[0].text != "bimatrix")
    throw parse_error("expected header 'bimatrix <n> <m>'", header[0].line,
                      header[0].column);
  if (header.size() != 3)
    throw parse_error("header must be 'bimatrix <n> <m>'", header[0].line,
                      header[0].column);
  const int n = parse_dimension(header[1]);
  const int m = parse_dimension(header[2]);
  if (static_cast<long>(n) * m > 10'000'000)
    throw parse_error("game too large", header[1].line, header[1].column);

  std::vector<Rational> a, b;
  a.reserve(static_cast<size_t>(n) * m);
  b.reserve(static_cast<size_t>(n) * m);
  for (int r = 0; r < 2 * n; ++r) {
    if (static_cast<size_t>(r) + 1 >= lines.size())
      throw parse_error("expected " + std::to_string(2 * n) + " payoff rows, found " +
                        std::to_string(r));
    const auto& row = lines[static_cast<size_t>(r) + 1];
    const char* matrix = r < n ? "A" : "B";
    const int row_no = r < n ? r + 1 : r - n + 1;
    if (static_cast<int>(row.size()) != m)
      throw parse_error("row " + std::to_string(row_no) + " of " + matrix + " has " +
                            std::to_string(row.size()) + " entries, expected " +
                            std::to_string(m),
                        row[0].line, row[0].column);
    for (const Token& t : row) (r < n ? a : b).push_back(parse_entry(t));
  }
  if (lines.size() > 1 + 2 * static_cast<size_t>(n)) {
    const auto& extra = lines[1 + 2 * static_cast<size_t>(n)];
    throw parse_error("unexpected content after the payoff rows", extra[0].line,
                      extra[0].column);
  }
  return BimatrixGame(n, m, std::move(a), std::move(b));
}

std::string write_game(const BimatrixGame& g) {
  std::string out = "bimatrix " + std::to_string(g.rows()) + " " +
                    std::to_string(g.cols()) + "\n";
  const auto rows = [&](auto&& entry) {
    for (int i = 0; i < g.rows(); ++i) {
      for (int j = 0; j < g.cols(); ++j) {
        if (j) out += ' ';
        out += entry(i, j).str();
      }
      out += '\n';
    }
  };
  rows([&](int i, int j) -> const Rational& { return g.a(i, j); });
  rows([&](int i, int j) -> const Rational& { return g.b(i, j); });
  return out;
}

Json game_to_json(const BimatrixGame& g) {
  Json a = Json::array(), b = Json::array();
  for (int i = 0; i < g.rows(); ++i) {
    Json ra = Json::array(), rb = Json::array();
    for (int j = 0; j < g.cols(); ++j) {
      ra.push_back(g.a(i, j).str());
      rb.push_back(g.b(i, j).str());
    }
    a.push_back(std::move(ra));
    b.push_back(std::move(rb));
  }
  return Json{{"n", g.rows()}, {"m", g.cols()}, {"a", std::move(a)}, {"b", std::move(b)}};
}

Json equilibrium_to_json(const Equilibrium& eq) {
  return Json{{"x", strategy_to_json(eq.x)},
              {"y", strategy_to_json(eq.y)},
              {"p1_payoff", eq.p1.str()},
              {"p2_payoff", eq.p2.str()}};
}

Equilibrium equilibrium_from_json(const Json& j) {
  if (!j.is_object()) throw parse_error("equilibrium JSON must be an object");
  for (const char* field : {"x", "y", "p1_payoff", "p2_payoff"})
    if (!j.contains(field))
      throw parse_error(std::string("equilibrium JSON is missing '") + field + "'");
  const auto strategy = [&](const char* field) {
    const Json& arr = j.at(field);
    if (!arr.is_array() || arr.empty())
      throw parse_error(std::string("'") + field + "' must be a nonempty array");
    std::vector<Rational> p;
    for (const Json& e : arr)
      p.push_back(rational_from_json(e, std::string("entry of '") + field + "'"));
    return MixedStrategy(std::move(p));
  };
  MixedStrategy x = strategy("x");
  MixedStrategy y = strategy("y");
  Rational p1 = rational_from_json(j.at("p1_payoff"), "'p1_payoff'");
  Rational p2 = rational_from_json(j.at("p2_payoff"), "'p2_payoff'");
  return Equilibrium{std::move(x), std::move(y), std::move(p1), std::move(p2)};
}

Json tree_to_json(const DecompositionTree& tree) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, DecompositionTree::Leaf>) {
          return Json{{"kind", "leaf"}, {"game", game_to_json(v.game)}};
        } else if constexpr (std::is_same_v<T, DecompositionTree::Sum>) {
          return Json{{"kind", "sum"},
                      {"K", v.layout.k.str()},
                      {"n1", v.layout.n1},
                      {"m1", v.layout.m1},
                      {"left", tree_to_json(*v.left)},
                      {"right", tree_to_json(*v.right)}};
        } else if constexpr (std::is_same_v<T, DecompositionTree::Product>) {
          return Json{{"kind", "product"},
                      {"n1", v.layout.n1},
                      {"m1", v.layout.m1},
                      {"n2", v.layout.n2},
                      {"m2", v.layout.m2},
                      {"left", tree_to_json(*v.left)},
                      {"right", tree_to_json(*v.right)}};
        } else {
          Json removals = Json::array();
          for (const Removal& r : v.record.removals) {
            Json pa = Json::array(), pb = Json::array();
            for (const Rational& q : r.a_payoffs) pa.push_back(q.str());
            for (const Rational& q : r.b_payoffs) pb.push_back(q.str());
            // 1-based strategy indices, as everywhere user-facing
            removals.push_back(Json{{"player", r.player},
                                    {"index", r.index + 1},
                                    {"dominator", r.dominator + 1},
                                    {"a", std::move(pa)},
                                    {"b", std::move(pb)}});
          }
          return Json{{"kind", "elim"},
                      {"removals", std::move(removals)},
                      {"child", tree_to_json(*v.child)}};
        }
      },
      tree.node);
}

Json report_to_json(const SolveReport& report) {
  Json leaf_sizes = Json::array();
  for (long s : report.leaf_sizes) leaf_sizes.push_back(s);
  return Json{{"S", report.s},
              {"lambda", report.lambda},
              {"node_counts",
               Json{{"sum", report.node_counts.sum},
                    {"product", report.node_counts.product},
                    {"elim", report.node_counts.elim},
                    {"leaf", report.node_counts.leaf}}},
              {"leaf_sizes", std::move(leaf_sizes)},
              {"timings",
               Json{{"decompose_ms", report.timings.decompose_ms},
                    {"base_solve_ms", report.timings.base_solve_ms},
                    {"lift_ms", report.timings.lift_ms}}}};
}

}  // namespace gamedec
