#include "bindingfactor/families.hpp"

#include <cctype>
#include <charconv>
#include <utility>

#include "bindingfactor/errors.hpp"

namespace bindingfactor {

namespace {

struct TagName {
  FamilyTag tag;
  std::string_view name;
  std::size_t arity;
};

constexpr TagName kTagNames[] = {
    {FamilyTag::Empty, "empty", 1},
    {FamilyTag::Complete, "complete", 1},
    {FamilyTag::CompleteBipartite, "complete_bipartite", 2},
    {FamilyTag::Cycle, "cycle", 1},
    {FamilyTag::Path, "path", 1},
    {FamilyTag::Petersen, "petersen", 0},
    {FamilyTag::SplitTight, "split_tight", 2},
    {FamilyTag::Andersen, "andersen", 1},
    {FamilyTag::KaterinisWoodall, "katerinis_woodall", 2},
    {FamilyTag::CliquePendant, "clique_pendant", 2},
    {FamilyTag::Join, "join", 0},
    {FamilyTag::DisjointUnion, "union", 0},
};

const TagName& info(FamilyTag tag) {
  for (const auto& t : kTagNames)
    if (t.tag == tag) return t;
  throw ArgumentError("unknown family tag");
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec parse_all() {
    FamilySpec spec = parse_spec();
    if (pos_ != text_.size()) throw ParseError("unexpected text after family spec", pos_);
    return spec;
  }

 private:
  FamilySpec parse_spec() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    const auto name = text_.substr(start, pos_ - start);
    const TagName* found = nullptr;
    for (const auto& t : kTagNames)
      if (t.name == name) found = &t;
    if (name == "disjoint_union") found = &info(FamilyTag::DisjointUnion);
    if (found == nullptr)
      throw ParseError("unknown graph family '" + std::string(name) + "'", start);

    FamilySpec spec;
    spec.tag = found->tag;
    if (spec.tag == FamilyTag::Join || spec.tag == FamilyTag::DisjointUnion) {
      expect('(');
      spec.parts.push_back(parse_spec());
      expect(',');
      spec.parts.push_back(parse_spec());
      expect(')');
      return spec;
    }
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      spec.params.push_back(parse_int());
      while (pos_ < text_.size() && text_[pos_] == ',' && spec.params.size() < found->arity) {
        ++pos_;
        spec.params.push_back(parse_int());
      }
    }
    if (spec.params.size() != found->arity)
      throw ParseError("family '" + std::string(name) + "' takes " +
                           std::to_string(found->arity) + " parameter(s)",
                       pos_);
    return spec;
  }

  int parse_int() {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) throw ParseError("expected an integer parameter", pos_);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw ConstructionError(message);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph build(const FamilySpec& spec) {
  const auto& p = spec.params;
  switch (spec.tag) {
    case FamilyTag::Empty:
      require(p[0] >= 0, "empty:n requires n >= 0");
      return Graph(p[0]);
    case FamilyTag::Complete:
      require(p[0] >= 0, "complete:n requires n >= 0");
      return complete_graph(p[0]);
    case FamilyTag::CompleteBipartite: {
      require(p[0] >= 0 && p[1] >= 0, "complete_bipartite:a,b requires a, b >= 0");
      return join(Graph(p[0]), Graph(p[1]));
    }
    case FamilyTag::Cycle: {
      require(p[0] >= 3, "cycle:n requires n >= 3");
      std::vector<Edge> edges;
      for (int i = 0; i < p[0]; ++i) edges.emplace_back(i, (i + 1) % p[0]);
      return Graph(p[0], edges);
    }
    case FamilyTag::Path: {
      require(p[0] >= 0, "path:n requires n >= 0");
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < p[0]; ++i) edges.emplace_back(i, i + 1);
      return Graph(p[0], edges);
    }
    case FamilyTag::Petersen: {
      std::vector<Edge> edges;
      for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
      }
      return Graph(10, edges);
    }
    case FamilyTag::SplitTight: {
      const int n = p[0];
      const int k = p[1];
      require(k >= 1, "split_tight:n,k requires k >= 1");
      require(n % 2 == 0, "split_tight:n,k requires n even");
      require(n >= 2 * k + 2, "split_tight:n,k requires n >= 2k+2");
      return join(Graph(n / 2 + 1), complete_graph(n / 2 - 1));
    }
    case FamilyTag::Andersen: {
      const int r = p[0];
      require(r >= 1, "andersen:r requires r >= 1");
      Graph triangles(0);
      for (int i = 0; i < r + 2; ++i) triangles = disjoint_union(triangles, complete_graph(3));
      return join(triangles, Graph(r));
    }
    case FamilyTag::KaterinisWoodall: {
      const int r = p[0];
      const int k = p[1];
      require(r >= 1, "katerinis_woodall:r,k requires r >= 1");
      const int l = r * k - 1;
      require(l >= 1, "katerinis_woodall:r,k requires l = rk-1 >= 1");
      require(2 * l - 2 * r >= 0, "katerinis_woodall:r,k requires 2l-2r >= 0");
      Graph matching(0);
      for (int i = 0; i < l; ++i) matching = disjoint_union(matching, complete_graph(2));
      return join(complete_graph(2 * l - 2 * r), matching);
    }
    case FamilyTag::CliquePendant: {
      const int n = p[0];
      const int k = p[1];
      require(k >= 1, "clique_pendant:n,k requires k >= 1");
      require(n - 1 >= 2 * k - 1, "clique_pendant:n,k requires n-1 >= 2k-1");
      std::vector<Edge> edges = complete_graph(n - 1).edges();
      for (int i = 0; i < 2 * k - 1; ++i) edges.emplace_back(i, n - 1);
      return Graph(n, edges);
    }
    case FamilyTag::Join:
      return join(build(spec.parts.at(0)), build(spec.parts.at(1)));
    case FamilyTag::DisjointUnion:
      return disjoint_union(build(spec.parts.at(0)), build(spec.parts.at(1)));
  }
  throw ConstructionError("unknown family");
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) { return SpecParser(text).parse_all(); }

std::string FamilySpec::to_string() const {
  const auto& meta = info(tag);
  std::string out(meta.name);
  if (tag == FamilyTag::Join || tag == FamilyTag::DisjointUnion)
    return out + "(" + parts.at(0).to_string() + "," + parts.at(1).to_string() + ")";
  for (std::size_t i = 0; i < params.size(); ++i)
    out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  return out;
}

Graph generate(const FamilySpec& spec) {
  if (spec.tag != FamilyTag::Join && spec.tag != FamilyTag::DisjointUnion &&
      spec.params.size() != info(spec.tag).arity)
    throw ConstructionError("family '" + std::string(info(spec.tag).name) + "' takes " +
                            std::to_string(info(spec.tag).arity) + " parameter(s)");
  return build(spec);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.order();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(a.order() + b.order(), edges);
}

Graph join(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const int shift = a.order();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  for (int u = 0; u < a.order(); ++u)
    for (int v = 0; v < b.order(); ++v) edges.emplace_back(u, v + shift);
  return Graph(a.order() + b.order(), edges);
}

}  // namespace bindingfactor
