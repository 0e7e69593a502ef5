#include <fstream>
#include <string>

#include "bindingfactor/errors.hpp"
#include "bindingfactor/graph6.hpp"
#include "bindingfactor/harness.hpp"

namespace bindingfactor::harness {

std::string GraphSource::describe() const {
  switch (kind) {
    case Kind::Internal:
      return "internal:" + std::to_string(n);
    case Kind::Stream:
      return "stream:" + path;
    case Kind::Split:
      return "split:" + std::to_string(n);
    case Kind::Bipartite:
      return "bipartite:" + std::to_string(a) + "," + std::to_string(b);
    case Kind::Family: {
      std::string out = "family:";
      for (std::size_t i = 0; i < families.size(); ++i) {
        if (i) out += ";";
        out += families[i].to_string();
      }
      return out;
    }
  }
  return {};
}

namespace {

// nondecreasing sequences of `length` values in [0, limit)
class Multisets {
 public:
  Multisets(int length, std::uint64_t limit) : seq_(static_cast<std::size_t>(length), 0), limit_(limit) {}

  const std::vector<std::uint64_t>& current() const { return seq_; }

  bool advance() {
    for (std::size_t i = seq_.size(); i-- > 0;) {
      if (seq_[i] + 1 < limit_) {
        std::uint64_t v = seq_[i] + 1;
        for (std::size_t j = i; j < seq_.size(); ++j) seq_[j] = v;
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<std::uint64_t> seq_;
  std::uint64_t limit_;
};

}  // namespace

struct GraphStream::Impl {
  GraphSource source;
  bool done = false;

  // internal
  std::uint64_t mask = 0;
  std::uint64_t mask_end = 0;
  std::vector<std::pair<int, int>> pairs;

  // split / bipartite
  int side = 0;  // current |X| for split
  std::optional<Multisets> rows;

  // stream
  std::ifstream in;
  std::size_t line_no = 0;

  // family
  std::size_t family_index = 0;

  explicit Impl(const GraphSource& s) : source(s) {
    switch (source.kind) {
      case GraphSource::Kind::Internal: {
        if (source.n < 0) throw ArgumentError("internal source: negative order");
        if (source.n > kInternalMaxOrder)
          throw CapacityError("internal source: order above cap", kInternalMaxOrder);
        for (int j = 1; j < source.n; ++j)
          for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
        mask_end = std::uint64_t{1} << pairs.size();
        break;
      }
      case GraphSource::Kind::Split:
        if (source.n < 0) throw ArgumentError("split source: negative order");
        if (source.n > kSplitMaxOrder)
          throw CapacityError("split source: order above cap", kSplitMaxOrder);
        side = 0;
        rows.emplace(0, std::uint64_t{1} << source.n);
        break;
      case GraphSource::Kind::Bipartite:
        if (source.a < 0 || source.b < 0) throw ArgumentError("bipartite source: negative side");
        if (source.a > kBipartiteMaxSide || source.b > kBipartiteMaxSide)
          throw CapacityError("bipartite source: side above cap", kBipartiteMaxSide);
        rows.emplace(source.a, std::uint64_t{1} << source.b);
        break;
      case GraphSource::Kind::Stream:
        in.open(source.path);
        if (!in) throw Error("cannot open graph stream: " + source.path);
        break;
      case GraphSource::Kind::Family:
        break;
    }
  }

  Graph split_graph() const {
    int n = source.n;
    int a = side;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    std::uint64_t clique = low_mask(static_cast<std::size_t>(n)) & ~low_mask(static_cast<std::size_t>(a));
    for (int y = a; y < n; ++y) adj[static_cast<std::size_t>(y)] = clique & ~(std::uint64_t{1} << y);
    const auto& seq = rows->current();
    for (int x = 0; x < a; ++x) {
      std::uint64_t nb = seq[static_cast<std::size_t>(x)] << a;
      adj[static_cast<std::size_t>(x)] = nb;
      for (int y = a; y < n; ++y)
        if (nb >> y & 1) adj[static_cast<std::size_t>(y)] |= std::uint64_t{1} << x;
    }
    return Graph::from_masks(adj);
  }

  Graph bipartite_graph() const {
    int a = source.a;
    int n = source.a + source.b;
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    const auto& seq = rows->current();
    for (int x = 0; x < a; ++x) {
      std::uint64_t nb = seq[static_cast<std::size_t>(x)] << a;
      adj[static_cast<std::size_t>(x)] = nb;
      for (int y = a; y < n; ++y)
        if (nb >> y & 1) adj[static_cast<std::size_t>(y)] |= std::uint64_t{1} << x;
    }
    return Graph::from_masks(adj);
  }

  std::optional<Graph> next() {
    if (done) return std::nullopt;
    switch (source.kind) {
      case GraphSource::Kind::Internal: {
        if (mask >= mask_end) {
          done = true;
          return std::nullopt;
        }
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(source.n), 0);
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          if (mask >> b & 1) {
            auto [i, j] = pairs[b];
            adj[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
            adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
          }
        }
        ++mask;
        return Graph::from_masks(adj);
      }
      case GraphSource::Kind::Split: {
        Graph g = split_graph();
        if (!rows->advance()) {
          ++side;
          if (side > source.n)
            done = true;
          else
            rows.emplace(side, std::uint64_t{1} << (source.n - side));
        }
        return g;
      }
      case GraphSource::Kind::Bipartite: {
        Graph g = bipartite_graph();
        if (!rows->advance()) done = true;
        return g;
      }
      case GraphSource::Kind::Stream: {
        std::string line;
        while (std::getline(in, line)) {
          ++line_no;
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (line.empty()) continue;
          try {
            return parse_graph6(line);
          } catch (const ParseError& e) {
            throw ParseError(e.reason(), e.offset(), line_no);
          }
        }
        done = true;
        return std::nullopt;
      }
      case GraphSource::Kind::Family: {
        if (family_index >= source.families.size()) {
          done = true;
          return std::nullopt;
        }
        return generate(source.families[family_index++]);
      }
    }
    return std::nullopt;
  }
};

GraphStream::GraphStream(const GraphSource& source) : impl_(std::make_unique<Impl>(source)) {}
GraphStream::~GraphStream() = default;
GraphStream::GraphStream(GraphStream&&) noexcept = default;
GraphStream& GraphStream::operator=(GraphStream&&) noexcept = default;

std::optional<Graph> GraphStream::next() { return impl_->next(); }

std::vector<Graph> enumerate_graphs(const GraphSource& source) {
  std::vector<Graph> out;
  GraphStream stream(source);
  while (auto g = stream.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace bindingfactor::harness
