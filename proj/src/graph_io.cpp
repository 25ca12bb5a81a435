#include "ricci/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ricci {

namespace {

constexpr char kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(char c) {
  if (c < 63 || c > 126) throw Error(ErrorCode::MalformedBits, "byte outside graph6 range");
  return c - kOffset;
}

}  // namespace

Graph6Data decode_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(ErrorCode::MalformedHeader, "empty graph6 string");

  std::size_t pos = 0;
  long n = 0;
  auto header_byte = [&](std::size_t i) {
    if (i >= text.size()) throw Error(ErrorCode::MalformedHeader, "truncated size field");
    const char c = text[i];
    if (c < 63 || c > 126) throw Error(ErrorCode::MalformedHeader, "size byte outside graph6 range");
    return static_cast<long>(c - kOffset);
  };
  if (text[0] != 126) {
    n = header_byte(0);
    pos = 1;
  } else if (text.size() > 1 && text[1] != 126) {
    n = (header_byte(1) << 12) | (header_byte(2) << 6) | header_byte(3);
    pos = 4;
  } else {
    n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | header_byte(i);
    pos = 8;
  }

  const long bit_count = n * (n - 1) / 2;
  const std::size_t byte_count = static_cast<std::size_t>((bit_count + 5) / 6);
  const std::string_view body = text.substr(pos);
  if (body.size() < byte_count) throw Error(ErrorCode::TruncatedBits, "adjacency bits truncated");
  if (body.size() > byte_count) throw Error(ErrorCode::MalformedBits, "trailing bytes after adjacency bits");

  Graph6Data out{static_cast<int>(n), {}};
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(body[static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) out.edges.push_back(Edge{i, j});
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(body.back());
    if (last & ((1 << (6 - k % 6)) - 1)) throw Error(ErrorCode::MalformedBits, "non-zero padding bits");
  }
  return out;
}

std::string encode_graph6(int n, std::span<const Edge> edges) {
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift : {30, 24, 18, 12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
  const long bit_count = static_cast<long>(n) * (n - 1) / 2;
  std::vector<unsigned char> bits(static_cast<std::size_t>(bit_count), 0);
  for (const Edge& e : edges) {
    const long i = std::min(e.u, e.v);
    const long j = std::max(e.u, e.v);
    bits[static_cast<std::size_t>(j * (j - 1) / 2 + i)] = 1;
  }
  for (long k = 0; k < bit_count; k += 6) {
    int byte = 0;
    for (long b = 0; b < 6; ++b) {
      byte <<= 1;
      if (k + b < bit_count) byte |= bits[static_cast<std::size_t>(k + b)];
    }
    out.push_back(static_cast<char>(byte + kOffset));
  }
  return out;
}

Graph parse_graph6(std::string_view text, WeightScheme scheme) {
  const Graph6Data data = decode_graph6(text);
  return Graph::from_edges(data.n, data.edges, scheme);
}

std::string emit_graph6(const Graph& g) { return encode_graph6(g.order(), g.edges()); }

Graph parse_edge_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedJson, e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") || !doc["n"].is_number_integer() ||
      !doc["edges"].is_array()) {
    throw Error(ErrorCode::MalformedJson, "expected {\"n\": int, \"edges\": [[u,v],...]}");
  }
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw Error(ErrorCode::MalformedJson, "edge entries must be [u, v] integer pairs");
    }
    edges.push_back(Edge{e[0].get<int>(), e[1].get<int>()});
  }
  WeightScheme scheme = WeightScheme::Combinatorial;
  if (doc.contains("scheme")) {
    if (!doc["scheme"].is_string()) throw Error(ErrorCode::MalformedJson, "scheme must be a string");
    scheme = parse_scheme(doc["scheme"].get<std::string>());
    if (scheme == WeightScheme::GeneralWeighted) {
      throw Error(ErrorCode::MalformedJson, "edge JSON carries combinatorial or normalized graphs only");
    }
  }
  return Graph::from_edges(doc["n"].get<int>(), edges, scheme);
}

std::string emit_edge_json(const Graph& g) {
  nlohmann::json doc;
  doc["n"] = g.order();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  doc["scheme"] = std::string(to_string(g.scheme()));
  return doc.dump();
}

Graph read_graph_file(const std::string& path, std::optional<WeightScheme> scheme) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::MalformedHeader, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (path.ends_with(".json")) {
    const Graph g = parse_edge_json(text);
    return !scheme || g.scheme() == *scheme ? g : g.with_scheme(*scheme);
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line != "\r") return parse_graph6(line, scheme.value_or(WeightScheme::Combinatorial));
  }
  throw Error(ErrorCode::MalformedHeader, "no graph6 line in " + path);
}

}  // namespace ricci
