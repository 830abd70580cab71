#include <charconv>
#include <sstream>

#include "acedag/errors.hpp"
#include "acedag/graph.hpp"

namespace acedag {

std::string serialize(const EvalGraph& graph) {
  const auto& meta = graph.meta();
  std::ostringstream out;
  out << "ACEDAG v1 group=" << group_name(meta.group) << " p=" << norm_name(meta.spec.p) << " D=" << meta.spec.D
      << " numax=" << (meta.nu_max == kUnboundedOrder ? -1 : meta.nu_max) << " alg=" << algorithm_name(meta.algorithm)
      << " n=" << meta.n << '\n';
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const auto& node = graph.nodes()[i];
    out << i << ' ' << (node.auxiliary ? 1 : 0) << ' ' << format_tuple(node.tuple, meta.group) << ' ';
    if (node.parents) {
      out << node.parents->first << ' ' << node.parents->second;
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> split_tokens(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    const auto start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

long parse_int(const Token& tok, const char* what) {
  long v = 0;
  const auto* first = tok.text.data();
  const auto* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (tok.text.empty() || ec != std::errc{} || ptr != last) {
    throw FormatError(std::string("expected integer ") + what + ", got '" + std::string(tok.text) + "'", tok.offset);
  }
  return v;
}

std::string_view header_value(const Token& tok, std::string_view key) {
  const auto prefix = std::string(key) + "=";
  if (tok.text.substr(0, prefix.size()) != prefix) {
    throw FormatError("expected header field '" + std::string(key) + "=...', got '" + std::string(tok.text) + "'",
                      tok.offset);
  }
  return tok.text.substr(prefix.size());
}

GraphMeta parse_header(std::string_view line) {
  const auto toks = split_tokens(line, 0);
  if (toks.empty() || toks[0].text != "ACEDAG") throw FormatError("missing ACEDAG header", 0);
  if (toks.size() < 2) throw FormatError("missing format version", line.size());
  if (toks[1].text != "v1") throw UnsupportedVersionError(std::string(toks[1].text), toks[1].offset);
  if (toks.size() != 8) throw FormatError("header must have 8 fields, found " + std::to_string(toks.size()), 0);
  GraphMeta meta;
  try {
    meta.group = parse_group(header_value(toks[2], "group"));
    meta.spec.p = parse_norm(header_value(toks[3], "p"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what(), toks[2].offset);
  }
  meta.spec.D = static_cast<int>(parse_int({header_value(toks[4], "D"), toks[4].offset + 2}, "D"));
  const auto numax = parse_int({header_value(toks[5], "numax"), toks[5].offset + 6}, "numax");
  meta.nu_max = numax < 0 ? kUnboundedOrder : static_cast<int>(numax);
  try {
    meta.algorithm = parse_algorithm(header_value(toks[6], "alg"));
  } catch (const FormatError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what(), toks[6].offset);
  }
  meta.n = static_cast<int>(parse_int({header_value(toks[7], "n"), toks[7].offset + 2}, "n"));
  return meta;
}

}  // namespace

EvalGraph deserialize(std::string_view text) {
  auto eol = text.find('\n');
  const auto header = text.substr(0, eol);
  EvalGraph graph(parse_header(header));
  const auto g = graph.meta().group;

  std::size_t pos = eol == std::string_view::npos ? text.size() : eol + 1;
  while (pos < text.size()) {
    eol = text.find('\n', pos);
    const auto end = eol == std::string_view::npos ? text.size() : eol;
    const auto line = text.substr(pos, end - pos);
    const auto toks = split_tokens(line, pos);
    if (!toks.empty()) {
      if (toks.size() != 4 && toks.size() != 5) {
        throw FormatError("node line must have 4 or 5 fields, found " + std::to_string(toks.size()), pos);
      }
      const auto id = parse_int(toks[0], "node id");
      if (id != static_cast<long>(graph.size())) {
        throw FormatError("node ids must be dense and ascending; expected " + std::to_string(graph.size()),
                          toks[0].offset);
      }
      const auto aux = parse_int(toks[1], "aux flag");
      if (aux != 0 && aux != 1) throw FormatError("aux flag must be 0 or 1", toks[1].offset);
      BasisTuple tuple;
      try {
        tuple = parse_tuple(toks[2].text, g);
      } catch (const FormatError& e) {
        throw FormatError(e.what(), toks[2].offset);
      }
      std::optional<std::pair<NodeId, NodeId>> parents;
      if (toks.size() == 5) {
        parents = std::make_pair(static_cast<NodeId>(parse_int(toks[3], "parent id")),
                                 static_cast<NodeId>(parse_int(toks[4], "parent id")));
      } else if (toks[3].text != "-") {
        throw FormatError("expected two parent ids or '-'", toks[3].offset);
      }
      try {
        graph.add_node(std::move(tuple), parents);
      } catch (const std::logic_error& e) {
        throw FormatError(e.what(), pos);
      }
      if (graph.nodes().back().auxiliary != (aux == 1)) {
        throw FormatError("aux flag disagrees with the target set of the header", toks[1].offset);
      }
    }
    pos = end + 1;
  }
  if (graph.size() == 0) throw FormatError("graph has no nodes (seeds are mandatory)", text.size());
  return graph;
}

}  // namespace acedag
